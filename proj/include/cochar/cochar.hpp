#pragma once

// Umbrella header: exact multiplicities in the mixed trace cocharacter
// sequence of two generic 3x3 matrices, with the series oracle that
// double-checks every closed form.

#include "cochar/closed_form.hpp"
#include "cochar/errors.hpp"
#include "cochar/multiplicity_series.hpp"
#include "cochar/partial_fraction.hpp"
#include "cochar/poly.hpp"
#include "cochar/ratfunc.hpp"
#include "cochar/rational.hpp"
#include "cochar/series.hpp"
#include "cochar/verify.hpp"

#pragma once

#include <array>
#include <utility>
#include <vector>

#include "cochar/errors.hpp"
#include "cochar/partial_fraction.hpp"
#include "cochar/poly.hpp"
#include "cochar/ratfunc.hpp"
#include "cochar/series.hpp"

namespace cochar {

/// A multiplicity series in the (t, v) encoding: the coefficient of
/// t^p v^q is the multiplicity of the Schur function S_(p+q, q) in the
/// symmetric function the series encodes. Expandable at the origin.
class MSeriesForm {
public:
    explicit MSeriesForm(RatFunc value) : value_(std::move(value)) {
        if (value_.vars().size() != 2) {
            throw UsageError("multiplicity series must be bivariate");
        }
        if (value_.den().coeff({0, 0}) == 0) {
            throw NotExpandableError(
                "multiplicity series must be expandable at the origin");
        }
    }

    const RatFunc& value() const { return value_; }
    const VarList& vars() const { return value_.vars(); }

    bool operator==(const MSeriesForm& o) const { return value_ == o.value_; }

private:
    RatFunc value_;
};

/// Coefficient of t^p v^q in the Maclaurin expansion of h.
inline BigRational mseries_coeff(const MSeriesForm& h, int p, int q) {
    if (p < 0 || q < 0) {
        throw DomainError("negative exponent");
    }
    return expand(h.value(), p + q).coeff(p, q);
}

namespace detail {

/// a composed with the second variable of the (t, v) ring.
inline RatFunc univariate_at_v(const RatFunc& a, const VarList& tv) {
    if (a.vars().size() != 1) {
        throw UsageError("expected a univariate scalar series");
    }
    return substitute(a, {{a.vars()[0], RatFunc::variable(tv, tv[1])}});
}

/// Division with an explicit cancellation obligation: the irreducible
/// factor `must_cancel` may not survive into the result's denominator.
inline RatFunc divide_checked(const RatFunc& g, const RatFunc& den,
                              const Poly& must_cancel,
                              const char* operation) {
    // When the factor is coprime to g's denominator it must divide g's
    // numerator outright; dividing it off first keeps the final reduction
    // inside the cheap binomial-product regime.
    if (!divides(must_cancel, g.den())) {
        const auto q = div_exact(g.num() * den.den(), must_cancel);
        const auto rest = div_exact(den.num(), must_cancel);
        if (!q || !rest) {
            throw ConsistencyError(
                std::string(operation) +
                ": required factor fails to cancel; input is not a "
                "well-formed multiplicity series");
        }
        return RatFunc(*q, g.den() * *rest);
    }
    const RatFunc r = g / den;
    if (divides(must_cancel, r.den())) {
        throw ConsistencyError(
            std::string(operation) +
            ": required factor fails to cancel; input is not a "
            "well-formed multiplicity series");
    }
    return r;
}

} // namespace detail

/// Symmetric function encoded by a multiplicity series, in variables
/// (x, y): (x h(x, xy) - y h(y, xy)) / (x - y). The division must be
/// exact; its failure signals a malformed multiplicity series.
inline RatFunc reconstruct(const MSeriesForm& h) {
    const VarList xy("x", "y");
    const RatFunc x = RatFunc::variable(xy, "x");
    const RatFunc y = RatFunc::variable(xy, "y");
    const VarList& tv = h.vars();
    const RatFunc hx = substitute(h.value(), {{tv[0], x}, {tv[1], x * y}});
    const RatFunc hy = substitute(h.value(), {{tv[0], y}, {tv[1], x * y}});
    const Poly diff = Poly::variable(xy, "x") - Poly::variable(xy, "y");
    return detail::divide_checked(x * hx - y * hy, RatFunc(diff), diff,
                                  "reconstruct");
}

/// Multiplicity series of a(xy) f(x, y) given h = M'(f): scalar series in
/// the product xy act as constants, so this is a(v) h(t, v).
inline MSeriesForm scale(const RatFunc& a, const MSeriesForm& h) {
    const RatFunc av = detail::univariate_at_v(a, h.vars());
    if (av.den().coeff({0, 0}) == 0) {
        throw NotExpandableError("scalar series must be expandable at the "
                                 "origin");
    }
    return MSeriesForm(av * h.value());
}

/// Multiplicity series of f(x, y) / ((1-x)(1-y)) given h = M'(f):
/// (t h(t, v) - v h(v, v)) / ((1-t)(t-v)) with exact cancellation of
/// (t - v).
inline MSeriesForm mul_geometric(const MSeriesForm& h) {
    const VarList& tv = h.vars();
    const RatFunc t = RatFunc::variable(tv, tv[0]);
    const RatFunc v = RatFunc::variable(tv, tv[1]);
    const RatFunc hvv = substitute(h.value(), {{tv[0], v}});
    const Poly tp = Poly::variable(tv, tv[0]);
    const Poly vp = Poly::variable(tv, tv[1]);
    const RatFunc den((1 - tp) * (tp - vp));
    return MSeriesForm(detail::divide_checked(t * h.value() - v * hvv, den,
                                              tp - vp, "mul_geometric"));
}

/// Multiplicity series of f(x, y) / ((1-a(xy)x)(1-a(xy)y)) given
/// h = M'(f) and a univariate scalar series a:
/// (t h(t, v) - a(v) v h(a(v)v, v)) / ((1-a(v)t)(t-a(v)v)).
inline MSeriesForm mul_geometric_twist(const MSeriesForm& h,
                                       const RatFunc& a) {
    const VarList& tv = h.vars();
    const RatFunc t = RatFunc::variable(tv, tv[0]);
    const RatFunc v = RatFunc::variable(tv, tv[1]);
    const RatFunc av = detail::univariate_at_v(a, tv);
    if (av.den().coeff({0, 0}) == 0) {
        throw NotExpandableError("scalar series must be expandable at the "
                                 "origin");
    }
    const RatFunc arg = av * v;
    const RatFunc h_arg = substitute(h.value(), {{tv[0], arg}});
    const RatFunc num = t * h.value() - av * v * h_arg;
    const RatFunc den = (RatFunc::constant(tv, 1) - av * t) * (t - arg);
    // The factor that must cancel is t - a(v) v, cleared of denominators.
    const Poly tp = Poly::variable(tv, tv[0]);
    const Poly vp = Poly::variable(tv, tv[1]);
    const Poly must_cancel = detail::normalize_unit(
        av.den() * tp - av.num() * vp);
    return MSeriesForm(detail::divide_checked(num, den, must_cancel,
                                              "mul_geometric_twist"));
}

/// The base multiplicity series 1 / ((1-t^2)(1-v^2)), encoding
/// 1 / ((1-x^2)(1-xy)(1-y^2)).
inline MSeriesForm thrall_base() {
    const VarList tv("t", "v");
    const Poly t = Poly::variable(tv, "t");
    const Poly v = Poly::variable(tv, "v");
    return MSeriesForm(
        RatFunc(Poly::constant(tv, 1), (1 - t * t) * (1 - v * v)));
}

/// Fixed constants of the two closed forms of the multiplicity series of
/// the Hilbert series of the mixed trace algebra T2: the numerator
/// coefficient polynomials h[i] (of t^i) of the single-fraction form, and
/// the five numerators of the elementary-fraction form.
struct T2FormConstants {
    std::array<Poly, 4> h;  // univariate in v
    RatFunc a3, a2, a1, b, c;  // univariate in v
};

inline T2FormConstants t2_form_constants() {
    const VarList vr("v");
    const Poly v = Poly::variable(vr, "v");
    const Poly one = Poly::constant(vr, 1);
    T2FormConstants k{
        {Poly(vr), Poly(vr), Poly(vr), Poly(vr)},
        RatFunc(one), RatFunc(one), RatFunc(one), RatFunc(one), RatFunc(one)};
    const Poly v2 = v * v;
    const Poly v3 = v2 * v;
    const Poly v4 = v3 * v;
    k.h[3] = v2 * (v4 - v3 + 3 * v2 - v + 1);
    k.h[2] = v * (2 * v4 - 4 * v3 + v2 - v - 1);
    k.h[1] = v * (-v4 - v3 + v2 - 4 * v + 2);
    k.h[0] = v4 - v3 + 3 * v2 - v + 1;
    k.a3 = RatFunc(one, 2 * (1 - v).pow(6) * (1 + v).pow(2));
    k.a2 = RatFunc(3 * v2 - 2 * v + 1, 4 * (1 - v).pow(7) * (1 + v).pow(3));
    k.a1 = RatFunc(v4 - 6 * v3 + 14 * v2 - 6 * v + 1,
                   8 * (1 - v).pow(8) * (1 + v).pow(4));
    k.b = RatFunc(one, 8 * (1 - v).pow(2) * (1 + v).pow(4) * (1 + v2));
    k.c = RatFunc(-v4, (1 - v).pow(8) * (1 + v).pow(4) * (1 + v2));
    return k;
}

/// The closed form of M'(H(T2)): numerator sum h[i](v) t^i over
/// (1-v)^7 (1+v)^4 (1+v^2) (1-t)^3 (1+t) (1-vt).
inline MSeriesForm t2_multiplicity_series(
    const T2FormConstants& k = t2_form_constants()) {
    const VarList tv("t", "v");
    const Poly t = Poly::variable(tv, "t");
    const Poly v = Poly::variable(tv, "v");
    Poly num(tv);
    for (int i = 0; i < 4; ++i) {
        num += promoted(k.h[i], tv) * t.pow(i);
    }
    const Poly den = (1 - v).pow(7) * (1 + v).pow(4) * (1 + v * v) *
                     (1 - t).pow(3) * (1 + t) * (1 - v * t);
    return MSeriesForm(RatFunc(num, den));
}

/// The same series as a sum of five elementary fractions.
inline PartialFractionT t2_elementary_form(
    const T2FormConstants& k = t2_form_constants()) {
    return PartialFractionT({{TFactor::one_minus_t, 3, k.a3},
                             {TFactor::one_minus_t, 2, k.a2},
                             {TFactor::one_minus_t, 1, k.a1},
                             {TFactor::one_plus_t, 1, k.b},
                             {TFactor::one_minus_vt, 1, k.c}});
}

/// The operator pipeline that produces the closed form from the base
/// series, with every intermediate stage exposed.
struct T2Pipeline {
    MSeriesForm w0, w1, w2, w3, w4;
};

inline T2Pipeline t2_pipeline() {
    const VarList zr("z");
    const Poly z = Poly::variable(zr, "z");
    const RatFunc id_scalar(z);  // a(z) = z
    const RatFunc inv_one_minus(Poly::constant(zr, 1), 1 - z);
    MSeriesForm w0 = thrall_base();
    MSeriesForm w1 = mul_geometric_twist(w0, id_scalar);
    MSeriesForm w2 = mul_geometric(w1);
    MSeriesForm w3 = mul_geometric(w2);
    MSeriesForm w4 = scale(inv_one_minus, w3);
    return {std::move(w0), std::move(w1), std::move(w2), std::move(w3),
            std::move(w4)};
}

/// Closed form computed through the operator pipeline.
inline MSeriesForm t2_multiplicity_series_via_operators() {
    return t2_pipeline().w4;
}

} // namespace cochar

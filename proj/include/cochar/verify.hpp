#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cochar/closed_form.hpp"
#include "cochar/multiplicity_series.hpp"
#include "cochar/partial_fraction.hpp"
#include "cochar/series.hpp"

namespace cochar {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // first counterexample or error on failure
};

namespace detail {

/// Printed intermediate stages of the operator pipeline, fixed here as
/// independent expectations.
inline RatFunc printed_w1() {
    const VarList tv("t", "v");
    const Poly t = Poly::variable(tv, "t");
    const Poly v = Poly::variable(tv, "v");
    return RatFunc(1 + v * v * t, (1 - v * v).pow(2) * (1 + v * v) *
                                      (1 - t * t) * (1 - v * t));
}

inline RatFunc printed_w2() {
    const VarList tv("t", "v");
    const Poly t = Poly::variable(tv, "t");
    const Poly v = Poly::variable(tv, "v");
    const Poly v2 = v * v;
    return RatFunc(-(v2 * (v2 - v + 1)) * t * t - v * (v2 - 1) * t +
                       (v2 - v + 1),
                   (1 - v).pow(4) * (1 + v).pow(3) * (1 + v2) *
                       (1 - t).pow(2) * (1 + t) * (1 - v * t));
}

inline RatFunc printed_w3() {
    const VarList tv("t", "v");
    const Poly t = Poly::variable(tv, "t");
    const Poly v = Poly::variable(tv, "v");
    const T2FormConstants k = t2_form_constants();
    Poly num(tv);
    for (int i = 0; i < 4; ++i) {
        num += promoted(k.h[i], tv) * t.pow(i);
    }
    return RatFunc(num, (1 - v).pow(6) * (1 + v).pow(4) * (1 + v * v) *
                            (1 - t).pow(3) * (1 + t) * (1 - v * t));
}

/// The listed elementary decompositions of the five closed-form
/// numerators, transcribed as fixtures.
inline PartialFractionV listed_decomposition(int which) {
    using K = VBasisKey;
    const VarList vr("v");
    PartialFractionV::CoeffMap m;
    const auto mv = [](int k) { return K{VBasis::one_minus_v, k}; };
    const auto pv = [](int k) { return K{VBasis::one_plus_v, k}; };
    switch (which) {
        case 0:  // a3
            m[mv(6)] = {1, 8};       m[mv(5)] = {1, 8};
            m[mv(4)] = {3, 32};      m[mv(3)] = {1, 16};
            m[mv(2)] = {5, 128};     m[mv(1)] = {3, 128};
            m[pv(2)] = {1, 128};     m[pv(1)] = {3, 128};
            break;
        case 1:  // a2
            m[mv(7)] = {1, 16};      m[mv(6)] = {-1, 32};
            m[mv(4)] = {1, 32};      m[mv(3)] = {11, 256};
            m[mv(2)] = {21, 512};    m[mv(1)] = {17, 512};
            m[pv(3)] = {3, 256};     m[pv(2)] = {13, 512};
            m[pv(1)] = {17, 512};
            break;
        case 2:  // a1
            m[mv(8)] = {1, 32};      m[mv(6)] = {-1, 32};
            m[mv(5)] = {-1, 32};     m[mv(4)] = {-5, 512};
            m[mv(3)] = {3, 256};     m[mv(2)] = {25, 1024};
            m[mv(1)] = {29, 1024};   m[pv(4)] = {7, 512};
            m[pv(3)] = {7, 256};     m[pv(2)] = {33, 1024};
            m[pv(1)] = {29, 1024};
            break;
        case 3:  // b
            m[mv(2)] = {1, 256};     m[mv(1)] = {3, 256};
            m[pv(4)] = {1, 64};      m[pv(3)] = {1, 32};
            m[pv(2)] = {9, 256};     m[pv(1)] = {7, 256};
            m[{VBasis::v_inv_quad, 1}] = {-1, 64};
            break;
        case 4:  // c
            m[mv(8)] = {-1, 32};     m[mv(7)] = {1, 32};
            m[mv(6)] = {1, 32};      m[mv(4)] = {-11, 512};
            m[mv(3)] = {-11, 512};   m[mv(2)] = {-9, 1024};
            m[mv(1)] = {1, 256};     m[pv(4)] = {-1, 512};
            m[pv(3)] = {-1, 512};    m[pv(2)] = {1, 1024};
            m[pv(1)] = {1, 256};
            m[{VBasis::inv_quad, 1}] = {1, 64};
            break;
        default:
            throw UsageError("no such fixture");
    }
    return PartialFractionV(std::move(m), Poly(vr));
}

inline CheckResult run_check(const std::string& name,
                             const std::function<std::string()>& body) {
    CheckResult r{name, false, ""};
    try {
        r.detail = body();
        r.pass = r.detail.empty();
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = e.what();
    }
    return r;
}

} // namespace detail

/// Runs the identity checks that tie all the fixed forms together.
/// `degree` controls the exhaustive-series checks (the formula-vs-oracle
/// sweep and the formula-reassembly comparison).
inline std::vector<CheckResult> run_verification(int degree) {
    if (degree < 2) {
        throw UsageError("verification degree must be at least 2");
    }
    std::vector<CheckResult> out;
    const VarList tv("t", "v");

    out.push_back(detail::run_check(
        "closed form equals recombined elementary form",
        [&]() -> std::string {
            const MSeriesForm closed = t2_multiplicity_series();
            const RatFunc sum = t2_elementary_form().recombine(tv);
            return sum == closed.value()
                       ? ""
                       : "recombined elementary form differs";
        }));

    out.push_back(detail::run_check(
        "reconstruction of the closed form gives the Hilbert series",
        [&]() -> std::string {
            const RatFunc rec = reconstruct(t2_multiplicity_series());
            return rec == hilbert_series_t2()
                       ? ""
                       : "reconstruction differs from the Hilbert series";
        }));

    out.push_back(detail::run_check(
        "operator pipeline reproduces every printed stage",
        [&]() -> std::string {
            const T2Pipeline pipe = t2_pipeline();
            const auto same = [](const MSeriesForm& got, const RatFunc& want) {
                return got.value().num() == want.num() &&
                       got.value().den() == want.den();
            };
            if (!same(pipe.w1, detail::printed_w1())) {
                return "stage w1 differs";
            }
            if (!same(pipe.w2, detail::printed_w2())) {
                return "stage w2 differs";
            }
            if (!same(pipe.w3, detail::printed_w3())) {
                return "stage w3 differs";
            }
            if (!(pipe.w4 == t2_multiplicity_series())) {
                return "stage w4 differs from the closed form";
            }
            return "";
        }));

    out.push_back(detail::run_check(
        "base multiplicity series reconstructs its symmetric function",
        [&]() -> std::string {
            const VarList xy("x", "y");
            const Poly x = Poly::variable(xy, "x");
            const Poly y = Poly::variable(xy, "y");
            const RatFunc expect(Poly::constant(xy, 1),
                                 (1 - x * x) * (1 - x * y) * (1 - y * y));
            return reconstruct(thrall_base()) == expect
                       ? ""
                       : "base reconstruction differs";
        }));

    out.push_back(detail::run_check(
        "elementary numerators decompose into the listed fractions",
        [&]() -> std::string {
            const T2FormConstants k = t2_form_constants();
            const RatFunc* nums[5] = {&k.a3, &k.a2, &k.a1, &k.b, &k.c};
            const char* names[5] = {"a3", "a2", "a1", "b", "c"};
            for (int i = 0; i < 5; ++i) {
                const PartialFractionV got = partial_fractions_v(*nums[i]);
                if (!(got == detail::listed_decomposition(i))) {
                    return std::string("decomposition of ") + names[i] +
                           " differs from the listed coefficients";
                }
                if (got.recombine() != *nums[i]) {
                    return std::string("decomposition of ") + names[i] +
                           " does not recombine";
                }
            }
            return "";
        }));

    out.push_back(detail::run_check(
        "explicit formula matches the series oracle through degree " +
            std::to_string(degree),
        [&]() -> std::string {
            const auto table = oracle_multiplicities_up_to(degree);
            const MultiplicityConstants k = multiplicity_constants();
            for (const auto& [lambda, want] : table) {
                const BigInt got =
                    multiplicity(Partition2(lambda.first, lambda.second), k);
                if (got != want) {
                    return "first counterexample at (" +
                           std::to_string(lambda.first) + "," +
                           std::to_string(lambda.second) + "): formula " +
                           got.str() + ", oracle " + want.str();
                }
            }
            return "";
        }));

    out.push_back(detail::run_check(
        "formula reassembly matches the closed-form expansion to degree " +
            std::to_string(degree),
        [&]() -> std::string {
            const TruncSeries2 lhs = multiplicity_series_from_formula(degree);
            const TruncSeries2 rhs =
                expand(t2_multiplicity_series().value(), degree);
            for (int i = 0; i <= degree; ++i) {
                for (int j = 0; i + j <= degree; ++j) {
                    if (lhs.coeff(i, j) != rhs.coeff(i, j)) {
                        return "first difference at t^" + std::to_string(i) +
                               " v^" + std::to_string(j) + ": " +
                               to_string(lhs.coeff(i, j)) + " vs " +
                               to_string(rhs.coeff(i, j));
                    }
                }
            }
            return "";
        }));

    return out;
}

} // namespace cochar

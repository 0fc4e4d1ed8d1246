#pragma once

#include <array>
#include <span>
#include <string>

#include "cochar/errors.hpp"
#include "cochar/poly.hpp"
#include "cochar/rational.hpp"
#include "cochar/series.hpp"

namespace cochar {

/// The six polynomial coefficient families of the explicit multiplicity
/// formula. In the expansion of the multiplicity series, the a-families
/// (bivariate in (p, q)) and b-families (univariate in q) are attached to
/// t^p v^q with parity weights, while the c-families (univariate in s)
/// are attached to the diagonal monomials (tv)^p v^s.
enum class CoeffFamily { a_plus, a_minus, b_plus, b_minus, c_plus, c_minus };

inline std::string to_string(CoeffFamily f) {
    switch (f) {
        case CoeffFamily::a_plus: return "a+";
        case CoeffFamily::a_minus: return "a-";
        case CoeffFamily::b_plus: return "b+";
        case CoeffFamily::b_minus: return "b-";
        case CoeffFamily::c_plus: return "c+";
        case CoeffFamily::c_minus: return "c-";
    }
    return "?";
}

/// Constants catalog: every rational constant of the explicit formula is
/// transcribed exactly once, here. Tests cross-check the whole catalog
/// against the series oracle, so a transcription slip in any entry is
/// caught structurally.
struct MultiplicityConstants {
    Poly a_plus, a_minus;  // in (p, q)
    Poly b_plus, b_minus;  // in (q)
    Poly c_plus, c_minus;  // in (s)
};

inline MultiplicityConstants multiplicity_constants() {
    const VarList pq("p", "q");
    const VarList qq("q");
    const VarList ss("s");
    const Poly p = Poly::variable(pq, "p");
    const Poly q = Poly::variable(pq, "q");
    const Poly qu = Poly::variable(qq, "q");
    const Poly s = Poly::variable(ss, "s");
    const long long f3 = 6, f5 = 120, f6 = 720, f7 = 5040;

    MultiplicityConstants k{Poly(pq), Poly(pq), Poly(qq),
                            Poly(qq), Poly(ss), Poly(ss)};

    const Poly p2 = p * p;
    const Poly pq1 = p * q;
    const Poly q2 = q * q;
    k.a_plus = (84 * p2 + 14 * pq1 + q2) * q.pow(5) *
                   BigRational(1, 32 * f7) +
               (40 * p2 + 12 * pq1 + q2) * q.pow(4) *
                   BigRational(1, 32 * f5) +
               (90 * p2 + 49 * pq1 + 5 * q2) * q.pow(3) *
                   BigRational(1, 128 * 9) +
               (104 * p2 + 108 * pq1 + 15 * q2) * q2 *
                   BigRational(1, 128 * 3) +
               (19596 * p2 + 43666 * pq1 + 9599 * q2) * q *
                   BigRational(1, 64 * f6) +
               (1800 * p2 + 11676 * pq1 + 4993 * q2) *
                   BigRational(1, 64 * f5) +
               (9492 * p + 11437 * q) * BigRational(1, 512 * 21) +
               Poly::constant(pq, BigRational(43, 64));

    k.a_minus = (12 * p2 + 18 * pq1 + 7 * q2) * q *
                    BigRational(1, 1024 * 3) +
                (8 * p2 + 28 * pq1 + 17 * q2) * BigRational(1, 512) +
                (180 * p + 229 * q) * BigRational(1, 512 * 3) +
                Poly::constant(pq, BigRational(13, 64));

    k.b_plus = (qu + 4) * BigRational(1, 256);
    k.b_minus = (2 * qu.pow(3) + 24 * qu * qu + 85 * qu + 84) *
                BigRational(1, 256 * 3);

    k.c_plus = s.pow(7) * BigRational(-1, 32 * f7) +
               s.pow(6) * BigRational(-1, 64 * f5) +
               s.pow(5) * BigRational(-19, 32 * f6) +
               s.pow(4) * BigRational(-1, 256 * f3) +
               s.pow(3) * BigRational(391, 64 * f6) +
               s * s * BigRational(79, 1024 * 5) +
               s * BigRational(-1453, 128 * f5 * 7) +
               Poly::constant(ss, BigRational(-17, 1024));

    k.c_minus = (s.pow(3) + 9 * s * s + 17 * s - 3) *
                BigRational(-1, 1024 * 3);

    return k;
}

/// Exact value of a coefficient family at non-negative integer arguments;
/// a-kinds take (p, q), b-kinds take q, c-kinds take s.
inline BigRational coeff_family_value(
    CoeffFamily kind, std::span<const long long> args,
    const MultiplicityConstants& k = multiplicity_constants()) {
    const bool is_a =
        kind == CoeffFamily::a_plus || kind == CoeffFamily::a_minus;
    const std::size_t arity = is_a ? 2 : 1;
    if (args.size() != arity) {
        throw UsageError("family " + to_string(kind) + " takes " +
                         std::to_string(arity) + " argument(s), got " +
                         std::to_string(args.size()));
    }
    for (const long long a : args) {
        if (a < 0) {
            throw DomainError("family arguments must be non-negative");
        }
    }
    const BigRational x(args[0]);
    const BigRational y(is_a ? BigRational(args[1]) : BigRational(0));
    switch (kind) {
        case CoeffFamily::a_plus: return k.a_plus.eval({x, y});
        case CoeffFamily::a_minus: return k.a_minus.eval({x, y});
        case CoeffFamily::b_plus: return k.b_plus.eval({x, 0});
        case CoeffFamily::b_minus: return k.b_minus.eval({x, 0});
        case CoeffFamily::c_plus: return k.c_plus.eval({x, 0});
        case CoeffFamily::c_minus: return k.c_minus.eval({x, 0});
    }
    throw UsageError("unknown coefficient family");
}

namespace detail {

/// Coefficient of t^p v^q in the multiplicity series, evaluated from the
/// constants catalog. The diagonal parity correction enters with sign
/// (-1)^w, matching the (tv)^p v^(2w) sum it comes from.
inline BigRational formula_coefficient(long long p, long long q,
                                       const MultiplicityConstants& k) {
    const BigRational P(p);
    const BigRational Q(q);
    BigRational m = k.a_plus.eval({P, Q}) +
                    parity_sign(q) * k.a_minus.eval({P, Q}) +
                    parity_sign(p) * k.b_plus.eval({Q, 0}) +
                    parity_sign(p + q) * k.b_minus.eval({Q, 0});
    if (q % 2 == 1) {
        const long long r = q / 2;
        m -= BigRational(parity_sign(p + r), 64);
    }
    if (q >= p) {
        const long long s = q - p;
        const BigRational S(s);
        m += k.c_plus.eval({S, 0}) +
             parity_sign(s) * k.c_minus.eval({S, 0});
        if (s % 2 == 0) {
            const long long w = s / 2;
            m += BigRational(parity_sign(w), 64);
        }
    }
    return m;
}

inline BigRational int_pow(const BigRational& base, int e) {
    BigRational r = 1;
    for (int i = 0; i < e; ++i) {
        r *= base;
    }
    return r;
}

} // namespace detail

/// Closed-form multiplicity of S_lambda in the mixed trace cocharacter of
/// two generic 3x3 matrices. The rational evaluation must come out a
/// non-negative integer; anything else signals a corrupted catalog.
inline BigInt multiplicity(
    const Partition2& lambda,
    const MultiplicityConstants& k = multiplicity_constants()) {
    const BigRational m = detail::formula_coefficient(
        lambda.part_difference(), lambda.l2, k);
    if (!is_integer(m) || m < 0) {
        throw ConsistencyError(
            "closed form produced a non-integral or negative value " +
            to_string(m) + " at (" + std::to_string(lambda.l1) + "," +
            std::to_string(lambda.l2) + ")");
    }
    return numerator(m);
}

/// The multiplicity series assembled directly from the four sums of the
/// explicit formula, truncated at total degree N in (t, v).
inline TruncSeries2 multiplicity_series_from_formula(
    int n, const MultiplicityConstants& k = multiplicity_constants()) {
    TruncSeries2 out(n);
    // Sum over t^p v^q of the a/b families with their parity weights.
    for (long long p = 0; p <= n; ++p) {
        for (long long q = 0; p + q <= n; ++q) {
            const BigRational c =
                k.a_plus.eval({BigRational(p), BigRational(q)}) +
                parity_sign(q) *
                    k.a_minus.eval({BigRational(p), BigRational(q)}) +
                parity_sign(p) * k.b_plus.eval({BigRational(q), 0}) +
                parity_sign(p + q) * k.b_minus.eval({BigRational(q), 0});
            out.add_coeff(static_cast<int>(p), static_cast<int>(q), c);
        }
    }
    // -(1/64) sum over t^p v^(2r+1) with sign (-1)^(p+r).
    for (long long p = 0; p <= n; ++p) {
        for (long long r = 0; p + 2 * r + 1 <= n; ++r) {
            out.add_coeff(static_cast<int>(p), static_cast<int>(2 * r + 1),
                          BigRational(-parity_sign(p + r), 64));
        }
    }
    // Sum over (tv)^p v^s of the c families.
    for (long long p = 0; 2 * p <= n; ++p) {
        for (long long s = 0; 2 * p + s <= n; ++s) {
            const BigRational c =
                k.c_plus.eval({BigRational(s), 0}) +
                parity_sign(s) * k.c_minus.eval({BigRational(s), 0});
            out.add_coeff(static_cast<int>(p), static_cast<int>(p + s), c);
        }
    }
    // +(1/64) sum over (tv)^p v^(2w) with sign (-1)^w.
    for (long long p = 0; 2 * p <= n; ++p) {
        for (long long w = 0; 2 * p + 2 * w <= n; ++w) {
            out.add_coeff(static_cast<int>(p), static_cast<int>(p + 2 * w),
                          BigRational(parity_sign(w), 64));
        }
    }
    return out;
}

/// Leading asymptotic main term of the multiplicity, as an exact
/// rational. This is the degree-7 part only; the remainder is of order
/// (l1 + l2)^6 and is reported separately by callers that need it.
inline BigRational asymptotic_main_term(const Partition2& lambda) {
    const BigRational l1(lambda.l1);
    const BigRational l2(lambda.l2);
    const long long f6 = 720, f7 = 5040;
    BigRational m = detail::int_pow(l2, 7) / (f7 * 32) +
                    (l1 - l2) * detail::int_pow(l2, 6) / (f6 * 16) +
                    detail::int_pow(l1 - l2, 2) * detail::int_pow(l2, 5) /
                        (120 * 16);
    if (!(lambda.l1 > 2 * lambda.l2)) {
        m -= detail::int_pow(2 * l2 - l1, 7) / (f7 * 32);
    }
    return m;
}

/// Coefficient of l1^2 in the multiplicity for fixed l2 and l1 > 2 l2:
/// a parity-dependent constant once l2 is fixed.
inline BigRational lambda1_square_coefficient(long long l2) {
    if (l2 < 0) {
        throw DomainError("negative partition part");
    }
    const BigRational L(l2);
    const BigRational even_part =
        detail::int_pow(L, 5) / 1920 + detail::int_pow(L, 4) / 96 +
        5 * detail::int_pow(L, 3) / 64 + 13 * L * L / 48 +
        1633 * L / 3840 + BigRational(15, 64);
    const BigRational sign_part = L / 256 + BigRational(1, 64);
    return even_part + parity_sign(l2) * sign_part;
}

/// Multiplicity of the irreducible character indexed by mu in the
/// cocharacter sequence of the polynomial identities of 3x3 matrices,
/// valid exactly when mu_3 = ... = mu_9 >= 2.
inline BigInt ordinary_multiplicity(const std::array<long long, 9>& mu) {
    for (int i = 0; i + 1 < 9; ++i) {
        if (mu[i] < mu[i + 1]) {
            throw DomainError("mu must be non-increasing");
        }
    }
    if (mu[8] < 0) {
        throw DomainError("mu must be non-negative");
    }
    for (int i = 3; i < 9; ++i) {
        if (mu[i] != mu[2]) {
            throw OutOfScopeError(
                "no closed form unless mu_3 = ... = mu_9; got mu_" +
                std::to_string(i + 1) + " = " + std::to_string(mu[i]) +
                " != mu_3 = " + std::to_string(mu[2]));
        }
    }
    if (mu[2] < 2) {
        throw OutOfScopeError("no closed form unless mu_3 >= 2; got " +
                              std::to_string(mu[2]));
    }
    return multiplicity(Partition2(mu[0] - mu[2], mu[1] - mu[2]));
}

/// Mixed trace cocharacter multiplicity for 2x2 matrices:
/// (l1-l2+1)(l2-l3+1)(l3-l4+1) on partitions with at most four parts.
inline BigInt mixed_multiplicity_2x2(const std::array<long long, 4>& l) {
    for (int i = 0; i + 1 < 4; ++i) {
        if (l[i] < l[i + 1]) {
            throw DomainError("lambda must be non-increasing");
        }
    }
    if (l[3] < 0) {
        throw DomainError("lambda must be non-negative");
    }
    return BigInt((l[0] - l[1] + 1) * (l[1] - l[2] + 1) *
                  (l[2] - l[3] + 1));
}

} // namespace cochar

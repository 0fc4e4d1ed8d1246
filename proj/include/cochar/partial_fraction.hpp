#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cochar/errors.hpp"
#include "cochar/poly.hpp"
#include "cochar/ratfunc.hpp"
#include "cochar/rational.hpp"

namespace cochar {

/// Coefficient of z^m in (1-z)^-(k+1): the binomial number C(k+m, k).
inline BigRational binomial_series_coeff(long long k, long long m) {
    if (k < 0 || m < 0) {
        throw DomainError("binomial_series_coeff needs non-negative "
                          "arguments");
    }
    return BigRational(binomial(k + m, k));
}

/// The linear-in-t denominators appearing in elementary fractions.
enum class TFactor { one_minus_t, one_plus_t, one_minus_vt };

inline std::string to_string(TFactor f) {
    switch (f) {
        case TFactor::one_minus_t: return "1-t";
        case TFactor::one_plus_t: return "1+t";
        case TFactor::one_minus_vt: return "1-vt";
    }
    return "?";
}

/// (factor)^power with the given bivariate variable list (t-like first).
inline Poly t_factor_poly(TFactor f, const VarList& tv) {
    const Poly t = Poly::variable(tv, tv[0]);
    const Poly v = Poly::variable(tv, tv[1]);
    switch (f) {
        case TFactor::one_minus_t: return 1 - t;
        case TFactor::one_plus_t: return 1 + t;
        case TFactor::one_minus_vt: return 1 - v * t;
    }
    throw UsageError("unknown factor");
}

/// Root of the factor in t, as a rational function of the second variable.
inline RatFunc t_factor_root(TFactor f, const VarList& v_ring) {
    const Poly one = Poly::constant(v_ring, 1);
    const Poly v = Poly::variable(v_ring, v_ring[0]);
    switch (f) {
        case TFactor::one_minus_t: return RatFunc(one);
        case TFactor::one_plus_t: return RatFunc(-one);
        case TFactor::one_minus_vt: return RatFunc(one, v);
    }
    throw UsageError("unknown factor");
}

struct TFactorPower {
    TFactor factor;
    int power;
};

/// One elementary fraction numerator(v) / factor(t,v)^power.
struct TPoleTerm {
    TFactor factor;
    int power;
    RatFunc numerator;  // univariate in the second variable
};

/// Decomposition of a bivariate rational function into elementary
/// fractions with linear-in-t pole factors. Recombining the terms
/// restores the decomposed function exactly.
class PartialFractionT {
public:
    explicit PartialFractionT(std::vector<TPoleTerm> terms)
        : terms_(std::move(terms)) {}

    const std::vector<TPoleTerm>& terms() const { return terms_; }

    /// Exact sum of all terms over the given (t, v) ring.
    RatFunc recombine(const VarList& tv) const {
        RatFunc acc = RatFunc::constant(tv, 0);
        for (const auto& term : terms_) {
            const RatFunc den(t_factor_poly(term.factor, tv).pow(term.power));
            acc = acc + term.numerator.promoted(tv) / den;
        }
        return acc;
    }

private:
    std::vector<TPoleTerm> terms_;
};

/// Decomposes f(t, v) over the supplied denominator factorization.
/// Each factor is peeled from highest power down by evaluating at its
/// root; whatever remains after all poles are removed must vanish.
inline PartialFractionT partial_fractions_t(
    const RatFunc& f, const std::vector<TFactorPower>& factored_den) {
    if (f.vars().size() != 2) {
        throw UsageError("partial_fractions_t needs a bivariate function");
    }
    const VarList& tv = f.vars();
    const VarList v_ring(tv[1]);

    Poly prod = Poly::constant(tv, 1);
    for (std::size_t i = 0; i < factored_den.size(); ++i) {
        if (factored_den[i].power < 1) {
            throw UsageError("factor powers must be positive");
        }
        for (std::size_t j = i + 1; j < factored_den.size(); ++j) {
            if (factored_den[i].factor == factored_den[j].factor) {
                throw UsageError("duplicate factor in supplied "
                                 "factorization");
            }
        }
        prod *= t_factor_poly(factored_den[i].factor, tv)
                    .pow(factored_den[i].power);
    }
    const auto cofactor = div_exact(f.den(), prod);
    if (!cofactor || cofactor->degree_in(0) > 0) {
        throw FactorizationError(
            "supplied factorization does not divide the denominator");
    }

    std::vector<TPoleTerm> terms;
    RatFunc rest = f;
    for (const auto& [factor, mult] : factored_den) {
        const RatFunc factor_rf(t_factor_poly(factor, tv));
        const RatFunc root = t_factor_root(factor, v_ring);
        for (int k = mult; k >= 1; --k) {
            const RatFunc g = rest * factor_rf.pow(k);
            const RatFunc coeff = substitute(g, {{tv[0], root}});
            if (!coeff.is_zero()) {
                terms.push_back({factor, k, coeff});
                rest = rest - coeff.promoted(tv) / factor_rf.pow(k);
            }
        }
    }
    if (!rest.is_zero()) {
        throw FactorizationError(
            "function is not a proper combination of the supplied poles; "
            "residue " +
            to_string(rest));
    }
    return PartialFractionT(std::move(terms));
}

/// Basis element kinds of the univariate elementary-fraction
/// decomposition: (1-v)^-k, (1+v)^-k, 1/(1+v^2), v/(1+v^2).
enum class VBasis { one_minus_v, one_plus_v, inv_quad, v_inv_quad };

struct VBasisKey {
    VBasis kind;
    int power;  // >= 1; always 1 for the quadratic kinds

    bool operator<(const VBasisKey& o) const {
        return std::tie(kind, power) < std::tie(o.kind, o.power);
    }
    bool operator==(const VBasisKey& o) const {
        return kind == o.kind && power == o.power;
    }
};

inline std::string to_string(const VBasisKey& k) {
    const std::string pw =
        k.power == 1 ? std::string() : "^" + std::to_string(k.power);
    switch (k.kind) {
        case VBasis::one_minus_v: return "1/(1-v)" + pw;
        case VBasis::one_plus_v: return "1/(1+v)" + pw;
        case VBasis::inv_quad: return "1/(1+v^2)";
        case VBasis::v_inv_quad: return "v/(1+v^2)";
    }
    return "?";
}

/// Decomposition of a univariate rational function over the fixed basis
/// {(1-v)^-k, (1+v)^-k, 1/(1+v^2), v/(1+v^2)} plus a polynomial
/// remainder. Only finitely many coefficients are nonzero and
/// recombination restores the input exactly.
class PartialFractionV {
public:
    using CoeffMap = std::map<VBasisKey, BigRational>;

    PartialFractionV(CoeffMap coeffs, Poly remainder)
        : coeffs_(std::move(coeffs)), remainder_(std::move(remainder)) {
        for (auto it = coeffs_.begin(); it != coeffs_.end();) {
            it = it->second == 0 ? coeffs_.erase(it) : std::next(it);
        }
    }

    const CoeffMap& coefficients() const { return coeffs_; }
    const Poly& remainder() const { return remainder_; }

    BigRational coefficient(const VBasisKey& key) const {
        const auto it = coeffs_.find(key);
        return it == coeffs_.end() ? BigRational(0) : it->second;
    }

    RatFunc recombine() const {
        const VarList& vr = remainder_.vars();
        const Poly v = Poly::variable(vr, vr[0]);
        RatFunc acc(remainder_);
        for (const auto& [key, c] : coeffs_) {
            Poly den(vr);
            Poly num = Poly::constant(vr, c);
            switch (key.kind) {
                case VBasis::one_minus_v: den = (1 - v).pow(key.power); break;
                case VBasis::one_plus_v: den = (1 + v).pow(key.power); break;
                case VBasis::inv_quad: den = 1 + v * v; break;
                case VBasis::v_inv_quad:
                    den = 1 + v * v;
                    num = v * c;
                    break;
            }
            acc = acc + RatFunc(num, den);
        }
        return acc;
    }

    bool operator==(const PartialFractionV& o) const {
        return coeffs_ == o.coeffs_ && remainder_ == o.remainder_;
    }

private:
    CoeffMap coeffs_;
    Poly remainder_;
};

namespace detail {

/// a + b v representing p mod (1 + v^2).
inline std::pair<BigRational, BigRational> mod_quad(const Poly& p) {
    BigRational a = 0;
    BigRational b = 0;
    for (const auto& [e, c] : p.terms()) {
        const int k = e[0];
        const BigRational s = (k / 2) % 2 == 0 ? c : -c;
        if (k % 2 == 0) {
            a += s;
        } else {
            b += s;
        }
    }
    return {a, b};
}

} // namespace detail

/// Decomposes a univariate rational function whose denominator is a
/// product of powers of (1-v), (1+v) and at most one factor (1+v^2).
inline PartialFractionV partial_fractions_v(const RatFunc& f) {
    if (f.vars().size() != 1) {
        throw UsageError("partial_fractions_v needs a univariate function");
    }
    const VarList& vr = f.vars();
    const Poly v = Poly::variable(vr, vr[0]);
    const Poly one_minus = 1 - v;
    const Poly one_plus = 1 + v;
    const Poly quad = 1 + v * v;

    Poly den = f.den();
    int k_minus = 0;
    int k_plus = 0;
    int k_quad = 0;
    for (auto q = div_exact(den, one_minus); q; q = div_exact(den, one_minus)) {
        den = *q;
        ++k_minus;
    }
    for (auto q = div_exact(den, one_plus); q; q = div_exact(den, one_plus)) {
        den = *q;
        ++k_plus;
    }
    for (auto q = div_exact(den, quad); q; q = div_exact(den, quad)) {
        den = *q;
        ++k_quad;
    }
    if (!den.is_constant()) {
        throw FactorizationError(
            "denominator contains an unsupported irreducible factor: " +
            to_string(f.den()));
    }
    if (k_quad > 1) {
        throw FactorizationError(
            "(1+v^2) appears with multiplicity " + std::to_string(k_quad) +
            "; the elementary basis covers multiplicity one only");
    }

    PartialFractionV::CoeffMap coeffs;
    RatFunc work = f;
    if (k_quad == 1) {
        // alpha + beta v is num * inverse(den / (1+v^2)) in Q[v]/(1+v^2).
        const auto [na, nb] = detail::mod_quad(work.num());
        const auto [da, db] =
            detail::mod_quad(*div_exact(work.den(), quad));
        const BigRational norm = da * da + db * db;
        const BigRational alpha = (na * da + nb * db) / norm;
        const BigRational beta = (nb * da - na * db) / norm;
        if (alpha != 0) {
            coeffs[{VBasis::inv_quad, 1}] = alpha;
        }
        if (beta != 0) {
            coeffs[{VBasis::v_inv_quad, 1}] = beta;
        }
        work = work - RatFunc(Poly::constant(vr, alpha) + v * beta, quad);
    }
    const auto peel = [&](const Poly& base, VBasis kind,
                          const BigRational& root, int mult) {
        const RatFunc base_rf{Poly(base)};
        for (int k = mult; k >= 1; --k) {
            const BigRational c = eval_rational(work * base_rf.pow(k), root);
            if (c != 0) {
                coeffs[{kind, k}] = c;
                work = work - RatFunc(Poly::constant(vr, c), base.pow(k));
            }
        }
    };
    peel(one_minus, VBasis::one_minus_v, 1, k_minus);
    peel(one_plus, VBasis::one_plus_v, -1, k_plus);

    if (!work.is_polynomial()) {
        throw ConsistencyError("incomplete elementary decomposition; "
                               "residue " +
                               to_string(work));
    }
    const Poly remainder =
        work.num() / work.den().constant_value();
    return PartialFractionV(std::move(coeffs), remainder);
}

} // namespace cochar

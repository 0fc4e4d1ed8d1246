#pragma once

#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cochar/errors.hpp"
#include "cochar/poly.hpp"
#include "cochar/ratfunc.hpp"
#include "cochar/rational.hpp"

namespace cochar {

/// A partition with at most two parts.
struct Partition2 {
    long long l1;
    long long l2;

    Partition2(long long a, long long b) : l1(a), l2(b) {
        if (!(l1 >= l2 && l2 >= 0)) {
            throw DomainError("not a partition: (" + std::to_string(a) +
                              "," + std::to_string(b) + ")");
        }
    }

    /// p = l1 - l2, the arm length that indexes the Schur expression.
    long long part_difference() const { return l1 - l2; }

    long long weight() const { return l1 + l2; }

    bool operator==(const Partition2& o) const {
        return l1 == o.l1 && l2 == o.l2;
    }
};

/// Bivariate power series truncated at a total degree N: stores every
/// coefficient of x^i y^j with i + j <= N exactly. No zero coefficients
/// are stored, and access beyond the truncation is an error, never zero.
class TruncSeries2 {
public:
    using TermMap = std::map<Exponents, BigRational, GradedLess>;

    explicit TruncSeries2(int truncation_degree) : n_(truncation_degree) {
        if (n_ < 0) {
            throw DomainError("negative truncation degree");
        }
    }

    int truncation() const { return n_; }
    const TermMap& terms() const { return terms_; }

    BigRational coeff(int i, int j) const {
        check_inside(i, j);
        const auto it = terms_.find(Exponents{i, j});
        return it == terms_.end() ? BigRational(0) : it->second;
    }

    void set_coeff(int i, int j, BigRational c) {
        check_inside(i, j);
        if (c == 0) {
            terms_.erase(Exponents{i, j});
        } else {
            terms_[Exponents{i, j}] = std::move(c);
        }
    }

    void add_coeff(int i, int j, const BigRational& c) {
        check_inside(i, j);
        if (c == 0) {
            return;
        }
        auto [it, inserted] = terms_.emplace(Exponents{i, j}, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    /// Copy truncated to a lower degree.
    TruncSeries2 truncated(int m) const {
        if (m > n_) {
            throw OutOfTruncationError("cannot extend a truncated series");
        }
        TruncSeries2 r(m);
        for (const auto& [e, c] : terms_) {
            if (e[0] + e[1] <= m) {
                r.terms_.emplace(e, c);
            }
        }
        return r;
    }

    friend TruncSeries2 operator+(const TruncSeries2& a,
                                  const TruncSeries2& b) {
        TruncSeries2 r = a.truncated(std::min(a.n_, b.n_));
        for (const auto& [e, c] : b.terms_) {
            if (e[0] + e[1] <= r.n_) {
                r.add_coeff(e[0], e[1], c);
            }
        }
        return r;
    }

    friend TruncSeries2 operator-(const TruncSeries2& a,
                                  const TruncSeries2& b) {
        TruncSeries2 r = a.truncated(std::min(a.n_, b.n_));
        for (const auto& [e, c] : b.terms_) {
            if (e[0] + e[1] <= r.n_) {
                r.add_coeff(e[0], e[1], -c);
            }
        }
        return r;
    }

    friend TruncSeries2 operator*(const TruncSeries2& a,
                                  const TruncSeries2& b) {
        TruncSeries2 r(std::min(a.n_, b.n_));
        for (const auto& [ea, ca] : a.terms_) {
            const int da = ea[0] + ea[1];
            if (da > r.n_) {
                break;
            }
            for (const auto& [eb, cb] : b.terms_) {
                if (da + eb[0] + eb[1] > r.n_) {
                    break;
                }
                r.add_coeff(ea[0] + eb[0], ea[1] + eb[1], ca * cb);
            }
        }
        return r;
    }

    friend TruncSeries2 operator*(TruncSeries2 s, const BigRational& c) {
        if (c == 0) {
            s.terms_.clear();
            return s;
        }
        for (auto& [e, v] : s.terms_) {
            v *= c;
        }
        return s;
    }

    bool is_symmetric() const {
        for (const auto& [e, c] : terms_) {
            if (coeff(e[1], e[0]) != c) {
                return false;
            }
        }
        return true;
    }

    bool operator==(const TruncSeries2& o) const {
        return n_ == o.n_ && terms_ == o.terms_;
    }

private:
    void check_inside(int i, int j) const {
        if (i < 0 || j < 0) {
            throw DomainError("negative series exponent");
        }
        if (i + j > n_) {
            throw OutOfTruncationError(
                "coefficient (" + std::to_string(i) + "," +
                std::to_string(j) + ") lies beyond truncation degree " +
                std::to_string(n_));
        }
    }

    int n_;
    TermMap terms_;
};

inline TruncSeries2 series_from_poly(const Poly& p, int n) {
    TruncSeries2 r(n);
    for (const auto& [e, c] : p.terms()) {
        if (e[0] + e[1] <= n) {
            r.set_coeff(e[0], e[1], c);
        }
    }
    return r;
}

namespace detail {

/// Geometric factor 1/(1 - c X^e): expansion sum_j c^j X^(j e).
inline TruncSeries2 geometric_series(const Exponents& e,
                                     const BigRational& c, int n) {
    TruncSeries2 r(n);
    const int step = e[0] + e[1];
    BigRational pw = 1;
    for (int j = 0; j * step <= n; ++j) {
        r.set_coeff(j * e[0], j * e[1], pw);
        pw *= c;
    }
    return r;
}

/// Series division num / den through total degree n; den must have a
/// nonzero constant term. Solves the convolution recurrence directly in
/// graded order.
inline TruncSeries2 divide_series(const TruncSeries2& num, const Poly& den,
                                  int n) {
    const BigRational c0 = den.coeff({0, 0});
    TruncSeries2 b(n);
    for (int total = 0; total <= n; ++total) {
        for (int i = 0; i <= total; ++i) {
            const int j = total - i;
            BigRational acc = num.coeff(i, j);
            for (const auto& [e, c] : den.terms()) {
                if (e[0] == 0 && e[1] == 0) {
                    continue;
                }
                if (e[0] <= i && e[1] <= j) {
                    const BigRational prev = b.coeff(i - e[0], j - e[1]);
                    if (prev != 0) {
                        acc -= c * prev;
                    }
                }
            }
            if (acc != 0) {
                b.set_coeff(i, j, acc / c0);
            }
        }
    }
    return b;
}

} // namespace detail

/// Maclaurin expansion of f through total degree n, exact. Denominators
/// that factor into geometric binomials (the usual Hilbert-series shape)
/// expand factor-by-factor; anything else falls back to series division.
inline TruncSeries2 expand(const RatFunc& f, int n) {
    const BigRational c0 = f.den().coeff({0, 0});
    if (c0 == 0) {
        throw NotExpandableError(
            "denominator has zero constant term; no expansion at the "
            "origin");
    }
    const Poly den_monic = f.den() / c0;
    const Poly num_scaled = f.num() / c0;
    if (const auto factors = detail::geometric_factors(den_monic)) {
        TruncSeries2 acc = series_from_poly(num_scaled, n);
        for (const auto& [e, c] : *factors) {
            acc = acc * detail::geometric_series(e, c, n);
        }
        return acc;
    }
    return detail::divide_series(series_from_poly(num_scaled, n), den_monic,
                                 n);
}

/// The Hilbert series of the mixed trace algebra of two generic 3x3
/// matrices, in the variables (x, y):
/// 1 / ((1-x)^2 (1-y)^2 (1-x^2) (1-y^2) (1-xy)^2 (1-x^2 y) (1-x y^2)).
inline RatFunc hilbert_series_t2() {
    const VarList xy("x", "y");
    const Poly x = Poly::variable(xy, "x");
    const Poly y = Poly::variable(xy, "y");
    const Poly den = (1 - x).pow(2) * (1 - y).pow(2) * (1 - x * x) *
                     (1 - y * y) * (1 - x * y).pow(2) * (1 - x * x * y) *
                     (1 - x * y * y);
    return RatFunc(Poly::constant(xy, 1), den);
}

/// Schur function S_(l1,l2)(x, y) = (xy)^l2 (x^p + x^(p-1) y + ... + y^p),
/// p = l1 - l2, truncated at total degree n.
inline TruncSeries2 schur(const Partition2& lambda, int n) {
    if (lambda.l1 > n) {
        throw OutOfTruncationError("schur: first part exceeds truncation");
    }
    TruncSeries2 r(n);
    if (lambda.weight() > n) {
        return r;
    }
    const int p = static_cast<int>(lambda.part_difference());
    const int l2 = static_cast<int>(lambda.l2);
    for (int i = 0; i <= p; ++i) {
        r.set_coeff(l2 + p - i, l2 + i, 1);
    }
    return r;
}

/// Multiplicity of S_lambda in a symmetric series: the difference
/// a(l1, l2) - a(l1 + 1, l2 - 1), with the second term taken as zero
/// when l2 = 0. Both coefficients have total degree l1 + l2, so the
/// truncation must satisfy l1 + l2 <= N.
inline BigRational schur_multiplicity(const TruncSeries2& s,
                                      const Partition2& lambda) {
    if (!s.is_symmetric()) {
        throw DomainError("schur_multiplicity requires a symmetric series");
    }
    const long long needed = lambda.weight();
    if (needed > s.truncation()) {
        throw OutOfTruncationError(
            "multiplicity of (" + std::to_string(lambda.l1) + "," +
            std::to_string(lambda.l2) + ") needs total degree " +
            std::to_string(needed) + " > truncation " +
            std::to_string(s.truncation()));
    }
    const int i = static_cast<int>(lambda.l1);
    const int j = static_cast<int>(lambda.l2);
    BigRational m = s.coeff(i, j);
    if (lambda.l2 > 0) {
        m -= s.coeff(i + 1, j - 1);
    }
    return m;
}

/// Brute-force multiplicity: expands the Hilbert series far enough and
/// applies the difference formula. Independent of every closed form.
inline BigInt oracle_multiplicity(const Partition2& lambda) {
    const int n = static_cast<int>(lambda.weight());
    const TruncSeries2 s = expand(hilbert_series_t2(), n);
    const BigRational m = schur_multiplicity(s, lambda);
    if (!is_integer(m) || m < 0) {
        throw ConsistencyError("oracle produced a non-integral or negative "
                               "multiplicity " +
                               to_string(m));
    }
    return numerator(m);
}

/// All oracle multiplicities with l1 + l2 <= maxweight from a single
/// expansion of the Hilbert series.
inline std::map<std::pair<long long, long long>, BigInt>
oracle_multiplicities_up_to(int maxweight) {
    const TruncSeries2 s = expand(hilbert_series_t2(), maxweight);
    std::map<std::pair<long long, long long>, BigInt> table;
    for (long long w = 0; w <= maxweight; ++w) {
        for (long long l2 = 0; 2 * l2 <= w; ++l2) {
            const Partition2 lambda(w - l2, l2);
            const BigRational m = schur_multiplicity(s, lambda);
            if (!is_integer(m) || m < 0) {
                throw ConsistencyError(
                    "oracle produced a non-integral or negative "
                    "multiplicity at (" +
                    std::to_string(lambda.l1) + "," +
                    std::to_string(lambda.l2) + ")");
            }
            table[{lambda.l1, lambda.l2}] = numerator(m);
        }
    }
    return table;
}

} // namespace cochar

#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "cochar/errors.hpp"
#include "cochar/poly.hpp"
#include "cochar/rational.hpp"

namespace cochar {

/// Reduced fraction of two polynomials over the same variable list.
///
/// Canonical form: numerator and denominator are coprime, the denominator
/// has coprime integer coefficients and its least term (graded order, ties
/// by first-variable degree) has a positive coefficient. Zero is 0/1.
/// Values are immutable after construction and safe to share.
class RatFunc {
public:
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        if (num_.vars() != den_.vars()) {
            throw UsageError("numerator/denominator variable lists differ: " +
                             num_.vars().str() + " vs " + den_.vars().str());
        }
        if (den_.is_zero()) {
            throw DomainError("zero denominator");
        }
        normalize_();
    }

    explicit RatFunc(Poly num)
        : RatFunc(num, Poly::constant(num.vars(), 1)) {}

    static RatFunc constant(const VarList& vars, BigRational c) {
        return RatFunc(Poly::constant(vars, std::move(c)));
    }

    static RatFunc variable(const VarList& vars, std::string_view name) {
        return RatFunc(Poly::variable(vars, name));
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const VarList& vars() const { return num_.vars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    /// Same value over a variable list containing this one's variables.
    RatFunc promoted(const VarList& target) const {
        if (target == vars()) {
            return *this;
        }
        return RatFunc(cochar::promoted(num_, target),
                       cochar::promoted(den_, target));
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        auto [x, y] = align(a, b);
        // Reduce by the common denominator factor before combining.
        const Poly g = gcd(x.den_, y.den_);
        const Poly yd = *div_exact(y.den_, g);
        const Poly xd = *div_exact(x.den_, g);
        return RatFunc(x.num_ * yd + y.num_ * xd, x.den_ * yd);
    }

    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return a + (-b);
    }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        auto [x, y] = align(a, b);
        // Cross-cancel so the constructor's gcd sees small operands.
        const Poly g1 = gcd(x.num_, y.den_);
        const Poly g2 = gcd(y.num_, x.den_);
        return RatFunc((*div_exact(x.num_, g1)) * (*div_exact(y.num_, g2)),
                       (*div_exact(x.den_, g2)) * (*div_exact(y.den_, g1)));
    }

    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) {
            throw DomainError("division by zero rational function");
        }
        auto [x, y] = align(a, b);
        return x * RatFunc(y.den_, y.num_);
    }

    RatFunc inverse() const {
        if (is_zero()) {
            throw DomainError("inverse of zero rational function");
        }
        return RatFunc(den_, num_);
    }

    RatFunc pow(int k) const {
        if (k < 0) {
            return inverse().pow(-k);
        }
        RatFunc r = constant(vars(), 1);
        RatFunc base = *this;
        while (k > 0) {
            if (k & 1) {
                r = r * base;
            }
            k >>= 1;
            if (k > 0) {
                base = base * base;
            }
        }
        return r;
    }

    /// Equality by cross-multiplication; tolerates subset variable lists.
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        auto [x, y] = align(a, b);
        return x.num_ * y.den_ == y.num_ * x.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) {
        return !(a == b);
    }

private:
    /// Brings two operands into one ring: either list must contain the other.
    static std::pair<RatFunc, RatFunc> align(const RatFunc& a,
                                             const RatFunc& b) {
        if (a.vars() == b.vars()) {
            return {a, b};
        }
        if (a.vars().contains_all(b.vars())) {
            return {a, b.promoted(a.vars())};
        }
        if (b.vars().contains_all(a.vars())) {
            return {a.promoted(b.vars()), b};
        }
        throw UsageError("incompatible variable lists " + a.vars().str() +
                         " and " + b.vars().str());
    }

    void normalize_() {
        if (num_.is_zero()) {
            den_ = Poly::constant(vars(), 1);
            return;
        }
        if (!den_.is_constant()) {
            if (num_.terms().size() == 1) {
                // Monomial numerator: the only possible common factor is a
                // monomial, read off from the denominator's support.
                const Exponents ne = num_.leading_term().first;
                Exponents m{ne[0], ne[1]};
                for (const auto& [e, c] : den_.terms()) {
                    m[0] = std::min(m[0], e[0]);
                    m[1] = std::min(m[1], e[1]);
                    if (m[0] == 0 && m[1] == 0) {
                        break;
                    }
                }
                if (m[0] > 0 || m[1] > 0) {
                    const Poly mono = Poly::monomial(vars(), m, 1);
                    num_ = *div_exact(num_, mono);
                    den_ = *div_exact(den_, mono);
                }
            } else {
                const Poly g = gcd(num_, den_);
                if (!g.is_constant()) {
                    num_ = *div_exact(num_, g);
                    den_ = *div_exact(den_, g);
                }
            }
        }
        // Scale so the denominator is Z-primitive with positive least term.
        BigRational c = rat_content(den_);
        if (den_.least_term().second < 0) {
            c = -c;
        }
        num_ /= c;
        den_ /= c;
    }

    Poly num_;
    Poly den_;
};

inline std::string to_string(const RatFunc& f) {
    if (f.is_polynomial() && f.den().constant_value() == 1) {
        return to_string(f.num());
    }
    return "(" + to_string(f.num()) + ") / (" + to_string(f.den()) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const RatFunc& f) {
    return os << to_string(f);
}

namespace detail {

struct PolyFractionPowers {
    Poly num;          // combined numerator
    std::array<int, 2> den_pow;  // exponents of the bindings' denominators
};

} // namespace detail

/// Exact composition f(bindings). Every bound name must occur in f's
/// variable list; all substituted values must share one target variable
/// list, which becomes the result's list. Unbound variables of f must
/// exist in the target list and are substituted identically.
inline RatFunc substitute(
    const RatFunc& f,
    const std::vector<std::pair<std::string, RatFunc>>& bindings) {
    if (bindings.empty()) {
        throw UsageError("no bindings supplied");
    }
    const VarList target = bindings.front().second.vars();
    for (const auto& [name, value] : bindings) {
        if (f.vars().index_of(name) < 0) {
            throw UsageError("bound variable '" + name +
                             "' does not occur in " + f.vars().str());
        }
        if (value.vars() != target) {
            throw UsageError("substituted values use different variable "
                             "lists " +
                             target.str() + " and " + value.vars().str());
        }
    }

    const int n = f.vars().size();
    std::array<Poly, 2> val_num{Poly(target), Poly(target)};
    std::array<Poly, 2> val_den{Poly(target), Poly(target)};
    for (int i = 0; i < n; ++i) {
        const std::string& name = f.vars()[i];
        const RatFunc* bound = nullptr;
        for (const auto& [bn, bv] : bindings) {
            if (bn == name) {
                bound = &bv;
            }
        }
        if (bound != nullptr) {
            val_num[i] = bound->num();
            val_den[i] = bound->den();
        } else {
            if (target.index_of(name) < 0) {
                throw UsageError("variable '" + name +
                                 "' is unbound and absent from target " +
                                 target.str());
            }
            val_num[i] = Poly::variable(target, name);
            val_den[i] = Poly::constant(target, 1);
        }
    }

    // p(V0, V1) = N / (d0^D0 * d1^D1) with N computed as a plain polynomial;
    // one gcd at the very end instead of one per term.
    const auto eval_poly = [&](const Poly& p) -> detail::PolyFractionPowers {
        std::array<int, 2> deg{std::max(p.degree_in(0), 0), 0};
        if (n == 2) {
            deg[1] = std::max(p.degree_in(1), 0);
        }
        std::array<std::vector<Poly>, 2> np;  // numerator powers
        std::array<std::vector<Poly>, 2> dp;  // denominator powers
        for (int i = 0; i < 2; ++i) {
            np[i].push_back(Poly::constant(target, 1));
            dp[i].push_back(Poly::constant(target, 1));
            for (int k = 1; k <= deg[i]; ++k) {
                np[i].push_back(np[i][k - 1] * (i < n ? val_num[i]
                                                      : Poly(target)));
                dp[i].push_back(dp[i][k - 1] * (i < n ? val_den[i]
                                                      : Poly(target)));
            }
        }
        Poly acc(target);
        for (const auto& [e, c] : p.terms()) {
            acc += np[0][e[0]] * dp[0][deg[0] - e[0]] * np[1][e[1]] *
                   dp[1][deg[1] - e[1]] * c;
        }
        return {acc, deg};
    };

    const auto top = eval_poly(f.num());
    const auto bot = eval_poly(f.den());
    if (bot.num.is_zero()) {
        throw DomainError("substitution makes the denominator identically "
                          "zero");
    }
    Poly num = top.num;
    Poly den = bot.num;
    for (int i = 0; i < n; ++i) {
        const int diff = bot.den_pow[i] - top.den_pow[i];
        if (diff > 0) {
            num *= val_den[i].pow(diff);
        } else if (diff < 0) {
            den *= val_den[i].pow(-diff);
        }
    }
    return RatFunc(std::move(num), std::move(den));
}

/// Exact value of a univariate rational function at a rational point.
inline BigRational eval_rational(const RatFunc& f, const BigRational& x) {
    if (f.vars().size() != 1) {
        throw UsageError("eval_rational requires a univariate function");
    }
    const BigRational d = f.den().eval({x, 0});
    if (d == 0) {
        throw DomainError("evaluation at a pole");
    }
    return f.num().eval({x, 0}) / d;
}

} // namespace cochar

#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "cochar/errors.hpp"
#include "cochar/rational.hpp"

namespace cochar {

/// Ordered list of the one or two variable names of a polynomial ring.
class VarList {
public:
    explicit VarList(std::string a) : names_{std::move(a), {}}, count_(1) {
        if (names_[0].empty()) {
            throw UsageError("empty variable name");
        }
    }

    VarList(std::string a, std::string b)
        : names_{std::move(a), std::move(b)}, count_(2) {
        if (names_[0].empty() || names_[1].empty()) {
            throw UsageError("empty variable name");
        }
        if (names_[0] == names_[1]) {
            throw UsageError("duplicate variable name '" + names_[0] + "'");
        }
    }

    int size() const { return count_; }

    const std::string& operator[](int i) const { return names_[i]; }

    int index_of(std::string_view name) const {
        for (int i = 0; i < count_; ++i) {
            if (names_[i] == name) {
                return i;
            }
        }
        return -1;
    }

    bool contains_all(const VarList& other) const {
        for (int i = 0; i < other.size(); ++i) {
            if (index_of(other[i]) < 0) {
                return false;
            }
        }
        return true;
    }

    bool operator==(const VarList& o) const {
        return count_ == o.count_ && names_ == o.names_;
    }
    bool operator!=(const VarList& o) const { return !(*this == o); }

    std::string str() const {
        std::string s = "(" + names_[0];
        if (count_ == 2) {
            s += "," + names_[1];
        }
        return s + ")";
    }

private:
    std::array<std::string, 2> names_;
    int count_;
};

/// Exponent pair; univariate polynomials keep the second entry at 0.
using Exponents = std::array<int, 2>;

/// Graded term order: total degree first, then degree in the first variable.
/// The least element of a term map under this order is the
/// "lexicographically least" term used for sign normalization.
struct GradedLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        const int ta = a[0] + a[1];
        const int tb = b[0] + b[1];
        if (ta != tb) {
            return ta < tb;
        }
        return a[0] < b[0];
    }
};

/// Sparse polynomial in one or two named variables over BigRational.
/// Never stores zero coefficients; exponents are non-negative.
class Poly {
public:
    using TermMap = std::map<Exponents, BigRational, GradedLess>;

    explicit Poly(VarList vars) : vars_(std::move(vars)) {}

    static Poly constant(const VarList& vars, BigRational c) {
        Poly p(vars);
        if (c != 0) {
            p.terms_.emplace(Exponents{0, 0}, std::move(c));
        }
        return p;
    }

    static Poly variable(const VarList& vars, std::string_view name) {
        const int i = vars.index_of(name);
        if (i < 0) {
            throw UsageError("variable '" + std::string(name) +
                             "' not in ring " + vars.str());
        }
        Exponents e{0, 0};
        e[i] = 1;
        return monomial(vars, e, 1);
    }

    static Poly monomial(const VarList& vars, Exponents e, BigRational c) {
        if (e[0] < 0 || e[1] < 0) {
            throw UsageError("negative exponent");
        }
        if (vars.size() == 1 && e[1] != 0) {
            throw UsageError("second exponent in univariate ring");
        }
        Poly p(vars);
        if (c != 0) {
            p.terms_.emplace(e, std::move(c));
        }
        return p;
    }

    const VarList& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 &&
                terms_.begin()->first == Exponents{0, 0});
    }

    /// Value of a constant polynomial (zero polynomial gives 0).
    BigRational constant_value() const {
        if (is_zero()) {
            return 0;
        }
        if (!is_constant()) {
            throw UsageError("polynomial is not constant");
        }
        return terms_.begin()->second;
    }

    BigRational coeff(const Exponents& e) const {
        const auto it = terms_.find(e);
        return it == terms_.end() ? BigRational(0) : it->second;
    }

    /// Total degree; -1 for the zero polynomial.
    int total_degree() const {
        if (is_zero()) {
            return -1;
        }
        const auto& e = terms_.rbegin()->first;
        return e[0] + e[1];
    }

    /// Degree in one variable; -1 for the zero polynomial.
    int degree_in(int var) const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            d = std::max(d, e[var]);
        }
        return d;
    }

    std::pair<Exponents, BigRational> leading_term() const {
        if (is_zero()) {
            throw UsageError("zero polynomial has no leading term");
        }
        return *terms_.rbegin();
    }

    std::pair<Exponents, BigRational> least_term() const {
        if (is_zero()) {
            throw UsageError("zero polynomial has no least term");
        }
        return *terms_.begin();
    }

    Poly& operator+=(const Poly& o) {
        check_same_ring(o);
        for (const auto& [e, c] : o.terms_) {
            add_term(e, c);
        }
        return *this;
    }

    Poly& operator-=(const Poly& o) {
        check_same_ring(o);
        for (const auto& [e, c] : o.terms_) {
            add_term(e, -c);
        }
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    Poly operator-() const {
        Poly r(vars_);
        for (const auto& [e, c] : terms_) {
            r.terms_.emplace(e, -c);
        }
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_same_ring(b);
        Poly r(a.vars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                r.add_term(Exponents{ea[0] + eb[0], ea[1] + eb[1]}, ca * cb);
            }
        }
        return r;
    }

    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly& operator*=(const BigRational& c) {
        if (c == 0) {
            terms_.clear();
        } else {
            for (auto& [e, v] : terms_) {
                v *= c;
            }
        }
        return *this;
    }

    friend Poly operator*(Poly p, const BigRational& c) { return p *= c; }
    friend Poly operator*(const BigRational& c, Poly p) { return p *= c; }
    friend Poly operator*(Poly p, long long c) { return p *= BigRational(c); }
    friend Poly operator*(long long c, Poly p) { return p *= BigRational(c); }

    Poly& operator/=(const BigRational& c) {
        if (c == 0) {
            throw DomainError("division of polynomial by zero scalar");
        }
        for (auto& [e, v] : terms_) {
            v /= c;
        }
        return *this;
    }

    friend Poly operator/(Poly p, const BigRational& c) { return p /= c; }

    friend Poly operator+(Poly p, long long c) {
        p.add_term({0, 0}, BigRational(c));
        return p;
    }
    friend Poly operator+(long long c, Poly p) { return std::move(p) + c; }
    friend Poly operator-(Poly p, long long c) { return std::move(p) + (-c); }
    friend Poly operator-(long long c, const Poly& p) { return -p + c; }

    /// Multiplies by c * X^shift.
    Poly shifted(const Exponents& shift, const BigRational& c) const {
        Poly r(vars_);
        if (c == 0) {
            return r;
        }
        for (const auto& [e, v] : terms_) {
            r.terms_.emplace(Exponents{e[0] + shift[0], e[1] + shift[1]},
                             v * c);
        }
        return r;
    }

    Poly pow(int k) const {
        if (k < 0) {
            throw UsageError("negative polynomial power");
        }
        Poly r = constant(vars_, 1);
        Poly base = *this;
        while (k > 0) {
            if (k & 1) {
                r *= base;
            }
            k >>= 1;
            if (k > 0) {
                base *= base;
            }
        }
        return r;
    }

    /// Exact evaluation; vals[1] is ignored for univariate rings.
    BigRational eval(const std::array<BigRational, 2>& vals) const {
        const int d0 = std::max(degree_in(0), 0);
        const int d1 = vars_.size() == 2 ? std::max(degree_in(1), 0) : 0;
        std::vector<BigRational> p0(d0 + 1), p1(d1 + 1);
        p0[0] = 1;
        for (int i = 1; i <= d0; ++i) {
            p0[i] = p0[i - 1] * vals[0];
        }
        p1[0] = 1;
        for (int i = 1; i <= d1; ++i) {
            p1[i] = p1[i - 1] * vals[1];
        }
        BigRational acc = 0;
        for (const auto& [e, c] : terms_) {
            acc += c * p0[e[0]] * p1[e[1]];
        }
        return acc;
    }

    bool operator==(const Poly& o) const {
        return vars_ == o.vars_ && terms_ == o.terms_;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    void add_term(const Exponents& e, const BigRational& c) {
        if (c == 0) {
            return;
        }
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

private:
    void check_same_ring(const Poly& o) const {
        if (vars_ != o.vars_) {
            throw UsageError("mixed polynomial rings " + vars_.str() +
                             " and " + o.vars_.str());
        }
    }

    VarList vars_;
    TermMap terms_;
};

inline std::string to_string(const Poly& p) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    // Descending graded order reads like a printed formula.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        const bool neg = c < 0;
        const BigRational a = neg ? BigRational(-c) : c;
        if (out.empty()) {
            if (neg) {
                out += "-";
            }
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono;
        for (int i = 0; i < p.vars().size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            if (!mono.empty()) {
                mono += "*";
            }
            mono += p.vars()[i];
            if (e[i] > 1) {
                mono += "^" + std::to_string(e[i]);
            }
        }
        if (mono.empty()) {
            out += to_string(a);
        } else if (a == 1) {
            out += mono;
        } else {
            out += to_string(a) + "*" + mono;
        }
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Poly& p) {
    return os << to_string(p);
}

/// Same polynomial over a variable list containing its own variables.
inline Poly promoted(const Poly& p, const VarList& target) {
    if (p.vars() == target) {
        return p;
    }
    if (!target.contains_all(p.vars())) {
        throw UsageError("cannot promote polynomial in " + p.vars().str() +
                         " to " + target.str());
    }
    std::array<int, 2> at{0, 0};
    for (int i = 0; i < p.vars().size(); ++i) {
        at[i] = target.index_of(p.vars()[i]);
    }
    Poly r(target);
    for (const auto& [e, c] : p.terms()) {
        Exponents e2{0, 0};
        for (int i = 0; i < p.vars().size(); ++i) {
            e2[at[i]] = e[i];
        }
        r.add_term(e2, c);
    }
    return r;
}

/// Quotient of an exact division, or nullopt when g does not divide f.
inline std::optional<Poly> div_exact(const Poly& f, const Poly& g) {
    if (f.vars() != g.vars()) {
        throw UsageError("mixed polynomial rings in division");
    }
    if (g.is_zero()) {
        throw DomainError("polynomial division by zero");
    }
    Poly q(f.vars());
    Poly r = f;
    const auto [ge, gc] = g.leading_term();
    while (!r.is_zero()) {
        const auto [re, rc] = r.leading_term();
        if (re[0] < ge[0] || re[1] < ge[1]) {
            return std::nullopt;
        }
        const Exponents me{re[0] - ge[0], re[1] - ge[1]};
        const BigRational mc = rc / gc;
        q.add_term(me, mc);
        r -= g.shifted(me, mc);
    }
    return q;
}

inline bool divides(const Poly& g, const Poly& f) {
    return div_exact(f, g).has_value();
}

/// Positive rational c such that p / c has coprime integer coefficients;
/// 1 for the zero polynomial.
inline BigRational rat_content(const Poly& p) {
    if (p.is_zero()) {
        return 1;
    }
    BigInt num_gcd = 0;
    BigInt den_lcm = 1;
    for (const auto& [e, c] : p.terms()) {
        num_gcd = boost::multiprecision::gcd(num_gcd,
                                             boost::multiprecision::abs(numerator(c)));
        den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c));
    }
    return BigRational(num_gcd, den_lcm);
}

/// p divided by its rational content: coprime integer coefficients, sign kept.
inline Poly z_primitive(const Poly& p) {
    if (p.is_zero()) {
        return p;
    }
    return p / rat_content(p);
}

/// Coefficient of var^k, as a polynomial of the same ring with the
/// var-exponent zeroed out.
inline Poly coeff_wrt(const Poly& p, int var, int k) {
    Poly r(p.vars());
    for (const auto& [e, c] : p.terms()) {
        if (e[var] == k) {
            Exponents e2 = e;
            e2[var] = 0;
            r.add_term(e2, c);
        }
    }
    return r;
}

/// Sparse pseudo-remainder of f by g with respect to one variable:
/// lc(g)^k * f mod g for the minimal k that keeps all steps fraction-free.
inline Poly prem(const Poly& f, const Poly& g, int var) {
    const int dg = g.degree_in(var);
    if (dg < 0) {
        throw DomainError("pseudo-remainder by zero");
    }
    const Poly lcg = coeff_wrt(g, var, dg);
    Poly r = f;
    int dr = r.degree_in(var);
    while (!r.is_zero() && dr >= dg) {
        const Poly lcr = coeff_wrt(r, var, dr);
        Exponents shift{0, 0};
        shift[var] = dr - dg;
        r = r * lcg - g.shifted(shift, 1) * lcr;
        dr = r.degree_in(var);
    }
    return r;
}

namespace detail {

/// Unit normalization of a gcd representative: coprime integer
/// coefficients and positive least term.
inline Poly normalize_unit(const Poly& p) {
    if (p.is_zero()) {
        return p;
    }
    Poly r = z_primitive(p);
    if (r.least_term().second < 0) {
        r = -r;
    }
    return r;
}

/// Dense integer coefficient vector, constant term first, no trailing
/// zeros. Used for the fast univariate gcd paths.
using ZVec = std::vector<BigInt>;

inline void zvec_trim(ZVec& v) {
    while (!v.empty() && v.back() == 0) {
        v.pop_back();
    }
}

inline BigInt zvec_content(const ZVec& v) {
    BigInt g = 0;
    for (const BigInt& c : v) {
        g = boost::multiprecision::gcd(g, c);
        if (g == 1) {
            break;
        }
    }
    return g;
}

inline void zvec_make_primitive(ZVec& v) {
    zvec_trim(v);
    const BigInt g = zvec_content(v);
    if (g > 1) {
        for (BigInt& c : v) {
            c /= g;
        }
    }
}

inline BigInt zvec_eval(const ZVec& v, const BigInt& x) {
    BigInt acc = 0;
    for (auto it = v.rbegin(); it != v.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

/// Exact division test over Z for a primitive divisor d.
inline bool zvec_divides(const ZVec& d, ZVec f) {
    if (d.empty()) {
        return false;
    }
    zvec_trim(f);
    if (f.empty()) {
        return true;
    }
    if (f.size() < d.size()) {
        return false;
    }
    const BigInt& lc = d.back();
    while (f.size() >= d.size()) {
        if (f.back() % lc != 0) {
            return false;
        }
        const BigInt q = f.back() / lc;
        const std::size_t k = f.size() - d.size();
        for (std::size_t i = 0; i < d.size(); ++i) {
            f[i + k] -= q * d[i];
        }
        zvec_trim(f);
        if (f.empty()) {
            return true;
        }
    }
    return false;
}

inline ZVec zvec_prem(ZVec f, const ZVec& g) {
    const BigInt& lc = g.back();
    while (f.size() >= g.size()) {
        const BigInt coef = f.back();
        const std::size_t k = f.size() - g.size();
        for (BigInt& c : f) {
            c *= lc;
        }
        for (std::size_t i = 0; i < g.size(); ++i) {
            f[i + k] -= coef * g[i];
        }
        zvec_trim(f);
        if (f.empty()) {
            break;
        }
    }
    return f;
}

/// Primitive gcd of univariate integer polynomials. Heuristic
/// evaluate-at-a-point gcd with divisibility verification; falls back to
/// a primitive remainder sequence when the heuristic misses.
inline ZVec gcd_univariate_z(ZVec f, ZVec g) {
    zvec_make_primitive(f);
    zvec_make_primitive(g);
    if (f.empty()) {
        return g;
    }
    if (g.empty()) {
        return f;
    }
    if (f.size() == 1 || g.size() == 1) {
        return {BigInt(1)};
    }
    BigInt bound = 0;
    for (const BigInt& c : f) {
        bound = std::max(bound, BigInt(boost::multiprecision::abs(c)));
    }
    for (const BigInt& c : g) {
        bound = std::max(bound, BigInt(boost::multiprecision::abs(c)));
    }
    BigInt xi = 2 * bound + 29;
    for (int attempt = 0; attempt < 6; ++attempt, xi = 2 * xi + 29) {
        const BigInt u = zvec_eval(f, xi);
        const BigInt v = zvec_eval(g, xi);
        if (u == 0 || v == 0) {
            continue;
        }
        BigInt h = boost::multiprecision::gcd(
            BigInt(boost::multiprecision::abs(u)),
            BigInt(boost::multiprecision::abs(v)));
        // Balanced base-xi digits of h form the candidate gcd.
        ZVec cand;
        const BigInt half = xi / 2;
        while (h != 0) {
            BigInt digit = h % xi;
            if (digit > half) {
                digit -= xi;
            }
            cand.push_back(digit);
            h = (h - digit) / xi;
        }
        zvec_make_primitive(cand);
        if (cand.empty()) {
            continue;
        }
        if (zvec_divides(cand, f) && zvec_divides(cand, g)) {
            return cand;
        }
    }
    if (f.size() < g.size()) {
        std::swap(f, g);
    }
    while (!g.empty() && g.size() > 1) {
        ZVec r = zvec_prem(f, g);
        zvec_make_primitive(r);
        f = std::move(g);
        g = std::move(r);
    }
    if (!g.empty()) {
        return {BigInt(1)};
    }
    return f;
}

/// A polynomial that uses only one variable, as a dense integer vector
/// (after clearing rational content); nullopt when p genuinely involves
/// both variables.
inline std::optional<std::pair<ZVec, int>> as_univariate_z(const Poly& p) {
    int var = -1;
    for (const auto& [e, c] : p.terms()) {
        for (int i = 0; i < 2; ++i) {
            if (e[i] > 0) {
                if (var == -1) {
                    var = i;
                } else if (var != i) {
                    return std::nullopt;
                }
            }
        }
    }
    if (var == -1) {
        var = 0;
    }
    const Poly q = z_primitive(p);
    ZVec v(static_cast<std::size_t>(q.degree_in(var)) + 1, BigInt(0));
    for (const auto& [e, c] : q.terms()) {
        v[e[var]] = numerator(c);
    }
    return std::make_pair(std::move(v), var);
}

inline Poly poly_from_zvec(const ZVec& v, const VarList& vars, int var) {
    Poly p(vars);
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] != 0) {
            Exponents e{0, 0};
            e[var] = static_cast<int>(k);
            p.add_term(e, BigRational(v[k]));
        }
    }
    return p;
}

/// Dense integer coefficients of p(main, other = xi); p must have integer
/// coefficients.
inline ZVec zvec_eval_other(const Poly& p, int main, const BigInt& xi) {
    const int other = 1 - main;
    ZVec v(static_cast<std::size_t>(std::max(p.degree_in(main), 0)) + 1,
           BigInt(0));
    std::vector<BigInt> pw{BigInt(1)};
    for (const auto& [e, c] : p.terms()) {
        while (static_cast<int>(pw.size()) <= e[other]) {
            pw.push_back(pw.back() * xi);
        }
        v[e[main]] += numerator(c) * pw[e[other]];
    }
    zvec_trim(v);
    return v;
}

inline Poly gcd_impl(const Poly& a, const Poly& b);

/// Full content of p with respect to var: p / content_full(p, var) is
/// primitive both over Z and as a polynomial in var.
inline Poly content_full(const Poly& p, int var) {
    if (p.is_zero()) {
        return p;
    }
    Poly g(p.vars());
    const int d = p.degree_in(var);
    for (int k = 0; k <= d; ++k) {
        Poly ck = coeff_wrt(p, var, k);
        if (ck.is_zero()) {
            continue;
        }
        g = g.is_zero() ? std::move(ck) : gcd_impl(g, ck);
        if (g.is_constant()) {
            break;
        }
    }
    g = normalize_unit(g);
    const Poly pp = *div_exact(p, g);
    return g * rat_content(pp);
}

/// Attempts to write p as u * X^e0 * prod (1 - c_i X^(e_i)) with a unit u;
/// returns the binomial list (monomial part included as the first entry
/// with zero coefficient convention removed by the caller) or nullopt.
inline std::optional<std::vector<std::pair<Exponents, BigRational>>>
geometric_factors(Poly p) {
    std::vector<std::pair<Exponents, BigRational>> factors;
    while (true) {
        if (p.is_constant()) {
            if (p.constant_value() != 1) {
                return std::nullopt;
            }
            return factors;
        }
        if (p.coeff({0, 0}) != 1) {
            return std::nullopt;
        }
        // The least non-constant term of prod (1 - c_i X^(e_i)) is a
        // multiple of the least binomial; try candidate coefficients
        // -c/k for each plausible multiplicity k.
        const auto& [e, c] = *std::next(p.terms().begin());
        const int step = e[0] + e[1];
        const int max_mult = p.total_degree() / step;
        bool peeled = false;
        for (int k = 1; k <= max_mult; ++k) {
            const BigRational cand = -c / k;
            Poly binom = Poly::constant(p.vars(), 1);
            binom.add_term(e, -cand);
            if (auto q = div_exact(p, binom)) {
                factors.emplace_back(e, cand);
                p = std::move(*q);
                peeled = true;
                break;
            }
        }
        if (!peeled) {
            return std::nullopt;
        }
    }
}

/// Dense integer coefficients of the cyclotomic polynomial of order m.
inline std::vector<long long> cyclotomic_coeffs(int m) {
    std::vector<long long> p(m + 1, 0);
    p[0] = -1;
    p[m] = 1;  // Y^m - 1
    for (int d = 1; d < m; ++d) {
        if (m % d != 0) {
            continue;
        }
        const std::vector<long long> phi = cyclotomic_coeffs(d);
        // Exact division by the monic phi.
        std::vector<long long> q(p.size() - phi.size() + 1, 0);
        for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
            const long long c = p[k + phi.size() - 1];
            q[k] = c;
            for (std::size_t i = 0; i < phi.size(); ++i) {
                p[k + i] -= c * phi[i];
            }
        }
        p = std::move(q);
    }
    return p;
}

/// Cyclotomic atom: the irreducible polynomial Phi_order(X^base) with a
/// primitive base exponent vector.
struct CycloAtom {
    int order;
    Exponents base;
    bool operator<(const CycloAtom& o) const {
        return std::tie(order, base) < std::tie(o.order, o.base);
    }
};

inline Poly cyclo_atom_poly(const CycloAtom& atom, const VarList& vars) {
    const std::vector<long long> c = cyclotomic_coeffs(atom.order);
    Poly p(vars);
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] != 0) {
            p.add_term({static_cast<int>(k) * atom.base[0],
                        static_cast<int>(k) * atom.base[1]},
                       BigRational(c[k]));
        }
    }
    return p;
}

/// Refines binomial factors (1 -+ X^e) into cyclotomic atoms. Only unit
/// coefficients refine exactly; anything else gives nullopt.
inline std::optional<std::map<CycloAtom, int>> cyclotomic_atoms(
    const std::vector<std::pair<Exponents, BigRational>>& binomials) {
    std::map<CycloAtom, int> atoms;
    for (const auto& [e, c] : binomials) {
        if (c != 1 && c != -1) {
            return std::nullopt;
        }
        const int d = std::gcd(e[0], e[1]);
        const Exponents base{e[0] / d, e[1] / d};
        if (c == 1) {
            // 1 - Y^d = prod over m | d of Phi_m(Y)
            for (int m = 1; m <= d; ++m) {
                if (d % m == 0) {
                    ++atoms[{m, base}];
                }
            }
        } else {
            // 1 + Y^d = prod over m | 2d, m not| d of Phi_m(Y)
            for (int m = 1; m <= 2 * d; ++m) {
                if ((2 * d) % m == 0 && d % m != 0) {
                    ++atoms[{m, base}];
                }
            }
        }
    }
    return atoms;
}

/// gcd of two products of geometric binomials, matched through their
/// cyclotomic atoms; nullopt when either operand is not such a product.
inline std::optional<Poly> try_binomial_gcd(const Poly& a, const Poly& b) {
    const auto strip = [](const Poly& p, Exponents& mono) {
        mono = p.terms().begin()->first;
        for (const auto& [e, c] : p.terms()) {
            mono[0] = std::min(mono[0], e[0]);
            mono[1] = std::min(mono[1], e[1]);
        }
        Poly q = (mono[0] || mono[1])
                     ? *div_exact(p, Poly::monomial(p.vars(), mono, 1))
                     : p;
        const BigRational c0 = q.coeff({0, 0});
        if (c0 == 0) {
            return Poly(p.vars());  // not binomial-factorable
        }
        return q / c0;
    };
    Exponents ma{0, 0};
    Exponents mb{0, 0};
    const Poly pa = strip(a, ma);
    const Poly pb = strip(b, mb);
    if (pa.is_zero() || pb.is_zero()) {
        return std::nullopt;
    }
    const auto fa = geometric_factors(pa);
    if (!fa) {
        return std::nullopt;
    }
    const auto fb = geometric_factors(pb);
    if (!fb) {
        return std::nullopt;
    }
    const auto atoms_a = cyclotomic_atoms(*fa);
    const auto atoms_b = cyclotomic_atoms(*fb);
    if (!atoms_a || !atoms_b) {
        return std::nullopt;
    }
    Poly g = Poly::monomial(
        a.vars(), {std::min(ma[0], mb[0]), std::min(ma[1], mb[1])}, 1);
    for (const auto& [atom, na] : *atoms_a) {
        const auto it = atoms_b->find(atom);
        if (it != atoms_b->end()) {
            g *= cyclo_atom_poly(atom, a.vars()).pow(std::min(na, it->second));
        }
    }
    return normalize_unit(g);
}

inline Poly gcd_impl(const Poly& a, const Poly& b) {
    if (a.is_zero()) {
        return normalize_unit(b);
    }
    if (b.is_zero()) {
        return normalize_unit(a);
    }
    if (a.is_constant() || b.is_constant()) {
        return Poly::constant(a.vars(), 1);
    }
    // Fast path for operands involving a single (common) variable.
    const auto ua = as_univariate_z(a);
    const auto ub = as_univariate_z(b);
    if (ua && ub) {
        if (ua->second != ub->second) {
            return Poly::constant(a.vars(), 1);
        }
        return normalize_unit(poly_from_zvec(
            gcd_univariate_z(ua->first, ub->first), a.vars(), ua->second));
    }
    // Fast path for the products of geometric binomials that all the
    // Hilbert-series denominators in this domain are built from.
    if (const auto g = try_binomial_gcd(a, b)) {
        return *g;
    }
    // Main variable: the first one actually present in either operand.
    const int main = (a.degree_in(0) > 0 || b.degree_in(0) > 0) ? 0 : 1;
    const Poly ca = content_full(a, main);
    const Poly cb = content_full(b, main);
    const Poly c = gcd_impl(ca, cb);
    Poly A = *div_exact(a, ca);
    Poly B = *div_exact(b, cb);
    if (A.degree_in(main) < B.degree_in(main)) {
        std::swap(A, B);
    }
    Poly g(a.vars());
    if (B.degree_in(main) == 0) {
        return normalize_unit(c);
    }
    // Evaluation probe: a constant gcd of the specialized univariate
    // images (at a point keeping lc(A) alive) proves the primitive parts
    // coprime, skipping the remainder sequence entirely.
    const Poly lcA = coeff_wrt(A, main, A.degree_in(main));
    int probes = 0;
    bool coprime = false;
    for (const long long cand : {1LL, -1LL, 2LL, -2LL, 3LL, 5LL, -5LL, 7LL}) {
        if (probes >= 3 || coprime) {
            break;
        }
        const BigInt xi(cand);
        if (lcA.eval({BigRational(xi), BigRational(xi)}) == 0) {
            continue;
        }
        const ZVec fa = zvec_eval_other(A, main, xi);
        const ZVec fb = zvec_eval_other(B, main, xi);
        if (fb.empty()) {
            continue;
        }
        ++probes;
        if (gcd_univariate_z(fa, fb).size() <= 1) {
            coprime = true;
        }
    }
    if (coprime) {
        return normalize_unit(c);
    }
    // Primitive remainder sequence keeps coefficient growth in check.
    while (true) {
        if (B.is_zero()) {
            g = A;
            break;
        }
        if (B.degree_in(main) == 0) {
            g = Poly::constant(a.vars(), 1);
            break;
        }
        Poly r = prem(A, B, main);
        if (!r.is_zero()) {
            r = *div_exact(r, content_full(r, main));
        }
        A = std::move(B);
        B = std::move(r);
    }
    return normalize_unit(c * g);
}

} // namespace detail

/// Polynomial gcd (full content included), normalized to coprime integer
/// coefficients with a positive least term. gcd(0, 0) = 0.
inline Poly gcd(const Poly& a, const Poly& b) {
    if (a.vars() != b.vars()) {
        throw UsageError("mixed polynomial rings in gcd");
    }
    return detail::gcd_impl(a, b);
}

} // namespace cochar

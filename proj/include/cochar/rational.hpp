#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "cochar/errors.hpp"

namespace cochar {

/// Arbitrary-precision integer.
using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always kept reduced with positive
/// denominator (gcd(|num|, den) = 1, den > 0, zero is 0/1).
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const BigRational& q) {
    return boost::multiprecision::numerator(q);
}

inline BigInt denominator(const BigRational& q) {
    return boost::multiprecision::denominator(q);
}

inline bool is_integer(const BigRational& q) {
    return denominator(q) == 1;
}

/// num/den as a canonical rational; the sign may sit on either part.
inline BigRational make_rational(BigInt num, BigInt den) {
    if (den == 0) {
        throw DomainError("zero denominator in rational");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return BigRational(std::move(num), std::move(den));
}

/// Integer value of q; DomainError when q is not integral.
inline BigInt to_integer(const BigRational& q) {
    if (!is_integer(q)) {
        throw DomainError("not an integer: " + q.str());
    }
    return numerator(q);
}

/// Renders q as "p/q", or plain "p" for integers.
inline std::string to_string(const BigRational& q) {
    std::string s = numerator(q).str();
    if (!is_integer(q)) {
        s += "/" + denominator(q).str();
    }
    return s;
}

/// Parses "p" or "p/q"; signs allowed on either part.
inline BigRational rational_from_string(std::string_view s) {
    if (s.empty()) {
        throw UsageError("empty rational literal");
    }
    const auto slash = s.find('/');
    try {
        BigInt num(std::string(s.substr(0, slash)));
        BigInt den = 1;
        if (slash != std::string_view::npos) {
            den = BigInt(std::string(s.substr(slash + 1)));
        }
        if (den == 0) {
            throw DomainError("zero denominator in rational literal");
        }
        return make_rational(std::move(num), std::move(den));
    } catch (const DomainError&) {
        throw;
    } catch (const std::runtime_error& e) {
        throw UsageError("malformed rational literal '" + std::string(s) +
                         "': " + e.what());
    }
}

/// Binomial coefficient C(n, k), zero outside 0 <= k <= n.
inline BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

/// (-1)^e as a rational sign.
inline int parity_sign(long long e) {
    return (e % 2 == 0) ? 1 : -1;
}

} // namespace cochar

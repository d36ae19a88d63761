#ifndef QEULER_RATIONAL_HPP
#define QEULER_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "qeuler/errors.hpp"

namespace qeuler {

// Exact ground-truth domain: arbitrary-precision rationals in canonical
// form (denominator > 0, gcd(num, den) = 1). boost::multiprecision keeps
// the canonical form after every operation, which is what the exact
// equality tests rely on.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// Serialized as "num/den" with the denominator always present ("1/1").
inline std::string rat_str(const Rat& r) {
    return rat_num(r).str() + "/" + rat_den(r).str();
}

// Accepts "p/q", "p", optional leading '-'.
inline Rat rat_parse(const std::string& s) {
    if (s.empty()) fail(errc::invalid_request, "empty rational literal");
    for (char c : s)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'))
            fail(errc::invalid_request, "bad rational literal '" + s + "'");
    try {
        Rat r(s);
        return r;
    } catch (const std::exception&) {
        fail(errc::invalid_request, "bad rational literal '" + s + "'");
    }
}

// q^e for integer e of either sign; 0^0 = 1, 0^negative is an error.
inline Rat pow_i(const Rat& base, long long e) {
    if (e == 0) return Rat(1);
    bool invert = e < 0;
    unsigned long long n = invert ? static_cast<unsigned long long>(-(e + 1)) + 1ULL
                                  : static_cast<unsigned long long>(e);
    Rat acc(1), b = base;
    while (n) {
        if (n & 1ULL) acc *= b;
        b *= b;
        n >>= 1;
    }
    if (invert) {
        if (acc == 0) fail(errc::invalid_request, "0 raised to a negative power");
        acc = Rat(1) / acc;
    }
    return acc;
}

inline BigInt pow_i(const BigInt& base, unsigned long long e) {
    BigInt acc(1), b = base;
    while (e) {
        if (e & 1ULL) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

// Binomial coefficient; 0 outside 0 <= k <= n.
inline BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return BigInt(0);
    if (k > n - k) k = n - k;
    BigInt acc(1);
    for (long long i = 1; i <= k; ++i) {
        acc *= BigInt(n - k + i);
        acc /= BigInt(i);
    }
    return acc;
}

// p-adic valuation of a nonzero integer.
inline long long padic_valuation(BigInt v, const BigInt& p) {
    if (v == 0) fail(errc::invalid_request, "valuation of zero requested");
    if (v < 0) v = -v;
    long long val = 0;
    while (v % p == 0) {
        v /= p;
        ++val;
    }
    return val;
}

// v_p(num) - v_p(den); +infinity for zero is reported as a large sentinel.
inline long long padic_valuation(const Rat& r, const BigInt& p) {
    if (r == 0) return 1LL << 40;
    return padic_valuation(rat_num(r), p) - padic_valuation(rat_den(r), p);
}

} // namespace qeuler

#endif

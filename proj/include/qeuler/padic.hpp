#ifndef QEULER_PADIC_HPP
#define QEULER_PADIC_HPP

#include <functional>
#include <vector>

#include "qeuler/rational.hpp"

namespace qeuler {

// Residue arithmetic mod p^M for an odd prime p. p^M is kept below 2^31
// so products stay inside 64 bits.
struct PAdicContext {
    long long p = 3;
    int M = 1;
    long long pM = 3;
    bool operator==(const PAdicContext&) const = default;
};

PAdicContext padic_context(long long p, int M);

struct PAdicNumber {
    PAdicContext ctx;
    long long residue = 0; // in [0, p^M)

    // Largest v <= M with p^v dividing the represented value.
    long long valuation() const;
    bool operator==(const PAdicNumber&) const = default;
};

PAdicNumber padic_from_int(const PAdicContext& ctx, long long v);
PAdicNumber padic_from_int(const PAdicContext& ctx, const BigInt& v);
// Reduces num/den with a p-unit denominator; NonUnitDivision otherwise.
PAdicNumber padic_from_rational(const PAdicContext& ctx, const Rat& v);

PAdicNumber operator+(const PAdicNumber& a, const PAdicNumber& b);
PAdicNumber operator-(const PAdicNumber& a, const PAdicNumber& b);
PAdicNumber operator-(const PAdicNumber& a);
PAdicNumber operator*(const PAdicNumber& a, const PAdicNumber& b);
PAdicNumber operator/(const PAdicNumber& a, const PAdicNumber& b); // unit divisor only

long long mod_pow(long long base, unsigned long long e, long long m);
long long mod_inv(long long a, long long m); // NonUnitDivision when gcd(a,m) > 1

// [K]_q = 1 + q + ... + q^{K-1} mod p^M, by exponent doubling (the
// divided form is useless here: 1-q is not a unit).
long long padic_q_bracket(const PAdicContext& ctx, long long q_residue, long long K);

// Checks |1-q|_p < 1 (q = 1 included) and returns q reduced mod p^M.
long long reduce_q(const PAdicContext& ctx, const Rat& q);

// (1+q)/(1+q^{p^N}) sum_{x<p^N} f(x) (-q)^x mod p^M.
PAdicNumber fermionic_integral_level(const PAdicContext& ctx,
                                     const std::function<PAdicNumber(long long)>& f,
                                     const Rat& q, int N);

// Level iteration until two consecutive levels agree mod p^M. Agreement
// only counts from level M on: v_p of a level step is at least the level
// index, so earlier coincidences can be accidental collisions mod p^M.
// NoConvergence after n_max levels.
PAdicNumber fermionic_integral(const PAdicContext& ctx,
                               const std::function<PAdicNumber(long long)>& f, const Rat& q,
                               int n_max = 12);

// I_1(f(.+n)) - (-1)^n I_1(f) - 2 sum_{l<n} (-1)^{n-1-l} f(l), which
// vanishes identically for integrable f.
PAdicNumber shift_identity_residual(const PAdicContext& ctx,
                                    const std::function<PAdicNumber(long long)>& f, long long n,
                                    int n_max = 12);

// n-th moment of the alternating unit measure: the stabilized value of
// sum_{y<p^N} (-1)^y [x+y]_q^n, i.e. E_{n,q}(x) mod p^M.
PAdicNumber moment(const PAdicContext& ctx, long long n, long long x, const Rat& q,
                   int n_max = 12);

// r-fold iterated version with weights: integrates [x + sum w_j y_j]^n
// against the alternating unit measure in every variable. The r-fold sum
// over [0,p^N)^r is collapsed to subset-shifted passes over the series
// coefficients of prod_j 1/(1+z^{w_j}), which costs O(2^r sum_j w_j p^N)
// instead of p^{rN}.
PAdicNumber moment_multi(const PAdicContext& ctx, long long n, long long x, const Rat& q,
                         const std::vector<long long>& w, int n_max = 12);

} // namespace qeuler

#endif

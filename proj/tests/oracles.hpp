// Independent reference computations used only by the tests. Everything
// here deliberately avoids the library's own summation engines: classical
// Euler numbers come from exact power-series division, series values from
// naive nested loops, p-adic sums from direct level enumeration.
#ifndef QEULER_TESTS_ORACLES_HPP
#define QEULER_TESTS_ORACLES_HPP

#include <cmath>
#include <cstdint>
#include <vector>

#include "qeuler/rational.hpp"

namespace oracles {

using qeuler::Rat;

// E_n(0) for n = 0..count-1 from 2 e^{x t}/(e^t + 1) at x = 0: with
// d_0 = 2, d_m = 1/m! the coefficients b_k of the reciprocal series solve
// sum_{j<=k} b_j d_{k-j} = 2 [k=0], and E_k(0) = k! b_k.
inline std::vector<Rat> euler_polynomial_at_zero(int count) {
    std::vector<Rat> fact(static_cast<size_t>(count), Rat(1));
    for (int k = 1; k < count; ++k) fact[static_cast<size_t>(k)] = fact[static_cast<size_t>(k - 1)] * k;
    std::vector<Rat> b(static_cast<size_t>(count));
    for (int k = 0; k < count; ++k) {
        Rat rhs = k == 0 ? Rat(2) : Rat(0);
        for (int j = 0; j < k; ++j) rhs -= b[static_cast<size_t>(j)] / fact[static_cast<size_t>(k - j)];
        b[static_cast<size_t>(k)] = rhs / Rat(2);
    }
    std::vector<Rat> out(static_cast<size_t>(count));
    for (int k = 0; k < count; ++k) out[static_cast<size_t>(k)] = b[static_cast<size_t>(k)] * fact[static_cast<size_t>(k)];
    return out;
}

// 2^r sum over [0,M)^r of (-1)^{|m|} q^{sum a_j m_j} [x + sum w_j m_j]_q^n
// by nested loops in double precision. Truncation error is O(q^M), fine
// for q <= 1/2 and M ~ 200.
inline double brute_barnes_twisted(long long n, double x, double q,
                                   const std::vector<long long>& w,
                                   const std::vector<long long>& a, long long M = 200) {
    const size_t r = w.size();
    std::vector<long long> m(r, 0);
    double sum = 0.0;
    for (;;) {
        long long total = 0, wdot = 0, adot = 0;
        for (size_t j = 0; j < r; ++j) {
            total += m[j];
            wdot += w[j] * m[j];
            adot += a[j] * m[j];
        }
        double br = (1.0 - std::pow(q, x + static_cast<double>(wdot))) / (1.0 - q);
        double term = std::pow(q, static_cast<double>(adot)) * std::pow(br, static_cast<double>(n));
        sum += (total % 2 == 0 ? term : -term);
        size_t j = 0;
        while (j < r && ++m[j] == M) m[j++] = 0;
        if (j == r) break;
    }
    return std::ldexp(sum, static_cast<int>(r));
}

// Direct r-fold level sum
//   sum_{y in [0,p^N)^r} (-1)^{|y|} [x + sum w_j y_j]_q^n  mod p^M
// of the alternating unit measure (prefactor 1 in every variable), the
// O(p^{rN}) shape the library's streaming composer must reproduce.
inline long long naive_multi_level(long long p, int M, int N, long long n, long long x,
                                   long long q_res, const std::vector<long long>& w) {
    long long pM = 1;
    for (int i = 0; i < M; ++i) pM *= p;
    long long pN = 1;
    for (int i = 0; i < N; ++i) pN *= p;
    auto mulm = [&](long long u, long long v) {
        return static_cast<long long>(static_cast<unsigned long long>(u) *
                                      static_cast<unsigned long long>(v) %
                                      static_cast<unsigned long long>(pM));
    };
    auto powm = [&](long long b, long long e) {
        long long acc = 1 % pM;
        b %= pM;
        while (e > 0) {
            if (e & 1) acc = mulm(acc, b);
            b = mulm(b, b);
            e >>= 1;
        }
        return acc;
    };
    const size_t r = w.size();
    long long wdot_max = 0;
    for (long long wj : w) wdot_max += wj * (pN - 1);
    // table[t] = [x+t]_q^n mod p^M, brackets built incrementally.
    std::vector<long long> table(static_cast<size_t>(wdot_max + 1));
    long long br = 0, qp = 1 % pM;
    for (long long i = 0; i < x; ++i) {
        br = (br + qp) % pM;
        qp = mulm(qp, q_res);
    }
    for (long long t = 0; t <= wdot_max; ++t) {
        table[static_cast<size_t>(t)] = powm(br, n);
        br = (br + qp) % pM;
        qp = mulm(qp, q_res);
    }
    std::vector<long long> y(r, 0);
    long long sum = 0;
    for (;;) {
        long long total = 0, wdot = 0;
        for (size_t j = 0; j < r; ++j) {
            total += y[j];
            wdot += w[j] * y[j];
        }
        long long term = table[static_cast<size_t>(wdot)];
        sum = total % 2 == 0 ? (sum + term) % pM : (sum - term % pM + pM) % pM;
        size_t j = 0;
        while (j < r && ++y[j] == pN) y[j++] = 0;
        if (j == r) break;
    }
    return sum;
}

} // namespace oracles

#endif

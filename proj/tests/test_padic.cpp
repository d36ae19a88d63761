#include <doctest.h>

#include <vector>

#include "oracles.hpp"
#include "qeuler/families.hpp"
#include "qeuler/padic.hpp"

using namespace qeuler;

TEST_CASE("context construction guards") {
    CHECK_THROWS_AS(padic_context(2, 3), Error);
    CHECK_THROWS_AS(padic_context(9, 2), Error);
    CHECK_THROWS_AS(padic_context(3, 0), Error);
    CHECK_THROWS_AS(padic_context(3, 25), Error); // 3^25 over the residue cap
    PAdicContext c = padic_context(3, 6);
    CHECK(c.pM == 729);
}

TEST_CASE("residue arithmetic and units") {
    PAdicContext c = padic_context(3, 6);
    CHECK(mod_inv(2, 729) == 365);
    CHECK(mod_pow(2, 10, 729) == 1024 % 729);
    CHECK(padic_from_rational(c, Rat(-1, 2)).residue == 364);
    CHECK_THROWS_AS(padic_from_rational(c, Rat(1, 3)), Error);
    try {
        padic_from_rational(c, Rat(5, 6));
    } catch (const Error& e) {
        CHECK(e.code() == errc::non_unit_division);
    }

    PAdicNumber a = padic_from_int(c, 100);
    PAdicNumber b = padic_from_int(c, -1);
    CHECK((a + b).residue == 99);
    CHECK((a * b).residue == 729 - 100);
    CHECK((-b).residue == 1);
    CHECK((a / padic_from_int(c, 2)).residue == 50);
    CHECK_THROWS_AS(a / padic_from_int(c, 3), Error);

    CHECK(padic_from_int(c, 18).valuation() == 2);
    CHECK(padic_from_int(c, 1).valuation() == 0);
    CHECK(padic_from_int(c, 0).valuation() == 6);

    // q-bracket by exponent doubling against the naive sum.
    long long q = 7, acc = 0, qp = 1;
    for (int i = 0; i < 25; ++i) {
        acc = (acc + qp) % 729;
        qp = qp * q % 729;
    }
    CHECK(padic_q_bracket(c, 7, 25) == acc);
    CHECK(padic_q_bracket(c, 7, 0) == 0);
}

TEST_CASE("q reduction domain") {
    PAdicContext c = padic_context(3, 4);
    CHECK(reduce_q(c, Rat(1)) == 1);
    CHECK(reduce_q(c, Rat(4)) == 4);
    CHECK(reduce_q(c, Rat(1, 4)) == mod_inv(4, 81)); // 1 - 1/4 = 3/4, valuation 1
    CHECK_THROWS_AS(reduce_q(c, Rat(1, 2)), Error);
    CHECK_THROWS_AS(reduce_q(c, Rat(5)), Error);
}

TEST_CASE("level sums of simple integrands") {
    PAdicContext c = padic_context(3, 6);
    auto one = [&](long long) { return padic_from_int(c, 1); };
    for (int N = 1; N <= 3; ++N) CHECK(fermionic_integral_level(c, one, Rat(4), N).residue == 1);
    CHECK(fermionic_integral(c, one, Rat(4)).residue == 1);

    // f(y) = y at q = 1: level N carries (3^N - 1)/2, so 1, 4, 13, ...
    auto ident = [&](long long y) { return padic_from_int(c, y); };
    CHECK(fermionic_integral_level(c, ident, Rat(1), 1).residue == 1);
    CHECK(fermionic_integral_level(c, ident, Rat(1), 2).residue == 4);
    CHECK(fermionic_integral_level(c, ident, Rat(1), 3).residue == 13);
    // The stabilized value is -1/2.
    CHECK(fermionic_integral(c, ident, Rat(1)) == padic_from_rational(c, Rat(-1, 2)));

    try {
        fermionic_integral(c, ident, Rat(1), 2);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::no_convergence);
    }
}

TEST_CASE("moments recover the closed form") {
    // E_{1,q}(0) = -1/(1+q) = -1/5 at q = 4; mod 81 that is 16.
    PAdicContext c34 = padic_context(3, 4);
    CHECK(moment(c34, 1, 0, Rat(4)).residue == 16);

    for (const auto& pm : std::vector<std::pair<long long, int>>{{3, 5}, {5, 4}, {7, 3}}) {
        PAdicContext c = padic_context(pm.first, pm.second);
        for (const Rat& q : {Rat(1 + pm.first), Rat(1 + 2 * pm.first)}) {
            for (long long n = 0; n <= 4; ++n) {
                for (long long x = 0; x <= 2; ++x) {
                    Rat closed = euler_q(n, Rat(x), exact_ctx(q)).value;
                    CHECK(moment(c, n, x, q) == padic_from_rational(c, closed));
                }
            }
        }
    }
}

TEST_CASE("iterated moments match the naive nested enumeration") {
    // One level step gains at least one power of p, so the direct sum at
    // level M+1 already equals the limit mod p^M. Compare it with the
    // streaming composer's stabilized answer.
    for (int M : {2, 3}) {
        PAdicContext c = padic_context(3, M);
        for (const std::vector<long long>& w :
             {std::vector<long long>{1, 1}, std::vector<long long>{1, 2},
              std::vector<long long>{2, 3}}) {
            for (long long n = 0; n <= 2; ++n) {
                long long naive = oracles::naive_multi_level(3, M, M + 1, n, 1, 4, w);
                long long again = oracles::naive_multi_level(3, M, M + 2, n, 1, 4, w);
                CHECK(naive == again);
                CHECK(moment_multi(c, n, 1, Rat(4), w).residue == naive);
            }
        }
    }
}

TEST_CASE("iterated moments recover the multi-index closed forms") {
    PAdicContext c = padic_context(5, 4);
    for (long long n = 0; n <= 3; ++n) {
        for (long long x = 0; x <= 1; ++x) {
            Rat ord2 = euler_q_order(n, Rat(x), exact_ctx(Rat(6)), 2).value;
            CHECK(moment_multi(c, n, x, Rat(6), {1, 1}) == padic_from_rational(c, ord2));
            Rat barnes = euler_barnes(n, Rat(x), exact_ctx(Rat(6)), {1, 2}).value;
            CHECK(moment_multi(c, n, x, Rat(6), {1, 2}) == padic_from_rational(c, barnes));
        }
    }
    CHECK_THROWS_AS(moment_multi(c, 1, 0, Rat(6), {}), Error);
    CHECK_THROWS_AS(moment_multi(c, 1, 0, Rat(6), {0}), Error);
}

TEST_CASE("shift identity residual vanishes for polynomial integrands") {
    for (long long p : {3LL, 5LL, 7LL}) {
        PAdicContext c = padic_context(p, 4);
        for (const std::vector<long long>& poly :
             {std::vector<long long>{1}, std::vector<long long>{0, 1},
              std::vector<long long>{0, 0, 1}, std::vector<long long>{2, 1, 0, 3, 1}}) {
            auto f = [&](long long y) {
                PAdicNumber acc = padic_from_int(c, 0);
                PAdicNumber yp = padic_from_int(c, 1);
                PAdicNumber yy = padic_from_int(c, y);
                for (long long coef : poly) {
                    acc = acc + padic_from_int(c, coef) * yp;
                    yp = yp * yy;
                }
                return acc;
            };
            for (long long n = 1; n <= 3; ++n) {
                CHECK(shift_identity_residual(c, f, n).residue == 0);
            }
        }
    }
}

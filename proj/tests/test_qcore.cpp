#include <doctest.h>

#include <cmath>

#include "qeuler/qcore.hpp"

using namespace qeuler;

TEST_CASE("bracket values at rational q") {
    ExactCtx c = exact_ctx(Rat(1, 2));
    CHECK(q_bracket(Rat(0), c) == Rat(0));
    CHECK(q_bracket(Rat(1), c) == Rat(1));
    CHECK(q_bracket(Rat(3), c) == Rat(7, 4));
    CHECK(q_bracket(Rat(-1), c) == Rat(-2));
    CHECK(q_bracket_signed(Rat(2), c) == Rat(1, 2));
    CHECK(q_bracket_signed(Rat(3), c) == Rat(3, 4));
}

TEST_CASE("bracket limits and failure modes") {
    CHECK_THROWS_AS(q_bracket(Rat(2), exact_ctx(Rat(1))), Error);
    CHECK_THROWS_AS(q_bracket(Rat(1, 2), exact_ctx(Rat(1, 3))), Error);
    CHECK_THROWS_AS(q_bracket_signed(Rat(2), exact_ctx(Rat(-1))), Error);
    try {
        q_bracket(Rat(2), exact_ctx(Rat(1)));
    } catch (const Error& e) {
        CHECK(e.code() == errc::q_equals_one_in_exact_mode);
    }
    try {
        q_bracket(Rat(1, 2), exact_ctx(Rat(1, 3)));
    } catch (const Error& e) {
        CHECK(e.code() == errc::non_integer_exponent_in_exact_mode);
    }

    // Float mode continues through both: q = 1 takes the limit [x]_1 = x,
    // non-integer exponents fall back to real powers.
    FloatCtx f1 = float_ctx(1.0);
    CHECK(q_bracket(Rat(5, 2), f1).z.real() == doctest::Approx(2.5).epsilon(1e-14));
    FloatCtx fh = float_ctx(0.5);
    double want = (1.0 - std::pow(0.5, 2.5)) / 0.5;
    CHECK(q_bracket(Rat(5, 2), fh).z.real() == doctest::Approx(want).epsilon(1e-14));
}

TEST_CASE("q-factorial and Gaussian binomial") {
    ExactCtx c = exact_ctx(Rat(1, 2));
    CHECK(q_factorial(0, c) == Rat(1));
    CHECK(q_factorial(3, c) == Rat(21, 8)); // 1 * 3/2 * 7/4
    CHECK(gaussian_binomial(4, 2, exact_ctx(Rat(2))) == Rat(35));
    CHECK(gaussian_binomial(4, 5, c) == Rat(0));
    CHECK(gaussian_binomial(4, -1, c) == Rat(0));
    CHECK_THROWS_AS(gaussian_binomial(-1, 0, c), Error);

    // q -> 1 recovers the classical binomial in float mode.
    FloatCtx f1 = float_ctx(1.0);
    CHECK(gaussian_binomial(6, 3, f1).z.real() == doctest::Approx(20.0).epsilon(1e-13));
}

TEST_CASE("q-Pochhammer") {
    ExactCtx c = exact_ctx(Rat(1, 3));
    // (1/2; 1/3)_2 = (1 - 1/2)(1 - 1/6) = 5/12
    CHECK(q_pochhammer(Rat(1, 2), 2, c) == Rat(5, 12));
    CHECK(q_pochhammer(Rat(7), 0, c) == Rat(1));
    CHECK_THROWS_AS(q_pochhammer(Rat(1), -1, c), Error);
}

TEST_CASE("q-binomial theorem") {
    // (b; q)_n = sum_k C(n,k)_q q^{k(k-1)/2} (-b)^k, checked exactly.
    for (long long n = 0; n <= 5; ++n) {
        for (const Rat& q : {Rat(1, 2), Rat(2, 3), Rat(3)}) {
            for (const Rat& b : {Rat(1, 5), Rat(-2), Rat(4, 7)}) {
                ExactCtx c = exact_ctx(q);
                Rat lhs = q_pochhammer(b, n, c);
                Rat rhs = 0;
                for (long long k = 0; k <= n; ++k) {
                    Rat term = gaussian_binomial(n, k, c) * pow_i(q, k * (k - 1) / 2) *
                               pow_i(Rat(-b), k);
                    rhs += term;
                }
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("approx arithmetic propagates error bounds") {
    Approx a = approx_from(Rat(1, 3));
    Approx b = approx_exact(2.0);
    Approx s = a * b + b;
    double truth = 2.0 / 3.0 + 2.0;
    CHECK(std::abs(s.z.real() - truth) <= s.err + 1e-15);
    CHECK(s.err < 1e-13);
}

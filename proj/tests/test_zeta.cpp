#include <doctest.h>

#include <cmath>
#include <complex>

#include "qeuler/families.hpp"
#include "qeuler/zeta.hpp"

using namespace qeuler;

using C = std::complex<double>;

TEST_CASE("single-fold values with geometric closed forms") {
    // s = 0 collapses the bracket power, leaving sum (-q)^m = 1/(1+q).
    ZetaRequest req;
    req.s = C(0.0, 0.0);
    Approx v = zeta_multiple(req);
    CHECK(std::abs(v.z - C(2.0 / 3.0, 0.0)) < 1e-10);
    CHECK(std::abs(v.z - C(2.0 / 3.0, 0.0)) <= v.err + 1e-13);

    // Same with the quadratic character mod 3: the periodized geometric
    // sum is -q(1+q)/(1+q^3).
    ZetaRequest lreq;
    lreq.s = C(0.0, 0.0);
    lreq.chi = quadratic_character(3);
    Approx lv = l_multiple(lreq);
    double q = 0.5;
    double want = -q * (1.0 + q) / (1.0 + q * q * q);
    CHECK(std::abs(lv.z - C(want, 0.0)) < 1e-10);
}

TEST_CASE("request validation") {
    ZetaRequest req;
    req.chi = quadratic_character(3);
    CHECK_THROWS_AS(zeta_multiple(req), Error);
    ZetaRequest bare;
    CHECK_THROWS_AS(l_multiple(bare), Error);

    ZetaRequest bad;
    bad.q = Rat(3, 2);
    CHECK_THROWS_AS(zeta_multiple(bad), Error);
    bad.q = Rat(1);
    CHECK_THROWS_AS(zeta_multiple(bad), Error);

    ZetaRequest mism;
    mism.w = {Rat(1), Rat(2)};
    mism.a = {Rat(1)};
    CHECK_THROWS_AS(zeta_multiple(mism), Error);

    ZetaRequest negx;
    negx.x = Rat(-1);
    CHECK_THROWS_AS(zeta_multiple(negx), Error);
}

TEST_CASE("conjugate symmetry off the real axis") {
    ZetaRequest req;
    req.s = C(1.5, 2.0);
    req.w = {Rat(1), Rat(2)};
    req.a = {Rat(1), Rat(1)};
    Approx up = zeta_multiple(req);
    req.s = C(1.5, -2.0);
    Approx down = zeta_multiple(req);
    CHECK(std::abs(up.z - std::conj(down.z)) < 1e-9);
}

TEST_CASE("truncated tail bound is sound") {
    ZetaRequest req;
    req.s = C(2.0, 0.0);
    req.w = {Rat(1), Rat(2)};
    req.a = {Rat(1), Rat(1)};
    for (long long M : {4LL, 8LL, 16LL}) {
        Approx at = zeta_truncated(req, M);
        Approx further = zeta_truncated(req, M + 8);
        CHECK(std::abs(at.z - further.z) <= at.err);
    }
}

TEST_CASE("negative integer arguments hit the twisted family") {
    ZetaRequest req; // r = 1, w = a = 1, x = 1, q = 1/2
    InterpolationReport rep = interpolation_check(0, req);
    CHECK(rep.pass);
    CHECK(std::abs(rep.zeta_value - C(2.0 / 3.0, 0.0)) < 1e-9);
    CHECK(std::abs(rep.family_value - C(4.0 / 3.0, 0.0)) < 1e-9);
    CHECK(std::abs(rep.ratio - C(0.5, 0.0)) < 1e-9);
    CHECK(rep.resid_derived < 1e-9);
    // The stated normalization with sign (-1)^{n+1} does not match this
    // family: at n = 0 the two sides sit 2 apart. Recorded, not asserted.
    CHECK(rep.resid_stated == doctest::Approx(2.0).epsilon(1e-7));

    for (long long n = 1; n <= 4; ++n) {
        InterpolationReport r2 = interpolation_check(n, req);
        CHECK(r2.pass);
    }

    ZetaRequest frac;
    frac.x = Rat(1, 2);
    CHECK_THROWS_AS(interpolation_check(0, frac), Error);
    ZetaRequest cplx;
    cplx.chi = parse_character("5:0,1,w4^1,w4^3,w4^2");
    CHECK_THROWS_AS(interpolation_check(0, cplx), Error);
}

TEST_CASE("gamma evaluator") {
    CHECK(std::abs(lanczos_gamma(C(1.0, 0.0)) - C(1.0, 0.0)) < 1e-13);
    CHECK(std::abs(lanczos_gamma(C(4.0, 0.0)) - C(6.0, 0.0)) < 1e-11);
    CHECK(std::abs(lanczos_gamma(C(0.5, 0.0)) - C(std::sqrt(std::acos(-1.0)), 0.0)) < 1e-12);
    C s(2.3, 1.7);
    C lhs = lanczos_gamma(s + C(1.0, 0.0));
    C rhs = s * lanczos_gamma(s);
    CHECK(std::abs(lhs - rhs) < 1e-11 * std::abs(lhs));
    CHECK(std::abs(lanczos_gamma(std::conj(s)) - std::conj(lanczos_gamma(s))) <
          1e-11 * std::abs(lhs));
}

TEST_CASE("quadrature recovers inverse powers") {
    for (C s : {C(1.0, 0.0), C(1.5, 0.0), C(2.0, 0.0), C(2.0, 1.0)}) {
        MellinQuadrature mq = mellin_quadrature({{1.0, C(1.0, 0.0)}}, s);
        CHECK(std::abs(mq.value - C(1.0, 0.0)) < 1e-8);
        CHECK(std::abs(mq.value - C(1.0, 0.0)) <= mq.error + 1e-9);
    }
    MellinQuadrature half = mellin_quadrature({{2.0, C(1.0, 0.0)}}, C(2.0, 0.0));
    CHECK(std::abs(half.value - C(0.25, 0.0)) < 1e-8);
    // Two terms superpose linearly.
    MellinQuadrature two =
        mellin_quadrature({{1.0, C(1.0, 0.0)}, {3.0, C(-2.0, 0.0)}}, C(1.0, 0.0));
    CHECK(std::abs(two.value - C(1.0 - 2.0 / 3.0, 0.0)) < 1e-8);

    CHECK_THROWS_AS(mellin_quadrature({{1.0, C(1.0, 0.0)}}, C(0.2, 0.0)), Error);
    CHECK_THROWS_AS(mellin_quadrature({{-1.0, C(1.0, 0.0)}}, C(2.0, 0.0)), Error);
}

TEST_CASE("integral route matches the truncated series route") {
    ZetaRequest req;
    for (C s : {C(1.0, 0.0), C(2.0, 0.0), C(1.5, 0.5)}) {
        MellinReport rep = mellin_check(s, req);
        CHECK(rep.pass);
        CHECK(rep.difference < 1e-6);
        CHECK(rep.terms > 0);
    }
    ZetaRequest wide;
    wide.w = {Rat(1), Rat(2)};
    wide.a = {Rat(1), Rat(1)};
    MellinReport rep2 = mellin_check(C(2.0, 0.0), wide);
    CHECK(rep2.pass);

    CHECK_THROWS_AS(mellin_check(C(0.0, 0.0), req), Error);
}

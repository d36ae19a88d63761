#include <doctest.h>

#include <cmath>
#include <vector>

#include "qeuler/families.hpp"

using namespace qeuler;

namespace {

double exact_as_double(const FamilySpec& spec, long long n, const Rat& x, const Rat& q) {
    return Rat(closed_form(spec, n, x, exact_ctx(q)).value).convert_to<double>();
}

} // namespace

TEST_CASE("direct summation reproduces the closed form") {
    std::vector<FamilySpec> specs = {
        family_barnes_twisted({1}, {1}),
        family_barnes_twisted({1, 2}, {1, 1}),
        family_barnes_twisted({2, 3}, {2, 1}),
        family_hr(3, 1),
        family_hr(4, 2),
        family_chi_barnes_twisted(quadratic_character(3), {1, 2}, {1, 1}),
    };
    for (const auto& spec : specs) {
        for (const Rat& q : {Rat(1, 2), Rat(3, 5)}) {
            FloatCtx ctx(approx_from(q));
            for (long long n = 0; n <= 3; ++n) {
                Evaluation<Approx> sv = series_value(spec, n, Rat(1), ctx, 1e-10);
                CHECK(sv.method == Method::series_direct);
                double truth = exact_as_double(spec, n, Rat(1), q);
                CHECK(std::abs(sv.value.z.real() - truth) <= 1e-9);
                CHECK(std::abs(sv.value.z.real() - truth) <= sv.error_bound + 1e-13);
            }
        }
    }
}

TEST_CASE("single-term sanity value") {
    // 2 sum (-q)^m at q = 1/2 is 4/3, degree zero of the a = 1 twist.
    Evaluation<Approx> sv =
        series_value(family_barnes_twisted({1}, {1}), 0, Rat(0), float_ctx(0.5), 1e-12);
    CHECK(std::abs(sv.value.z.real() - 4.0 / 3.0) < 1e-11);
}

TEST_CASE("reported tail bound is sound at fixed truncations") {
    FamilySpec spec = family_barnes_twisted({1, 2}, {1, 1});
    FloatCtx ctx = float_ctx(0.5);
    for (long long M : {5LL, 10LL, 20LL}) {
        Evaluation<Approx> at = series_direct_truncated(spec, 3, Rat(1), ctx, M);
        Evaluation<Approx> further = series_direct_truncated(spec, 3, Rat(1), ctx, M + 8);
        double moved = std::abs(at.value.z.real() - further.value.z.real());
        CHECK(moved <= at.error_bound);
    }
}

TEST_CASE("tail majorant is monotone and vanishing") {
    double b10 = composition_tail_majorant(2, 0.5, 10, 3.0);
    double b20 = composition_tail_majorant(2, 0.5, 20, 3.0);
    CHECK(b10 > b20);
    CHECK(b20 > 0.0);
    CHECK(composition_tail_majorant(2, 0.5, 200, 3.0) < 1e-40);
}

TEST_CASE("Abel regularization sums the divergent cases") {
    // Plain degree zero is Grandi's series: 2(1 - 1 + 1 - ...) -> 1.
    Evaluation<Approx> g = series_value(family_plain(), 0, Rat(0), float_ctx(0.5), 1e-8);
    CHECK(g.method == Method::series_abel);
    CHECK(std::abs(g.value.z.real() - 1.0) < 1e-6);

    // r = 2 sums carry more rounding per extrapolation node, so the
    // certifiable bound sits near 1e-6 there and near 1e-8 for r = 1.
    std::vector<std::pair<FamilySpec, double>> shapes;
    shapes.emplace_back(family_plain(), 1e-8);
    shapes.emplace_back(family_order(2), 1e-6);
    shapes.emplace_back(family_chi(quadratic_character(3)), 1e-8);
    for (long long n = 0; n <= 4; ++n) {
        for (const auto& [spec, tol] : shapes) {
            Evaluation<Approx> av = series_value(spec, n, Rat(1), float_ctx(0.5), tol);
            double truth = exact_as_double(spec, n, Rat(1), Rat(1, 2));
            CHECK(std::abs(av.value.z.real() - truth) < 1e-6);
            CHECK(av.error_bound <= tol);
            CHECK(std::abs(av.value.z.real() - truth) <= av.error_bound);
        }
    }
}

TEST_CASE("forced Abel route agrees on direct-capable shapes") {
    FamilySpec spec = family_barnes_twisted({1}, {1});
    Evaluation<Approx> direct = series_value(spec, 2, Rat(1), float_ctx(0.5), 1e-10);
    Evaluation<Approx> abel = series_value_abel(spec, 2, Rat(1), float_ctx(0.5), 1e-8);
    CHECK(abel.method == Method::series_abel);
    CHECK(std::abs(direct.value.z.real() - abel.value.z.real()) < 1e-6);
}

TEST_CASE("q-binomial route for the (h, r) family") {
    for (const auto& hr : std::vector<std::pair<long long, int>>{{2, 1}, {3, 1}, {3, 2}, {4, 3}}) {
        for (long long n = 0; n <= 3; ++n) {
            Evaluation<Approx> qb =
                series_hr_qbinomial(n, Rat(0), float_ctx(0.5), hr.first, hr.second, 1e-10);
            double truth = exact_as_double(family_hr(hr.first, hr.second), n, Rat(0), Rat(1, 2));
            CHECK(std::abs(qb.value.z.real() - truth) < 1e-9);
        }
    }
    try {
        series_hr_qbinomial(1, Rat(0), float_ctx(0.5), 1, 2, 1e-8);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::series_not_convergent);
    }
}

TEST_CASE("series rejects q outside (0,1)") {
    CHECK_THROWS_AS(series_value(family_barnes_twisted({1}, {1}), 1, Rat(0), float_ctx(1.5), 1e-8),
                    Error);
    CHECK_THROWS_AS(series_value(family_barnes_twisted({1}, {1}), 1, Rat(0), float_ctx(-0.5), 1e-8),
                    Error);
    CHECK_THROWS_AS(series_value(family_plain(), -1, Rat(0), float_ctx(0.5), 1e-8), Error);
    CHECK_THROWS_AS(series_value(family_plain(), 1, Rat(0), float_ctx(0.5), 0.0), Error);
}

#include "qeuler/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "qeuler/errors.hpp"
#include "qeuler/families.hpp"
#include "qeuler/qcore.hpp"

namespace qeuler {

namespace {

using C64 = std::complex<double>;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = 3.14159265358979323846;

double to_d(const Rat& v) { return v.convert_to<double>(); }

struct Plan {
    int r = 1;
    std::vector<double> w, a;
    std::vector<long long> wi; // for the character residue only
    double x = 1.0, q = 0.5, lq = 0.0;
    double amin = 1.0;
    long long f = 1;
    std::vector<C64> chi;
    C64 s;
    double B = 0.0, beta = 0.0;
};

Plan plan_for(const ZetaRequest& req) {
    Plan p;
    p.r = static_cast<int>(req.w.size());
    if (p.r < 1 || p.r > 8) fail(errc::invalid_request, "index count must be in [1,8]");
    if (req.a.size() != req.w.size())
        fail(errc::invalid_request, "weight and exponent lists must have equal length");
    if (!(req.q > 0 && req.q < 1)) fail(errc::invalid_request, "q must lie in (0,1)");
    if (!(req.x > 0)) fail(errc::invalid_request, "x must be positive");
    for (const Rat& wj : req.w)
        if (!(wj > 0)) fail(errc::invalid_request, "weights must be positive");
    for (const Rat& aj : req.a)
        if (!(aj > 0)) fail(errc::invalid_request, "exponents must be positive");
    for (const Rat& wj : req.w) p.w.push_back(to_d(wj));
    for (const Rat& aj : req.a) p.a.push_back(to_d(aj));
    p.x = to_d(req.x);
    p.q = to_d(req.q);
    p.lq = std::log(p.q);
    p.amin = *std::min_element(p.a.begin(), p.a.end());
    if (req.chi) {
        p.f = req.chi->conductor();
        for (long long b = 0; b < p.f; ++b) p.chi.push_back(req.chi->evaluate_float(b).z);
    }
    p.s = req.s;
    double sigma = req.s.real();
    double brx = (1.0 - std::exp(p.x * p.lq)) / (1.0 - p.q);
    p.B = std::max(std::pow(brx, -sigma), std::pow(1.0 - p.q, sigma)) *
          std::exp(kPi * std::abs(req.s.imag()));
    p.beta = std::pow(p.q, p.amin);
    return p;
}

struct CoreSum {
    C64 value{0.0, 0.0};
    double tail = 0.0;
    double fp = 0.0;
    long long shells = 0;
    long long terms = 0;
    std::map<double, C64> groups; // t -> summed coefficient, without bracket power
};

// Total-degree shells of the defining sum. Stops when the composition-count
// majorant for the unsummed remainder falls below target (adaptive mode) or
// at the requested shell count.
CoreSum core_sum(const Plan& p, double target, long long fixed_shells, bool collect) {
    CoreSum out;
    size_t r = static_cast<size_t>(p.r);
    std::vector<long long> m(r, 0);
    double abs_acc = 0.0;
    long long budget = 200'000'000;
    long long limit = fixed_shells >= 0 ? fixed_shells : 500000;
    for (long long sh = 0; sh <= limit; ++sh) {
        std::fill(m.begin(), m.end(), 0);
        while (true) {
            long long used = 0;
            for (size_t j = 0; j + 1 < r; ++j) used += m[j];
            m[r - 1] = sh - used;
            double e = 0.0, t = 0.0;
            C64 cf = (sh & 1) ? C64(-1.0, 0.0) : C64(1.0, 0.0);
            for (size_t j = 0; j < r; ++j) {
                e += p.a[j] * static_cast<double>(m[j]);
                t += p.w[j] * static_cast<double>(m[j]);
                if (p.f > 1) cf *= p.chi[static_cast<size_t>(m[j] % p.f)];
            }
            C64 coef = cf * std::exp(e * p.lq);
            double br = (1.0 - std::exp((p.x + t) * p.lq)) / (1.0 - p.q);
            C64 term = coef * std::exp(-p.s * std::log(br));
            out.value += term;
            abs_acc += std::abs(term);
            ++out.terms;
            if (collect) {
                out.groups[t] += coef;
                if (out.groups.size() > 5'000'000)
                    fail(errc::quadrature_failure, "too many kernel terms to integrate");
            }
            if (--budget <= 0)
                fail(errc::convergence_budget_exceeded, "term budget exhausted");
            if (r == 1) break;
            size_t j = 0;
            for (; j + 1 < r; ++j) {
                ++m[j];
                long long partial = 0;
                for (size_t i = 0; i + 1 < r; ++i) partial += m[i];
                if (partial <= sh) break;
                m[j] = 0;
            }
            if (j + 1 >= r) break;
        }
        out.shells = sh;
        out.tail = composition_tail_majorant(p.r, p.beta, sh, p.B);
        if (fixed_shells < 0 && out.tail <= target) break;
        if (fixed_shells < 0 && sh == limit)
            fail(errc::convergence_budget_exceeded, "shell budget exhausted");
    }
    out.fp = 64.0 * kEps * abs_acc * (1.0 + std::abs(p.s));
    return out;
}

Approx run(const ZetaRequest& req, long long fixed_shells) {
    if (!(req.tol > 0.0)) fail(errc::invalid_request, "tolerance must be positive");
    Plan p = plan_for(req);
    CoreSum cs = core_sum(p, req.tol / 2.0, fixed_shells, false);
    return Approx(cs.value, cs.tail + cs.fp);
}

} // namespace

Approx zeta_multiple(const ZetaRequest& req) {
    if (req.chi) fail(errc::invalid_request, "zeta_multiple takes no character; use l_multiple");
    return run(req, -1);
}

Approx l_multiple(const ZetaRequest& req) {
    if (!req.chi) fail(errc::invalid_request, "l_multiple needs a character");
    return run(req, -1);
}

Approx zeta_truncated(const ZetaRequest& req, long long shells) {
    if (shells < 0) fail(errc::invalid_request, "shell count must be nonnegative");
    return run(req, shells);
}

InterpolationReport interpolation_check(long long n, const ZetaRequest& req) {
    if (n < 0) fail(errc::invalid_request, "interpolation degree must be nonnegative");
    if (rat_den(req.x) != 1) fail(errc::invalid_request, "family side needs an integral x");
    std::vector<long long> w, a;
    for (const Rat& wj : req.w) {
        if (rat_den(wj) != 1) fail(errc::invalid_request, "family side needs integral weights");
        w.push_back(static_cast<long long>(rat_num(wj)));
    }
    for (const Rat& aj : req.a) {
        if (rat_den(aj) != 1) fail(errc::invalid_request, "family side needs integral exponents");
        a.push_back(static_cast<long long>(rat_num(aj)));
    }
    if (req.chi && !req.chi->real_valued())
        fail(errc::invalid_request, "family side needs a real-valued character");

    ZetaRequest at = req;
    at.s = C64(-static_cast<double>(n), 0.0);
    at.tol = std::min(req.tol, 1e-10);
    Approx L = req.chi ? l_multiple(at) : zeta_multiple(at);

    ExactCtx ectx = exact_ctx(req.q);
    Rat exact = req.chi
                    ? euler_chi_barnes_twisted<Rat>(n, req.x, ectx, *req.chi, w, a).value
                    : euler_barnes_twisted<Rat>(n, req.x, ectx, w, a).value;
    double E = exact.convert_to<double>();

    InterpolationReport rep;
    rep.n = n;
    rep.zeta_value = L.z;
    rep.family_value = C64(E, 0.0);
    rep.ratio = std::abs(E) < 1e-300 ? C64(0.0, 0.0) : L.z / E;
    double scale = std::ldexp(1.0, static_cast<int>(req.w.size()));
    rep.resid_derived = std::abs(scale * L.z - C64(E, 0.0));
    double sign = n % 2 == 0 ? -1.0 : 1.0; // (-1)^{n+1}
    rep.resid_stated = std::abs(L.z - sign * C64(E, 0.0));
    rep.tol = req.tol;
    rep.pass = rep.resid_derived <= rep.tol;
    return rep;
}

std::complex<double> lanczos_gamma(std::complex<double> z) {
    static const double g[9] = {0.99999999999980993,     676.5203681218851,
                                -1259.1392167224028,     771.32342877765313,
                                -176.61502916214059,     12.507343278686905,
                                -0.13857109526572012,    9.9843695780195716e-6,
                                1.5056327351493116e-7};
    if (z.real() < 0.5) {
        // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
        return kPi / (std::sin(kPi * z) * lanczos_gamma(C64(1.0, 0.0) - z));
    }
    z -= 1.0;
    C64 x = g[0];
    for (int i = 1; i < 9; ++i) x += g[i] / (z + C64(static_cast<double>(i), 0.0));
    C64 t = z + 7.5;
    return std::sqrt(2.0 * kPi) * std::exp((z + 0.5) * std::log(t) - t) * x;
}

namespace {

struct SimpsonState {
    const std::vector<std::pair<double, C64>>* terms;
    C64 two_s_minus_1;
    bool at_half_real = false; // s == 1/2 exactly, real
    long long evals = 0;
    double err = 0.0;
};

C64 kernel(SimpsonState& st, double u) {
    ++st.evals;
    if (u <= 0.0) {
        if (!st.at_half_real) return C64(0.0, 0.0);
        C64 g{0.0, 0.0};
        for (const auto& [lam, c] : *st.terms) g += c;
        return 2.0 * g;
    }
    double uu = u * u;
    C64 g{0.0, 0.0};
    for (const auto& [lam, c] : *st.terms) g += c * std::exp(-lam * uu);
    return 2.0 * std::exp(st.two_s_minus_1 * std::log(u)) * g;
}

C64 simpson(SimpsonState& st, double a, double b, C64 fa, C64 fm, C64 fb, C64 whole, double tol,
            int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    C64 flm = kernel(st, lm), frm = kernel(st, rm);
    C64 left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    C64 right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    C64 delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        if (depth <= 0) st.err += std::abs(delta);
        st.err += std::abs(delta) / 15.0;
        return left + right + delta / 15.0;
    }
    return simpson(st, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           simpson(st, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

} // namespace

MellinQuadrature mellin_quadrature(const std::vector<std::pair<double, C64>>& terms, C64 s) {
    if (terms.empty()) fail(errc::invalid_request, "empty kernel");
    double sigma = s.real();
    if (sigma < 0.5 - 1e-12) fail(errc::invalid_request, "mellin quadrature needs Re s >= 1/2");
    double lam_min = terms.front().first;
    double abs_c = 0.0;
    for (const auto& [lam, c] : terms) {
        if (!(lam > 0.0)) fail(errc::invalid_request, "kernel exponents must be positive");
        lam_min = std::min(lam_min, lam);
        abs_c += std::abs(c);
    }
    double z_cut = std::max(2.0 * sigma + 4.0, 80.0);
    double U = std::sqrt(z_cut / lam_min);
    // Remainder past U: (1/2) lam^{-sigma} Gamma(sigma, lam U^2) <=
    // lam^{-sigma} z^{sigma-1} e^{-z} at z = z_cut >= 2 sigma.
    double tail = abs_c * std::pow(lam_min, -sigma) * std::pow(z_cut, sigma - 1.0) *
                  std::exp(-z_cut);

    SimpsonState st;
    st.terms = &terms;
    st.two_s_minus_1 = 2.0 * s - 1.0;
    st.at_half_real = s.imag() == 0.0 && sigma == 0.5;
    C64 fa = kernel(st, 0.0), fb = kernel(st, U), fm = kernel(st, 0.5 * U);
    C64 whole = U / 6.0 * (fa + 4.0 * fm + fb);
    double tol = 1e-11 * (1.0 + std::abs(whole));
    C64 integral = simpson(st, 0.0, U, fa, fm, fb, whole, tol, 26);

    C64 gamma = lanczos_gamma(s);
    MellinQuadrature out;
    out.value = integral / gamma;
    out.error = (st.err + tail) / std::abs(gamma);
    out.evals = st.evals;
    if (!(out.error <= 1e-7 * (1.0 + std::abs(out.value))))
        fail(errc::quadrature_failure, "adaptive quadrature did not converge");
    return out;
}

MellinReport mellin_check(C64 s, const ZetaRequest& req) {
    if (s.real() < 0.5 - 1e-12)
        fail(errc::invalid_request, "mellin check needs Re s >= 1/2");
    for (const Rat& aj : req.a)
        if (aj < 1) fail(errc::invalid_request, "mellin check needs exponents a_j >= 1");
    ZetaRequest at = req;
    at.s = s;
    if (!(at.tol > 0.0)) fail(errc::invalid_request, "tolerance must be positive");
    Plan p = plan_for(at);
    CoreSum cs = core_sum(p, at.tol / 2.0, -1, true);

    std::vector<std::pair<double, C64>> terms;
    terms.reserve(cs.groups.size());
    C64 series{0.0, 0.0};
    for (const auto& [t, coef] : cs.groups) {
        double lam = (1.0 - std::exp((p.x + t) * p.lq)) / (1.0 - p.q);
        terms.emplace_back(lam, coef);
        series += coef * std::exp(-s * std::log(lam));
    }
    MellinQuadrature quad = mellin_quadrature(terms, s);

    double scale = std::ldexp(1.0, p.r);
    MellinReport rep;
    rep.s = s;
    rep.quadrature = scale * quad.value;
    rep.series_side = scale * series;
    rep.difference = std::abs(rep.quadrature - rep.series_side);
    rep.quad_error = scale * quad.error;
    rep.shells = cs.shells;
    rep.terms = static_cast<long long>(terms.size());
    rep.tol = 1e-6;
    rep.pass = rep.difference <= rep.tol;
    return rep;
}

} // namespace qeuler

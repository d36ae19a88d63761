#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "qeuler/errors.hpp"
#include "qeuler/families.hpp"

namespace qeuler {

namespace {

using C64 = std::complex<double>;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Shape {
    int r = 1;
    std::vector<long long> w;
    std::vector<long long> g; // per-index geometric exponent
    long long f = 1;
    std::vector<C64> chi;
    long long gmin = 0;
    bool unit_w = true;
};

Shape shape_for(const FamilySpec& spec) {
    Shape s;
    s.r = spec.r;
    s.w = spec.w;
    s.g = spec.a;
    if (spec.kind == FamilyKind::extended_hr)
        for (int j = 0; j < spec.r; ++j) s.g[static_cast<size_t>(j)] = spec.h - (j + 1);
    if (spec.chi) {
        s.f = spec.chi->conductor();
        for (long long b = 0; b < s.f; ++b) s.chi.push_back(spec.chi->evaluate_float(b).z);
    } else {
        s.chi.assign(1, C64(1.0, 0.0));
    }
    s.gmin = *std::min_element(s.g.begin(), s.g.end());
    s.unit_w = std::all_of(s.w.begin(), s.w.end(), [](long long v) { return v == 1; });
    return s;
}

double take_real_q(const FloatCtx& ctx) {
    if (ctx.q.imag() != 0.0)
        fail(errc::invalid_request, "series evaluation needs a real q in (0,1)");
    double q = ctx.q.real();
    if (!(q > 0.0 && q < 1.0))
        fail(errc::invalid_request, "series evaluation needs a real q in (0,1)");
    return q;
}

double ipow(double b, long long n) {
    double acc = 1.0;
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

double tail_majorant(int r, double beta, long long S, double B) {
    return composition_tail_majorant(r, beta, S, B);
}

struct RawSum {
    C64 value{0.0, 0.0};
    double tail = kInf; // majorant for everything not summed
    double fp = 0.0;    // accumulated rounding slack
    long long shells = 0;
    bool converged = false;
};

// Shell coefficients for unit weights via one recurrence per index: with
// g_j(m) = chi[m mod f] (-rho)^m q^{g_j m}, the transform
// S_j(t) = sum_m g_j(m) S_{j-1}(t-m) obeys
// S_j(t) = sum_{b<f} g_j(b) S_{j-1}(t-b) + (-rho)^f q^{g_j f} S_j(t-f),
// so ring buffers of depth f+1 suffice.
RawSum sum_unit_weight(const Shape& sh, long long n, double q, double qx, double rho,
                       double target, double B, long long fixed_shells) {
    RawSum out;
    double beta = rho * std::pow(q, static_cast<double>(sh.gmin));
    size_t r = static_cast<size_t>(sh.r);
    size_t f = static_cast<size_t>(sh.f);
    size_t cap = f + 1;
    std::vector<std::vector<C64>> head(r);
    std::vector<C64> step(r);
    for (size_t j = 0; j < r; ++j) {
        double qg = std::pow(q, static_cast<double>(sh.g[j]));
        C64 acc{1.0, 0.0};
        for (size_t b = 0; b < f; ++b) {
            head[j].push_back(sh.chi[b] * acc);
            acc *= -rho * qg;
        }
        step[j] = acc; // (-rho q^{g_j})^f
    }
    std::vector<std::vector<C64>> ring(r, std::vector<C64>(cap, C64{0.0, 0.0}));
    double qp = qx; // q^{x+t}
    double inv1q = 1.0 / (1.0 - q);
    long long limit = fixed_shells >= 0 ? fixed_shells : 4000000;
    for (long long t = 0; t <= limit; ++t) {
        for (size_t j = 0; j < r; ++j) {
            C64 v{0.0, 0.0};
            for (size_t b = 0; b < f && static_cast<long long>(b) <= t; ++b) {
                long long tb = t - static_cast<long long>(b);
                C64 lower = j == 0 ? C64(tb == 0 ? 1.0 : 0.0, 0.0)
                                   : ring[j - 1][static_cast<size_t>(tb) % cap];
                v += head[j][b] * lower;
            }
            if (t >= static_cast<long long>(f))
                v += step[j] * ring[j][static_cast<size_t>(t - f) % cap];
            ring[j][static_cast<size_t>(t) % cap] = v;
        }
        double brn = ipow((1.0 - qp) * inv1q, n);
        C64 contrib = ring[r - 1][static_cast<size_t>(t) % cap] * brn;
        out.value += contrib;
        out.fp += std::abs(contrib);
        qp *= q;
        out.shells = t;
        if (fixed_shells >= 0) {
            if (t == fixed_shells) {
                out.tail = tail_majorant(sh.r, beta, t, B);
                out.converged = true;
            }
            continue;
        }
        if (t >= 4 && (t & 3) == 0) {
            out.tail = tail_majorant(sh.r, beta, t, B);
            if (out.tail <= target) {
                out.converged = true;
                break;
            }
        }
    }
    out.fp *= 64.0 * kEps;
    return out;
}

// General weights: enumerate compositions shell by shell.
RawSum sum_enumerated(const Shape& sh, long long n, double q, double qx, double rho,
                      double target, double B, long long fixed_shells) {
    RawSum out;
    double beta = rho * std::pow(q, static_cast<double>(sh.gmin));
    size_t r = static_cast<size_t>(sh.r);
    std::vector<double> qpow{1.0}; // q^e for e >= 0
    std::vector<double> brpow;     // [x+t]^n
    double inv1q = 1.0 / (1.0 - q);
    double qp = qx;
    auto bracket_pow = [&](long long t) {
        while (static_cast<long long>(brpow.size()) <= t) {
            brpow.push_back(ipow((1.0 - qp) * inv1q, n));
            qp *= q;
        }
        return brpow[static_cast<size_t>(t)];
    };
    auto q_power = [&](long long e) {
        if (e < 0) return std::pow(q, static_cast<double>(e));
        while (static_cast<long long>(qpow.size()) <= e) qpow.push_back(qpow.back() * q);
        return qpow[static_cast<size_t>(e)];
    };
    long long budget = 300000000;
    long long limit = fixed_shells >= 0 ? fixed_shells : 2000000;
    std::vector<long long> m(r, 0);
    double rho_s = 1.0;
    for (long long s = 0; s <= limit; ++s) {
        C64 shell{0.0, 0.0};
        std::fill(m.begin(), m.end(), 0);
        // Indices 0..r-2 run free; the last one absorbs the remainder.
        while (true) {
            long long used = 0;
            for (size_t j = 0; j + 1 < r; ++j) used += m[j];
            m[r - 1] = s - used;
            long long e = 0, t = 0;
            C64 cf{1.0, 0.0};
            for (size_t j = 0; j < r; ++j) {
                e += sh.g[j] * m[j];
                t += sh.w[j] * m[j];
                if (sh.f > 1) cf *= sh.chi[static_cast<size_t>(m[j] % sh.f)];
            }
            shell += cf * (q_power(e) * bracket_pow(t));
            if (--budget <= 0) fail(errc::series_not_convergent, "term budget exhausted");
            if (r == 1) break;
            size_t j = 0;
            for (; j + 1 < r; ++j) {
                ++m[j];
                long long partial = 0;
                for (size_t i = 0; i + 1 < r; ++i) partial += m[i];
                if (partial <= s) break;
                m[j] = 0;
            }
            if (j + 1 >= r) break;
        }
        C64 contrib = ((s & 1) ? -rho_s : rho_s) * shell;
        out.value += contrib;
        out.fp += std::abs(contrib);
        rho_s *= rho;
        out.shells = s;
        if (fixed_shells >= 0) {
            if (s == fixed_shells) {
                out.tail = tail_majorant(sh.r, beta, s, B);
                out.converged = true;
            }
            continue;
        }
        out.tail = tail_majorant(sh.r, beta, s, B);
        if (out.tail <= target) {
            out.converged = true;
            break;
        }
    }
    out.fp *= 64.0 * kEps;
    return out;
}

RawSum sum_shells(const Shape& sh, long long n, double q, double qx, double rho, double target,
                  double B, long long fixed_shells) {
    if (sh.unit_w) return sum_unit_weight(sh, n, q, qx, rho, target, B, fixed_shells);
    return sum_enumerated(sh, n, q, qx, rho, target, B, fixed_shells);
}

double bound_factor(long long n, double q, double qx) {
    // |[x+t]_q^n| <= ((1+q^x)/(1-q))^n for every t >= 0.
    return ipow((1.0 + qx) / (1.0 - q), n);
}

} // namespace

// B * sum_{s>S} C(s+r-1, r-1) beta^s, a closed majorant for everything
// beyond shell S: finite extension plus a geometric cap once the term
// ratio beta (s+r)/(s+1) drops below 1.
double composition_tail_majorant(int r, double beta, long long S, double B) {
    if (!(beta > 0.0)) return 0.0;
    if (beta >= 1.0) return kInf;
    long long s = S + 1;
    double c = std::max(ipow(beta, s), 1e-290);
    for (int i = 1; i < r; ++i) c *= static_cast<double>(s + i) / static_cast<double>(i);
    double total = 0.0;
    for (int iter = 0; iter < 2000000; ++iter) {
        double ratio = beta * static_cast<double>(s + r) / static_cast<double>(s + 1);
        total += c;
        if (ratio < 1.0) {
            total += c * ratio / (1.0 - ratio);
            return B * total;
        }
        c *= ratio;
        ++s;
        if (c > 1e280) return kInf;
    }
    return kInf;
}

Evaluation<Approx> series_value(const FamilySpec& spec, long long n, const Rat& x,
                                const FloatCtx& ctx, double tol) {
    return detail_series::value_impl(spec, n, x, ctx, tol, false);
}

Evaluation<Approx> series_value_abel(const FamilySpec& spec, long long n, const Rat& x,
                                     const FloatCtx& ctx, double tol) {
    return detail_series::value_impl(spec, n, x, ctx, tol, true);
}

namespace detail_series {

Evaluation<Approx> value_impl(const FamilySpec& spec, long long n, const Rat& x,
                              const FloatCtx& ctx, double tol, bool force_abel) {
    if (n < 0) fail(errc::invalid_request, "degree n must be nonnegative");
    if (!(tol > 0.0)) fail(errc::invalid_request, "tolerance must be positive");
    double q = take_real_q(ctx);
    double qx = std::pow(q, Rat(x).convert_to<double>());
    Shape sh = shape_for(spec);
    double scale = ipow(2.0, sh.r);
    double B = scale * bound_factor(n, q, qx);
    Evaluation<Approx> ev;
    if (!force_abel && sh.gmin >= 1) {
        RawSum raw = sum_shells(sh, n, q, qx, 1.0, tol / 2.0, B, -1);
        if (!raw.converged)
            fail(errc::series_not_convergent, "tail bound did not reach tolerance in budget");
        double err = raw.tail + scale * raw.fp;
        ev.value = Approx(scale * raw.value, err);
        ev.method = Method::series_direct;
        ev.error_bound = err;
        return ev;
    }
    // Abel regularization: S(rho) on rho_k = 1 - 2^{-k}, extrapolated to
    // rho = 1 by a Neville table in h = 1 - rho.
    double node_target = std::min(tol / 64.0, 1e-9);
    std::vector<double> hs;
    std::vector<C64> diag;
    C64 extrapolated{0.0, 0.0};
    double est = kInf;
    std::vector<double> uncs;
    C64 best_val{0.0, 0.0};
    double best_err = kInf;
    for (int k = 3; k <= 12; ++k) {
        double h = std::ldexp(1.0, -k);
        double rho = 1.0 - h;
        if (rho * std::pow(q, static_cast<double>(sh.gmin)) >= 1.0)
            fail(errc::series_not_convergent,
                 "Abel radius cannot compensate a growing geometric factor");
        RawSum raw = sum_shells(sh, n, q, qx, rho, node_target / scale, B / scale, -1);
        if (!raw.converged)
            fail(errc::series_not_convergent, "Abel node did not reach its tolerance in budget");
        uncs.push_back(scale * (raw.fp + raw.tail));
        C64 s_val = scale * raw.value;
        std::vector<C64> next(diag.size() + 1);
        next[0] = s_val;
        for (size_t i = 1; i < next.size(); ++i) {
            double hi = hs[hs.size() - i];
            next[i] = next[i - 1] + (next[i - 1] - diag[i - 1]) * (h / (hi - h));
        }
        hs.push_back(h);
        C64 new_extrap = next.back();
        if (diag.size() >= 2) est = std::abs(new_extrap - extrapolated);
        diag = std::move(next);
        extrapolated = new_extrap;
        // The diagonal entry is the Lagrange interpolant at h = 0, a fixed
        // linear combination sum_i w_i S(h_i), so node uncertainties enter
        // with weight |w_i|. Deeper nodes shrink est but carry more rounding,
        // so keep the best depth seen.
        if (hs.size() >= 4 && est < kInf) {
            double noise = 0.0;
            for (size_t i = 0; i < hs.size(); ++i) {
                double w = 1.0;
                for (size_t j = 0; j < hs.size(); ++j)
                    if (j != i) w *= hs[j] / (hs[j] - hs[i]);
                noise += std::abs(w) * uncs[i];
            }
            double err_here = est + noise;
            if (err_here < best_err) {
                best_err = err_here;
                best_val = extrapolated;
            }
            if (best_err <= tol) break;
        }
    }
    if (!(best_err <= tol))
        fail(errc::series_not_convergent, "extrapolation differences did not reach tolerance");
    ev.value = Approx(best_val, best_err);
    ev.method = Method::series_abel;
    ev.error_bound = best_err;
    return ev;
}

} // namespace detail_series

Evaluation<Approx> series_direct_truncated(const FamilySpec& spec, long long n, const Rat& x,
                                           const FloatCtx& ctx, long long shells) {
    if (n < 0 || shells < 0) fail(errc::invalid_request, "need n >= 0 and shells >= 0");
    double q = take_real_q(ctx);
    double qx = std::pow(q, Rat(x).convert_to<double>());
    Shape sh = shape_for(spec);
    if (sh.gmin < 1)
        fail(errc::invalid_request, "direct truncation requires geometric decay on every index");
    double scale = ipow(2.0, sh.r);
    double B = scale * bound_factor(n, q, qx);
    RawSum raw = sum_shells(sh, n, q, qx, 1.0, 0.0, B, shells);
    Evaluation<Approx> ev;
    double err = raw.tail + scale * raw.fp;
    ev.value = Approx(scale * raw.value, err);
    ev.method = Method::series_direct;
    ev.error_bound = err;
    return ev;
}

Evaluation<Approx> series_hr_qbinomial(long long n, const Rat& x, const FloatCtx& ctx,
                                       long long h, int r, double tol) {
    if (r < 1) fail(errc::invalid_request, "order r must be >= 1");
    if (n < 0) fail(errc::invalid_request, "degree n must be nonnegative");
    if (!(tol > 0.0)) fail(errc::invalid_request, "tolerance must be positive");
    double q = take_real_q(ctx);
    if (h - r < 1)
        fail(errc::series_not_convergent, "q-binomial series needs h-r >= 1 for a geometric ratio");
    double qx = std::pow(q, Rat(x).convert_to<double>());
    double y = -ipow(q, h - r);
    double ay = -y;
    double cmax = 1.0;
    for (int i = 1; i < r; ++i) cmax /= (1.0 - ipow(q, i));
    double scale = ipow(2.0, r);
    double B = scale * cmax * bound_factor(n, q, qx);
    double inv1q = 1.0 / (1.0 - q);
    double cq = 1.0; // C(m+r-1, m)_q
    double ym = 1.0;
    double qp = qx;
    double qm = 1.0; // q^m
    double sum = 0.0;
    double fp = 0.0;
    for (long long mm = 0;; ++mm) {
        double term = cq * ym * ipow((1.0 - qp) * inv1q, n);
        sum += term;
        fp += std::abs(term);
        double tail = B * std::pow(ay, static_cast<double>(mm + 1)) / (1.0 - ay);
        if (tail <= tol / 2.0) {
            Evaluation<Approx> ev;
            double err = tail + 64.0 * kEps * scale * fp;
            ev.value = Approx(scale * sum, 0.0, err);
            ev.method = Method::series_direct;
            ev.error_bound = err;
            return ev;
        }
        if (mm > 10000000) fail(errc::series_not_convergent, "term budget exhausted");
        cq *= (1.0 - qm * ipow(q, r)) / (1.0 - qm * q);
        qm *= q;
        ym *= y;
        qp *= q;
    }
}

} // namespace qeuler

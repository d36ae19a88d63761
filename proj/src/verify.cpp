#include "qeuler/verify.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <sstream>

#include "qeuler/errors.hpp"
#include "qeuler/families.hpp"
#include "qeuler/padic.hpp"
#include "qeuler/qcore.hpp"
#include "qeuler/zeta.hpp"

namespace qeuler {

namespace {

using C64 = std::complex<double>;

struct Collector {
    SuiteResult res;

    void add(CaseResult c) {
        if (!c.pass) {
            res.pass = false;
            ++res.failed;
        }
        if (std::isfinite(c.residual)) res.max_residual = std::max(res.max_residual, c.residual);
        res.cases.push_back(std::move(c));
    }
    void exact(std::string name, const Rat& delta, std::string note = "") {
        double r = std::abs(delta.convert_to<double>());
        add(CaseResult{std::move(name), delta == 0, r, std::move(note)});
    }
    void close(std::string name, double resid, double tol, std::string note = "") {
        add(CaseResult{std::move(name), resid <= tol, resid, std::move(note)});
    }
    void flag(std::string name, bool ok, std::string note = "") {
        add(CaseResult{std::move(name), ok, ok ? 0.0 : 1.0, std::move(note)});
    }
};

std::vector<Rat> exact_grid(const SuiteOptions& o) {
    if (!o.qs.empty()) return o.qs;
    return {Rat(1, 2), Rat(1, 3), Rat(3, 5)};
}

double float_tol(const SuiteOptions& o, double dflt) { return o.tol > 0.0 ? o.tol : dflt; }

std::string nm(const std::string& head, long long n, const Rat& x, const Rat& q) {
    std::ostringstream os;
    os << head << " n=" << n << " x=" << rat_str(x) << " q=" << rat_str(q);
    return os.str();
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << v;
    return os.str();
}

FloatCtx float_ctx_of(const Rat& q) { return FloatCtx(approx_from(q)); }

void suite_two_path(Collector& C, const SuiteOptions& opts) {
    DirichletCharacter triv = trivial_character();
    DirichletCharacter q3 = quadratic_character(3);
    DirichletCharacter q5 = quadratic_character(5);
    DirichletCharacter p3 = parse_character("3:0,1,1"); // principal mod 3
    const std::vector<std::vector<long long>> barnes_ws = {{1, 2}, {2, 3}, {1, 2, 3}};
    const std::vector<std::pair<std::vector<long long>, std::vector<long long>>> twisted = {
        {{1, 2}, {1, 1}}, {{1, 2, 3}, {0, 1, 2}}, {{2, 2}, {3, 3}}};
    const std::vector<std::pair<long long, int>> hrs = {{1, 1}, {2, 1}, {3, 1},
                                                        {1, 2}, {2, 2}, {3, 2}};
    for (const Rat& q : exact_grid(opts)) {
        ExactCtx ctx = exact_ctx(q);
        for (long long xi = 0; xi <= 2; ++xi) {
            Rat x(xi);
            for (long long n = 0; n <= 6; ++n) {
                Rat plain = euler_q<Rat>(n, x, ctx).value;
                C.exact(nm("plain refined3", n, x, q),
                        plain - closed_form_refined<Rat>(family_plain(), n, x, ctx, 3).value);
                C.exact(nm("plain dist f=3", n, x, q),
                        plain - euler_plain_distribution<Rat>(n, x, ctx, 3).value);
                C.exact(nm("plain dist f=5", n, x, q),
                        plain - euler_plain_distribution<Rat>(n, x, ctx, 5).value);
                for (int r : {2, 3})
                    C.exact(nm("order r=" + std::to_string(r) + " refined3", n, x, q),
                            euler_q_order<Rat>(n, x, ctx, r).value -
                                closed_form_refined<Rat>(family_order(r), n, x, ctx, 3).value);
                for (auto [h, r] : hrs) {
                    std::string head =
                        "hr h=" + std::to_string(h) + " r=" + std::to_string(r);
                    Rat v = euler_q_hr<Rat>(n, x, ctx, h, r).value;
                    C.exact(nm(head + " refined3", n, x, q),
                            v - closed_form_refined<Rat>(family_hr(h, r), n, x, ctx, 3).value);
                    C.exact(nm(head + " pochhammer", n, x, q),
                            v - euler_hr_pochhammer<Rat>(n, x, ctx, h, r).value);
                }
                for (const auto& w : barnes_ws)
                    C.exact(nm("barnes " + family_barnes(w).describe() + " refined3", n, x, q),
                            euler_barnes<Rat>(n, x, ctx, w).value -
                                closed_form_refined<Rat>(family_barnes(w), n, x, ctx, 3).value);
                for (const auto& [w, a] : twisted)
                    C.exact(
                        nm("twisted " + family_barnes_twisted(w, a).describe() + " refined3", n,
                           x, q),
                        euler_barnes_twisted<Rat>(n, x, ctx, w, a).value -
                            closed_form_refined<Rat>(family_barnes_twisted(w, a), n, x, ctx, 3)
                                .value);
                int ci = 0;
                for (const DirichletCharacter& chi : {triv, q3, q5, p3}) {
                    std::string head = "chi[" + std::to_string(chi.conductor()) + "/" +
                                       std::to_string(ci++) + "]";
                    Rat engine = closed_form<Rat>(family_chi(chi), n, x, ctx).value;
                    C.exact(nm(head + " conductor-split", n, x, q),
                            engine - euler_chi<Rat>(n, x, ctx, chi).value);
                    C.exact(nm(head + " refined3", n, x, q),
                            engine -
                                closed_form_refined<Rat>(family_chi(chi), n, x, ctx, 3).value);
                }
                const std::vector<std::pair<DirichletCharacter, int>> chi_orders = {
                    {q3, 2}, {q5, 2}, {q3, 3}};
                for (const auto& [chi, r] : chi_orders)
                    C.exact(nm("chi_order f=" + std::to_string(chi.conductor()) + " r=" +
                                   std::to_string(r) + " refined3",
                               n, x, q),
                            euler_chi_order<Rat>(n, x, ctx, chi, r).value -
                                closed_form_refined<Rat>(family_chi_order(chi, r), n, x, ctx, 3)
                                    .value);
                const std::vector<
                    std::tuple<DirichletCharacter, std::vector<long long>, std::vector<long long>>>
                    ctw = {{q3, {1, 2}, {1, 2}}, {q5, {1, 1}, {0, 1}}, {q3, {2, 3}, {1, 3}}};
                for (const auto& [chi, w, a] : ctw)
                    C.exact(
                        nm("chi_twisted " + family_chi_barnes_twisted(chi, w, a).describe() +
                               " refined3",
                           n, x, q),
                        euler_chi_barnes_twisted<Rat>(n, x, ctx, chi, w, a).value -
                            closed_form_refined<Rat>(family_chi_barnes_twisted(chi, w, a), n, x,
                                                     ctx, 3)
                                .value);
            }
        }
    }
}

void suite_reductions(Collector& C, const SuiteOptions& opts) {
    DirichletCharacter q3 = quadratic_character(3);
    DirichletCharacter q5 = quadratic_character(5);
    DirichletCharacter triv = trivial_character();
    for (const Rat& q : exact_grid(opts)) {
        ExactCtx ctx = exact_ctx(q);
        for (long long xi = 0; xi <= 2; ++xi) {
            Rat x(xi);
            for (long long n = 0; n <= 6; ++n) {
                Rat plain = euler_q<Rat>(n, x, ctx).value;
                Rat order2 = euler_q_order<Rat>(n, x, ctx, 2).value;
                C.exact(nm("order r=1 == plain", n, x, q),
                        euler_q_order<Rat>(n, x, ctx, 1).value - plain);
                C.exact(nm("barnes[1] == plain", n, x, q),
                        euler_barnes<Rat>(n, x, ctx, {1}).value - plain);
                C.exact(nm("hr(1,1) == plain", n, x, q),
                        euler_q_hr<Rat>(n, x, ctx, 1, 1).value - plain);
                C.exact(nm("barnes[1,1] == order r=2", n, x, q),
                        euler_barnes<Rat>(n, x, ctx, {1, 1}).value - order2);
                C.exact(nm("barnes[1,1,1] == order r=3", n, x, q),
                        euler_barnes<Rat>(n, x, ctx, {1, 1, 1}).value -
                            euler_q_order<Rat>(n, x, ctx, 3).value);
                C.exact(nm("twist a=0 == barnes[1,2]", n, x, q),
                        euler_barnes_twisted<Rat>(n, x, ctx, {1, 2}, {0, 0}).value -
                            euler_barnes<Rat>(n, x, ctx, {1, 2}).value);
                C.exact(nm("twist a=0 == barnes[2,3,1]", n, x, q),
                        euler_barnes_twisted<Rat>(n, x, ctx, {2, 3, 1}, {0, 0, 0}).value -
                            euler_barnes<Rat>(n, x, ctx, {2, 3, 1}).value);
                C.exact(nm("chi trivial == plain", n, x, q),
                        closed_form<Rat>(family_chi(triv), n, x, ctx).value - plain);
                C.exact(nm("chi_order trivial r=2 == order r=2", n, x, q),
                        euler_chi_order<Rat>(n, x, ctx, triv, 2).value - order2);
                C.exact(nm("chi_twist trivial == twist", n, x, q),
                        euler_chi_barnes_twisted<Rat>(n, x, ctx, triv, {1, 2}, {1, 1}).value -
                            euler_barnes_twisted<Rat>(n, x, ctx, {1, 2}, {1, 1}).value);
                C.exact(nm("chi_order quad3 r=1 == chi quad3", n, x, q),
                        euler_chi_order<Rat>(n, x, ctx, q3, 1).value -
                            closed_form<Rat>(family_chi(q3), n, x, ctx).value);
                C.exact(nm("chi_order quad5 r=1 == chi quad5", n, x, q),
                        euler_chi_order<Rat>(n, x, ctx, q5, 1).value -
                            closed_form<Rat>(family_chi(q5), n, x, ctx).value);
            }
        }
    }
}

void suite_symmetry(Collector& C, const SuiteOptions& opts) {
    DirichletCharacter q3 = quadratic_character(3);
    for (const Rat& q : exact_grid(opts)) {
        ExactCtx ctx = exact_ctx(q);
        for (long long xi = 0; xi <= 2; ++xi) {
            Rat x(xi);
            for (long long n = 0; n <= 6; ++n) {
                C.exact(nm("barnes [1,2]~[2,1]", n, x, q),
                        euler_barnes<Rat>(n, x, ctx, {1, 2}).value -
                            euler_barnes<Rat>(n, x, ctx, {2, 1}).value);
                C.exact(nm("barnes [1,2,3]~[3,1,2]", n, x, q),
                        euler_barnes<Rat>(n, x, ctx, {1, 2, 3}).value -
                            euler_barnes<Rat>(n, x, ctx, {3, 1, 2}).value);
                C.exact(nm("barnes [1,2,3]~[2,3,1]", n, x, q),
                        euler_barnes<Rat>(n, x, ctx, {1, 2, 3}).value -
                            euler_barnes<Rat>(n, x, ctx, {2, 3, 1}).value);
                C.exact(nm("twist pairs (1,3)(2,1)~(2,1)(1,3)", n, x, q),
                        euler_barnes_twisted<Rat>(n, x, ctx, {1, 2}, {3, 1}).value -
                            euler_barnes_twisted<Rat>(n, x, ctx, {2, 1}, {1, 3}).value);
                C.exact(nm("twist pairs (2,1)(2,3)~(2,3)(2,1)", n, x, q),
                        euler_barnes_twisted<Rat>(n, x, ctx, {2, 2}, {1, 3}).value -
                            euler_barnes_twisted<Rat>(n, x, ctx, {2, 2}, {3, 1}).value);
                C.exact(nm("chi twist pairs swap", n, x, q),
                        euler_chi_barnes_twisted<Rat>(n, x, ctx, q3, {1, 2}, {1, 2}).value -
                            euler_chi_barnes_twisted<Rat>(n, x, ctx, q3, {2, 1}, {2, 1}).value);
            }
        }
    }
}

void suite_distribution(Collector& C, const SuiteOptions& opts) {
    DirichletCharacter q3 = quadratic_character(3);
    DirichletCharacter q5 = quadratic_character(5);
    DirichletCharacter p3 = parse_character("3:0,1,1");
    DirichletCharacter triv = trivial_character();
    const std::vector<std::pair<long long, int>> hrs = {{1, 1}, {2, 1}, {3, 2}};
    for (const Rat& q : exact_grid(opts)) {
        ExactCtx ctx = exact_ctx(q);
        for (long long xi = 0; xi <= 1; ++xi) {
            Rat x(xi);
            for (long long n = 0; n <= 4; ++n) {
                for (long long f : {1, 3, 5})
                    C.exact(nm("plain split f=" + std::to_string(f), n, x, q),
                            euler_plain_distribution<Rat>(n, x, ctx, f).value -
                                euler_q<Rat>(n, x, ctx).value);
                int ci = 0;
                for (const DirichletCharacter& chi : {triv, q3, q5, p3})
                    C.exact(nm("chi split #" + std::to_string(ci++), n, x, q),
                            euler_chi<Rat>(n, x, ctx, chi).value -
                                closed_form<Rat>(family_chi(chi), n, x, ctx).value);
                for (auto [h, r] : hrs)
                    for (long long f : {1, 3, 5})
                        C.exact(nm("hr split h=" + std::to_string(h) + " r=" +
                                       std::to_string(r) + " f=" + std::to_string(f),
                                   n, x, q),
                                distribution_residual_hr<Rat>(n, x, ctx, h, r, f));
            }
        }
    }
}

void suite_recurrence(Collector& C, const SuiteOptions& opts) {
    DirichletCharacter q3 = quadratic_character(3);
    DirichletCharacter q5 = quadratic_character(5);
    DirichletCharacter triv = trivial_character();
    for (const Rat& q : exact_grid(opts)) {
        ExactCtx ctx = exact_ctx(q);
        int ci = 0;
        for (const DirichletCharacter& chi : {triv, q3, q5}) {
            std::string head = "recurrence chi#" + std::to_string(ci++);
            for (long long m = 0; m <= 5; ++m)
                for (long long n = 1; n <= 3; ++n)
                    C.exact(nm(head + " m=" + std::to_string(m), n, Rat(0), q),
                            recurrence_residual<Rat>(m, n, ctx, chi));
        }
    }
}

void suite_series(Collector& C, const SuiteOptions& opts) {
    DirichletCharacter q3 = quadratic_character(3);
    DirichletCharacter q5 = quadratic_character(5);
    double tol = float_tol(opts, 1e-10);
    std::vector<FamilySpec> specs = {
        family_barnes_twisted({1}, {1}),
        family_barnes_twisted({1}, {2}),
        family_barnes_twisted({1, 2}, {1, 1}),
        family_barnes_twisted({2, 3}, {2, 1}),
        family_barnes_twisted({1, 2, 3}, {1, 1, 1}),
        family_chi_barnes_twisted(q3, {1, 2}, {1, 1}),
        family_chi_barnes_twisted(q5, {1}, {1}),
        family_hr(2, 1),
        family_hr(3, 1),
        family_hr(3, 2),
        family_hr(4, 3),
    };
    std::vector<Rat> qs = opts.qs.empty() ? std::vector<Rat>{Rat(1, 2), Rat(3, 5)} : opts.qs;
    for (const Rat& q : qs) {
        ExactCtx ectx = exact_ctx(q);
        FloatCtx fctx = float_ctx_of(q);
        for (long long xi = 0; xi <= 1; ++xi) {
            Rat x(xi);
            for (long long n = 0; n <= 4; ++n) {
                for (const FamilySpec& spec : specs) {
                    double ve = closed_form<Rat>(spec, n, x, ectx).value.convert_to<double>();
                    Evaluation<Approx> sv = series_value(spec, n, x, fctx, tol);
                    double diff = std::abs(sv.value.z - C64(ve, 0.0));
                    C.close(nm("series " + spec.describe(), n, x, q), diff, tol);
                    C.flag(nm("series bound covers " + spec.describe(), n, x, q),
                           diff <= sv.error_bound + 1e-14 * (1.0 + std::abs(ve)),
                           "bound=" + fmt(sv.error_bound));
                }
                const std::vector<std::pair<long long, int>> qb_hrs = {
                    {2, 1}, {3, 1}, {3, 2}, {4, 3}};
                for (auto [h, r] : qb_hrs) {
                    double ve =
                        euler_q_hr<Rat>(n, x, ectx, h, r).value.convert_to<double>();
                    Evaluation<Approx> sv = series_hr_qbinomial(n, x, fctx, h, r, tol);
                    C.close(nm("series qbinomial h=" + std::to_string(h) + " r=" +
                                   std::to_string(r),
                               n, x, q),
                            std::abs(sv.value.z - C64(ve, 0.0)), tol);
                }
            }
        }
        // Reported tail bound must cover the change under deeper truncation.
        for (const FamilySpec& spec :
             {specs[2], specs[5], family_hr(3, 2)})
            for (long long M : {10, 20}) {
                Evaluation<Approx> vM = series_direct_truncated(spec, 3, Rat(1), fctx, M);
                Evaluation<Approx> vM4 = series_direct_truncated(spec, 3, Rat(1), fctx, M + 4);
                double change = std::abs(vM4.value.z - vM.value.z);
                C.flag("tail bound covers refinement " + spec.describe() + " M=" +
                           std::to_string(M) + " q=" + rat_str(q),
                       change <= vM.error_bound,
                       "change=" + fmt(change) + " bound=" + fmt(vM.error_bound));
            }
    }
}

void suite_abel(Collector& C, const SuiteOptions& opts) {
    DirichletCharacter q3 = quadratic_character(3);
    DirichletCharacter q5 = quadratic_character(5);
    double tol = float_tol(opts, 1e-6);
    std::vector<FamilySpec> specs = {family_plain(),         family_order(2),
                                     family_chi(q3),         family_chi(q5),
                                     family_chi_order(q3, 2), family_chi_order(q5, 2)};
    std::vector<Rat> qs = opts.qs.empty() ? std::vector<Rat>{Rat(1, 2), Rat(1, 3)} : opts.qs;
    for (const Rat& q : qs) {
        ExactCtx ectx = exact_ctx(q);
        FloatCtx fctx = float_ctx_of(q);
        for (long long xi = 0; xi <= 1; ++xi) {
            Rat x(xi);
            for (long long n = 0; n <= 4; ++n)
                for (const FamilySpec& spec : specs) {
                    double ve = closed_form<Rat>(spec, n, x, ectx).value.convert_to<double>();
                    Evaluation<Approx> av = series_value(spec, n, x, fctx, tol);
                    double diff = std::abs(av.value.z - C64(ve, 0.0));
                    C.close(nm("abel " + spec.describe(), n, x, q), diff, tol,
                            "est=" + fmt(av.error_bound));
                    C.flag(nm("abel bound " + spec.describe(), n, x, q),
                           diff <= av.error_bound + 1e-12 && av.error_bound <= tol,
                           "diff=" + fmt(diff) + " est=" + fmt(av.error_bound));
                }
        }
    }
}

void suite_padic(Collector& C, const SuiteOptions&) {
    const std::vector<std::pair<long long, int>> primes = {{3, 6}, {5, 5}, {7, 4}};
    for (auto [p, M] : primes) {
        PAdicContext ctx = padic_context(p, M);
        for (long long qi : {1 + p, 1 + 2 * p}) {
            Rat q(qi);
            ExactCtx ectx = exact_ctx(q);
            for (long long x = 0; x <= 2; ++x)
                for (long long n = 0; n <= 5; ++n) {
                    PAdicNumber mom = moment(ctx, n, x, q);
                    PAdicNumber cf =
                        padic_from_rational(ctx, euler_q<Rat>(n, Rat(x), ectx).value);
                    C.flag("moment p=" + std::to_string(p) + " M=" + std::to_string(M) +
                               " q=" + std::to_string(qi) + " n=" + std::to_string(n) +
                               " x=" + std::to_string(x),
                           mom.residue == cf.residue,
                           "moment=" + std::to_string(mom.residue) +
                               " closed=" + std::to_string(cf.residue));
                }
        }
    }
    for (long long p : {3, 5}) {
        PAdicContext ctx = padic_context(p, 4);
        Rat q(1 + p);
        ExactCtx ectx = exact_ctx(q);
        for (long long x = 0; x <= 1; ++x)
            for (long long n = 0; n <= 3; ++n) {
                PAdicNumber m11 = moment_multi(ctx, n, x, q, {1, 1});
                PAdicNumber c11 =
                    padic_from_rational(ctx, euler_q_order<Rat>(n, Rat(x), ectx, 2).value);
                C.flag("iterated moment w=[1,1] p=" + std::to_string(p) + " n=" +
                           std::to_string(n) + " x=" + std::to_string(x),
                       m11.residue == c11.residue,
                       std::to_string(m11.residue) + " vs " + std::to_string(c11.residue));
                PAdicNumber m12 = moment_multi(ctx, n, x, q, {1, 2});
                PAdicNumber c12 =
                    padic_from_rational(ctx, euler_barnes<Rat>(n, Rat(x), ectx, {1, 2}).value);
                C.flag("iterated moment w=[1,2] p=" + std::to_string(p) + " n=" +
                           std::to_string(n) + " x=" + std::to_string(x),
                       m12.residue == c12.residue,
                       std::to_string(m12.residue) + " vs " + std::to_string(c12.residue));
            }
    }
    for (long long p : {3, 5, 7}) {
        PAdicContext ctx = padic_context(p, 4);
        const std::vector<std::vector<long long>> polys = {
            {1}, {0, 1}, {0, 0, 1}, {0, 0, 0, 1}, {0, 0, 0, 0, 1}, {2, 1, 0, 3, 1}};
        for (size_t pi = 0; pi < polys.size(); ++pi) {
            auto f = [&, coeffs = polys[pi]](long long y) {
                long long acc = 0, pw = 1 % ctx.pM;
                for (long long c : coeffs) {
                    acc = (acc + c % ctx.pM * pw) % ctx.pM;
                    pw = static_cast<long long>(
                        static_cast<unsigned long long>(pw) *
                        static_cast<unsigned long long>(((y % ctx.pM) + ctx.pM) % ctx.pM) %
                        static_cast<unsigned long long>(ctx.pM));
                }
                return PAdicNumber{ctx, acc};
            };
            for (long long n = 1; n <= 3; ++n) {
                PAdicNumber res = shift_identity_residual(ctx, f, n);
                C.flag("shift identity p=" + std::to_string(p) + " poly#" +
                           std::to_string(pi) + " n=" + std::to_string(n),
                       res.residue == 0, "residual=" + std::to_string(res.residue));
            }
        }
        auto one = [&](long long) { return PAdicNumber{ctx, 1 % ctx.pM}; };
        for (int N = 1; N <= 3; ++N)
            C.flag("level integral of 1 p=" + std::to_string(p) + " N=" + std::to_string(N),
                   fermionic_integral_level(ctx, one, Rat(1 + p), N).residue == 1 % ctx.pM);
    }
    {
        PAdicContext ctx = padic_context(3, 6);
        auto ident = [&](long long y) { return padic_from_int(ctx, y); };
        long long expected[3] = {1, 4, 13};
        for (int N = 1; N <= 3; ++N)
            C.flag("level sums of y at q=1, p=3",
                   fermionic_integral_level(ctx, ident, Rat(1), N).residue ==
                       expected[N - 1] % ctx.pM,
                   "N=" + std::to_string(N));
        PAdicNumber lim = fermionic_integral(ctx, ident, Rat(1));
        PAdicNumber half = padic_from_rational(ctx, Rat(-1, 2));
        C.flag("integral of y at q=1 equals -1/2 mod 3^6", lim.residue == half.residue,
               std::to_string(lim.residue) + " vs " + std::to_string(half.residue));
    }
}

void suite_q_limit(Collector& C, const SuiteOptions&) {
    const auto& classical = classical_euler_at_zero();
    for (long long n = 0; n <= 4; ++n) {
        std::vector<Rat> h, v;
        Rat scale(1, 10);
        Rat hk(1, 100);
        for (int k = 3; k <= 6; ++k) {
            hk *= scale; // 10^{-k}
            h.push_back(hk);
            Rat qk = Rat(1) - hk;
            v.push_back(euler_q<Rat>(n, Rat(0), exact_ctx(qk)).value);
        }
        // Neville extrapolation of the samples to h = 0, exactly.
        std::vector<Rat> T = v;
        for (size_t j = 1; j < T.size(); ++j)
            for (size_t i = T.size() - 1; i >= j; --i)
                T[i] = (h[i - j] * T[i] - h[i] * T[i - 1]) / (h[i - j] - h[i]);
        double got = T.back().convert_to<double>();
        double want = classical[static_cast<size_t>(n)].convert_to<double>();
        C.close("q->1 limit n=" + std::to_string(n), std::abs(got - want), 1e-6,
                "limit=" + fmt(got));
    }
}

void suite_interpolation(Collector& C, const SuiteOptions& opts) {
    DirichletCharacter q3 = quadratic_character(3);
    double tol = float_tol(opts, 1e-8);
    struct Cfg {
        std::vector<Rat> w, a;
        std::optional<DirichletCharacter> chi;
        std::string label;
    };
    std::vector<Cfg> cfgs = {
        {{Rat(1)}, {Rat(1)}, std::nullopt, "w=[1] a=[1]"},
        {{Rat(1)}, {Rat(2)}, std::nullopt, "w=[1] a=[2]"},
        {{Rat(1), Rat(2)}, {Rat(1), Rat(1)}, std::nullopt, "w=[1,2] a=[1,1]"},
        {{Rat(1), Rat(2)}, {Rat(2), Rat(1)}, std::nullopt, "w=[1,2] a=[2,1]"},
        {{Rat(2), Rat(2)}, {Rat(2), Rat(2)}, std::nullopt, "w=[2,2] a=[2,2]"},
        {{Rat(1)}, {Rat(1)}, q3, "chi3 w=[1] a=[1]"},
        {{Rat(1), Rat(2)}, {Rat(1), Rat(1)}, q3, "chi3 w=[1,2] a=[1,1]"},
    };
    double worst_stated = 0.0;
    for (const Cfg& cfg : cfgs)
        for (const Rat& q : {Rat(1, 2), Rat(1, 3)})
            for (long long xi = 1; xi <= 2; ++xi)
                for (long long n = 0; n <= 4; ++n) {
                    ZetaRequest req;
                    req.x = Rat(xi);
                    req.q = q;
                    req.w = cfg.w;
                    req.a = cfg.a;
                    req.chi = cfg.chi;
                    req.tol = tol;
                    InterpolationReport rep = interpolation_check(n, req);
                    worst_stated = std::max(worst_stated, rep.resid_stated);
                    C.close(nm("interp " + cfg.label, n, Rat(xi), q), rep.resid_derived, tol,
                            "stated-form residual=" + fmt(rep.resid_stated));
                }
    C.flag("stated-form residual recorded", true,
           "max over grid=" + fmt(worst_stated) + " (derived 2^-r factor used for pass)");
}

void suite_mellin(Collector& C, const SuiteOptions& opts) {
    double tol = float_tol(opts, 1e-6);
    struct Cfg {
        std::vector<Rat> w, a;
        Rat q;
        std::string label;
    };
    std::vector<Cfg> cfgs = {
        {{Rat(1)}, {Rat(1)}, Rat(1, 2), "r=1 q=1/2"},
        {{Rat(1)}, {Rat(1)}, Rat(1, 3), "r=1 q=1/3"},
        {{Rat(1), Rat(2)}, {Rat(1), Rat(1)}, Rat(1, 2), "r=2 q=1/2"},
    };
    for (const Cfg& cfg : cfgs)
        for (C64 s : {C64(1.0, 0.0), C64(2.0, 0.0), C64(1.5, 0.0)}) {
            ZetaRequest req;
            req.x = Rat(1);
            req.q = cfg.q;
            req.w = cfg.w;
            req.a = cfg.a;
            req.tol = 1e-10;
            MellinReport rep = mellin_check(s, req);
            std::ostringstream os;
            os << "mellin " << cfg.label << " s=" << s.real();
            C.close(os.str(), rep.difference, tol,
                    "shells=" + std::to_string(rep.shells) + " terms=" +
                        std::to_string(rep.terms) + " quad_err=" + fmt(rep.quad_error));
        }
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "two-path", "reductions", "symmetry",      "distribution", "recurrence", "series",
        "abel",     "padic",      "q-limit", "interpolation", "mellin"};
    return names;
}

bool is_suite(const std::string& name) {
    for (const auto& s : suite_names())
        if (s == name) return true;
    return false;
}

const std::array<Rat, 5>& classical_euler_at_zero() {
    static const std::array<Rat, 5> values = {Rat(1), Rat(-1, 2), Rat(0), Rat(1, 4), Rat(0)};
    return values;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
    if (!is_suite(name)) fail(errc::invalid_request, "unknown suite '" + name + "'");
    Collector C;
    C.res.suite = name;
    auto t0 = std::chrono::steady_clock::now();
    try {
        if (name == "two-path")
            suite_two_path(C, opts);
        else if (name == "reductions")
            suite_reductions(C, opts);
        else if (name == "symmetry")
            suite_symmetry(C, opts);
        else if (name == "distribution")
            suite_distribution(C, opts);
        else if (name == "recurrence")
            suite_recurrence(C, opts);
        else if (name == "series")
            suite_series(C, opts);
        else if (name == "abel")
            suite_abel(C, opts);
        else if (name == "padic")
            suite_padic(C, opts);
        else if (name == "q-limit")
            suite_q_limit(C, opts);
        else if (name == "interpolation")
            suite_interpolation(C, opts);
        else if (name == "mellin")
            suite_mellin(C, opts);
    } catch (const Error& e) {
        C.flag("suite aborted", false, std::string(errc_name(e.code())) + ": " + e.what());
    } catch (const std::exception& e) {
        C.flag("suite aborted", false, e.what());
    }
    C.res.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return C.res;
}

} // namespace qeuler

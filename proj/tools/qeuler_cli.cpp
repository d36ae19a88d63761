#include <algorithm>
#include <complex>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qeuler/errors.hpp"
#include "qeuler/families.hpp"
#include "qeuler/io.hpp"
#include "qeuler/padic.hpp"
#include "qeuler/qcore.hpp"
#include "qeuler/verify.hpp"
#include "qeuler/zeta.hpp"

namespace {

using namespace qeuler;
using nlohmann::json;

int usage_error(const std::string& msg) {
    json j;
    j["error"] = errc_name(errc::invalid_request);
    j["detail"] = msg;
    std::cerr << j.dump() << "\n";
    return 2;
}

int error_record(const Error& e) {
    json j;
    j["error"] = errc_name(e.code());
    j["detail"] = e.what();
    if (e.code() == errc::invalid_request) {
        std::cerr << j.dump() << "\n";
        return 2;
    }
    std::cout << j.dump() << "\n";
    return 3;
}

struct ComputeOpts {
    std::string family;
    int r = 0;
    long long h = 1;
    std::string w, a, chr;
    std::string n, x = "0", q;
    std::string method = "closed";
    std::string output = "json";
    double tol = 1e-10;
    bool r_set = false, h_set = false, w_set = false, a_set = false, chr_set = false;
};

FamilySpec build_family(const ComputeOpts& o) {
    FamilyKind kind = family_kind_from_name(o.family);
    bool needs_r = kind == FamilyKind::order_r || kind == FamilyKind::chi_order_r ||
                   kind == FamilyKind::extended_hr;
    bool needs_h = kind == FamilyKind::extended_hr;
    bool needs_w = kind == FamilyKind::barnes || kind == FamilyKind::barnes_twisted ||
                   kind == FamilyKind::chi_barnes_twisted;
    bool needs_a = kind == FamilyKind::barnes_twisted || kind == FamilyKind::chi_barnes_twisted;
    bool needs_chi = kind == FamilyKind::chi || kind == FamilyKind::chi_order_r ||
                     kind == FamilyKind::chi_barnes_twisted;
    if (o.r_set && !needs_r) fail(errc::invalid_request, "--r does not apply to " + o.family);
    if (o.h_set && !needs_h) fail(errc::invalid_request, "--h does not apply to " + o.family);
    if (o.w_set && !needs_w) fail(errc::invalid_request, "--w does not apply to " + o.family);
    if (o.a_set && !needs_a) fail(errc::invalid_request, "--a does not apply to " + o.family);
    if (o.chr_set && !needs_chi)
        fail(errc::invalid_request, "--char does not apply to " + o.family);
    if (needs_w && !o.w_set) fail(errc::invalid_request, o.family + " needs --w");
    if (needs_a && !o.a_set) fail(errc::invalid_request, o.family + " needs --a");
    if (needs_chi && !o.chr_set) fail(errc::invalid_request, o.family + " needs --char");
    int r = o.r_set ? o.r : 1;
    switch (kind) {
        case FamilyKind::plain:
            return family_plain();
        case FamilyKind::order_r:
            return family_order(r);
        case FamilyKind::extended_hr:
            return family_hr(o.h, r);
        case FamilyKind::barnes:
            return family_barnes(parse_int_list(o.w));
        case FamilyKind::barnes_twisted:
            return family_barnes_twisted(parse_int_list(o.w), parse_int_list(o.a));
        case FamilyKind::chi:
            return family_chi(parse_character(o.chr));
        case FamilyKind::chi_order_r:
            return family_chi_order(parse_character(o.chr), r);
        case FamilyKind::chi_barnes_twisted:
            return family_chi_barnes_twisted(parse_character(o.chr), parse_int_list(o.w),
                                             parse_int_list(o.a));
    }
    fail(errc::invalid_request, "unknown family kind");
}

int cmd_compute(const ComputeOpts& o) {
    FamilySpec spec;
    std::vector<long long> ns;
    std::vector<Rat> xs, qs;
    bool csv = false;
    try {
        spec = build_family(o);
        if (o.n.empty()) fail(errc::invalid_request, "--n is required");
        if (o.q.empty()) fail(errc::invalid_request, "--q is required");
        ns = parse_range(o.n);
        xs = parse_rat_list(o.x);
        qs = parse_rat_list(o.q);
        if (o.method != "closed" && o.method != "series" && o.method != "abel")
            fail(errc::invalid_request, "--method must be closed, series or abel");
        if (o.output != "json" && o.output != "csv")
            fail(errc::invalid_request, "--output must be json or csv");
        csv = o.output == "csv";
        for (const Rat& q : qs) {
            if (o.method == "closed" && q == 1)
                fail(errc::invalid_request, "q=1 invalid in exact mode");
            if (o.method == "closed" && q == 0)
                fail(errc::invalid_request, "q=0 invalid in exact mode");
            if (o.method != "closed" && !(q > 0 && q < 1))
                fail(errc::invalid_request, "series methods need q in (0,1)");
        }
        for (long long n : ns)
            if (n < 0) fail(errc::invalid_request, "--n must be nonnegative");
    } catch (const Error& e) {
        return usage_error(e.what());
    }
    bool exact_capable = !spec.chi || spec.chi->real_valued();
    std::vector<std::string> lines;
    if (csv) lines.push_back(csv_header());
    try {
        for (long long n : ns)
            for (const Rat& x : xs)
                for (const Rat& q : qs) {
                    ResultRecord rec;
                    rec.family = spec.describe();
                    rec.n = n;
                    rec.x = rat_str(x);
                    rec.q = rat_str(q);
                    if (o.method == "closed" && exact_capable && rat_den(x) == 1) {
                        Evaluation<Rat> ev = closed_form<Rat>(spec, n, x, exact_ctx(q));
                        rec.method = method_name(ev.method);
                        rec.exact = true;
                        rec.value = rat_str(ev.value);
                    } else {
                        FloatCtx fctx(approx_from(q));
                        Evaluation<Approx> ev =
                            o.method == "closed" ? closed_form<Approx>(spec, n, x, fctx)
                            : o.method == "series" ? series_value(spec, n, x, fctx, o.tol)
                                                   : series_value_abel(spec, n, x, fctx, o.tol);
                        rec.method = method_name(ev.method);
                        rec.exact = false;
                        rec.re = ev.value.z.real();
                        rec.im = ev.value.z.imag();
                        rec.error_bound = ev.error_bound;
                    }
                    lines.push_back(csv ? to_csv(rec) : to_json(rec));
                }
    } catch (const Error& e) {
        return error_record(e);
    }
    for (const auto& line : lines) std::cout << line << "\n";
    return 0;
}

struct VerifyOpts {
    std::string suite;
    std::string q;
    double tol = 0.0;
};

int cmd_verify(const VerifyOpts& o) {
    SuiteOptions so;
    try {
        if (!is_suite(o.suite)) {
            std::string all;
            for (const auto& s : suite_names()) all += (all.empty() ? "" : ", ") + s;
            fail(errc::invalid_request, "unknown suite '" + o.suite + "'; suites: " + all);
        }
        if (!o.q.empty()) so.qs = parse_rat_list(o.q);
        if (o.tol != 0.0) {
            if (!(o.tol > 0.0)) fail(errc::invalid_request, "--tol must be positive");
            so.tol = o.tol;
        }
    } catch (const Error& e) {
        return usage_error(e.what());
    }
    try {
        SuiteResult res = run_suite(o.suite, so);
        for (const CaseResult& c : res.cases) {
            std::cout << (c.pass ? "PASS " : "FAIL ") << c.name
                      << " residual=" << format_double(c.residual);
            if (!c.note.empty()) std::cout << " [" << c.note << "]";
            std::cout << "\n";
        }
        std::cout << "suite " << res.suite << ": "
                  << (static_cast<long long>(res.cases.size()) - res.failed) << "/"
                  << res.cases.size() << " cases passed, max_residual="
                  << format_double(res.max_residual) << ", " << format_double(res.seconds)
                  << "s\n";
        return res.pass ? 0 : 1;
    } catch (const Error& e) {
        return error_record(e);
    }
}

struct ZetaOpts {
    std::string s = "2";
    std::string x = "1", q = "1/2", w = "1", a = "1", chr;
    double tol = 1e-10;
    std::string output = "json";
};

ZetaRequest build_request(const ZetaOpts& o, bool with_chi) {
    ZetaRequest req;
    req.s = parse_complex(o.s);
    req.x = rat_parse(o.x);
    req.q = rat_parse(o.q);
    req.w = parse_rat_list(o.w);
    req.a = parse_rat_list(o.a);
    req.tol = o.tol;
    if (with_chi) {
        if (o.chr.empty()) fail(errc::invalid_request, "lfun needs --char");
        req.chi = parse_character(o.chr);
    } else if (!o.chr.empty()) {
        fail(errc::invalid_request, "zeta takes no --char; use lfun");
    }
    return req;
}

std::string request_label(const ZetaRequest& req, const std::string& head) {
    std::string out = head + "[w=";
    for (size_t i = 0; i < req.w.size(); ++i) out += (i ? "," : "") + rat_str(req.w[i]);
    out += ";a=";
    for (size_t i = 0; i < req.a.size(); ++i) out += (i ? "," : "") + rat_str(req.a[i]);
    if (req.chi) out += ";chi=" + format_character(*req.chi);
    return out + "]";
}

int cmd_zeta(const ZetaOpts& o, bool with_chi) {
    ZetaRequest req;
    try {
        req = build_request(o, with_chi);
        if (o.output != "json" && o.output != "csv")
            fail(errc::invalid_request, "--output must be json or csv");
    } catch (const Error& e) {
        return usage_error(e.what());
    }
    try {
        Approx v = with_chi ? l_multiple(req) : zeta_multiple(req);
        ResultRecord rec;
        rec.family = request_label(req, with_chi ? "l" : "zeta");
        rec.n = 0;
        rec.x = rat_str(req.x);
        rec.q = rat_str(req.q);
        rec.method = "series_direct";
        rec.exact = false;
        rec.re = v.z.real();
        rec.im = v.z.imag();
        rec.error_bound = v.err;
        if (o.output == "csv")
            std::cout << csv_header() << "\n" << to_csv(rec) << "\n";
        else {
            json j = json::parse(to_json(rec));
            j["s_re"] = req.s.real();
            j["s_im"] = req.s.imag();
            std::cout << j.dump() << "\n";
        }
        return 0;
    } catch (const Error& e) {
        return error_record(e);
    }
}

struct InterpOpts {
    std::string n = "0..4";
    ZetaOpts z;
};

int cmd_interp(const InterpOpts& o) {
    std::vector<long long> ns;
    ZetaRequest req;
    try {
        ns = parse_range(o.n);
        ZetaOpts zo = o.z;
        zo.s = "0"; // unused; s is set per n
        req = build_request(zo, !o.z.chr.empty());
        req.tol = o.z.tol;
    } catch (const Error& e) {
        return usage_error(e.what());
    }
    bool all_pass = true;
    try {
        for (long long n : ns) {
            InterpolationReport rep = interpolation_check(n, req);
            json j;
            j["check"] = "interpolation";
            j["n"] = rep.n;
            j["zeta_re"] = rep.zeta_value.real();
            j["zeta_im"] = rep.zeta_value.imag();
            j["family_re"] = rep.family_value.real();
            j["family_im"] = rep.family_value.imag();
            j["ratio_re"] = rep.ratio.real();
            j["ratio_im"] = rep.ratio.imag();
            j["resid_derived"] = rep.resid_derived;
            j["resid_stated"] = rep.resid_stated;
            j["tol"] = rep.tol;
            j["pass"] = rep.pass;
            std::cout << j.dump() << "\n";
            all_pass = all_pass && rep.pass;
        }
    } catch (const Error& e) {
        return error_record(e);
    }
    return all_pass ? 0 : 1;
}

int cmd_mellin(const ZetaOpts& o) {
    ZetaRequest req;
    std::complex<double> s;
    try {
        req = build_request(o, !o.chr.empty());
        s = parse_complex(o.s);
    } catch (const Error& e) {
        return usage_error(e.what());
    }
    try {
        MellinReport rep = mellin_check(s, req);
        json j;
        j["check"] = "mellin";
        j["s_re"] = rep.s.real();
        j["s_im"] = rep.s.imag();
        j["quad_re"] = rep.quadrature.real();
        j["quad_im"] = rep.quadrature.imag();
        j["series_re"] = rep.series_side.real();
        j["series_im"] = rep.series_side.imag();
        j["difference"] = rep.difference;
        j["quad_error"] = rep.quad_error;
        j["shells"] = rep.shells;
        j["terms"] = rep.terms;
        j["tol"] = rep.tol;
        j["pass"] = rep.pass;
        std::cout << j.dump() << "\n";
        return rep.pass ? 0 : 1;
    } catch (const Error& e) {
        return error_record(e);
    }
}

struct PadicOpts {
    long long p = 3;
    int M = 4;
    std::string n, x = "0", q, w;
    int n_max = 12;
};

int cmd_padic(const PadicOpts& o) {
    PAdicContext ctx;
    std::vector<long long> ns, xs, w;
    Rat q;
    try {
        ctx = padic_context(o.p, o.M);
        q = o.q.empty() ? Rat(1 + o.p) : rat_parse(o.q);
        if (!o.n.empty()) ns = parse_range(o.n);
        xs = parse_range(o.x);
        if (!o.w.empty()) w = parse_int_list(o.w);
    } catch (const Error& e) {
        return usage_error(e.what());
    }
    if (ns.empty()) {
        VerifyOpts vo;
        vo.suite = "padic";
        return cmd_verify(vo);
    }
    bool all_match = true;
    try {
        ExactCtx ectx = exact_ctx(q);
        for (long long n : ns)
            for (long long x : xs) {
                PAdicNumber mom = w.empty() ? moment(ctx, n, x, q, o.n_max)
                                            : moment_multi(ctx, n, x, q, w, o.n_max);
                Rat closed;
                if (w.empty())
                    closed = euler_q<Rat>(n, Rat(x), ectx).value;
                else if (std::all_of(w.begin(), w.end(), [](long long v) { return v == 1; }))
                    closed = euler_q_order<Rat>(n, Rat(x), ectx, static_cast<int>(w.size())).value;
                else
                    closed = euler_barnes<Rat>(n, Rat(x), ectx, w).value;
                PAdicNumber cf = padic_from_rational(ctx, closed);
                bool match = mom.residue == cf.residue;
                all_match = all_match && match;
                json j;
                j["check"] = "padic-moment";
                j["p"] = ctx.p;
                j["M"] = ctx.M;
                j["n"] = n;
                j["x"] = x;
                j["q"] = rat_str(q);
                j["moment"] = mom.residue;
                j["closed_form"] = cf.residue;
                j["match"] = match;
                std::cout << j.dump() << "\n";
            }
    } catch (const Error& e) {
        return error_record(e);
    }
    return all_match ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-Euler families: closed forms, series, p-adic moments, zeta and l values"};
    app.require_subcommand(1);
    int rc = 0;

    ComputeOpts co;
    auto* compute = app.add_subcommand("compute", "evaluate a family on a grid");
    // the math parameter --h below needs the short help flag out of the way
    compute->set_help_flag("--help", "display usage");
    compute->add_option("--family", co.family,
                        "plain, order_r, extended_hr, barnes, barnes_twisted, chi, chi_order_r, "
                        "chi_barnes_twisted")
        ->required();
    auto* opt_r = compute->add_option("--r", co.r, "index count");
    auto* opt_h = compute->add_option("--h", co.h, "extended order parameter");
    auto* opt_w = compute->add_option("--w", co.w, "weights, comma separated");
    auto* opt_a = compute->add_option("--a", co.a, "twists, comma separated");
    auto* opt_c = compute->add_option("--char", co.chr, "trivial, quad:<f>, or f:v0,v1,...");
    compute->add_option("--n", co.n, "degree or range, e.g. 2 or 0..4")->required();
    compute->add_option("--x", co.x, "argument list (rationals)");
    compute->add_option("--q", co.q, "q list (rationals)")->required();
    compute->add_option("--method", co.method, "closed, series, or abel");
    compute->add_option("--tol", co.tol, "series tolerance");
    compute->add_option("--output", co.output, "json or csv");
    compute->callback([&] {
        co.r_set = opt_r->count() > 0;
        co.h_set = opt_h->count() > 0;
        co.w_set = opt_w->count() > 0;
        co.a_set = opt_a->count() > 0;
        co.chr_set = opt_c->count() > 0;
        rc = cmd_compute(co);
    });

    VerifyOpts vo;
    auto* verify = app.add_subcommand("verify", "run an identity suite");
    verify->add_option("suite", vo.suite, "suite name")->required();
    verify->add_option("--q", vo.q, "override exact-grid q values");
    verify->add_option("--tol", vo.tol, "override float tolerance");
    verify->callback([&] { rc = cmd_verify(vo); });

    ZetaOpts zo;
    auto* zeta = app.add_subcommand("zeta", "multiple q-zeta value");
    zeta->add_option("--s", zo.s, "complex s as re or re,im");
    zeta->add_option("--x", zo.x, "argument (rational, positive)");
    zeta->add_option("--q", zo.q, "q (rational in (0,1))");
    zeta->add_option("--w", zo.w, "weights, comma separated rationals");
    zeta->add_option("--a", zo.a, "exponents, comma separated rationals");
    zeta->add_option("--tol", zo.tol, "tail tolerance");
    zeta->add_option("--output", zo.output, "json or csv");
    zeta->callback([&] { rc = cmd_zeta(zo, false); });

    ZetaOpts lo;
    auto* lfun = app.add_subcommand("lfun", "multiple q-l value (twisted)");
    lfun->add_option("--s", lo.s, "complex s as re or re,im");
    lfun->add_option("--x", lo.x, "argument (rational, positive)");
    lfun->add_option("--q", lo.q, "q (rational in (0,1))");
    lfun->add_option("--w", lo.w, "weights, comma separated rationals");
    lfun->add_option("--a", lo.a, "exponents, comma separated rationals");
    lfun->add_option("--char", lo.chr, "character")->required();
    lfun->add_option("--tol", lo.tol, "tail tolerance");
    lfun->add_option("--output", lo.output, "json or csv");
    lfun->callback([&] { rc = cmd_zeta(lo, true); });

    InterpOpts io;
    auto* interp = app.add_subcommand("interp-check", "zeta at -n against the closed form");
    interp->add_option("--n", io.n, "degree or range");
    interp->add_option("--x", io.z.x, "argument (positive integer)");
    interp->add_option("--q", io.z.q, "q (rational in (0,1))");
    interp->add_option("--w", io.z.w, "weights (integers)");
    interp->add_option("--a", io.z.a, "exponents (positive integers)");
    interp->add_option("--char", io.z.chr, "real-valued character");
    interp->add_option("--tol", io.z.tol, "pass tolerance");
    io.z.tol = 1e-8;
    interp->callback([&] { rc = cmd_interp(io); });

    ZetaOpts mo;
    auto* mellin = app.add_subcommand("mellin-check",
                                      "quadrature of the kernel against the truncated series");
    mellin->add_option("--s", mo.s, "complex s, Re s >= 1/2");
    mellin->add_option("--x", mo.x, "argument (rational, positive)");
    mellin->add_option("--q", mo.q, "q (rational in (0,1))");
    mellin->add_option("--w", mo.w, "weights");
    mellin->add_option("--a", mo.a, "exponents (>= 1)");
    mellin->add_option("--char", mo.chr, "optional character");
    mellin->add_option("--tol", mo.tol, "series truncation tolerance");
    mellin->callback([&] { rc = cmd_mellin(mo); });

    PadicOpts po;
    auto* padic = app.add_subcommand("padic-check", "p-adic moments against closed forms");
    padic->add_option("--p", po.p, "odd prime");
    padic->add_option("--prec-M", po.M, "residue precision p^M");
    padic->add_option("--n", po.n, "moment degree or range (omit to run the padic suite)");
    padic->add_option("--x", po.x, "shift list (integers)");
    padic->add_option("--q", po.q, "q (rational, |1-q|_p < 1; default 1+p)");
    padic->add_option("--w", po.w, "weights for the iterated moment");
    padic->add_option("--n-max", po.n_max, "level budget");
    padic->callback([&] { rc = cmd_padic(po); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return rc;
}

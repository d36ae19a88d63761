#include "qeuler/families.hpp"

#include <sstream>

#include "qeuler/errors.hpp"

namespace qeuler {

const char* family_kind_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::plain: return "plain";
        case FamilyKind::order_r: return "order-r";
        case FamilyKind::extended_hr: return "hr";
        case FamilyKind::barnes: return "barnes";
        case FamilyKind::barnes_twisted: return "barnes-twisted";
        case FamilyKind::chi: return "chi";
        case FamilyKind::chi_order_r: return "chi-order";
        case FamilyKind::chi_barnes_twisted: return "chi-barnes-twisted";
    }
    return "?";
}

FamilyKind family_kind_from_name(const std::string& name) {
    if (name == "plain") return FamilyKind::plain;
    if (name == "order-r" || name == "order_r" || name == "order") return FamilyKind::order_r;
    if (name == "hr" || name == "extended-hr" || name == "extended_hr")
        return FamilyKind::extended_hr;
    if (name == "barnes") return FamilyKind::barnes;
    if (name == "barnes-twisted" || name == "barnes_twisted") return FamilyKind::barnes_twisted;
    if (name == "chi") return FamilyKind::chi;
    if (name == "chi-order" || name == "chi_order_r" || name == "chi-order-r")
        return FamilyKind::chi_order_r;
    if (name == "chi-barnes-twisted" || name == "chi_barnes_twisted")
        return FamilyKind::chi_barnes_twisted;
    fail(errc::invalid_request, "unknown family '" + name + "'");
}

const char* method_name(Method m) {
    switch (m) {
        case Method::closed_form: return "closed_form";
        case Method::series_direct: return "series_direct";
        case Method::series_abel: return "series_abel";
        case Method::padic_integral: return "padic_integral";
    }
    return "?";
}

std::string FamilySpec::describe() const {
    std::ostringstream out;
    out << family_kind_name(kind);
    bool uses_w = kind == FamilyKind::barnes || kind == FamilyKind::barnes_twisted ||
                  kind == FamilyKind::chi_barnes_twisted;
    bool uses_a = kind == FamilyKind::barnes_twisted || kind == FamilyKind::chi_barnes_twisted;
    if (kind == FamilyKind::order_r || kind == FamilyKind::chi_order_r) out << "[r=" << r << "]";
    if (kind == FamilyKind::extended_hr) out << "[h=" << h << ",r=" << r << "]";
    if (uses_w) {
        out << "[w=";
        for (size_t j = 0; j < w.size(); ++j) out << (j ? "," : "") << w[j];
        if (uses_a) {
            out << ";a=";
            for (size_t j = 0; j < a.size(); ++j) out << (j ? "," : "") << a[j];
        }
        out << "]";
    }
    if (chi) out << "{chi " << format_character(*chi) << "}";
    return out.str();
}

namespace {

void require_order(int r) {
    if (r < 1) fail(errc::invalid_request, "order r must be >= 1");
}

void require_weights(const std::vector<long long>& w) {
    if (w.empty()) fail(errc::invalid_request, "at least one weight required");
    for (long long wj : w)
        if (wj < 1) fail(errc::invalid_request, "weights must be positive integers");
}

void require_twists(const std::vector<long long>& a, size_t r) {
    if (a.size() != r) fail(errc::invalid_request, "twist list must match the weight list");
    for (long long aj : a)
        if (aj < 0) fail(errc::invalid_request, "twists must be nonnegative integers");
}

} // namespace

FamilySpec family_plain() {
    FamilySpec s;
    s.kind = FamilyKind::plain;
    s.w = {1};
    s.a = {0};
    return s;
}

FamilySpec family_order(int r) {
    require_order(r);
    FamilySpec s;
    s.kind = FamilyKind::order_r;
    s.r = r;
    s.w.assign(static_cast<size_t>(r), 1);
    s.a.assign(static_cast<size_t>(r), 0);
    return s;
}

FamilySpec family_hr(long long h, int r) {
    require_order(r);
    FamilySpec s;
    s.kind = FamilyKind::extended_hr;
    s.r = r;
    s.h = h;
    s.w.assign(static_cast<size_t>(r), 1);
    s.a.assign(static_cast<size_t>(r), 0);
    return s;
}

FamilySpec family_barnes(std::vector<long long> w) {
    require_weights(w);
    FamilySpec s;
    s.kind = FamilyKind::barnes;
    s.r = static_cast<int>(w.size());
    s.a.assign(w.size(), 0);
    s.w = std::move(w);
    return s;
}

FamilySpec family_barnes_twisted(std::vector<long long> w, std::vector<long long> a) {
    require_weights(w);
    require_twists(a, w.size());
    FamilySpec s;
    s.kind = FamilyKind::barnes_twisted;
    s.r = static_cast<int>(w.size());
    s.w = std::move(w);
    s.a = std::move(a);
    return s;
}

FamilySpec family_chi(DirichletCharacter chi) {
    FamilySpec s = family_plain();
    s.kind = FamilyKind::chi;
    s.chi = std::move(chi);
    return s;
}

FamilySpec family_chi_order(DirichletCharacter chi, int r) {
    FamilySpec s = family_order(r);
    s.kind = FamilyKind::chi_order_r;
    s.chi = std::move(chi);
    return s;
}

FamilySpec family_chi_barnes_twisted(DirichletCharacter chi, std::vector<long long> w,
                                     std::vector<long long> a) {
    FamilySpec s = family_barnes_twisted(std::move(w), std::move(a));
    s.kind = FamilyKind::chi_barnes_twisted;
    s.chi = std::move(chi);
    return s;
}

namespace {

// Normalized engine input: value = 2^r (1-base)^{-n} sum_l C(n,l)(-1)^l
// qx^l prod_j G_j(l) with G_j(l) = sum_{b<f} table[b] (-1)^b
// base^{e_j(l) b} / (1 + base^{e_j(l) f}), e_j(l) = l w_j + c_j.
template <class S>
struct Engine {
    long long n = 0;
    S base;
    S qx;
    std::vector<long long> w;
    std::vector<long long> c;
    long long f = 1;
    std::vector<S> table;
    bool pochhammer_flavor = false; // error naming for vanishing denominators

    Engine() : base(scalar_from_int<S>(0)), qx(scalar_from_int<S>(0)) {}
};

template <class S>
S chi_scalar(const DirichletCharacter& chi, long long m);
template <>
Rat chi_scalar<Rat>(const DirichletCharacter& chi, long long m) { return chi.evaluate_exact(m); }
template <>
Approx chi_scalar<Approx>(const DirichletCharacter& chi, long long m) {
    return chi.evaluate_float(m);
}

template <class S>
std::vector<S> ones_table(long long f) {
    return std::vector<S>(static_cast<size_t>(f), scalar_from_int<S>(1));
}

template <class S>
std::vector<S> chi_table(const DirichletCharacter& chi, long long f) {
    std::vector<S> t;
    t.reserve(static_cast<size_t>(f));
    for (long long b = 0; b < f; ++b) t.push_back(chi_scalar<S>(chi, b));
    return t;
}

template <class S>
Engine<S> engine_for(const FamilySpec& spec, long long n, const Rat& x, const QCtx<S>& ctx,
                     long long refine) {
    if (n < 0) fail(errc::invalid_request, "degree n must be nonnegative");
    if (refine < 1 || refine % 2 == 0)
        fail(errc::invalid_request, "block refinement factor must be odd and positive");
    Engine<S> e;
    e.n = n;
    e.base = ctx.q;
    e.qx = detail::q_power(ctx.q, x);
    e.w = spec.w;
    size_t r = spec.w.size();
    e.c.assign(r, 0);
    if (spec.kind == FamilyKind::extended_hr) {
        e.pochhammer_flavor = true;
        for (size_t j = 0; j < r; ++j)
            e.c[j] = spec.h - static_cast<long long>(r) + static_cast<long long>(j);
    } else if (spec.kind == FamilyKind::barnes_twisted ||
               spec.kind == FamilyKind::chi_barnes_twisted) {
        e.c = spec.a;
    }
    long long f0 = spec.chi ? spec.chi->conductor() : 1;
    e.f = f0 * refine;
    if (spec.chi) {
        // Extend the conductor-f table periodically to length f*refine:
        // the sign and power structure absorbs the extension exactly.
        e.table.reserve(static_cast<size_t>(e.f));
        for (long long b = 0; b < e.f; ++b) e.table.push_back(chi_scalar<S>(*spec.chi, b % f0));
    } else {
        e.table = ones_table<S>(e.f);
    }
    return e;
}

template <class S>
S run_engine(const Engine<S>& e) {
    const S one = scalar_from_int<S>(1);
    const S zero = scalar_from_int<S>(0);
    if (exactly_zero(e.base)) fail(errc::invalid_request, "q=0 is outside every family's domain");
    if (e.n >= 1 && exactly_one(e.base))
        fail(errc::q_equals_one_in_exact_mode,
             "closed form divides by (1-q); approach q=1 through the limit procedure");
    size_t r = e.w.size();
    S prefactor = pow_i(scalar_from_int<S>(2), static_cast<long long>(r));
    if (e.n >= 1) prefactor /= pow_i(one - e.base, e.n);
    S sum = zero;
    S qx_power = one;
    for (long long l = 0; l <= e.n; ++l) {
        S blocks = one;
        for (size_t j = 0; j < r; ++j) {
            long long expo = l * e.w[j] + e.c[j];
            S y = pow_i(e.base, expo);
            S denom = one + pow_i(y, e.f);
            if (exactly_zero(denom)) {
                if (e.pochhammer_flavor)
                    fail(errc::vanishing_pochhammer_factor,
                         "1 + q^" + std::to_string(expo * e.f) + " vanishes");
                fail(errc::q_equals_minus_one, "geometric block denominator vanishes");
            }
            S numer = e.table[static_cast<size_t>(e.f - 1)];
            const S neg_y = zero - y;
            for (long long b = e.f - 2; b >= 0; --b)
                numer = numer * neg_y + e.table[static_cast<size_t>(b)];
            blocks *= numer / denom;
        }
        S term = scalar_from_bigint<S>(binomial(e.n, l)) * qx_power * blocks;
        if (l % 2) sum -= term;
        else sum += term;
        qx_power *= e.qx;
    }
    return prefactor * sum;
}

template <class S>
Evaluation<S> wrap(S value) {
    Evaluation<S> ev;
    ev.method = Method::closed_form;
    if constexpr (std::is_same_v<S, Approx>) ev.error_bound = value.err;
    ev.value = std::move(value);
    return ev;
}

// Inner engine for the conductor decompositions: the plain closed form
// in base Q with the point supplied as a ready-made power QX = q^{x+b}.
template <class S>
S plain_with_base(long long n, const S& big_base, const S& qx_value) {
    Engine<S> e;
    e.n = n;
    e.base = big_base;
    e.qx = qx_value;
    e.w = {1};
    e.c = {0};
    e.f = 1;
    e.table = ones_table<S>(1);
    return run_engine(e);
}

template <class S>
S hr_with_base(long long n, long long h, int r, const S& big_base, const S& qx_value) {
    Engine<S> e;
    e.n = n;
    e.base = big_base;
    e.qx = qx_value;
    e.w.assign(static_cast<size_t>(r), 1);
    e.c.resize(static_cast<size_t>(r));
    for (int j = 0; j < r; ++j) e.c[static_cast<size_t>(j)] = h - r + j;
    e.f = 1;
    e.table = ones_table<S>(1);
    e.pochhammer_flavor = true;
    return run_engine(e);
}

} // namespace

template <class S>
Evaluation<S> closed_form(const FamilySpec& spec, long long n, const Rat& x, const QCtx<S>& ctx) {
    return wrap(run_engine(engine_for(spec, n, x, ctx, 1)));
}

template <class S>
Evaluation<S> closed_form_refined(const FamilySpec& spec, long long n, const Rat& x,
                                  const QCtx<S>& ctx, long long refine) {
    if (refine < 3) fail(errc::invalid_request, "refinement factor must be an odd integer >= 3");
    return wrap(run_engine(engine_for(spec, n, x, ctx, refine)));
}

template <class S>
Evaluation<S> euler_q(long long n, const Rat& x, const QCtx<S>& ctx) {
    return closed_form(family_plain(), n, x, ctx);
}

template <class S>
Evaluation<S> euler_q_order(long long n, const Rat& x, const QCtx<S>& ctx, int r) {
    return closed_form(family_order(r), n, x, ctx);
}

template <class S>
Evaluation<S> euler_q_hr(long long n, const Rat& x, const QCtx<S>& ctx, long long h, int r) {
    return closed_form(family_hr(h, r), n, x, ctx);
}

template <class S>
Evaluation<S> euler_barnes(long long n, const Rat& x, const QCtx<S>& ctx,
                           std::vector<long long> w) {
    return closed_form(family_barnes(std::move(w)), n, x, ctx);
}

template <class S>
Evaluation<S> euler_barnes_twisted(long long n, const Rat& x, const QCtx<S>& ctx,
                                   std::vector<long long> w, std::vector<long long> a) {
    return closed_form(family_barnes_twisted(std::move(w), std::move(a)), n, x, ctx);
}

template <class S>
Evaluation<S> euler_chi_order(long long n, const Rat& x, const QCtx<S>& ctx,
                              const DirichletCharacter& chi, int r) {
    return closed_form(family_chi_order(chi, r), n, x, ctx);
}

template <class S>
Evaluation<S> euler_chi_barnes_twisted(long long n, const Rat& x, const QCtx<S>& ctx,
                                       const DirichletCharacter& chi, std::vector<long long> w,
                                       std::vector<long long> a) {
    return closed_form(family_chi_barnes_twisted(chi, std::move(w), std::move(a)), n, x, ctx);
}

template <class S>
Evaluation<S> euler_chi(long long n, const Rat& x, const QCtx<S>& ctx,
                        const DirichletCharacter& chi) {
    if (n < 0) fail(errc::invalid_request, "degree n must be nonnegative");
    long long f = chi.conductor();
    const S one = scalar_from_int<S>(1);
    S big_base = pow_i(ctx.q, f);
    S bracket_f_pow = one;
    if (n >= 1) bracket_f_pow = pow_i(q_bracket<S>(Rat(f), ctx), n);
    S sum = scalar_from_int<S>(0);
    for (long long b = 0; b < f; ++b) {
        S cv = chi_scalar<S>(chi, b);
        if (exactly_zero(cv)) continue;
        S qxb = detail::q_power(ctx.q, x + b);
        S inner = plain_with_base<S>(n, big_base, qxb);
        S term = cv * inner;
        if (b % 2) sum -= term;
        else sum += term;
    }
    return wrap(S(bracket_f_pow * sum));
}

template <class S>
Evaluation<S> euler_plain_distribution(long long n, const Rat& x, const QCtx<S>& ctx,
                                       long long f) {
    if (f < 1 || f % 2 == 0) fail(errc::invalid_request, "decomposition modulus must be odd");
    if (n < 0) fail(errc::invalid_request, "degree n must be nonnegative");
    const S one = scalar_from_int<S>(1);
    S big_base = pow_i(ctx.q, f);
    S bracket_f_pow = one;
    if (n >= 1) bracket_f_pow = pow_i(q_bracket<S>(Rat(f), ctx), n);
    S sum = scalar_from_int<S>(0);
    for (long long b = 0; b < f; ++b) {
        S inner = plain_with_base<S>(n, big_base, detail::q_power(ctx.q, x + b));
        if (b % 2) sum -= inner;
        else sum += inner;
    }
    return wrap(S(bracket_f_pow * sum));
}

template <class S>
Evaluation<S> euler_hr_pochhammer(long long n, const Rat& x, const QCtx<S>& ctx, long long h,
                                  int r) {
    require_order(r);
    if (n < 0) fail(errc::invalid_request, "degree n must be nonnegative");
    if (exactly_zero(ctx.q)) fail(errc::invalid_request, "q=0 is outside every family's domain");
    if (n >= 1 && exactly_one(ctx.q))
        fail(errc::q_equals_one_in_exact_mode,
             "closed form divides by (1-q); approach q=1 through the limit procedure");
    const S one = scalar_from_int<S>(1);
    const S zero = scalar_from_int<S>(0);
    S qx = detail::q_power(ctx.q, x);
    S prefactor = pow_i(scalar_from_int<S>(2), r);
    if (n >= 1) prefactor /= pow_i(one - ctx.q, n);
    S sum = zero;
    S neg_qx_power = one;
    for (long long l = 0; l <= n; ++l) {
        S poch = q_pochhammer<S>(zero - pow_i(ctx.q, h - r + l), r, ctx);
        if (exactly_zero(poch))
            fail(errc::vanishing_pochhammer_factor, "(-q^{h-r+l}; q)_r vanishes at l=" +
                                                        std::to_string(l));
        sum += scalar_from_bigint<S>(binomial(n, l)) * neg_qx_power / poch;
        neg_qx_power *= zero - qx;
    }
    return wrap(S(prefactor * sum));
}

template <class S>
S recurrence_residual(long long m, long long n, const QCtx<S>& ctx,
                      const DirichletCharacter& chi) {
    if (m < 0 || n < 1) fail(errc::invalid_request, "need m >= 0 and n >= 1");
    long long f = chi.conductor();
    FamilySpec spec = family_chi(chi);
    S at_nf = closed_form(spec, m, Rat(n * f), ctx).value;
    S at_zero = closed_form(spec, m, Rat(0), ctx).value;
    S boundary = scalar_from_int<S>(0);
    for (long long l = 0; l < n * f; ++l) {
        S cv = chi_scalar<S>(chi, l);
        if (exactly_zero(cv)) continue;
        S term = cv * pow_i(q_bracket<S>(Rat(l), ctx), m);
        if (((n - 1 - l) % 2 + 2) % 2) boundary -= term;
        else boundary += term;
    }
    boundary = scalar_from_int<S>(2) * boundary;
    S signed_num = (n % 2) ? scalar_from_int<S>(0) - at_zero : at_zero;
    return at_nf - signed_num - boundary;
}

template <class S>
S distribution_residual_hr(long long n, const Rat& x, const QCtx<S>& ctx, long long h, int r,
                           long long f) {
    require_order(r);
    if (f < 1 || f % 2 == 0) fail(errc::invalid_request, "decomposition modulus must be odd");
    if (n < 0) fail(errc::invalid_request, "degree n must be nonnegative");
    S lhs = closed_form(family_hr(h, r), n, x, ctx).value;
    const S one = scalar_from_int<S>(1);
    S big_base = pow_i(ctx.q, f);
    S bracket_f_pow = one;
    if (n >= 1) bracket_f_pow = pow_i(q_bracket<S>(Rat(f), ctx), n);
    std::vector<long long> digits(static_cast<size_t>(r), 0);
    S sum = scalar_from_int<S>(0);
    while (true) {
        long long total = 0, weighted = 0;
        for (int j = 0; j < r; ++j) {
            long long bj = digits[static_cast<size_t>(j)];
            total += bj;
            weighted += (h - (j + 1)) * bj;
        }
        S inner = hr_with_base<S>(n, h, r, big_base, detail::q_power(ctx.q, x + total));
        S term = pow_i(ctx.q, weighted) * inner;
        if (total % 2) sum -= term;
        else sum += term;
        int j = 0;
        for (; j < r; ++j) {
            size_t jj = static_cast<size_t>(j);
            if (++digits[jj] < f) break;
            digits[jj] = 0;
        }
        if (j == r) break;
    }
    return lhs - bracket_f_pow * sum;
}

#define QEULER_INSTANTIATE(S)                                                                    \
    template Evaluation<S> closed_form<S>(const FamilySpec&, long long, const Rat&,             \
                                          const QCtx<S>&);                                      \
    template Evaluation<S> closed_form_refined<S>(const FamilySpec&, long long, const Rat&,     \
                                                  const QCtx<S>&, long long);                   \
    template Evaluation<S> euler_q<S>(long long, const Rat&, const QCtx<S>&);                   \
    template Evaluation<S> euler_q_order<S>(long long, const Rat&, const QCtx<S>&, int);        \
    template Evaluation<S> euler_q_hr<S>(long long, const Rat&, const QCtx<S>&, long long,      \
                                         int);                                                  \
    template Evaluation<S> euler_barnes<S>(long long, const Rat&, const QCtx<S>&,               \
                                           std::vector<long long>);                             \
    template Evaluation<S> euler_barnes_twisted<S>(long long, const Rat&, const QCtx<S>&,       \
                                                   std::vector<long long>,                      \
                                                   std::vector<long long>);                     \
    template Evaluation<S> euler_chi_order<S>(long long, const Rat&, const QCtx<S>&,            \
                                              const DirichletCharacter&, int);                  \
    template Evaluation<S> euler_chi_barnes_twisted<S>(                                         \
        long long, const Rat&, const QCtx<S>&, const DirichletCharacter&,                       \
        std::vector<long long>, std::vector<long long>);                                        \
    template Evaluation<S> euler_chi<S>(long long, const Rat&, const QCtx<S>&,                  \
                                        const DirichletCharacter&);                             \
    template Evaluation<S> euler_plain_distribution<S>(long long, const Rat&, const QCtx<S>&,   \
                                                       long long);                              \
    template Evaluation<S> euler_hr_pochhammer<S>(long long, const Rat&, const QCtx<S>&,        \
                                                  long long, int);                              \
    template S recurrence_residual<S>(long long, long long, const QCtx<S>&,                     \
                                      const DirichletCharacter&);                               \
    template S distribution_residual_hr<S>(long long, const Rat&, const QCtx<S>&, long long,    \
                                           int, long long);

QEULER_INSTANTIATE(Rat)
QEULER_INSTANTIATE(Approx)

#undef QEULER_INSTANTIATE

} // namespace qeuler

#include "qeuler/padic.hpp"

#include <numeric>

#include "qeuler/errors.hpp"

namespace qeuler {

namespace {

constexpr long long kResidueCap = 1LL << 31;
constexpr long long kLevelBudget = 200'000'000;

bool odd_prime(long long p) {
    if (p < 3 || p % 2 == 0) return false;
    for (long long d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

long long mod_mul(long long a, long long b, long long m) {
    return static_cast<long long>(
        static_cast<unsigned long long>(a) * static_cast<unsigned long long>(b) %
        static_cast<unsigned long long>(m));
}

void require_same_ctx(const PAdicContext& a, const PAdicContext& b) {
    if (!(a == b)) fail(errc::invalid_request, "mixed p-adic contexts");
}

long long reduce_bigint(const BigInt& v, long long m) {
    BigInt r = v % m;
    if (r < 0) r += m;
    return static_cast<long long>(r);
}

} // namespace

PAdicContext padic_context(long long p, int M) {
    if (!odd_prime(p)) fail(errc::invalid_request, "p must be an odd prime");
    if (M < 1) fail(errc::invalid_request, "precision M must be at least 1");
    long long pM = 1;
    for (int i = 0; i < M; ++i) {
        if (pM > kResidueCap / p) fail(errc::invalid_request, "p^M exceeds the residue cap 2^31");
        pM *= p;
    }
    return PAdicContext{p, M, pM};
}

long long PAdicNumber::valuation() const {
    if (residue == 0) return ctx.M;
    long long v = 0, r = residue;
    while (r % ctx.p == 0) {
        r /= ctx.p;
        ++v;
    }
    return v;
}

PAdicNumber padic_from_int(const PAdicContext& ctx, long long v) {
    long long r = v % ctx.pM;
    if (r < 0) r += ctx.pM;
    return PAdicNumber{ctx, r};
}

PAdicNumber padic_from_int(const PAdicContext& ctx, const BigInt& v) {
    return PAdicNumber{ctx, reduce_bigint(v, ctx.pM)};
}

PAdicNumber padic_from_rational(const PAdicContext& ctx, const Rat& v) {
    long long num = reduce_bigint(rat_num(v), ctx.pM);
    long long den = reduce_bigint(rat_den(v), ctx.pM);
    return PAdicNumber{ctx, mod_mul(num, mod_inv(den, ctx.pM), ctx.pM)};
}

PAdicNumber operator+(const PAdicNumber& a, const PAdicNumber& b) {
    require_same_ctx(a.ctx, b.ctx);
    return PAdicNumber{a.ctx, (a.residue + b.residue) % a.ctx.pM};
}

PAdicNumber operator-(const PAdicNumber& a, const PAdicNumber& b) {
    require_same_ctx(a.ctx, b.ctx);
    return PAdicNumber{a.ctx, (a.residue - b.residue + a.ctx.pM) % a.ctx.pM};
}

PAdicNumber operator-(const PAdicNumber& a) {
    return PAdicNumber{a.ctx, (a.ctx.pM - a.residue) % a.ctx.pM};
}

PAdicNumber operator*(const PAdicNumber& a, const PAdicNumber& b) {
    require_same_ctx(a.ctx, b.ctx);
    return PAdicNumber{a.ctx, mod_mul(a.residue, b.residue, a.ctx.pM)};
}

PAdicNumber operator/(const PAdicNumber& a, const PAdicNumber& b) {
    require_same_ctx(a.ctx, b.ctx);
    return PAdicNumber{a.ctx, mod_mul(a.residue, mod_inv(b.residue, a.ctx.pM), a.ctx.pM)};
}

long long mod_pow(long long base, unsigned long long e, long long m) {
    long long r = 1 % m, b = ((base % m) + m) % m;
    while (e) {
        if (e & 1) r = mod_mul(r, b, m);
        b = mod_mul(b, b, m);
        e >>= 1;
    }
    return r;
}

long long mod_inv(long long a, long long m) {
    long long r0 = m, r1 = ((a % m) + m) % m, t0 = 0, t1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long r2 = r0 - q * r1;
        long long t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (r0 != 1)
        fail(errc::non_unit_division, "divisor is not a unit mod p^M");
    return ((t0 % m) + m) % m;
}

long long padic_q_bracket(const PAdicContext& ctx, long long q_residue, long long K) {
    if (K < 0) fail(errc::invalid_request, "bracket argument must be nonnegative");
    // Run the binary expansion of K through [2t] = [t](1+q^t),
    // [t+1] = [t] + q^t, carrying q^t along.
    long long m = ctx.pM;
    long long br = 0, qt = 1 % m;
    long long q = ((q_residue % m) + m) % m;
    if (K == 0) return 0;
    int top = 63;
    while (((K >> top) & 1) == 0) --top;
    for (int i = top; i >= 0; --i) {
        if (i != top) {
            br = mod_mul(br, (1 + qt) % m, m);
            qt = mod_mul(qt, qt, m);
        }
        if ((K >> i) & 1) {
            br = (br + qt) % m;
            qt = mod_mul(qt, q, m);
        }
    }
    return br;
}

long long reduce_q(const PAdicContext& ctx, const Rat& q) {
    Rat d = Rat(1) - q;
    if (d != 0 && padic_valuation(d, ctx.p) < 1)
        fail(errc::invalid_request, "q must satisfy |1-q|_p < 1");
    long long num = reduce_bigint(rat_num(q), ctx.pM);
    long long den = reduce_bigint(rat_den(q), ctx.pM);
    return mod_mul(num, mod_inv(den, ctx.pM), ctx.pM);
}

namespace {

long long pow_ll(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

// Raw alternating-weight sum sum_{x<p^N} f(x)(-q)^x, extendable across
// levels, plus the level prefactor (1+q)/(1+q^{p^N}).
struct LevelSum {
    const PAdicContext& ctx;
    long long qr;
    long long x = 0, acc = 0, weight = 1, neg_q;

    LevelSum(const PAdicContext& c, long long q_res) : ctx(c), qr(q_res) {
        neg_q = (ctx.pM - qr % ctx.pM) % ctx.pM;
    }

    void extend_to(long long upto, const std::function<PAdicNumber(long long)>& f) {
        for (; x < upto; ++x) {
            PAdicNumber v = f(x);
            require_same_ctx(v.ctx, ctx);
            acc = (acc + mod_mul(v.residue, weight, ctx.pM)) % ctx.pM;
            weight = mod_mul(weight, neg_q, ctx.pM);
        }
    }

    long long value(int N) const {
        long long m = ctx.pM;
        long long num = (1 + qr) % m;
        long long den = (1 + mod_pow(qr, static_cast<unsigned long long>(pow_ll(ctx.p, N)), m)) % m;
        if (den % ctx.p == 0) fail(errc::non_unit_division, "level prefactor denominator is not a unit");
        return mod_mul(acc, mod_mul(num, mod_inv(den, m), m), m);
    }
};

} // namespace

PAdicNumber fermionic_integral_level(const PAdicContext& ctx,
                                     const std::function<PAdicNumber(long long)>& f,
                                     const Rat& q, int N) {
    if (N < 1) fail(errc::invalid_request, "level must be at least 1");
    long long pN = pow_ll(ctx.p, N);
    if (pN > kLevelBudget) fail(errc::convergence_budget_exceeded, "level size exceeds budget");
    LevelSum sum(ctx, reduce_q(ctx, q));
    sum.extend_to(pN, f);
    return PAdicNumber{ctx, sum.value(N)};
}

PAdicNumber fermionic_integral(const PAdicContext& ctx,
                               const std::function<PAdicNumber(long long)>& f, const Rat& q,
                               int n_max) {
    LevelSum sum(ctx, reduce_q(ctx, q));
    long long prev = -1;
    for (int N = 1; N <= n_max; ++N) {
        long long pN = pow_ll(ctx.p, N);
        if (pN > kLevelBudget)
            fail(errc::convergence_budget_exceeded, "level size exceeds budget");
        sum.extend_to(pN, f);
        long long cur = sum.value(N);
        // v_p(level_N - level_{N+1}) >= N, so agreement below level M can
        // be an accidental collision mod p^M; only trust it from M on.
        if (N > ctx.M && cur == prev) return PAdicNumber{ctx, cur};
        prev = cur;
    }
    fail(errc::no_convergence, "levels did not stabilize mod p^M");
}

PAdicNumber shift_identity_residual(const PAdicContext& ctx,
                                    const std::function<PAdicNumber(long long)>& f, long long n,
                                    int n_max) {
    if (n < 0) fail(errc::invalid_request, "shift must be nonnegative");
    auto shifted = [&](long long x) { return f(x + n); };
    PAdicNumber lhs = fermionic_integral(ctx, shifted, Rat(1), n_max);
    PAdicNumber base = fermionic_integral(ctx, f, Rat(1), n_max);
    long long m = ctx.pM;
    long long corr = 0;
    for (long long l = 0; l < n; ++l) {
        PAdicNumber v = f(l);
        require_same_ctx(v.ctx, ctx);
        long long term = mod_mul(2, v.residue, m);
        if (((n - 1 - l) % 2 + 2) % 2 == 1) term = (m - term) % m;
        corr = (corr + term) % m;
    }
    long long sign_base = base.residue;
    if (n % 2 == 1) sign_base = (m - sign_base) % m;
    long long res = ((lhs.residue - sign_base - corr) % m + 2 * m) % m;
    return PAdicNumber{ctx, res};
}

PAdicNumber moment(const PAdicContext& ctx, long long n, long long x, const Rat& q, int n_max) {
    if (n < 0 || x < 0) fail(errc::invalid_request, "moment needs n >= 0 and x >= 0");
    long long m = ctx.pM;
    long long qr = reduce_q(ctx, q);
    long long br = padic_q_bracket(ctx, qr, x);
    long long y = 0, acc = 0;
    long long prev = -1;
    for (int N = 1; N <= n_max; ++N) {
        long long pN = pow_ll(ctx.p, N);
        if (pN > kLevelBudget)
            fail(errc::convergence_budget_exceeded, "level size exceeds budget");
        for (; y < pN; ++y) {
            long long term = mod_pow(br, static_cast<unsigned long long>(n), m);
            if (y % 2 == 1) term = (m - term) % m;
            acc = (acc + term) % m;
            br = (1 + mod_mul(qr, br, m)) % m;
        }
        if (N > ctx.M && acc == prev) return PAdicNumber{ctx, acc};
        prev = acc;
    }
    fail(errc::no_convergence, "moment levels did not stabilize mod p^M");
}

PAdicNumber moment_multi(const PAdicContext& ctx, long long n, long long x, const Rat& q,
                         const std::vector<long long>& w, int n_max) {
    if (n < 0 || x < 0) fail(errc::invalid_request, "moment needs n >= 0 and x >= 0");
    size_t r = w.size();
    if (r == 0 || r > 16) fail(errc::invalid_request, "weight count must be in [1,16]");
    long long wsum = 0;
    for (long long wj : w) {
        if (wj < 1) fail(errc::invalid_request, "weights must be positive integers");
        wsum += wj;
    }
    long long m = ctx.pM;
    long long qr = reduce_q(ctx, q);
    long long prev = -1;
    long long spent = 0;
    for (int N = 1; N <= n_max; ++N) {
        long long pN = pow_ll(ctx.p, N);
        long long L = wsum * (pN - 1);
        spent += (L + 1) << r;
        if (spent > kLevelBudget)
            fail(errc::convergence_budget_exceeded, "iterated level size exceeds budget");
        long long total = 0;
        // c(t) = sum over subsets T of u(t - p^N sum_{j in T} w_j), with
        // u the coefficients of prod_j 1/(1+z^{w_j}); one streaming pass
        // per subset.
        for (size_t mask = 0; mask < (size_t{1} << r); ++mask) {
            long long shift = 0;
            for (size_t j = 0; j < r; ++j)
                if (mask >> j & 1) shift += w[j] * pN;
            if (shift > L) continue;
            std::vector<std::vector<long long>> ring(r);
            for (size_t j = 0; j < r; ++j) ring[j].assign(static_cast<size_t>(w[j]), 0);
            long long br = padic_q_bracket(ctx, qr, x + shift);
            long long acc = 0;
            for (long long t = 0; t + shift <= L; ++t) {
                long long u = t == 0 ? 1 : 0;
                for (size_t j = 0; j < r; ++j) {
                    size_t slot = static_cast<size_t>(t % w[j]);
                    long long lag = ring[j][slot]; // d_j(t - w_j)
                    u = ((u - lag) % m + m) % m;
                    ring[j][slot] = u;
                }
                long long term = mod_mul(u, mod_pow(br, static_cast<unsigned long long>(n), m), m);
                acc = (acc + term) % m;
                br = (1 + mod_mul(qr, br, m)) % m;
            }
            total = (total + acc) % m;
        }
        if (N > ctx.M && total == prev) return PAdicNumber{ctx, total};
        prev = total;
    }
    fail(errc::no_convergence, "iterated moment levels did not stabilize mod p^M");
}

} // namespace qeuler

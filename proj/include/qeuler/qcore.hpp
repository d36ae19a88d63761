#ifndef QEULER_QCORE_HPP
#define QEULER_QCORE_HPP

#include "qeuler/approx.hpp"
#include "qeuler/errors.hpp"
#include "qeuler/rational.hpp"

namespace qeuler {

template <class S>
inline S scalar_from_int(long long v);
template <>
inline Rat scalar_from_int<Rat>(long long v) { return Rat(v); }
template <>
inline Approx scalar_from_int<Approx>(long long v) { return approx_exact(static_cast<double>(v)); }

template <class S>
inline S scalar_from_bigint(const BigInt& v);
template <>
inline Rat scalar_from_bigint<Rat>(const BigInt& v) { return Rat(v); }
template <>
inline Approx scalar_from_bigint<Approx>(const BigInt& v) { return approx_from(Rat(v)); }

inline bool exactly_one(const Rat& q) { return q == 1; }
inline bool exactly_one(const Approx& q) { return q.err == 0.0 && q.z == std::complex<double>(1.0, 0.0); }
inline bool exactly_zero(const Rat& q) { return q == 0; }
inline bool exactly_zero(const Approx& q) { return q.err == 0.0 && q.z == std::complex<double>(0.0, 0.0); }

// Evaluation context: the deformation parameter and, through the scalar
// type, the mode. QCtx<Rat> is the exact mode (integer exponents only),
// QCtx<Approx> the float mode.
template <class S>
struct QCtx {
    S q;
    explicit QCtx(S q_) : q(std::move(q_)) {}
};

using ExactCtx = QCtx<Rat>;
using FloatCtx = QCtx<Approx>;

inline ExactCtx exact_ctx(const Rat& q) { return ExactCtx(q); }
inline FloatCtx float_ctx(double q) { return FloatCtx(approx_exact(q)); }

namespace detail {

inline bool is_integer(const Rat& x) { return rat_den(x) == 1; }

inline long long to_ll(const BigInt& v) {
    return v.convert_to<long long>();
}

// q^x dispatch: exact mode insists on integer x, float mode falls back
// to a real power when x is not an integer.
inline Rat q_power(const Rat& q, const Rat& x) {
    if (!is_integer(x))
        fail(errc::non_integer_exponent_in_exact_mode,
             "q^x with non-integer x; use the float mode for rational exponents");
    return pow_i(q, to_ll(rat_num(x)));
}

inline Approx q_power(const Approx& q, const Rat& x) {
    if (is_integer(x)) return pow_i(q, to_ll(rat_num(x)));
    return pow_real(q, Rat(x).convert_to<double>());
}

} // namespace detail

// [x]_q = (1 - q^x)/(1 - q). Float mode with q = 1 returns the limit x.
template <class S>
S q_bracket(const Rat& x, const QCtx<S>& ctx) {
    if constexpr (std::is_same_v<S, Approx>) {
        if (exactly_one(ctx.q)) return approx_from(x);
    } else {
        if (exactly_one(ctx.q))
            fail(errc::q_equals_one_in_exact_mode, "[x]_q undefined at q=1 in exact mode");
    }
    S qx = detail::q_power(ctx.q, x);
    S one = scalar_from_int<S>(1);
    return (one - qx) / (one - ctx.q);
}

// [x]_{-q} = (1 - (-q)^x)/(1 + q).
template <class S>
S q_bracket_signed(const Rat& x, const QCtx<S>& ctx) {
    S one = scalar_from_int<S>(1);
    S mq = scalar_from_int<S>(0) - ctx.q;
    if (exactly_one(mq))
        fail(errc::q_equals_minus_one, "[x]_{-q} undefined at q=-1");
    S t = detail::q_power(mq, x);
    return (one - t) / (one + ctx.q);
}

// [n]_q! = [n]_q [n-1]_q ... [1]_q, empty product 1.
template <class S>
S q_factorial(long long n, const QCtx<S>& ctx) {
    if (n < 0) fail(errc::invalid_request, "q-factorial of a negative integer");
    S acc = scalar_from_int<S>(1);
    for (long long k = 1; k <= n; ++k) acc *= q_bracket<S>(Rat(k), ctx);
    return acc;
}

// Gaussian binomial; 0 outside 0 <= k <= n.
template <class S>
S gaussian_binomial(long long n, long long k, const QCtx<S>& ctx) {
    if (n < 0) fail(errc::invalid_request, "Gaussian binomial with negative n");
    if (k < 0 || k > n) return scalar_from_int<S>(0);
    return q_factorial<S>(n, ctx) / (q_factorial<S>(n - k, ctx) * q_factorial<S>(k, ctx));
}

// (b; q)_n = (1 - b)(1 - bq) ... (1 - bq^{n-1}).
template <class S>
S q_pochhammer(const S& b, long long n, const QCtx<S>& ctx) {
    if (n < 0) fail(errc::invalid_request, "q-Pochhammer with negative length");
    S acc = scalar_from_int<S>(1);
    S one = scalar_from_int<S>(1);
    S qp = one;
    for (long long i = 0; i < n; ++i) {
        acc *= (one - b * qp);
        qp *= ctx.q;
    }
    return acc;
}

} // namespace qeuler

#endif

#ifndef QEULER_APPROX_HPP
#define QEULER_APPROX_HPP

#include <cmath>
#include <complex>
#include <limits>

#include "qeuler/errors.hpp"
#include "qeuler/rational.hpp"

namespace qeuler {

// Complex double paired with a guaranteed absolute error bound. All
// propagation rules are worst-case (interval style) and every operation
// inflates the bound by a rounding slop, so a bound may be pessimistic
// but is never an estimate.
struct Approx {
    std::complex<double> z{0.0, 0.0};
    double err = 0.0;

    Approx() = default;
    explicit Approx(double re, double im = 0.0, double e = 0.0) : z(re, im), err(e) { check(); }
    explicit Approx(std::complex<double> v, double e = 0.0) : z(v), err(e) { check(); }

    double real() const { return z.real(); }
    double imag() const { return z.imag(); }
    double mag() const { return std::abs(z); }
    // Upper bound on |true value|.
    double mag_upper() const { return std::abs(z) + err; }

    void check() const {
        if (!std::isfinite(err) || err < 0.0 || !std::isfinite(z.real()) || !std::isfinite(z.imag()))
            fail(errc::invalid_request, "non-finite approximate value or bound");
    }
};

namespace detail {
constexpr double kEps = std::numeric_limits<double>::epsilon();
// Rounding inflation applied after each arithmetic step. 8 eps covers
// the worst case of a complex multiply/divide.
inline double slop(const std::complex<double>& z) {
    return 8.0 * kEps * std::abs(z) + std::numeric_limits<double>::denorm_min();
}
} // namespace detail

inline Approx approx_from(const Rat& r) {
    double d = r.convert_to<double>();
    // Conversion is correctly rounded to within an ulp or two.
    return Approx(d, 0.0, 4.0 * detail::kEps * std::abs(d));
}

inline Approx approx_exact(double v) { return Approx(v, 0.0, 0.0); }

inline Approx operator+(const Approx& a, const Approx& b) {
    std::complex<double> z = a.z + b.z;
    return Approx(z, a.err + b.err + detail::slop(z));
}

inline Approx operator-(const Approx& a, const Approx& b) {
    std::complex<double> z = a.z - b.z;
    return Approx(z, a.err + b.err + detail::slop(z));
}

inline Approx operator-(const Approx& a) { return Approx(-a.z, a.err); }

inline Approx operator*(const Approx& a, const Approx& b) {
    std::complex<double> z = a.z * b.z;
    double e = std::abs(a.z) * b.err + std::abs(b.z) * a.err + a.err * b.err;
    return Approx(z, e + detail::slop(z));
}

inline Approx operator/(const Approx& a, const Approx& b) {
    double bm = std::abs(b.z);
    if (!(b.err < bm))
        fail(errc::invalid_request, "division by a value whose error bound covers zero");
    std::complex<double> z = a.z / b.z;
    double e = (std::abs(a.z) * b.err + bm * a.err) / (bm * (bm - b.err));
    return Approx(z, e + detail::slop(z));
}

inline Approx& operator+=(Approx& a, const Approx& b) { return a = a + b; }
inline Approx& operator-=(Approx& a, const Approx& b) { return a = a - b; }
inline Approx& operator*=(Approx& a, const Approx& b) { return a = a * b; }
inline Approx& operator/=(Approx& a, const Approx& b) { return a = a / b; }

inline Approx pow_i(const Approx& base, long long e) {
    if (e == 0) return approx_exact(1.0);
    bool invert = e < 0;
    unsigned long long n = invert ? static_cast<unsigned long long>(-(e + 1)) + 1ULL
                                  : static_cast<unsigned long long>(e);
    Approx acc = approx_exact(1.0), b = base;
    while (n) {
        if (n & 1ULL) acc = acc * b;
        b = b * b;
        n >>= 1;
    }
    if (invert) acc = approx_exact(1.0) / acc;
    return acc;
}

// base^x for positive real base and real exponent.
inline Approx pow_real(const Approx& base, double x) {
    if (base.imag() != 0.0 || base.real() <= 0.0 || base.err >= base.real())
        fail(errc::invalid_request, "real power requires a certainly-positive real base");
    double b = base.real();
    double z = std::pow(b, x);
    double lo = b - base.err, hi = b + base.err;
    double deriv = std::abs(x) * std::max(std::pow(lo, x - 1.0), std::pow(hi, x - 1.0));
    double e = deriv * base.err + 4.0 * detail::kEps * std::abs(z);
    return Approx(z, 0.0, e);
}

} // namespace qeuler

#endif

#ifndef QEULER_ZETA_HPP
#define QEULER_ZETA_HPP

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "qeuler/approx.hpp"
#include "qeuler/characters.hpp"
#include "qeuler/rational.hpp"

namespace qeuler {

// sum over m in Z_{>=0}^r of
//   (-1)^{|m|} prod_j chi(m_j) q^{sum_j a_j m_j} [x + sum_j w_j m_j]_q^{-s},
// absolutely convergent for every s since a_j > 0. With chi absent this
// is the multiple q-zeta function; with chi it is the multiple q-l
// function (the two share one summation path).
struct ZetaRequest {
    std::complex<double> s{2.0, 0.0};
    Rat x = Rat(1);
    Rat q = Rat(1, 2);
    std::vector<Rat> w{Rat(1)};
    std::vector<Rat> a{Rat(1)};
    std::optional<DirichletCharacter> chi;
    double tol = 1e-10;
};

Approx zeta_multiple(const ZetaRequest& req); // req.chi must be absent
Approx l_multiple(const ZetaRequest& req);    // req.chi must be present

// Same sum cut at exactly `shells` total-degree shells, error bound taken
// at that truncation. For tail-bound soundness tests.
Approx zeta_truncated(const ZetaRequest& req, long long shells);

struct InterpolationReport {
    long long n = 0;
    std::complex<double> zeta_value;   // L(-n)
    std::complex<double> family_value; // E_n from the exact closed form
    std::complex<double> ratio;        // L / E
    double resid_derived = 0.0;        // |2^r L - E|
    double resid_stated = 0.0;         // |L - (-1)^{n+1} E|, reported only
    double tol = 0.0;
    bool pass = false;
};

// Evaluates the function at s = -n and the matching twisted family member
// exactly, asserting the derived normalization 2^r L(-n) = E_n. Needs
// integral x, w, a and a real-valued character so the family side is a
// rational number.
InterpolationReport interpolation_check(long long n, const ZetaRequest& req);

std::complex<double> lanczos_gamma(std::complex<double> z);

struct MellinQuadrature {
    std::complex<double> value;
    double error = 0.0;
    long long evals = 0;
};

// (1/Gamma(s)) integral_0^infty t^{s-1} sum_k c_k e^{-lambda_k t} dt by
// adaptive Simpson after t = u^2, for lambda_k > 0 and Re s >= 1/2.
// Analytically equal to sum_k c_k lambda_k^{-s}.
MellinQuadrature mellin_quadrature(const std::vector<std::pair<double, std::complex<double>>>& terms,
                                   std::complex<double> s);

struct MellinReport {
    std::complex<double> s;
    std::complex<double> quadrature;  // 2^r (1/Gamma(s)) integral of the truncated kernel
    std::complex<double> series_side; // 2^r zeta at the same truncation
    double difference = 0.0;
    double quad_error = 0.0;
    long long shells = 0;
    long long terms = 0;
    double tol = 0.0;
    bool pass = false;
};

// Truncates the defining series, integrates the matching exponential
// kernel through the Mellin transform, and compares the two routes.
// Requires a_j >= 1 and Re s >= 1/2.
MellinReport mellin_check(std::complex<double> s, const ZetaRequest& req);

} // namespace qeuler

#endif

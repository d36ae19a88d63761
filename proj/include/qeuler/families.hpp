#ifndef QEULER_FAMILIES_HPP
#define QEULER_FAMILIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "qeuler/characters.hpp"
#include "qeuler/qcore.hpp"

namespace qeuler {

enum class FamilyKind {
    plain,
    order_r,
    extended_hr,
    barnes,
    barnes_twisted,
    chi,
    chi_order_r,
    chi_barnes_twisted,
};

const char* family_kind_name(FamilyKind kind);
FamilyKind family_kind_from_name(const std::string& name);

// Which q-Euler family a request targets. Build through the factories
// below; they reject parameters the kind does not use.
struct FamilySpec {
    FamilyKind kind = FamilyKind::plain;
    int r = 1;
    long long h = 1;                       // extended_hr only
    std::vector<long long> w;              // weights, size r
    std::vector<long long> a;              // twists, size r
    std::optional<DirichletCharacter> chi;

    std::string describe() const;
};

FamilySpec family_plain();
FamilySpec family_order(int r);
FamilySpec family_hr(long long h, int r);
FamilySpec family_barnes(std::vector<long long> w);
FamilySpec family_barnes_twisted(std::vector<long long> w, std::vector<long long> a);
FamilySpec family_chi(DirichletCharacter chi);
FamilySpec family_chi_order(DirichletCharacter chi, int r);
FamilySpec family_chi_barnes_twisted(DirichletCharacter chi, std::vector<long long> w,
                                     std::vector<long long> a);

enum class Method { closed_form, series_direct, series_abel, padic_integral };
const char* method_name(Method m);

template <class S>
struct Evaluation {
    S value{};
    Method method = Method::closed_form;
    double error_bound = 0.0; // 0 for exact results
};

// The per-index closed form: every kind reduces to
//   2^r (1-q)^{-n} sum_l C(n,l) (-1)^l q^{lx} prod_j G_j(l)
// where G_j collects the character-weighted geometric block of index j.
template <class S>
Evaluation<S> closed_form(const FamilySpec& spec, long long n, const Rat& x, const QCtx<S>& ctx);

// Same value through an algebraically different route: each geometric
// block 1/(1+y) is split as sum_{c<k} (-y)^c / (1+y^k) for an odd k,
// enlarging the residue table by the factor k. Exercises the multi-term
// block machinery even for character-free kinds.
template <class S>
Evaluation<S> closed_form_refined(const FamilySpec& spec, long long n, const Rat& x,
                                  const QCtx<S>& ctx, long long refine);

// Named entry points.
template <class S>
Evaluation<S> euler_q(long long n, const Rat& x, const QCtx<S>& ctx);
template <class S>
Evaluation<S> euler_q_order(long long n, const Rat& x, const QCtx<S>& ctx, int r);
template <class S>
Evaluation<S> euler_q_hr(long long n, const Rat& x, const QCtx<S>& ctx, long long h, int r);
template <class S>
Evaluation<S> euler_barnes(long long n, const Rat& x, const QCtx<S>& ctx,
                           std::vector<long long> w);
template <class S>
Evaluation<S> euler_barnes_twisted(long long n, const Rat& x, const QCtx<S>& ctx,
                                   std::vector<long long> w, std::vector<long long> a);
template <class S>
Evaluation<S> euler_chi_order(long long n, const Rat& x, const QCtx<S>& ctx,
                              const DirichletCharacter& chi, int r);
template <class S>
Evaluation<S> euler_chi_barnes_twisted(long long n, const Rat& x, const QCtx<S>& ctx,
                                       const DirichletCharacter& chi, std::vector<long long> w,
                                       std::vector<long long> a);

// Character-attached polynomials through the conductor decomposition
//   E_{n,chi,q}(x) = [f]_q^n sum_{b<f} chi(b)(-1)^b E_{n,q^f}((x+b)/f),
// the inner value taken with base q^f so every exponent stays integral.
template <class S>
Evaluation<S> euler_chi(long long n, const Rat& x, const QCtx<S>& ctx,
                        const DirichletCharacter& chi);

// Conductor decomposition of the plain family over residues mod f.
template <class S>
Evaluation<S> euler_plain_distribution(long long n, const Rat& x, const QCtx<S>& ctx,
                                       long long f);

// Pochhammer-denominator route for the (h,r) family:
//   2^r (1-q)^{-n} sum_l C(n,l) (-q^x)^l / (-q^{h-r+l}; q)_r.
template <class S>
Evaluation<S> euler_hr_pochhammer(long long n, const Rat& x, const QCtx<S>& ctx, long long h,
                                  int r);

// E_{m,chi,q}(nf) - (-1)^n E_{m,chi,q} - 2 sum_{l<nf} (-1)^{n-1-l} chi(l) [l]_q^m.
// Identically zero.
template <class S>
S recurrence_residual(long long m, long long n, const QCtx<S>& ctx,
                      const DirichletCharacter& chi);

// E^{(h,r)}_{n,q}(x) minus its decomposition over residue vectors mod f,
// the inner family taken at the same (h,r). Identically zero for odd f.
template <class S>
S distribution_residual_hr(long long n, const Rat& x, const QCtx<S>& ctx, long long h, int r,
                           long long f);

// Defining multi-series of the family (float mode). Direct summation with
// a proven tail bound when every index decays geometrically, otherwise
// Abel regularization with Richardson extrapolation in the radius.
Evaluation<Approx> series_value(const FamilySpec& spec, long long n, const Rat& x,
                                const FloatCtx& ctx, double tol);

// The Abel route unconditionally, also where direct summation works.
Evaluation<Approx> series_value_abel(const FamilySpec& spec, long long n, const Rat& x,
                                     const FloatCtx& ctx, double tol);

namespace detail_series {
Evaluation<Approx> value_impl(const FamilySpec& spec, long long n, const Rat& x,
                              const FloatCtx& ctx, double tol, bool force_abel);
}

// Direct summation truncated at exactly `shells` total-degree shells,
// with the tail bound it would report there. For bound-soundness tests.
Evaluation<Approx> series_direct_truncated(const FamilySpec& spec, long long n, const Rat& x,
                                           const FloatCtx& ctx, long long shells);

// Single-series route for the (h,r) family built on Gaussian binomials:
//   2^r sum_m C(m+r-1,m)_q (-q^{h-r})^m [x+m]_q^n, geometric for h-r >= 1.
Evaluation<Approx> series_hr_qbinomial(long long n, const Rat& x, const FloatCtx& ctx,
                                       long long h, int r, double tol);

// Everything beyond total-degree shell S of an r-fold series whose terms
// are bounded by B beta^{m_1+...+m_r}: B sum_{s>S} C(s+r-1,r-1) beta^s.
double composition_tail_majorant(int r, double beta, long long S, double B);

} // namespace qeuler

#endif

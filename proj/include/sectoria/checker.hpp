#pragma once

// One certification routine per inequality. Every routine recomputes its
// hypothesis constants from the actual inputs (tightest valid m, M and the
// common angle alpha = max of the two sector angles) and emits Certificate
// records whose margins are directly comparable against the tolerance policy:
// Loewner margins relative to 1 + max operand spectral norm (default 1e-9),
// scalar and log-domain slacks relative 1e-8.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sectoria/certificate.hpp"
#include "sectoria/constants.hpp"
#include "sectoria/matrix.hpp"
#include "sectoria/means.hpp"
#include "sectoria/positive_maps.hpp"
#include "sectoria/sector.hpp"

namespace sectoria {

struct CheckOptions {
  double loewner_tol = 1e-9;
  double scalar_rtol = 1e-8;
  double logdet_tol = 1e-8;          // absolute, log domain is scale-free
  double bhatia_kittaneh_rtol = 1e-10;
  double mean_rtol = 1e-10;
  std::optional<double> alpha_override;  // diagnostics only: over-report the angle
};

namespace notes {
inline constexpr const char* squared_map =
    "Phi^2(X) is read as the matrix square (Phi(X))^2, not the composition Phi(Phi(X))";
inline constexpr const char* joint_psd_bounds =
    "(m, M) are the joint spectral bounds of A and B";
inline constexpr const char* inverse_bounds =
    "(m, M) are the joint spectral bounds of Re(A^-1) and Re(B^-1)";
inline constexpr const char* direct_bounds =
    "(m, M) are the joint spectral bounds of Re(A) and Re(B)";
inline constexpr const char* ad_constants =
    "fixed alpha = pi/4 constants applied to accretive-dissipative inputs";
inline constexpr const char* ad_norm_transposed =
    "printed pi/4 norm constants are transposed relative to the weighted corollary; "
    "the corollary-derived factors (upper 4*sqrt(2)*K, lower 1/(4*sqrt(2)*K)) are certified";
}  // namespace notes

namespace detail {

inline double hermitian_norm(const Matrix& h) {
  HermitianEig eig = hermitian_eig(h);
  return std::max(std::abs(eig.eigenvalues[0]),
                  std::abs(eig.eigenvalues[eig.eigenvalues.size() - 1]));
}

inline Certificate loewner_certificate(ResultId id, const Matrix& lhs, const Matrix& rhs,
                                       CertificateParams params, const CheckOptions& opts,
                                       std::string note = {}) {
  LoewnerResult cmp = loewner_leq(lhs, rhs, 0.0);
  const double scale = 1.0 + std::max(hermitian_norm(lhs), hermitian_norm(rhs));
  Certificate cert;
  cert.id = id;
  cert.params = std::move(params);
  cert.margin = cmp.margin;
  cert.pass = cmp.margin >= -opts.loewner_tol * scale;
  cert.interpretation_notes = std::move(note);
  return cert;
}

inline Certificate scalar_certificate(ResultId id, double lhs, double rhs,
                                      CertificateParams params, double rtol,
                                      std::string note = {}) {
  const double scale = 1.0 + std::max(std::abs(lhs), std::abs(rhs));
  Certificate cert;
  cert.id = id;
  cert.params = std::move(params);
  cert.margin = rhs - lhs;
  cert.pass = cert.margin >= -rtol * scale;
  cert.interpretation_notes = std::move(note);
  return cert;
}

inline Certificate logdet_certificate(ResultId id, double log_lhs, double log_rhs,
                                      CertificateParams params, double tol,
                                      std::string note = {}) {
  Certificate cert;
  cert.id = id;
  cert.params = std::move(params);
  cert.margin = log_rhs - log_lhs;
  cert.pass = cert.margin >= -tol;
  cert.log_domain = true;
  cert.interpretation_notes = std::move(note);
  return cert;
}

inline void require_hermitian_pd(const Matrix& a, const char* who) {
  HermitianEig eig = hermitian_eig(a);
  if (!hermitian_positive_definite(eig.eigenvalues)) {
    throw NotPsdError(std::string(who) + ": input is not Hermitian positive definite");
  }
}

inline Matrix re_of_inverse(const Matrix& a) {
  Matrix inv = a.partialPivLu().solve(Matrix::Identity(a.rows(), a.cols()));
  return hermitian_part(inv);
}

// Everything the sector-hypothesis checks share for one input pair.
struct SectorPair {
  double alpha = 0.0;
  Matrix gm, hm, am;           // integral geometric, harmonic, arithmetic means
  Matrix re_gm, re_hm, re_am;
  BoundContext inverse_ctx;    // bounds over Re(A^-1), Re(B^-1)
  BoundContext direct_ctx;     // bounds over Re(A), Re(B)
};

inline SectorPair make_sector_pair(const Matrix& a, const Matrix& b, double v,
                                   const CheckOptions& opts) {
  SectorPair sp;
  const double computed = std::max(sector_angle(a), sector_angle(b));
  sp.alpha = opts.alpha_override.value_or(computed);
  sp.gm = geometric_mean_accretive(a, b, v, opts.mean_rtol).value;
  sp.hm = harmonic_mean(a, b, v);
  sp.am = arithmetic_mean(a, b, v);
  sp.re_gm = hermitian_part(sp.gm);
  sp.re_hm = hermitian_part(sp.hm);
  sp.re_am = hermitian_part(sp.am);
  sp.inverse_ctx = joint_bound_context({re_of_inverse(a), re_of_inverse(b)}, sp.alpha);
  sp.direct_ctx = joint_bound_context({hermitian_part(a), hermitian_part(b)}, sp.alpha);
  return sp;
}

inline void fill_bound_params(CertificateParams& params, const BoundContext& ctx) {
  params.alpha = ctx.alpha;
  params.m_bound = ctx.m;
  params.big_m_bound = ctx.M;
  params.h = ctx.h();
  params.kantorovich = ctx.kant();
}

}  // namespace detail

// Weighted HM <= GM <= AM for Hermitian positive definite pairs.
inline std::array<Certificate, 2> check_hm_gm_am_psd(const Matrix& a, const Matrix& b, double v,
                                                     const CheckOptions& opts = {}) {
  detail::require_hermitian_pd(a, "check_hm_gm_am_psd");
  detail::require_hermitian_pd(b, "check_hm_gm_am_psd");
  Matrix gm = geometric_mean_psd(a, b, v);
  Matrix hm = harmonic_mean(a, b, v);
  Matrix am = arithmetic_mean(a, b, v);
  CertificateParams p;
  p.v = v;
  auto lower = detail::loewner_certificate(ResultId::hm_le_gm_psd, hm, gm, p, opts);
  auto upper = detail::loewner_certificate(ResultId::gm_le_am_psd, gm, am, p, opts);
  return {lower, upper};
}

// Reverse AM-GM with the Kantorovich constant for PD pairs.
inline Certificate check_kantorovich_reverse_psd(const Matrix& a, const Matrix& b, double v,
                                                 const CheckOptions& opts = {}) {
  detail::require_hermitian_pd(a, "check_kantorovich_reverse_psd");
  detail::require_hermitian_pd(b, "check_kantorovich_reverse_psd");
  BoundContext ctx = joint_bound_context({a, b}, 0.0);
  const double k = ctx.kant();
  Matrix gm = geometric_mean_psd(a, b, v);
  Matrix am = arithmetic_mean(a, b, v);
  CertificateParams p;
  p.v = v;
  detail::fill_bound_params(p, ctx);
  p.factor = k;
  return detail::loewner_certificate(ResultId::kantorovich_reverse, am, Matrix(k * gm), p, opts,
                                     notes::joint_psd_bounds);
}

// cos^2(alpha) Re(A !_v B) <= Re(A #_v B) <= sec^2(alpha) Re(A nabla_v B).
inline std::array<Certificate, 2> check_tan_xie(const Matrix& a, const Matrix& b, double v,
                                                const CheckOptions& opts = {}) {
  detail::SectorPair sp = detail::make_sector_pair(a, b, v, opts);
  BoundContext angle_only(1.0, 1.0, sp.alpha);
  CertificateParams p;
  p.v = v;
  p.alpha = sp.alpha;
  CertificateParams p_lower = p;
  p_lower.factor = bound_factor(ResultId::tan_xie_lower, angle_only, static_cast<int>(a.rows()));
  auto lower = detail::loewner_certificate(ResultId::tan_xie_lower,
                                           Matrix(*p_lower.factor * sp.re_hm), sp.re_gm,
                                           p_lower, opts);
  CertificateParams p_upper = p;
  p_upper.factor = bound_factor(ResultId::tan_xie_upper, angle_only, static_cast<int>(a.rows()));
  auto upper = detail::loewner_certificate(ResultId::tan_xie_upper, sp.re_gm,
                                           Matrix(*p_upper.factor * sp.re_am), p_upper, opts);
  return {lower, upper};
}

// Squared-map reverses, both directions, for a positive unital linear map.
inline std::array<Certificate, 2> check_theorem_reverse(const Matrix& a, const Matrix& b, double v,
                                                        const MapSpec& phi,
                                                        const CheckOptions& opts = {}) {
  detail::SectorPair sp = detail::make_sector_pair(a, b, v, opts);
  const int n = static_cast<int>(a.rows());
  Matrix phi_gm = hermitian_part(phi.apply(sp.re_gm));
  Matrix phi_hm = hermitian_part(phi.apply(sp.re_hm));
  Matrix phi_am = hermitian_part(phi.apply(sp.re_am));
  Matrix gm_sq = phi_gm * phi_gm;
  Matrix hm_sq = phi_hm * phi_hm;
  Matrix am_sq = phi_am * phi_am;

  CertificateParams p_i;
  p_i.v = v;
  detail::fill_bound_params(p_i, sp.inverse_ctx);
  p_i.map_kind = phi.name();
  p_i.factor = bound_factor(ResultId::reverse_tan_xie_harmonic, sp.inverse_ctx, n);
  std::string note_i = std::string(notes::squared_map) + "; " + notes::inverse_bounds;
  auto harmonic_side = detail::loewner_certificate(
      ResultId::reverse_tan_xie_harmonic, gm_sq, Matrix(*p_i.factor * hm_sq), p_i, opts,
      std::move(note_i));

  CertificateParams p_ii;
  p_ii.v = v;
  detail::fill_bound_params(p_ii, sp.direct_ctx);
  p_ii.map_kind = phi.name();
  p_ii.factor = bound_factor(ResultId::reverse_tan_xie_arithmetic, sp.direct_ctx, n);
  std::string note_ii = std::string(notes::squared_map) + "; " + notes::direct_bounds;
  auto arithmetic_side = detail::loewner_certificate(
      ResultId::reverse_tan_xie_arithmetic, Matrix(*p_ii.factor * am_sq), gm_sq, p_ii, opts,
      std::move(note_ii));
  return {harmonic_side, arithmetic_side};
}

// |det(A #_v B)| <= sec^{5n} K^n |det(A !_v B)| and the arithmetic-mean mirror.
inline std::array<Certificate, 2> check_det_corollary(const Matrix& a, const Matrix& b, double v,
                                                      const CheckOptions& opts = {}) {
  detail::SectorPair sp = detail::make_sector_pair(a, b, v, opts);
  const int n = static_cast<int>(a.rows());
  const double ld_gm = log_abs_det(sp.gm);
  const double ld_hm = log_abs_det(sp.hm);
  const double ld_am = log_abs_det(sp.am);

  CertificateParams p20;
  p20.v = v;
  detail::fill_bound_params(p20, sp.inverse_ctx);
  p20.factor = bound_factor(ResultId::det_reverse_harmonic, sp.inverse_ctx, n);
  auto upper = detail::logdet_certificate(ResultId::det_reverse_harmonic, ld_gm,
                                          *p20.factor + ld_hm, p20, opts.logdet_tol,
                                          notes::inverse_bounds);

  CertificateParams p21;
  p21.v = v;
  detail::fill_bound_params(p21, sp.direct_ctx);
  p21.factor = bound_factor(ResultId::det_reverse_arithmetic, sp.direct_ctx, n);
  auto lower = detail::logdet_certificate(ResultId::det_reverse_arithmetic,
                                          *p21.factor + ld_am, ld_gm, p21, opts.logdet_tol,
                                          notes::direct_bounds);
  return {upper, lower};
}

// |det(A # B)| <= sec^{4n}/2^n |det(I+A)| |det(I+B)| at v = 1/2.
inline Certificate check_det_proposition(const Matrix& a, const Matrix& b,
                                         const CheckOptions& opts = {}) {
  detail::SectorPair sp = detail::make_sector_pair(a, b, 0.5, opts);
  const int n = static_cast<int>(a.rows());
  const Matrix eye = Matrix::Identity(n, n);
  BoundContext angle_only(1.0, 1.0, sp.alpha);
  CertificateParams p;
  p.v = 0.5;
  p.alpha = sp.alpha;
  p.factor = bound_factor(ResultId::det_gm_identity_bound, angle_only, n);
  const double rhs = *p.factor + log_abs_det(Matrix(eye + a)) + log_abs_det(Matrix(eye + b));
  return detail::logdet_certificate(ResultId::det_gm_identity_bound, log_abs_det(sp.gm), rhs, p,
                                    opts.logdet_tol);
}

// |det(A #_v B)| <= sec^{3n} |det(A nabla_v B)|.
inline Certificate check_det_weighted_note(const Matrix& a, const Matrix& b, double v,
                                           const CheckOptions& opts = {}) {
  detail::SectorPair sp = detail::make_sector_pair(a, b, v, opts);
  const int n = static_cast<int>(a.rows());
  BoundContext angle_only(1.0, 1.0, sp.alpha);
  CertificateParams p;
  p.v = v;
  p.alpha = sp.alpha;
  p.factor = bound_factor(ResultId::det_gm_am_note, angle_only, n);
  return detail::logdet_certificate(ResultId::det_gm_am_note, log_abs_det(sp.gm),
                                    *p.factor + log_abs_det(sp.am), p, opts.logdet_tol);
}

// Per-index singular value bounds, both directions. With ad_pi4 the fixed
// pi/4 constants (8K upper, 1/(8K) lower) are applied; inputs must then be
// accretive-dissipative so their angle does not exceed pi/4.
inline std::vector<Certificate> check_sv_corollary(const Matrix& a, const Matrix& b, double v,
                                                   const CheckOptions& opts = {},
                                                   bool ad_pi4 = false) {
  detail::SectorPair sp = detail::make_sector_pair(a, b, v, opts);
  const int n = static_cast<int>(a.rows());
  if (ad_pi4 && sp.alpha > M_PI / 4.0 + 1e-9) {
    throw std::invalid_argument("check_sv_corollary: pi/4 constants need alpha <= pi/4");
  }
  RealVector s_gm = singular_values(sp.gm);
  RealVector s_hm = singular_values(sp.hm);
  RealVector s_am = singular_values(sp.am);

  const ResultId up_id = ad_pi4 ? ResultId::sv_reverse_upper_ad : ResultId::sv_reverse_upper;
  const ResultId lo_id = ad_pi4 ? ResultId::sv_reverse_lower_ad : ResultId::sv_reverse_lower;
  const double up_factor = bound_factor(up_id, sp.inverse_ctx, n);
  const double lo_factor = bound_factor(lo_id, sp.direct_ctx, n);
  const char* up_note = ad_pi4 ? notes::ad_constants : notes::inverse_bounds;
  const char* lo_note = ad_pi4 ? notes::ad_constants : notes::direct_bounds;

  std::vector<Certificate> certs;
  certs.reserve(static_cast<size_t>(2 * n));
  for (int j = 0; j < n; ++j) {
    CertificateParams pu;
    pu.v = v;
    detail::fill_bound_params(pu, sp.inverse_ctx);
    pu.factor = up_factor;
    pu.j = j + 1;
    certs.push_back(detail::scalar_certificate(up_id, s_gm[j], up_factor * s_hm[j], pu,
                                               opts.scalar_rtol, up_note));
    CertificateParams pl;
    pl.v = v;
    detail::fill_bound_params(pl, sp.direct_ctx);
    pl.factor = lo_factor;
    pl.j = j + 1;
    certs.push_back(detail::scalar_certificate(lo_id, lo_factor * s_am[j], s_gm[j], pl,
                                               opts.scalar_rtol, lo_note));
  }
  return certs;
}

// Unitarily invariant norm bounds, both directions, for one norm kind.
inline std::array<Certificate, 2> check_norm_corollary(const Matrix& a, const Matrix& b, double v,
                                                       const NormKind& kind,
                                                       const CheckOptions& opts = {},
                                                       bool ad_pi4 = false) {
  detail::SectorPair sp = detail::make_sector_pair(a, b, v, opts);
  const int n = static_cast<int>(a.rows());
  if (ad_pi4 && sp.alpha > M_PI / 4.0 + 1e-9) {
    throw std::invalid_argument("check_norm_corollary: pi/4 constants need alpha <= pi/4");
  }
  const double norm_gm = unitarily_invariant_norm(sp.gm, kind);
  const double norm_hm = unitarily_invariant_norm(sp.hm, kind);
  const double norm_am = unitarily_invariant_norm(sp.am, kind);

  const ResultId up_id = ad_pi4 ? ResultId::norm_reverse_upper_ad : ResultId::norm_reverse_upper;
  const ResultId lo_id = ad_pi4 ? ResultId::norm_reverse_lower_ad : ResultId::norm_reverse_lower;
  const char* up_note = ad_pi4 ? notes::ad_norm_transposed : notes::inverse_bounds;
  const char* lo_note = ad_pi4 ? notes::ad_norm_transposed : notes::direct_bounds;

  CertificateParams pu;
  pu.v = v;
  detail::fill_bound_params(pu, sp.inverse_ctx);
  pu.factor = bound_factor(up_id, sp.inverse_ctx, n);
  pu.norm_kind = kind.name();
  auto upper = detail::scalar_certificate(up_id, norm_gm, *pu.factor * norm_hm, pu,
                                          opts.scalar_rtol, up_note);

  CertificateParams pl;
  pl.v = v;
  detail::fill_bound_params(pl, sp.direct_ctx);
  pl.factor = bound_factor(lo_id, sp.direct_ctx, n);
  pl.norm_kind = kind.name();
  auto lower = detail::scalar_certificate(lo_id, *pl.factor * norm_am, norm_gm, pl,
                                          opts.scalar_rtol, lo_note);
  return {upper, lower};
}

// ||A # B||_u <= sec^5(alpha)/2 ||I+A||_u ||I+B||_u at v = 1/2.
inline Certificate check_norm_proposition(const Matrix& a, const Matrix& b, const NormKind& kind,
                                          const CheckOptions& opts = {}) {
  detail::SectorPair sp = detail::make_sector_pair(a, b, 0.5, opts);
  const int n = static_cast<int>(a.rows());
  const Matrix eye = Matrix::Identity(n, n);
  BoundContext angle_only(1.0, 1.0, sp.alpha);
  CertificateParams p;
  p.v = 0.5;
  p.alpha = sp.alpha;
  p.factor = bound_factor(ResultId::norm_gm_identity_bound, angle_only, n);
  p.norm_kind = kind.name();
  const double lhs = unitarily_invariant_norm(sp.gm, kind);
  const double rhs = *p.factor * unitarily_invariant_norm(Matrix(eye + a), kind) *
                     unitarily_invariant_norm(Matrix(eye + b), kind);
  return detail::scalar_certificate(ResultId::norm_gm_identity_bound, lhs, rhs, p,
                                    opts.scalar_rtol);
}

// The seven single-matrix sector lemmas.
inline std::array<Certificate, 7> check_lemma_suite(const Matrix& a,
                                                    const CheckOptions& opts = {}) {
  const double alpha = opts.alpha_override.value_or(sector_angle(a));
  const int n = static_cast<int>(a.rows());
  BoundContext angle_only(1.0, 1.0, alpha);
  const double sec2 = bound_factor(ResultId::re_inverse_reverse, angle_only, n);

  Matrix re = hermitian_part(a);
  Matrix re_inv_of_a = detail::re_of_inverse(a);
  Matrix inv_of_re = psd_power(re, -1.0);
  CertificateParams p;
  p.alpha = alpha;

  auto lemma_inv = detail::loewner_certificate(ResultId::re_inverse_bound, re_inv_of_a,
                                               inv_of_re, p, opts);
  CertificateParams p_rev = p;
  p_rev.factor = sec2;
  auto lemma_inv_rev = detail::loewner_certificate(ResultId::re_inverse_reverse, inv_of_re,
                                                   Matrix(sec2 * re_inv_of_a), p_rev, opts);

  const double ld_re = log_abs_det(re);
  const double ld_a = log_abs_det(a);
  auto lemma_det = detail::logdet_certificate(ResultId::ostrowski_taussky, ld_re, ld_a, p,
                                              opts.logdet_tol);
  CertificateParams p_det_rev = p;
  p_det_rev.factor = bound_factor(ResultId::det_sector_reverse, angle_only, n);
  auto lemma_det_rev = detail::logdet_certificate(ResultId::det_sector_reverse, ld_a,
                                                  *p_det_rev.factor + ld_re, p_det_rev,
                                                  opts.logdet_tol);

  // descending eigenvalues of Re A against singular values of A
  RealVector re_eigs = hermitian_eig(re).eigenvalues.reverse();
  RealVector svals = singular_values(a);
  double fan_hoffman_margin = std::numeric_limits<double>::infinity();
  double drury_lin_margin = std::numeric_limits<double>::infinity();
  double scale = 1.0 + std::max(re_eigs[0], svals[0]);
  for (int j = 0; j < n; ++j) {
    fan_hoffman_margin = std::min(fan_hoffman_margin, svals[j] - re_eigs[j]);
    drury_lin_margin = std::min(drury_lin_margin, sec2 * re_eigs[j] - svals[j]);
  }
  Certificate lemma_fh;
  lemma_fh.id = ResultId::fan_hoffman;
  lemma_fh.params = p;
  lemma_fh.margin = fan_hoffman_margin;
  lemma_fh.pass = fan_hoffman_margin >= -opts.scalar_rtol * scale;
  Certificate lemma_dl;
  lemma_dl.id = ResultId::drury_lin;
  lemma_dl.params = p;
  lemma_dl.params.factor = sec2;
  lemma_dl.margin = drury_lin_margin;
  lemma_dl.pass = drury_lin_margin >= -opts.scalar_rtol * scale;

  // ||A||_u <= sec(alpha) ||Re A||_u over the whole Ky Fan family
  const double sec1 = bound_factor(ResultId::re_norm_bound, angle_only, n);
  double norm_margin = std::numeric_limits<double>::infinity();
  double norm_scale = 1.0;
  for (int k = 1; k <= n; ++k) {
    const double lhs = unitarily_invariant_norm(a, NormKind::ky_fan(k));
    const double rhs = sec1 * unitarily_invariant_norm(re, NormKind::ky_fan(k));
    norm_margin = std::min(norm_margin, rhs - lhs);
    norm_scale = std::max(norm_scale, 1.0 + std::max(lhs, rhs));
  }
  Certificate lemma_norm;
  lemma_norm.id = ResultId::re_norm_bound;
  lemma_norm.params = p;
  lemma_norm.params.factor = sec1;
  lemma_norm.params.norm_kind = "ky_fan_family";
  lemma_norm.margin = norm_margin;
  lemma_norm.pass = norm_margin >= -opts.scalar_rtol * norm_scale;

  return {lemma_inv, lemma_inv_rev, lemma_det, lemma_det_rev, lemma_fh, lemma_dl, lemma_norm};
}

// ||PQ|| <= 1/4 ||P+Q||^2 for PSD P, Q (operator norm).
inline Certificate check_bhatia_kittaneh(const Matrix& p, const Matrix& q,
                                         const CheckOptions& opts = {}) {
  for (const Matrix* m : {&p, &q}) {
    HermitianEig eig = hermitian_eig(*m);
    const double top = std::max(std::abs(eig.eigenvalues[0]),
                                std::abs(eig.eigenvalues[eig.eigenvalues.size() - 1]));
    if (eig.eigenvalues[0] < -1e-10 * top) {
      throw NotPsdError("check_bhatia_kittaneh: inputs must be PSD");
    }
  }
  const double lhs = spectral_norm(Matrix(p * q));
  const double sum_norm = spectral_norm(Matrix(p + q));
  return detail::scalar_certificate(ResultId::bhatia_kittaneh, lhs, 0.25 * sum_norm * sum_norm,
                                    {}, opts.bhatia_kittaneh_rtol);
}

// P <= rQ iff ||P^{1/2} Q^{-1/2}|| <= sqrt(r); the two routes must agree
// outside a band of width 1e-8 around the critical r.
inline Certificate check_bakherad_equivalence(const Matrix& p, const Matrix& q, double r,
                                              const CheckOptions& opts = {}) {
  if (!(r > 0.0)) throw std::invalid_argument("check_bakherad_equivalence: r must be positive");
  detail::require_hermitian_pd(p, "check_bakherad_equivalence");
  detail::require_hermitian_pd(q, "check_bakherad_equivalence");
  Matrix p_half = psd_power(p, 0.5);
  Matrix q_inv_half = psd_power(q, -0.5);
  const double norm = spectral_norm(Matrix(p_half * q_inv_half));
  const double critical = norm * norm;
  const bool loewner_route = loewner_leq(p, Matrix(r * q), opts.loewner_tol).holds;
  const bool norm_route = critical <= r;
  const bool agree = loewner_route == norm_route;
  const double distance = std::abs(r - critical);
  const double band = opts.scalar_rtol * (1.0 + critical);
  Certificate cert;
  cert.id = ResultId::bakherad_equivalence;
  cert.params.factor = r;
  cert.margin = agree ? distance : -distance;
  cert.pass = agree || distance <= band;
  cert.interpretation_notes = "margin is the distance |r - r_critical|, signed by route agreement";
  return cert;
}

}  // namespace sectoria

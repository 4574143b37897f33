#pragma once

// Scalar constants entering the certified bounds: the Kantorovich constant,
// secant/cosecant power factors per result, and spectral-bound extraction.
// Determinant-side factors are handled in log domain; sec^{5n}(alpha) K^n(h)
// overflows quickly for moderate n otherwise.

#include <cmath>
#include <initializer_list>
#include <stdexcept>

#include "sectoria/certificate.hpp"
#include "sectoria/matrix.hpp"
#include "sectoria/sector.hpp"

namespace sectoria {

inline double kantorovich(double h) {
  if (!(h >= 1.0)) {
    throw std::invalid_argument("kantorovich: h must be >= 1, got " + std::to_string(h));
  }
  return (h + 1.0) * (h + 1.0) / (4.0 * h);
}

// Tightest (m, M) with m I <= H <= M I for Hermitian positive definite H.
inline std::pair<double, double> spectral_bounds(const Matrix& h) {
  HermitianEig eig = hermitian_eig(h);
  if (!hermitian_positive_definite(eig.eigenvalues)) {
    throw NotPsdError("spectral_bounds: matrix is not positive definite");
  }
  return {eig.eigenvalues[0], eig.eigenvalues[eig.eigenvalues.size() - 1]};
}

struct BoundContext {
  double m = 1.0;
  double M = 1.0;
  double alpha = 0.0;

  BoundContext() = default;
  BoundContext(double m_, double M_, double alpha_) : m(m_), M(M_), alpha(alpha_) {
    if (!(m > 0.0) || !(M >= m)) {
      throw std::invalid_argument("BoundContext: need 0 < m <= M");
    }
    if (!(alpha >= 0.0 && alpha < M_PI / 2.0)) {
      throw std::invalid_argument("BoundContext: alpha must lie in [0, pi/2)");
    }
  }

  double h() const { return M / m; }
  double kant() const { return kantorovich(h()); }
};

// Common two-sided bound over several Hermitian PD matrices: m is the least
// minimum, M the largest maximum.
inline BoundContext joint_bound_context(std::initializer_list<Matrix> mats, double alpha) {
  double m = std::numeric_limits<double>::infinity();
  double M = -std::numeric_limits<double>::infinity();
  for (const Matrix& h : mats) {
    auto [lo, hi] = spectral_bounds(h);
    m = std::min(m, lo);
    M = std::max(M, hi);
  }
  return BoundContext(m, M, alpha);
}

inline bool factor_is_log_domain(ResultId id) {
  switch (id) {
    case ResultId::det_reverse_harmonic:
    case ResultId::det_reverse_arithmetic:
    case ResultId::det_gm_identity_bound:
    case ResultId::det_gm_am_note:
    case ResultId::ostrowski_taussky:
    case ResultId::det_sector_reverse:
      return true;
    default:
      return false;
  }
}

// The multiplicative constant attached to a result, for dimension n.
// Determinant results return the factor's natural logarithm.
inline double bound_factor(ResultId id, const BoundContext& ctx, int n) {
  if (n < 1) throw std::invalid_argument("bound_factor: dimension must be positive");
  const double sec = 1.0 / std::cos(ctx.alpha);
  const double cos_a = std::cos(ctx.alpha);
  const double k = ctx.kant();
  const double log_sec = std::log(sec);
  switch (id) {
    case ResultId::kantorovich_reverse:
      return k;
    case ResultId::tan_xie_lower:
      return cos_a * cos_a;
    case ResultId::tan_xie_upper:
      return sec * sec;
    case ResultId::reverse_tan_xie_harmonic:
      return std::pow(sec, 8.0) * k * k;
    case ResultId::reverse_tan_xie_arithmetic:
      return std::pow(cos_a, 8.0) / (k * k);
    case ResultId::det_reverse_harmonic:
      return 5.0 * n * log_sec + n * std::log(k);
    case ResultId::det_reverse_arithmetic:
      return -5.0 * n * log_sec - n * std::log(k);
    case ResultId::det_gm_identity_bound:
      return 4.0 * n * log_sec - n * std::log(2.0);
    case ResultId::det_gm_am_note:
      return 3.0 * n * log_sec;
    case ResultId::sv_reverse_upper:
      return std::pow(sec, 6.0) * k;
    case ResultId::sv_reverse_lower:
      return std::pow(cos_a, 6.0) / k;
    case ResultId::sv_reverse_upper_ad:
      return 8.0 * k;
    case ResultId::sv_reverse_lower_ad:
      return 1.0 / (8.0 * k);
    case ResultId::norm_reverse_upper:
      return std::pow(sec, 5.0) * k;
    case ResultId::norm_reverse_lower:
      return std::pow(cos_a, 5.0) / k;
    case ResultId::norm_reverse_upper_ad:
      return 4.0 * std::sqrt(2.0) * k;
    case ResultId::norm_reverse_lower_ad:
      return 1.0 / (4.0 * std::sqrt(2.0) * k);
    case ResultId::norm_gm_identity_bound:
      return std::pow(sec, 5.0) / 2.0;
    case ResultId::re_inverse_reverse:
    case ResultId::drury_lin:
      return sec * sec;
    case ResultId::re_norm_bound:
      return sec;
    case ResultId::det_sector_reverse:
      return n * log_sec;
    case ResultId::ostrowski_taussky:
      return 0.0;  // log domain, factor 1
    case ResultId::hm_le_gm_psd:
    case ResultId::gm_le_am_psd:
    case ResultId::re_inverse_bound:
    case ResultId::bhatia_kittaneh:
    case ResultId::choi:
    case ResultId::bakherad_equivalence:
    case ResultId::fan_hoffman:
      return 1.0;
  }
  throw std::invalid_argument("bound_factor: unknown result id");
}

}  // namespace sectoria

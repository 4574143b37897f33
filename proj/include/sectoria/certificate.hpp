#pragma once

// Certificate records: one per inequality instance checked. The id names the
// inequality, params carry the constants that entered the bound, margin is
// the certified slack (lambda_min of a Hermitian difference, a scalar gap, or
// a log-domain gap for determinant results).

#include <optional>
#include <string>

namespace sectoria {

enum class ResultId {
  hm_le_gm_psd,
  gm_le_am_psd,
  kantorovich_reverse,
  tan_xie_lower,
  tan_xie_upper,
  reverse_tan_xie_harmonic,    // squared-map reverse against the harmonic mean
  reverse_tan_xie_arithmetic,  // squared-map reverse against the arithmetic mean
  det_reverse_harmonic,
  det_reverse_arithmetic,
  det_gm_identity_bound,
  det_gm_am_note,
  sv_reverse_upper,
  sv_reverse_lower,
  sv_reverse_upper_ad,  // accretive-dissipative specialization, factor 8K(h)
  sv_reverse_lower_ad,
  norm_reverse_upper,
  norm_reverse_lower,
  norm_reverse_upper_ad,
  norm_reverse_lower_ad,
  norm_gm_identity_bound,
  re_inverse_bound,          // Re(A^-1) <= (Re A)^-1
  re_inverse_reverse,        // (Re A)^-1 <= sec^2(alpha) Re(A^-1)
  bhatia_kittaneh,
  choi,
  bakherad_equivalence,
  ostrowski_taussky,         // det(Re A) <= |det A|
  det_sector_reverse,        // |det A| <= sec^n(alpha) det(Re A)
  fan_hoffman,               // eig_j(Re A) <= s_j(A)
  drury_lin,                 // s_j(A) <= sec^2(alpha) eig_j(Re A)
  re_norm_bound,             // ||A||_u <= sec(alpha) ||Re A||_u
};

inline const char* result_id_name(ResultId id) {
  switch (id) {
    case ResultId::hm_le_gm_psd: return "hm_le_gm_psd";
    case ResultId::gm_le_am_psd: return "gm_le_am_psd";
    case ResultId::kantorovich_reverse: return "kantorovich_reverse";
    case ResultId::tan_xie_lower: return "tan_xie_lower";
    case ResultId::tan_xie_upper: return "tan_xie_upper";
    case ResultId::reverse_tan_xie_harmonic: return "reverse_tan_xie_harmonic";
    case ResultId::reverse_tan_xie_arithmetic: return "reverse_tan_xie_arithmetic";
    case ResultId::det_reverse_harmonic: return "det_reverse_harmonic";
    case ResultId::det_reverse_arithmetic: return "det_reverse_arithmetic";
    case ResultId::det_gm_identity_bound: return "det_gm_identity_bound";
    case ResultId::det_gm_am_note: return "det_gm_am_note";
    case ResultId::sv_reverse_upper: return "sv_reverse_upper";
    case ResultId::sv_reverse_lower: return "sv_reverse_lower";
    case ResultId::sv_reverse_upper_ad: return "sv_reverse_upper_ad";
    case ResultId::sv_reverse_lower_ad: return "sv_reverse_lower_ad";
    case ResultId::norm_reverse_upper: return "norm_reverse_upper";
    case ResultId::norm_reverse_lower: return "norm_reverse_lower";
    case ResultId::norm_reverse_upper_ad: return "norm_reverse_upper_ad";
    case ResultId::norm_reverse_lower_ad: return "norm_reverse_lower_ad";
    case ResultId::norm_gm_identity_bound: return "norm_gm_identity_bound";
    case ResultId::re_inverse_bound: return "re_inverse_bound";
    case ResultId::re_inverse_reverse: return "re_inverse_reverse";
    case ResultId::bhatia_kittaneh: return "bhatia_kittaneh";
    case ResultId::choi: return "choi";
    case ResultId::bakherad_equivalence: return "bakherad_equivalence";
    case ResultId::ostrowski_taussky: return "ostrowski_taussky";
    case ResultId::det_sector_reverse: return "det_sector_reverse";
    case ResultId::fan_hoffman: return "fan_hoffman";
    case ResultId::drury_lin: return "drury_lin";
    case ResultId::re_norm_bound: return "re_norm_bound";
  }
  return "unknown";
}

struct CertificateParams {
  std::optional<double> v;
  std::optional<double> alpha;
  std::optional<double> m_bound;
  std::optional<double> big_m_bound;
  std::optional<double> h;
  std::optional<double> kantorovich;
  std::optional<double> factor;  // log-domain for determinant results
  std::optional<std::string> map_kind;
  std::optional<std::string> norm_kind;
  std::optional<int> j;  // singular-value index, 1-based
};

struct Certificate {
  ResultId id;
  CertificateParams params;
  double margin = 0.0;
  bool pass = false;
  bool log_domain = false;
  std::string interpretation_notes;
};

}  // namespace sectoria

#pragma once

// Accretivity and sectoriality analysis. The minimal sector half-angle of an
// accretive A is computed algebraically as arctan ||R^{-1/2} (Im A) R^{-1/2}||_2
// with R = Re A, which is the least alpha satisfying +-Im A <= tan(alpha) Re A
// in the Loewner order. Numerical-range boundary sampling is kept for reports
// and plots only.

#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include "sectoria/matrix.hpp"

namespace sectoria {

// Positive definiteness threshold used for accretivity decisions.
inline bool hermitian_positive_definite(const RealVector& ascending_eigs) {
  const double lo = ascending_eigs[0];
  const double hi = ascending_eigs[ascending_eigs.size() - 1];
  return lo > 1e-12 * std::max(std::abs(lo), std::abs(hi));
}

inline bool is_accretive(const Matrix& a) {
  Matrix re = hermitian_part(a);
  return hermitian_positive_definite(hermitian_eig(re).eigenvalues);
}

// Minimal alpha with W(A) inside the sector of half-angle alpha.
inline double sector_angle(const Matrix& a) {
  auto [re, im] = cartesian_decompose(a);
  HermitianEig re_eig = hermitian_eig(re);
  if (!hermitian_positive_definite(re_eig.eigenvalues)) {
    throw NotAccretiveError("sector_angle: real part is not positive definite");
  }
  RealVector inv_sqrt(re_eig.eigenvalues.size());
  for (Eigen::Index i = 0; i < inv_sqrt.size(); ++i) {
    inv_sqrt[i] = 1.0 / std::sqrt(re_eig.eigenvalues[i]);
  }
  Matrix s = re_eig.vectors * inv_sqrt.asDiagonal() * re_eig.vectors.adjoint();
  Matrix t = s * im * s;
  HermitianEig t_eig = hermitian_eig(Matrix((t + t.adjoint()) / 2.0));
  const double top = std::max(std::abs(t_eig.eigenvalues[0]),
                              std::abs(t_eig.eigenvalues[t_eig.eigenvalues.size() - 1]));
  return std::atan(top);
}

inline bool is_sector(const Matrix& a, double alpha) {
  if (!(alpha >= 0.0 && alpha < M_PI / 2.0)) {
    throw std::invalid_argument("is_sector: alpha must lie in [0, pi/2)");
  }
  if (!is_accretive(a)) return false;
  return sector_angle(a) <= alpha + 1e-10;
}

struct SectorProfile {
  bool accretive = false;
  std::optional<double> alpha;                        // present iff accretive
  std::optional<std::pair<double, double>> re_bounds;       // (m, M) of Re A
  std::optional<std::pair<double, double>> re_inv_bounds;   // (m, M) of Re(A^-1)
};

inline SectorProfile sector_profile(const Matrix& a) {
  SectorProfile out;
  Matrix re = hermitian_part(a);
  HermitianEig re_eig = hermitian_eig(re);
  out.accretive = hermitian_positive_definite(re_eig.eigenvalues);
  if (!out.accretive) return out;
  out.re_bounds = {re_eig.eigenvalues[0], re_eig.eigenvalues[re_eig.eigenvalues.size() - 1]};
  out.alpha = sector_angle(a);
  Matrix inv = a.partialPivLu().solve(Matrix::Identity(a.rows(), a.cols()));
  HermitianEig inv_eig = hermitian_eig(hermitian_part(inv));
  out.re_inv_bounds = {inv_eig.eigenvalues[0],
                       inv_eig.eigenvalues[inv_eig.eigenvalues.size() - 1]};
  return out;
}

// Boundary samples of the numerical range: for each direction theta the top
// eigenvector x of Re(e^{-i theta} A) gives the support point x* A x. Does
// not require accretivity.
inline std::vector<Complex> numerical_range_boundary(const Matrix& a, int n_theta) {
  require_square(a, "numerical_range_boundary");
  require_finite(a, "numerical_range_boundary");
  if (n_theta < 3) {
    throw std::invalid_argument("numerical_range_boundary: need at least 3 directions");
  }
  std::vector<Complex> points;
  points.reserve(static_cast<size_t>(n_theta));
  for (int k = 0; k < n_theta; ++k) {
    const double theta = 2.0 * M_PI * k / n_theta;
    const Complex phase = std::polar(1.0, -theta);
    Matrix rotated = hermitian_part(phase * a);
    HermitianEig eig = hermitian_eig(rotated);
    Eigen::VectorXcd x = eig.vectors.col(eig.vectors.cols() - 1);
    x.normalize();
    points.push_back((x.adjoint() * a * x)(0, 0));
  }
  return points;
}

}  // namespace sectoria

#pragma once

// Seeded generators for the randomized certification sweeps: Haar-like
// unitaries, PD matrices with prescribed spectral range, sector matrices with
// an exact target angle, and accretive-dissipative matrices. The sector
// construction A = H + i tan(alpha) H^{1/2} C H^{1/2} with Hermitian C,
// ||C||_2 = 1 hits the target angle exactly: the congruence by H^{-1/2}
// reduces the angle computation to tan(alpha) C.

#include <cstdint>
#include <string>
#include <vector>

#include "sectoria/matrix.hpp"
#include "sectoria/positive_maps.hpp"
#include "sectoria/rng.hpp"
#include "sectoria/sector.hpp"

namespace sectoria {

struct EnsembleSpec {
  int n = 2;
  double alpha_target = 0.0;  // radians in [0, pi/2)
  double re_lo = 0.5;
  double re_hi = 2.0;
  std::uint64_t seed = 0;
  bool exact_angle = true;

  void validate() const {
    if (n < 1) throw std::invalid_argument("EnsembleSpec: dimension must be positive");
    if (!(alpha_target >= 0.0 && alpha_target < M_PI / 2.0)) {
      throw std::invalid_argument("EnsembleSpec: alpha_target must lie in [0, pi/2)");
    }
    if (!(re_lo > 0.0 && re_lo <= re_hi)) {
      throw std::invalid_argument("EnsembleSpec: need 0 < re_lo <= re_hi");
    }
  }
};

inline Matrix random_gaussian(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_gaussian: dimension must be positive");
  Rng rng(seed);
  Matrix g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g(i, j) = rng.complex_normal();
  }
  return g;
}

// Haar-like unitary via QR of a complex Gaussian sample. The R diagonal is
// rotated to the positive real axis so the factorization (hence the output)
// is unique and deterministic.
inline Matrix random_unitary(int n, std::uint64_t seed) {
  Matrix g = random_gaussian(n, seed);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    q.col(j) *= (mag > 0.0) ? std::conj(d) / mag : Complex(1.0, 0.0);
  }
  return q;
}

inline Matrix random_hermitian(int n, std::uint64_t seed) {
  Matrix g = random_gaussian(n, seed);
  return (g + g.adjoint()) / 2.0;
}

// U diag(lambda) U* with lambda uniform in [lo, hi]; both endpoints are
// attained (n >= 2) so spectral_bounds recovers (lo, hi).
inline Matrix random_psd(int n, double lo, double hi, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_psd: dimension must be positive");
  if (!(lo > 0.0 && lo <= hi)) throw std::invalid_argument("random_psd: need 0 < lo <= hi");
  if (lo == hi) return lo * Matrix::Identity(n, n);
  Rng rng(derive_seed(seed, {1}));
  RealVector lam(n);
  lam[0] = lo;
  if (n > 1) lam[n - 1] = hi;
  for (int i = 1; i + 1 < n; ++i) lam[i] = rng.uniform(lo, hi);
  Matrix u = random_unitary(n, derive_seed(seed, {2}));
  Matrix out = u * lam.asDiagonal() * u.adjoint();
  return (out + out.adjoint()) / 2.0;
}

inline Matrix random_sector(const EnsembleSpec& spec) {
  spec.validate();
  Matrix h = random_psd(spec.n, spec.re_lo, spec.re_hi, derive_seed(spec.seed, {11}));
  if (spec.alpha_target == 0.0) return h;
  Rng rng(derive_seed(spec.seed, {12}));
  Matrix c = random_hermitian(spec.n, derive_seed(spec.seed, {13}));
  double top = spectral_norm(c);
  if (top < 1e-300) c = Matrix::Identity(spec.n, spec.n), top = 1.0;
  c /= top;
  if (!spec.exact_angle) c *= rng.uniform01();
  Matrix h_sqrt = psd_power(h, 0.5);
  Matrix middle = h_sqrt * c * h_sqrt;
  middle = (middle + middle.adjoint()) / 2.0;
  return h + Complex(0.0, 1.0) * std::tan(spec.alpha_target) * middle;
}

// Both Re and Im positive definite; the sector construction with a PD core C,
// ||C||_2 = 1, pins the angle at pi/4.
inline Matrix random_accretive_dissipative(int n, double lo, double hi, std::uint64_t seed) {
  if (!(lo > 0.0 && lo <= hi)) {
    throw std::invalid_argument("random_accretive_dissipative: need 0 < lo <= hi");
  }
  Matrix h = random_psd(n, lo, hi, derive_seed(seed, {21}));
  Matrix k = random_psd(n, 1.0, 2.0, derive_seed(seed, {22}));
  Matrix c = k / spectral_norm(k);
  Matrix h_sqrt = psd_power(h, 0.5);
  Matrix middle = h_sqrt * c * h_sqrt;
  middle = (middle + middle.adjoint()) / 2.0;
  return h + Complex(0.0, 1.0) * middle;
}

// Random member of the positive unital map family on M_n.
inline MapSpec random_map(MapKind kind, int n, std::uint64_t seed) {
  Rng rng(derive_seed(seed, {31}));
  switch (kind) {
    case MapKind::identity:
      return MapSpec::identity(n);
    case MapKind::pinching: {
      if (n == 1) return MapSpec::pinching(1, {{0}});
      // split at a random cut into two blocks
      const int cut = 1 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(n - 1));
      std::vector<int> left, right;
      for (int i = 0; i < cut; ++i) left.push_back(i);
      for (int i = cut; i < n; ++i) right.push_back(i);
      return MapSpec::pinching(n, {left, right});
    }
    case MapKind::compression: {
      const int k = (n == 1) ? 1 : 1 + static_cast<int>(rng.next_u64() %
                                                        static_cast<std::uint64_t>(n - 1));
      Matrix u = random_unitary(n, derive_seed(seed, {32}));
      return MapSpec::compression(u.leftCols(k));
    }
    case MapKind::normalized_trace: {
      const int k = 1 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(n));
      return MapSpec::normalized_trace(n, k);
    }
    case MapKind::unitary_mixture: {
      const double w = 0.1 + 0.8 * rng.uniform01();
      std::vector<Matrix> us;
      us.push_back(random_unitary(n, derive_seed(seed, {33})));
      us.push_back(random_unitary(n, derive_seed(seed, {34})));
      return MapSpec::unitary_mixture({w, 1.0 - w}, std::move(us));
    }
  }
  throw std::invalid_argument("random_map: unknown kind");
}

}  // namespace sectoria

#pragma once

// A finite family of positive unital linear maps: identity, pinching to a
// block partition, compression by an isometry, normalized trace, and mixtures
// of unitary conjugations. These quantify "for every positive unital linear
// map" in the reverse inequalities over structurally distinct family members.

#include <numeric>
#include <string>
#include <vector>

#include "sectoria/certificate.hpp"
#include "sectoria/matrix.hpp"

namespace sectoria {

enum class MapKind { identity, pinching, compression, normalized_trace, unitary_mixture };

inline const char* map_kind_name(MapKind k) {
  switch (k) {
    case MapKind::identity: return "identity";
    case MapKind::pinching: return "pinching";
    case MapKind::compression: return "compression";
    case MapKind::normalized_trace: return "normalized_trace";
    case MapKind::unitary_mixture: return "unitary_mixture";
  }
  return "unknown";
}

class MapSpec {
 public:
  static MapSpec identity(int n) {
    MapSpec phi(MapKind::identity, n, n);
    return phi;
  }

  // Blocks are 0-based index sets forming a partition of {0, ..., n-1}.
  static MapSpec pinching(int n, std::vector<std::vector<int>> blocks) {
    MapSpec phi(MapKind::pinching, n, n);
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (const auto& block : blocks) {
      if (block.empty()) throw std::invalid_argument("pinching: empty block");
      for (int idx : block) {
        if (idx < 0 || idx >= n || seen[static_cast<size_t>(idx)]) {
          throw std::invalid_argument("pinching: blocks must partition the index set");
        }
        seen[static_cast<size_t>(idx)] = true;
      }
    }
    for (bool s : seen) {
      if (!s) throw std::invalid_argument("pinching: blocks must cover every index");
    }
    phi.blocks_ = std::move(blocks);
    return phi;
  }

  static MapSpec compression(Matrix isometry) {
    const int n = static_cast<int>(isometry.rows());
    const int k = static_cast<int>(isometry.cols());
    if (k < 1 || k > n) throw std::invalid_argument("compression: isometry must be n x k, k <= n");
    Matrix gram = isometry.adjoint() * isometry;
    if (max_abs_entry(gram - Matrix::Identity(k, k)) > 1e-10) {
      throw std::invalid_argument("compression: columns are not orthonormal");
    }
    MapSpec phi(MapKind::compression, n, k);
    phi.isometry_ = std::move(isometry);
    return phi;
  }

  static MapSpec normalized_trace(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("normalized_trace: bad dimensions");
    return MapSpec(MapKind::normalized_trace, n, k);
  }

  static MapSpec unitary_mixture(std::vector<double> weights, std::vector<Matrix> unitaries) {
    if (weights.empty() || weights.size() != unitaries.size()) {
      throw std::invalid_argument("unitary_mixture: need matching weights and unitaries");
    }
    double sum = 0.0;
    for (double w : weights) {
      if (w < 0.0) throw std::invalid_argument("unitary_mixture: weights must be nonnegative");
      sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
      throw std::invalid_argument("unitary_mixture: weights must sum to 1");
    }
    const int n = static_cast<int>(unitaries.front().rows());
    for (const Matrix& u : unitaries) {
      require_square(u, "unitary_mixture");
      if (u.rows() != n) throw DimensionError("unitary_mixture: dimension mismatch");
      if (max_abs_entry(u.adjoint() * u - Matrix::Identity(n, n)) > 1e-10) {
        throw std::invalid_argument("unitary_mixture: member is not unitary");
      }
    }
    MapSpec phi(MapKind::unitary_mixture, n, n);
    phi.weights_ = std::move(weights);
    phi.unitaries_ = std::move(unitaries);
    return phi;
  }

  MapKind kind() const { return kind_; }
  int input_dim() const { return n_; }
  int output_dim() const { return k_; }
  std::string name() const { return map_kind_name(kind_); }

  Matrix apply(const Matrix& x) const {
    require_square(x, "MapSpec::apply");
    if (x.rows() != n_) {
      throw DimensionError("MapSpec::apply: expected dimension " + std::to_string(n_) +
                           ", got " + std::to_string(x.rows()));
    }
    switch (kind_) {
      case MapKind::identity:
        return x;
      case MapKind::pinching: {
        Matrix out = Matrix::Zero(n_, n_);
        for (const auto& block : blocks_) {
          for (int i : block) {
            for (int j : block) out(i, j) = x(i, j);
          }
        }
        return out;
      }
      case MapKind::compression:
        return isometry_.adjoint() * x * isometry_;
      case MapKind::normalized_trace:
        return (x.trace() / static_cast<double>(n_)) * Matrix::Identity(k_, k_);
      case MapKind::unitary_mixture: {
        Matrix out = Matrix::Zero(n_, n_);
        for (size_t i = 0; i < unitaries_.size(); ++i) {
          out += weights_[i] * (unitaries_[i].adjoint() * x * unitaries_[i]);
        }
        return out;
      }
    }
    throw std::logic_error("MapSpec::apply: unknown kind");
  }

 private:
  MapSpec(MapKind kind, int n, int k) : kind_(kind), n_(n), k_(k) {}

  MapKind kind_;
  int n_;
  int k_;
  std::vector<std::vector<int>> blocks_;
  Matrix isometry_;
  std::vector<double> weights_;
  std::vector<Matrix> unitaries_;
};

inline Matrix apply(const MapSpec& phi, const Matrix& x) { return phi.apply(x); }

// Choi inequality Phi(P)^{-1} <= Phi(P^{-1}) for positive definite P.
inline Certificate check_choi(const MapSpec& phi, const Matrix& p, double loewner_tol = 1e-9) {
  Matrix p_inv = psd_power(p, -1.0);
  Matrix phi_p = phi.apply(p);
  Matrix phi_p_herm = (phi_p + phi_p.adjoint()) / 2.0;
  HermitianEig eig = hermitian_eig(phi_p_herm);
  if (eig.eigenvalues[0] <= 0.0) {
    throw SingularError("check_choi: Phi(P) is not invertible");
  }
  Matrix phi_p_inv = psd_power(phi_p_herm, -1.0);
  Matrix phi_of_inv = phi.apply(p_inv);
  LoewnerResult cmp = loewner_leq(phi_p_inv, phi_of_inv, loewner_tol);
  Certificate cert;
  cert.id = ResultId::choi;
  cert.params.map_kind = phi.name();
  cert.margin = cmp.margin;
  cert.pass = cmp.holds;
  return cert;
}

}  // namespace sectoria

#pragma once

// Dense complex matrix primitives: Cartesian decomposition, Hermitian
// eigensolves, fractional PSD powers, singular values, log-determinants,
// Loewner comparisons and unitarily invariant norms. Everything else in
// the library is built on top of these.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace sectoria {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotHermitianError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotPsdError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotAccretiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require_square(const Matrix& a, const char* who) {
  if (a.rows() != a.cols() || a.rows() < 1) {
    throw DimensionError(std::string(who) + ": matrix must be square and nonempty, got " +
                         std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

inline void require_finite(const Matrix& a, const char* who) {
  if (!a.allFinite()) {
    throw std::invalid_argument(std::string(who) + ": matrix has non-finite entries");
  }
}

inline void require_same_dim(const Matrix& a, const Matrix& b, const char* who) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(who) + ": dimension mismatch " +
                         std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
                         std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

inline double max_abs_entry(const Matrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

// A = re + i*im with re = (A+A*)/2 and im = (A-A*)/(2i), both Hermitian.
inline std::pair<Matrix, Matrix> cartesian_decompose(const Matrix& a) {
  require_square(a, "cartesian_decompose");
  require_finite(a, "cartesian_decompose");
  Matrix re = (a + a.adjoint()) / 2.0;
  Matrix im = (a - a.adjoint()) / Complex(0.0, 2.0);
  return {std::move(re), std::move(im)};
}

inline Matrix hermitian_part(const Matrix& a) {
  require_square(a, "hermitian_part");
  return (a + a.adjoint()) / 2.0;
}

inline Matrix skew_component(const Matrix& a) {
  require_square(a, "skew_component");
  return (a - a.adjoint()) / Complex(0.0, 2.0);
}

struct HermitianEig {
  RealVector eigenvalues;  // ascending
  Matrix vectors;          // unitary, columns are eigenvectors
};

// Input is Hermitized ((H+H*)/2) before factorization; inputs further than
// 1e-10 (relative) from Hermitian are rejected.
inline HermitianEig hermitian_eig(const Matrix& h) {
  require_square(h, "hermitian_eig");
  require_finite(h, "hermitian_eig");
  const double asym = max_abs_entry(h - h.adjoint());
  if (asym > 1e-10 * (1.0 + max_abs_entry(h))) {
    throw NotHermitianError("hermitian_eig: input is not Hermitian (asymmetry " +
                            std::to_string(asym) + ")");
  }
  Matrix sym = (h + h.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    Matrix resid = sym * Matrix::Identity(sym.rows(), sym.cols());
    throw NumericalError("hermitian_eig: eigensolver did not converge, residual norm " +
                         std::to_string(resid.norm()));
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

// U diag(f(lambda)) U* for Hermitian input.
template <typename Fn>
inline Matrix hermitian_function(const Matrix& h, Fn&& f) {
  HermitianEig eig = hermitian_eig(h);
  RealVector mapped(eig.eigenvalues.size());
  for (Eigen::Index i = 0; i < mapped.size(); ++i) mapped[i] = f(eig.eigenvalues[i]);
  Matrix out = eig.vectors * mapped.asDiagonal() * eig.vectors.adjoint();
  return (out + out.adjoint()) / 2.0;
}

// H^t for PSD H. Eigenvalues in [-1e-10*||H||, 0) are clamped to zero;
// anything more negative is treated as genuinely indefinite. Negative t
// requires a definite spectrum.
inline Matrix psd_power(const Matrix& h, double t) {
  HermitianEig eig = hermitian_eig(h);
  const double scale = std::max(std::abs(eig.eigenvalues[0]),
                                std::abs(eig.eigenvalues[eig.eigenvalues.size() - 1]));
  const double clamp = 1e-10 * scale;
  RealVector lam = eig.eigenvalues;
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    if (lam[i] < -clamp) {
      throw NotPsdError("psd_power: eigenvalue " + std::to_string(lam[i]) +
                        " below PSD tolerance " + std::to_string(-clamp));
    }
    if (lam[i] < 0.0) lam[i] = 0.0;
    if (lam[i] == 0.0 && t < 0.0) {
      throw SingularError("psd_power: negative power of a singular matrix");
    }
  }
  RealVector powered(lam.size());
  for (Eigen::Index i = 0; i < lam.size(); ++i) powered[i] = std::pow(lam[i], t);
  Matrix out = eig.vectors * powered.asDiagonal() * eig.vectors.adjoint();
  return (out + out.adjoint()) / 2.0;
}

// Descending singular values.
inline RealVector singular_values(const Matrix& a) {
  require_square(a, "singular_values");
  require_finite(a, "singular_values");
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues();
}

inline double spectral_norm(const Matrix& a) {
  return singular_values(a)[0];
}

// log|det A| via pivoted LU; -inf for singular input.
inline double log_abs_det(const Matrix& a) {
  require_square(a, "log_abs_det");
  require_finite(a, "log_abs_det");
  Eigen::PartialPivLU<Matrix> lu(a);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    const double d = std::abs(lu.matrixLU()(i, i));
    if (d == 0.0) return -std::numeric_limits<double>::infinity();
    sum += std::log(d);
  }
  return sum;
}

struct LoewnerResult {
  bool holds = false;
  double margin = 0.0;  // lambda_min(Y - X)
};

// X <= Y in the Loewner order, certified by margin = lambda_min(Y - X).
inline LoewnerResult loewner_leq(const Matrix& x, const Matrix& y, double tol = 1e-9) {
  require_same_dim(x, y, "loewner_leq");
  HermitianEig eig = hermitian_eig(Matrix(y - x));
  const double lo = eig.eigenvalues[0];
  const double hi = eig.eigenvalues[eig.eigenvalues.size() - 1];
  const double norm = std::max(std::abs(lo), std::abs(hi));
  return {lo >= -tol * (1.0 + norm), lo};
}

struct NormKind {
  enum class Family { KyFan, Schatten } family = Family::KyFan;
  int k = 1;        // Ky Fan order
  double p = 2.0;   // Schatten exponent, may be +inf

  static NormKind ky_fan(int k) { return {Family::KyFan, k, 0.0}; }
  static NormKind schatten(double p) { return {Family::Schatten, 0, p}; }

  std::string name() const {
    if (family == Family::KyFan) return "ky_fan_" + std::to_string(k);
    if (std::isinf(p)) return "schatten_inf";
    // trim trailing zeros for readable ids
    std::string s = std::to_string(p);
    while (s.size() > 1 && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    return "schatten_" + s;
  }
};

inline double unitarily_invariant_norm(const Matrix& a, const NormKind& kind) {
  RealVector s = singular_values(a);
  if (kind.family == NormKind::Family::KyFan) {
    if (kind.k < 1 || kind.k > s.size()) {
      throw std::invalid_argument("unitarily_invariant_norm: Ky Fan order " +
                                  std::to_string(kind.k) + " out of range for dimension " +
                                  std::to_string(s.size()));
    }
    return s.head(kind.k).sum();
  }
  if (std::isinf(kind.p)) return s[0];
  if (kind.p < 1.0) {
    throw std::invalid_argument("unitarily_invariant_norm: Schatten exponent must be >= 1");
  }
  double sum = 0.0;
  for (Eigen::Index j = 0; j < s.size(); ++j) sum += std::pow(s[j], kind.p);
  return std::pow(sum, 1.0 / kind.p);
}

}  // namespace sectoria

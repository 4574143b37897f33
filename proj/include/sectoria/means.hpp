#pragma once

// Weighted operator means. Arithmetic and harmonic means are closed-form for
// accretive inputs. The geometric mean of accretive matrices is the improper
// integral
//   A #_v B = sin(v pi)/pi * int_0^inf s^{v-1} (A^{-1} + s B^{-1})^{-1} ds,
// evaluated by splitting at s = 1. The head segment [0,1] carries the
// integrable endpoint weight s^{v-1} and is handled by a Gauss-Jacobi rule;
// the tail maps onto the head of the mirrored mean B #_{1-v} A under
// s -> 1/s, so there is no truncation error. Node counts double until the
// relative Frobenius change drops below the requested tolerance.

#include <cmath>
#include <string>

#include "sectoria/matrix.hpp"
#include "sectoria/quadrature.hpp"
#include "sectoria/sector.hpp"

namespace sectoria {

struct MeanResult {
  Matrix value;
  enum class Method { closed_form_psd, integral_accretive, endpoint } method =
      Method::integral_accretive;
  int nodes_used = 0;               // function evaluations at the accepted level
  double convergence_estimate = 0;  // relative Frobenius change at final refinement
  bool converged = true;

  std::string method_name() const {
    switch (method) {
      case Method::closed_form_psd: return "closed_form_psd";
      case Method::integral_accretive: return "integral_accretive";
      case Method::endpoint: return "endpoint";
    }
    return "unknown";
  }
};

inline void require_weight(double v, const char* who) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw std::invalid_argument(std::string(who) + ": weight must lie in [0,1], got " +
                                std::to_string(v));
  }
}

inline Matrix arithmetic_mean(const Matrix& a, const Matrix& b, double v) {
  require_same_dim(a, b, "arithmetic_mean");
  require_weight(v, "arithmetic_mean");
  return (1.0 - v) * a + v * b;
}

inline Matrix harmonic_mean(const Matrix& a, const Matrix& b, double v) {
  require_same_dim(a, b, "harmonic_mean");
  require_weight(v, "harmonic_mean");
  if (!is_accretive(a) || !is_accretive(b)) {
    throw NotAccretiveError("harmonic_mean: inputs must be accretive");
  }
  const Matrix eye = Matrix::Identity(a.rows(), a.cols());
  Matrix combo = (1.0 - v) * a.partialPivLu().solve(eye) + v * b.partialPivLu().solve(eye);
  return combo.partialPivLu().solve(eye);
}

// A^{1/2} (A^{-1/2} B A^{-1/2})^v A^{1/2} for Hermitian A > 0, B >= 0.
inline Matrix geometric_mean_psd(const Matrix& a, const Matrix& b, double v) {
  require_same_dim(a, b, "geometric_mean_psd");
  require_weight(v, "geometric_mean_psd");
  Matrix a_sqrt = psd_power(a, 0.5);
  Matrix a_inv_sqrt = psd_power(a, -0.5);  // throws SingularError when A is singular
  Matrix core = a_inv_sqrt * b * a_inv_sqrt;
  Matrix powered = psd_power(Matrix((core + core.adjoint()) / 2.0), v);
  Matrix out = a_sqrt * powered * a_sqrt;
  return (out + out.adjoint()) / 2.0;
}

namespace detail {

// Head segment int_0^1 s^{w-1} (X^{-1} + s Y^{-1})^{-1} ds at a fixed node count.
inline Matrix mean_head_segment(const Matrix& x_inv, const Matrix& y_inv, double w,
                                int order) {
  const QuadratureRule& rule = gauss_jacobi_unit(order, w - 1.0);
  const Eigen::Index n = x_inv.rows();
  Matrix sum = Matrix::Zero(n, n);
  const Matrix eye = Matrix::Identity(n, n);
  for (int i = 0; i < order; ++i) {
    Matrix shifted = x_inv + rule.nodes[i] * y_inv;
    sum += rule.weights[i] * shifted.partialPivLu().solve(eye);
  }
  return sum;
}

}  // namespace detail

inline MeanResult geometric_mean_accretive(const Matrix& a, const Matrix& b, double v,
                                           double rtol = 1e-10) {
  require_same_dim(a, b, "geometric_mean_accretive");
  require_weight(v, "geometric_mean_accretive");
  if (!is_accretive(a) || !is_accretive(b)) {
    throw NotAccretiveError("geometric_mean_accretive: inputs must be accretive");
  }
  // sin(v pi) vanishes at the endpoints; the continuity limits are A and B.
  if (v == 0.0) return {a, MeanResult::Method::endpoint, 0, 0.0, true};
  if (v == 1.0) return {b, MeanResult::Method::endpoint, 0, 0.0, true};

  const Eigen::Index n = a.rows();
  const Matrix eye = Matrix::Identity(n, n);
  Matrix a_inv = a.partialPivLu().solve(eye);
  Matrix b_inv = b.partialPivLu().solve(eye);
  const double prefactor = std::sin(v * M_PI) / M_PI;

  constexpr int kMaxNodesPerSegment = 512;
  MeanResult result;
  result.method = MeanResult::Method::integral_accretive;
  Matrix previous;
  bool have_previous = false;
  for (int order = 8; order <= kMaxNodesPerSegment; order *= 2) {
    Matrix head = detail::mean_head_segment(a_inv, b_inv, v, order);
    Matrix tail = detail::mean_head_segment(b_inv, a_inv, 1.0 - v, order);
    Matrix current = prefactor * (head + tail);
    result.nodes_used = 2 * order;
    if (have_previous) {
      const double denom = current.norm();
      result.convergence_estimate =
          denom > 0.0 ? (current - previous).norm() / denom : (current - previous).norm();
      if (result.convergence_estimate < rtol) {
        result.value = std::move(current);
        result.converged = true;
        return result;
      }
    }
    previous = std::move(current);
    have_previous = true;
  }
  result.value = std::move(previous);
  result.converged = false;  // node cap reached; estimate reports what was achieved
  return result;
}

}  // namespace sectoria

#pragma once

// Gauss-Jacobi rules on the unit interval for the weight s^beta, beta > -1:
//   int_0^1 s^beta f(s) ds  ~=  sum_i weights[i] * f(nodes[i]).
// Nodes and weights come from the Golub-Welsch eigenproblem of the Jacobi
// recurrence for the weight (1+x)^beta on [-1,1], mapped to [0,1]. Rules are
// cached per (order, beta) since the adaptive mean evaluation reuses them.

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace sectoria {

struct QuadratureRule {
  std::vector<double> nodes;    // in (0, 1)
  std::vector<double> weights;  // positive, sum to 1/(beta+1)
};

namespace detail {

inline QuadratureRule compute_gauss_jacobi_unit(int order, double beta) {
  // Monic Jacobi recurrence coefficients for weight (1-x)^a (1+x)^b, a = 0.
  const double a = 0.0, b = beta;
  Eigen::VectorXd diag(order), sub(order > 1 ? order - 1 : 0);
  diag[0] = (b - a) / (a + b + 2.0);
  for (int k = 1; k < order; ++k) {
    const double s = 2.0 * k + a + b;
    diag[k] = (b * b - a * a) / (s * (s + 2.0));
    const double num = 4.0 * k * (k + a) * (k + b) * (k + a + b);
    const double den = s * s * (s + 1.0) * (s - 1.0);
    sub[k - 1] = std::sqrt(num / den);
  }
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(order, order);
  jacobi.diagonal() = diag;
  if (order > 1) {
    jacobi.diagonal(1) = sub;
    jacobi.diagonal(-1) = sub;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("gauss_jacobi_unit: eigensolver failed");
  }
  // mu0 = int_-1^1 (1+x)^b dx = 2^{b+1}/(b+1); the [0,1] map contributes 2^{-(b+1)}.
  const double mu0 = std::pow(2.0, b + 1.0) / (b + 1.0);
  const double map_factor = std::pow(2.0, -(b + 1.0));
  QuadratureRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  for (int i = 0; i < order; ++i) {
    rule.nodes[i] = (1.0 + solver.eigenvalues()[i]) / 2.0;
    const double first = solver.eigenvectors()(0, i);
    rule.weights[i] = map_factor * mu0 * first * first;
  }
  return rule;
}

}  // namespace detail

inline const QuadratureRule& gauss_jacobi_unit(int order, double beta) {
  if (order < 1) throw std::invalid_argument("gauss_jacobi_unit: order must be positive");
  if (!(beta > -1.0)) throw std::invalid_argument("gauss_jacobi_unit: beta must exceed -1");
  static std::mutex cache_mutex;
  static std::map<std::pair<int, double>, QuadratureRule> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto key = std::make_pair(order, beta);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, detail::compute_gauss_jacobi_unit(order, beta)).first;
  }
  return it->second;
}

}  // namespace sectoria

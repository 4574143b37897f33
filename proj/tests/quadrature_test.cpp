#include <gtest/gtest.h>

#include <cmath>

#include "sectoria/quadrature.hpp"

using namespace sectoria;

// int_0^1 s^beta s^k ds = 1/(beta+k+1); an N-point rule must integrate
// polynomials up to degree 2N-1 exactly.
TEST(GaussJacobi, MomentsExactUpToRuleDegree) {
  for (double beta : {-0.9, -0.6, -0.5, 0.0, 0.25}) {
    const QuadratureRule& rule = gauss_jacobi_unit(8, beta);
    for (int k = 0; k <= 15; ++k) {
      double sum = 0.0;
      for (size_t i = 0; i < rule.nodes.size(); ++i) {
        sum += rule.weights[i] * std::pow(rule.nodes[i], k);
      }
      EXPECT_NEAR(sum, 1.0 / (beta + k + 1.0), 1e-12) << "beta=" << beta << " k=" << k;
    }
  }
}

TEST(GaussJacobi, ReducesToGaussLegendre) {
  const QuadratureRule& rule = gauss_jacobi_unit(2, 0.0);
  const double lo = (1.0 - 1.0 / std::sqrt(3.0)) / 2.0;
  const double hi = (1.0 + 1.0 / std::sqrt(3.0)) / 2.0;
  EXPECT_NEAR(rule.nodes[0], lo, 1e-14);
  EXPECT_NEAR(rule.nodes[1], hi, 1e-14);
  EXPECT_NEAR(rule.weights[0], 0.5, 1e-14);
  EXPECT_NEAR(rule.weights[1], 0.5, 1e-14);
}

TEST(GaussJacobi, SingularWeightIntegral) {
  // int_0^1 s^{-1/2} e^s ds, reference value from high-precision quadrature
  const double reference = 2.9253034918143632035;
  const QuadratureRule& rule = gauss_jacobi_unit(16, -0.5);
  double sum = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * std::exp(rule.nodes[i]);
  }
  EXPECT_NEAR(sum, reference, 1e-13);
}

TEST(GaussJacobi, NodesInsideOpenInterval) {
  for (double beta : {-0.9, -0.5, 0.0}) {
    const QuadratureRule& rule = gauss_jacobi_unit(32, beta);
    for (double s : rule.nodes) {
      EXPECT_GT(s, 0.0);
      EXPECT_LT(s, 1.0);
    }
    for (double w : rule.weights) EXPECT_GT(w, 0.0);
  }
}

TEST(GaussJacobi, RejectsBadParameters) {
  EXPECT_THROW(gauss_jacobi_unit(0, 0.0), std::invalid_argument);
  EXPECT_THROW(gauss_jacobi_unit(4, -1.0), std::invalid_argument);
}

#include <gtest/gtest.h>

#include "sectoria/ensembles.hpp"
#include "sectoria/matrix.hpp"
#include "test_util.hpp"

using namespace sectoria;
using test_util::max_diff;

TEST(CartesianDecompose, HermitianInputHasZeroImaginaryPart) {
  Matrix eye = Matrix::Identity(2, 2);
  auto [re, im] = cartesian_decompose(eye);
  EXPECT_LT(max_diff(re, eye), 1e-15);
  EXPECT_LT(max_abs_entry(im), 1e-15);
}

TEST(CartesianDecompose, ScalarSplitsIntoRealAndImaginary) {
  Matrix a(1, 1);
  a(0, 0) = Complex(1.0, 1.0);
  auto [re, im] = cartesian_decompose(a);
  EXPECT_DOUBLE_EQ(re(0, 0).real(), 1.0);
  EXPECT_DOUBLE_EQ(im(0, 0).real(), 1.0);
}

TEST(CartesianDecompose, PartsAreHermitianAndReconstruct) {
  Matrix a = random_gaussian(4, 99);
  auto [re, im] = cartesian_decompose(a);
  EXPECT_LT(max_diff(re, re.adjoint()), 1e-14);
  EXPECT_LT(max_diff(im, im.adjoint()), 1e-14);
  Matrix rebuilt = re + Complex(0, 1) * im;
  EXPECT_LT(max_diff(rebuilt, a) / (1.0 + max_abs_entry(a)), 1e-14);
}

TEST(CartesianDecompose, RejectsNonSquare) {
  Matrix a = Matrix::Zero(2, 3);
  EXPECT_THROW(cartesian_decompose(a), DimensionError);
}

TEST(HermitianEig, DiagonalSortsAscending) {
  Matrix h = Matrix::Zero(3, 3);
  h(0, 0) = 3.0;
  h(1, 1) = 1.0;
  h(2, 2) = 2.0;
  HermitianEig eig = hermitian_eig(h);
  EXPECT_NEAR(eig.eigenvalues[0], 1.0, 1e-14);
  EXPECT_NEAR(eig.eigenvalues[1], 2.0, 1e-14);
  EXPECT_NEAR(eig.eigenvalues[2], 3.0, 1e-14);
}

TEST(HermitianEig, PauliX) {
  Matrix h(2, 2);
  h << 0, 1, 1, 0;
  HermitianEig eig = hermitian_eig(h);
  EXPECT_NEAR(eig.eigenvalues[0], -1.0, 1e-14);
  EXPECT_NEAR(eig.eigenvalues[1], 1.0, 1e-14);
}

TEST(HermitianEig, TraceMatchesEigenvalueSum) {
  Matrix h = random_hermitian(6, 7);
  HermitianEig eig = hermitian_eig(h);
  EXPECT_NEAR(h.trace().real(), eig.eigenvalues.sum(), 1e-10);
}

TEST(HermitianEig, ReconstructionAndUnitarity) {
  Matrix h = random_hermitian(6, 11);
  HermitianEig eig = hermitian_eig(h);
  Matrix rebuilt = eig.vectors * eig.eigenvalues.asDiagonal() * eig.vectors.adjoint();
  EXPECT_LT((rebuilt - h).norm() / h.norm(), 1e-12);
  Matrix gram = eig.vectors.adjoint() * eig.vectors;
  EXPECT_LT(max_diff(gram, Matrix::Identity(6, 6)), 1e-12);
}

TEST(HermitianEig, RejectsNonHermitian) {
  Matrix a = random_gaussian(3, 5);
  a(0, 1) += Complex(1.0, 0.0);  // well beyond the tolerance
  EXPECT_THROW(hermitian_eig(a), NotHermitianError);
}

TEST(PsdPower, IdentityIsFixed) {
  Matrix eye = Matrix::Identity(3, 3);
  EXPECT_LT(max_diff(psd_power(eye, 0.37), eye), 1e-14);
}

TEST(PsdPower, DiagonalSquareRoot) {
  Matrix h = Matrix::Zero(2, 2);
  h(0, 0) = 4.0;
  h(1, 1) = 9.0;
  Matrix r = psd_power(h, 0.5);
  EXPECT_NEAR(r(0, 0).real(), 2.0, 1e-13);
  EXPECT_NEAR(r(1, 1).real(), 3.0, 1e-13);
}

TEST(PsdPower, ExponentAdditivity) {
  Matrix p = random_psd(5, 0.3, 4.0, 21);
  Matrix prod = psd_power(p, 0.3) * psd_power(p, 0.7);
  EXPECT_LT(max_diff(prod, p), 1e-10 * (1.0 + max_abs_entry(p)));
}

TEST(PsdPower, PowerOneIsIdentityMap) {
  Matrix p = random_psd(4, 0.5, 2.0, 22);
  EXPECT_LT((psd_power(p, 1.0) - p).norm() / p.norm(), 1e-12);
}

TEST(PsdPower, RejectsIndefiniteInput) {
  Matrix h = Matrix::Zero(2, 2);
  h(0, 0) = 1.0;
  h(1, 1) = -0.5;
  EXPECT_THROW(psd_power(h, 0.5), NotPsdError);
}

TEST(PsdPower, RejectsNegativePowerOfSingular) {
  Matrix h = Matrix::Zero(2, 2);
  h(0, 0) = 1.0;
  EXPECT_THROW(psd_power(h, -1.0), SingularError);
}

TEST(SingularValues, IdentityIsAllOnes) {
  RealVector s = singular_values(Matrix::Identity(3, 3));
  for (int j = 0; j < 3; ++j) EXPECT_NEAR(s[j], 1.0, 1e-14);
}

TEST(SingularValues, DiagonalModuli) {
  Matrix a = Matrix::Zero(2, 2);
  a(0, 0) = Complex(1.0, 1.0);
  RealVector s = singular_values(a);
  EXPECT_NEAR(s[0], std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(s[1], 0.0, 1e-14);
}

TEST(SingularValues, ProductMatchesAbsDeterminant) {
  Matrix a = random_gaussian(5, 31);
  RealVector s = singular_values(a);
  double log_prod = 0.0;
  for (int j = 0; j < 5; ++j) log_prod += std::log(s[j]);
  EXPECT_NEAR(log_prod, log_abs_det(a), 1e-8 * (1.0 + std::abs(log_prod)));
}

TEST(SingularValues, AdjointHasSameSingularValues) {
  Matrix a = random_gaussian(6, 32);
  RealVector s1 = singular_values(a);
  RealVector s2 = singular_values(Matrix(a.adjoint()));
  EXPECT_LT((s1 - s2).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(LogAbsDet, Identity) { EXPECT_NEAR(log_abs_det(Matrix::Identity(4, 4)), 0.0, 1e-14); }

TEST(LogAbsDet, DiagonalModuliProduct) {
  Matrix a = Matrix::Zero(2, 2);
  a(0, 0) = 2.0;
  a(1, 1) = Complex(1.0, 1.0);
  EXPECT_NEAR(log_abs_det(a), std::log(2.0 * std::sqrt(2.0)), 1e-14);
}

TEST(LogAbsDet, SingularGivesMinusInfinity) {
  Matrix a = Matrix::Zero(3, 3);
  a(0, 0) = 1.0;
  EXPECT_EQ(log_abs_det(a), -std::numeric_limits<double>::infinity());
}

TEST(LogAbsDet, MatchesSumOfLogSingularValues) {
  Matrix a = random_gaussian(6, 41);
  RealVector s = singular_values(a);
  double expected = 0.0;
  for (int j = 0; j < 6; ++j) expected += std::log(s[j]);
  EXPECT_NEAR(log_abs_det(a), expected, 1e-8 * (1.0 + std::abs(expected)));
}

TEST(LogAbsDet, MultiplicativeOnProducts) {
  for (std::uint64_t seed : {101, 102, 103, 104, 105}) {
    Matrix a = random_gaussian(5, seed);
    Matrix b = random_gaussian(5, seed + 1000);
    const double lhs = log_abs_det(Matrix(a * b));
    const double rhs = log_abs_det(a) + log_abs_det(b);
    EXPECT_NEAR(lhs, rhs, 1e-8 * (1.0 + std::abs(rhs)));
  }
}

TEST(LoewnerLeq, BasicOrdering) {
  Matrix eye = Matrix::Identity(2, 2);
  Matrix zero = Matrix::Zero(2, 2);
  LoewnerResult up = loewner_leq(zero, eye, 1e-9);
  EXPECT_TRUE(up.holds);
  EXPECT_NEAR(up.margin, 1.0, 1e-14);
  LoewnerResult down = loewner_leq(eye, zero, 1e-9);
  EXPECT_FALSE(down.holds);
  EXPECT_NEAR(down.margin, -1.0, 1e-14);
}

TEST(LoewnerLeq, ShiftedPsdComparison) {
  Matrix p = random_psd(4, 0.5, 2.0, 55);
  Matrix q = p + 1e-3 * Matrix::Identity(4, 4);
  LoewnerResult r = loewner_leq(p, q, 1e-9);
  EXPECT_TRUE(r.holds);
  EXPECT_NEAR(r.margin, 1e-3, 1e-12);
}

TEST(LoewnerLeq, ReflexiveAndAntisymmetric) {
  Matrix p = random_psd(3, 0.5, 2.0, 56);
  LoewnerResult self = loewner_leq(p, p, 1e-9);
  EXPECT_TRUE(self.holds);
  EXPECT_NEAR(self.margin, 0.0, 1e-13);
  Matrix q = p + 0.1 * Matrix::Identity(3, 3);
  EXPECT_TRUE(loewner_leq(p, q, 1e-9).holds);
  EXPECT_FALSE(loewner_leq(q, p, 1e-9).holds);
}

TEST(LoewnerLeq, RejectsDimensionMismatch) {
  EXPECT_THROW(loewner_leq(Matrix::Identity(2, 2), Matrix::Identity(3, 3)), DimensionError);
}

TEST(Norms, KyFanOneIsOperatorNorm) {
  Matrix a = Matrix::Zero(2, 2);
  a(0, 0) = 3.0;
  a(1, 1) = 1.0;
  EXPECT_NEAR(unitarily_invariant_norm(a, NormKind::ky_fan(1)), 3.0, 1e-14);
}

TEST(Norms, SchattenTwoIsFrobenius) {
  EXPECT_NEAR(unitarily_invariant_norm(Matrix::Identity(4, 4), NormKind::schatten(2.0)), 2.0,
              1e-14);
}

TEST(Norms, UnitaryInvarianceAllKinds) {
  const int n = 5;
  Matrix a = random_gaussian(n, 61);
  Matrix u = random_unitary(n, 62);
  Matrix v = random_unitary(n, 63);
  Matrix rotated = u * a * v;
  std::vector<NormKind> kinds;
  for (int k = 1; k <= n; ++k) kinds.push_back(NormKind::ky_fan(k));
  for (double p : {1.0, 2.0, 3.0}) kinds.push_back(NormKind::schatten(p));
  kinds.push_back(NormKind::schatten(std::numeric_limits<double>::infinity()));
  for (const NormKind& kind : kinds) {
    const double base = unitarily_invariant_norm(a, kind);
    const double rot = unitarily_invariant_norm(rotated, kind);
    EXPECT_LT(std::abs(base - rot) / base, 1e-10) << kind.name();
  }
}

TEST(Norms, RejectsBadParameters) {
  Matrix a = Matrix::Identity(2, 2);
  EXPECT_THROW(unitarily_invariant_norm(a, NormKind::ky_fan(0)), std::invalid_argument);
  EXPECT_THROW(unitarily_invariant_norm(a, NormKind::ky_fan(3)), std::invalid_argument);
  EXPECT_THROW(unitarily_invariant_norm(a, NormKind::schatten(0.5)), std::invalid_argument);
}

#include <gtest/gtest.h>

#include "sectoria/ensembles.hpp"
#include "sectoria/sector.hpp"
#include "test_util.hpp"

using namespace sectoria;

TEST(SectorAngle, HermitianPdHasAngleZero) {
  EXPECT_NEAR(sector_angle(Matrix::Identity(3, 3)), 0.0, 1e-15);
  Matrix p = random_psd(4, 0.5, 3.0, 7);
  EXPECT_NEAR(sector_angle(p), 0.0, 1e-7);  // roundoff in the congruence only
}

TEST(SectorAngle, ScalarOnePlusI) {
  Matrix a(1, 1);
  a(0, 0) = Complex(1.0, 1.0);
  EXPECT_NEAR(sector_angle(a), M_PI / 4.0, 1e-14);
}

TEST(SectorAngle, GeneratorHitsTargetExactly) {
  EnsembleSpec spec{4, 0.5, 0.5, 2.0, 1234, true};
  Matrix a = random_sector(spec);
  EXPECT_NEAR(sector_angle(a), 0.5, 1e-8);
}

TEST(SectorAngle, RejectsNonAccretive) {
  Matrix a = Matrix::Zero(2, 2);
  a(0, 0) = -1.0;
  a(1, 1) = 1.0;
  EXPECT_THROW(sector_angle(a), NotAccretiveError);
}

TEST(IsSector, BasicDecisions) {
  EXPECT_TRUE(is_sector(Matrix::Identity(2, 2), 0.0));
  Matrix a(1, 1);
  a(0, 0) = Complex(1.0, 1.0);
  EXPECT_FALSE(is_sector(a, M_PI / 6.0));
  EXPECT_TRUE(is_sector(a, M_PI / 4.0));
  EXPECT_THROW(is_sector(a, M_PI), std::invalid_argument);
}

TEST(IsSector, InverseStaysInTheSameSector) {
  for (std::uint64_t seed : {1, 2, 3, 4, 5}) {
    EnsembleSpec spec{4, 0.7, 0.5, 2.0, seed, true};
    Matrix a = random_sector(spec);
    const double alpha = sector_angle(a);
    Matrix a_inv = a.partialPivLu().solve(Matrix::Identity(4, 4));
    EXPECT_TRUE(is_sector(a_inv, alpha));
  }
}

TEST(SectorAngle, CongruenceDoesNotIncreaseAngle) {
  for (std::uint64_t seed : {11, 12, 13, 14, 15, 16, 17, 18, 19, 20}) {
    EnsembleSpec spec{4, 0.6, 0.5, 2.0, seed, false};
    Matrix a = random_sector(spec);
    Matrix x = random_gaussian(4, seed + 500);
    const double base = sector_angle(a);
    const double conj = sector_angle(Matrix(x.adjoint() * a * x));
    EXPECT_LE(conj, base + 1e-9);
  }
}

TEST(SectorAngle, InverseDoesNotIncreaseAngle) {
  for (std::uint64_t seed : {21, 22, 23, 24, 25, 26, 27, 28, 29, 30}) {
    EnsembleSpec spec{5, 0.8, 0.5, 2.0, seed, false};
    Matrix a = random_sector(spec);
    Matrix a_inv = a.partialPivLu().solve(Matrix::Identity(5, 5));
    EXPECT_LE(sector_angle(a_inv), sector_angle(a) + 1e-9);
  }
}

TEST(SectorAngle, ZeroAngleOnlyForHermitianPd) {
  EnsembleSpec spec{3, 0.4, 0.5, 2.0, 77, true};
  Matrix a = random_sector(spec);
  EXPECT_GT(sector_angle(a), 1e-3);
  Matrix p = random_psd(3, 0.5, 2.0, 78);
  EXPECT_LT(sector_angle(p), 1e-7);
}

TEST(NumericalRange, IdentityCollapsesToOne) {
  auto pts = numerical_range_boundary(Matrix::Identity(3, 3), 8);
  for (const Complex& z : pts) {
    EXPECT_NEAR(z.real(), 1.0, 1e-12);
    EXPECT_NEAR(z.imag(), 0.0, 1e-12);
  }
}

TEST(NumericalRange, NormalMatrixHullIsSpectrumHull) {
  // W(diag(1, i)) is the segment between 1 and i; samples stay inside it.
  Matrix a = Matrix::Zero(2, 2);
  a(0, 0) = 1.0;
  a(1, 1) = Complex(0.0, 1.0);
  auto pts = numerical_range_boundary(a, 64);
  for (const Complex& z : pts) {
    EXPECT_NEAR(z.real() + z.imag(), 1.0, 1e-10);  // on the segment Re+Im = 1
    EXPECT_GE(z.real(), -1e-10);
    EXPECT_GE(z.imag(), -1e-10);
  }
}

TEST(NumericalRange, SamplesRespectSectorCone) {
  EnsembleSpec spec{4, 0.5, 0.5, 2.0, 99, true};
  Matrix a = random_sector(spec);
  const double alpha = sector_angle(a);
  const double tan_alpha = std::tan(alpha);
  for (const Complex& z : numerical_range_boundary(a, 128)) {
    EXPECT_LE(std::abs(z.imag()), tan_alpha * z.real() + 1e-8);
  }
}

TEST(NumericalRange, SupportFunctionMatchesTopEigenvalue) {
  Matrix a = random_gaussian(4, 123);
  const int n_theta = 16;
  auto pts = numerical_range_boundary(a, n_theta);
  for (int k = 0; k < n_theta; ++k) {
    const double theta = 2.0 * M_PI * k / n_theta;
    Matrix rotated = hermitian_part(std::polar(1.0, -theta) * a);
    HermitianEig eig = hermitian_eig(rotated);
    const double top = eig.eigenvalues[eig.eigenvalues.size() - 1];
    const double support = (std::polar(1.0, -theta) * pts[static_cast<size_t>(k)]).real();
    EXPECT_NEAR(support, top, 1e-10);
  }
}

TEST(NumericalRange, SamplesStayAboveReLowerBound) {
  EnsembleSpec spec{4, 0.6, 0.5, 2.0, 131, true};
  Matrix a = random_sector(spec);
  SectorProfile profile = sector_profile(a);
  ASSERT_TRUE(profile.re_bounds.has_value());
  for (const Complex& z : numerical_range_boundary(a, 64)) {
    EXPECT_GE(z.real(), profile.re_bounds->first - 1e-8);
  }
}

TEST(NumericalRange, RejectsTooFewPoints) {
  EXPECT_THROW(numerical_range_boundary(Matrix::Identity(2, 2), 2), std::invalid_argument);
}

TEST(SectorProfile, ReportsBoundsAndAccretivity) {
  EnsembleSpec spec{4, 0.3, 0.5, 2.0, 151, true};
  Matrix a = random_sector(spec);
  SectorProfile profile = sector_profile(a);
  EXPECT_TRUE(profile.accretive);
  ASSERT_TRUE(profile.alpha.has_value());
  EXPECT_NEAR(*profile.alpha, 0.3, 1e-8);
  ASSERT_TRUE(profile.re_bounds.has_value());
  EXPECT_NEAR(profile.re_bounds->first, 0.5, 1e-10);
  EXPECT_NEAR(profile.re_bounds->second, 2.0, 1e-10);
  ASSERT_TRUE(profile.re_inv_bounds.has_value());
  EXPECT_GT(profile.re_inv_bounds->first, 0.0);

  Matrix not_accretive = Matrix::Zero(2, 2);
  not_accretive(0, 0) = -1.0;
  not_accretive(1, 1) = 1.0;
  SectorProfile bad = sector_profile(not_accretive);
  EXPECT_FALSE(bad.accretive);
  EXPECT_FALSE(bad.alpha.has_value());
}

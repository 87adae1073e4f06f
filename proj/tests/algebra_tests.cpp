/// @file algebra_tests.cpp
/// @brief Star algebras: convolution against hand-expanded formulas, norms
///        against closed forms, regular representations, spectra against the
///        character-diagonalization oracle, Gelfand iteration, duals.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <limits>

#include "tca/algebra.hpp"
#include "tca/fourier.hpp"
#include "tca/group_expr.hpp"
#include "tca/random_elements.hpp"
#include "tca/spectral.hpp"

using namespace tca;
using doctest::Approx;

namespace {

constexpr double kTol = 1e-12;
constexpr int kSamples = 50;

double max_abs(const Vec& v) { return v.cwiseAbs().maxCoeff(); }

Mat reshape_rowmajor(const Vec& v, int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = v[i * n + j];
  return m;
}

}  // namespace

// ============================================================================
// Convolution
// ============================================================================

TEST_CASE("C2 convolution matches the hand expansion") {
  AlgebraPtr a = StarAlgebra::group_algebra(cyclic_group(2));
  REQUIRE(a->weight() == Approx(0.5));
  Vec f(2), g(2);
  f << Complex(1, 2), Complex(-3, 0.5);
  g << Complex(0, 1), Complex(2, -1);
  Vec h = a->multiply(f, g);
  // (f*g)(e) = (f(e)g(e) + f(a)g(a)) / 2, (f*g)(a) = (f(e)g(a) + f(a)g(e)) / 2
  CHECK(std::abs(h[0] - (f[0] * g[0] + f[1] * g[1]) * 0.5) < kTol);
  CHECK(std::abs(h[1] - (f[0] * g[1] + f[1] * g[0]) * 0.5) < kTol);
}

TEST_CASE("scaled point masses multiply like group elements") {
  FiniteGroup s3 = symmetric_group(3);
  AlgebraPtr a = StarAlgebra::group_algebra(s3);
  const double n = 6.0;
  for (int g = 0; g < 6; ++g)
    for (int h = 0; h < 6; ++h) {
      Vec dg = Vec::Zero(6), dh = Vec::Zero(6);
      dg[g] = n;
      dh[h] = n;
      Vec prod = a->multiply(dg, dh);
      Vec expect = Vec::Zero(6);
      expect[s3.op(g, h)] = n;
      CHECK(max_abs(prod - expect) < kTol);
    }
}

TEST_CASE("unit, involution and associativity") {
  AlgebraPtr a = StarAlgebra::group_algebra(dihedral_group(4));
  for (int s = 0; s < kSamples; ++s) {
    AlgebraElement x = random_element(a, 100 + s, Dist::ComplexGaussian);
    AlgebraElement y = random_element(a, 200 + s, Dist::ComplexGaussian);
    AlgebraElement z = random_element(a, 300 + s, Dist::ComplexGaussian);
    AlgebraElement unit(a, a->unit());
    CHECK(max_abs((unit * x - x).coeffs()) < kTol);
    CHECK(max_abs((x * unit - x).coeffs()) < kTol);
    CHECK(max_abs(((x * y) * z - x * (y * z)).coeffs()) < kTol);
    CHECK(max_abs(((x * y).adjoint() - y.adjoint() * x.adjoint()).coeffs()) < kTol);
    CHECK(max_abs((x.adjoint().adjoint() - x).coeffs()) < kTol);
  }
}

TEST_CASE("mixing algebras is rejected") {
  AlgebraPtr a = StarAlgebra::group_algebra(cyclic_group(2));
  AlgebraPtr b = StarAlgebra::group_algebra(cyclic_group(3));
  AlgebraElement x(a, a->unit()), y(b, b->unit());
  CHECK_THROWS_AS(x * y, std::invalid_argument);
  CHECK_THROWS_AS(x + y, std::invalid_argument);
}

// ============================================================================
// Regular representations
// ============================================================================

TEST_CASE("left regular representation is a *-homomorphism") {
  AlgebraPtr a = StarAlgebra::group_algebra(symmetric_group(3));
  CHECK((a->left_regular(a->unit()) - Mat::Identity(6, 6)).cwiseAbs().maxCoeff() < kTol);
  for (int s = 0; s < kSamples; ++s) {
    AlgebraElement x = random_element(a, 400 + s, Dist::ComplexGaussian);
    AlgebraElement y = random_element(a, 500 + s, Dist::ComplexGaussian);
    Mat lhs = a->left_regular((x * y).coeffs());
    Mat rhs = a->left_regular(x.coeffs()) * a->left_regular(y.coeffs());
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < kTol);
    Mat st = a->left_regular(x.adjoint().coeffs());
    CHECK((st - a->left_regular(x.coeffs()).adjoint()).cwiseAbs().maxCoeff() < kTol);
  }
}

TEST_CASE("right regular representation is an anti-homomorphism commuting with left") {
  AlgebraPtr a = StarAlgebra::group_algebra(dihedral_group(3));
  for (int s = 0; s < kSamples; ++s) {
    AlgebraElement x = random_element(a, 600 + s, Dist::ComplexGaussian);
    AlgebraElement y = random_element(a, 700 + s, Dist::ComplexGaussian);
    AlgebraElement f = random_element(a, 800 + s, Dist::ComplexGaussian);
    // R[x] f = f * x
    CHECK(max_abs(a->right_regular(x.coeffs()) * f.coeffs() - (f * x).coeffs()) < kTol);
    Mat rx = a->right_regular(x.coeffs());
    Mat ry = a->right_regular(y.coeffs());
    CHECK((a->right_regular((x * y).coeffs()) - ry * rx).cwiseAbs().maxCoeff() < kTol);
    Mat lx = a->left_regular(x.coeffs());
    CHECK((lx * ry - ry * lx).cwiseAbs().maxCoeff() < kTol);
  }
}

TEST_CASE("matrix algebra is entrywise familiar") {
  const int n = 3;
  AlgebraPtr a = StarAlgebra::matrix_algebra(n);
  CHECK(a->weight() == Approx(1.0));
  for (int s = 0; s < kSamples; ++s) {
    AlgebraElement x = random_element(a, 900 + s, Dist::ComplexGaussian);
    AlgebraElement y = random_element(a, 1000 + s, Dist::ComplexGaussian);
    Mat mx = reshape_rowmajor(x.coeffs(), n), my = reshape_rowmajor(y.coeffs(), n);
    CHECK((reshape_rowmajor((x * y).coeffs(), n) - mx * my).cwiseAbs().maxCoeff() < kTol);
    CHECK((reshape_rowmajor(x.adjoint().coeffs(), n) - mx.adjoint()).cwiseAbs().maxCoeff() <
          kTol);
    CHECK((a->faithful(x.coeffs()) - mx).cwiseAbs().maxCoeff() < kTol);
    // left/right regular act on vectorized matrices the right way round
    CHECK(max_abs(a->left_regular(x.coeffs()) * y.coeffs() - (x * y).coeffs()) < kTol);
    CHECK(max_abs(a->right_regular(y.coeffs()) * x.coeffs() - (x * y).coeffs()) < kTol);
  }
  CHECK_THROWS_AS(StarAlgebra::matrix_algebra(0), std::invalid_argument);
  CHECK_THROWS_AS(StarAlgebra::matrix_algebra(33), std::invalid_argument);
}

// ============================================================================
// Norms
// ============================================================================

TEST_CASE("weighted Lp norms against the closed form") {
  AlgebraPtr a = StarAlgebra::group_algebra(cyclic_group(4));
  Vec f(4);
  f << Complex(3, 4), Complex(0, -2), 1.0, Complex(-1, 1);
  double w = 0.25;
  double l1 = w * (5 + 2 + 1 + std::sqrt(2.0));
  double l2 = std::sqrt(w * (25 + 4 + 1 + 2));
  CHECK(a->norm(f, NormKind::lp(1)) == Approx(l1).epsilon(1e-14));
  CHECK(a->norm(f, NormKind::lp(2)) == Approx(l2).epsilon(1e-14));
  CHECK(a->norm(f, NormKind::linf()) == Approx(5.0));

  // unit norms under the probability weight
  CHECK(a->norm(a->unit(), NormKind::lp(1)) == Approx(1.0));
  CHECK(a->norm(a->unit(), NormKind::op()) == Approx(1.0));
  CHECK(a->norm(a->unit(), NormKind::linf()) == Approx(4.0));
}

TEST_CASE("norm axioms hold on random elements") {
  for (AlgebraPtr a : {StarAlgebra::group_algebra(symmetric_group(3)),
                       StarAlgebra::matrix_algebra(4)}) {
    CAPTURE(a->id());
    for (const NormKind& k : {NormKind::lp(1), NormKind::lp(2), NormKind::linf(),
                              NormKind::op(), NormKind::schatten(3)}) {
      CAPTURE(k.name());
      for (int s = 0; s < kSamples; ++s) {
        AlgebraElement x = random_element(a, 1100 + s, Dist::ComplexGaussian);
        AlgebraElement y = random_element(a, 1200 + s, Dist::ComplexGaussian);
        CHECK(x.norm(k) >= 0.0);
        CHECK((x + y).norm(k) <= x.norm(k) + y.norm(k) + 1e-10);
        CHECK(x.scaled(Complex(0, -2.5)).norm(k) == Approx(2.5 * x.norm(k)).epsilon(1e-12));
        CHECK((x * x.adjoint()).norm(NormKind::op()) ==
              Approx(x.norm(NormKind::op()) * x.norm(NormKind::op())).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("L1 and operator norms are submultiplicative") {
  AlgebraPtr a = StarAlgebra::group_algebra(dihedral_group(4));
  for (int s = 0; s < kSamples; ++s) {
    AlgebraElement x = random_element(a, 1300 + s, Dist::ComplexGaussian);
    AlgebraElement y = random_element(a, 1400 + s, Dist::ComplexGaussian);
    CHECK((x * y).norm(NormKind::lp(1)) <=
          x.norm(NormKind::lp(1)) * y.norm(NormKind::lp(1)) + 1e-10);
    CHECK((x * y).norm(NormKind::op()) <=
          x.norm(NormKind::op()) * y.norm(NormKind::op()) + 1e-10);
  }
}

TEST_CASE("probability weight nests the Lp scale") {
  AlgebraPtr a = StarAlgebra::group_algebra(cyclic_group(12));
  for (int s = 0; s < kSamples; ++s) {
    AlgebraElement x = random_element(a, 1500 + s, Dist::ComplexGaussian);
    double l1 = x.norm(NormKind::lp(1));
    double l2 = x.norm(NormKind::lp(2));
    double l4 = x.norm(NormKind::lp(4));
    double li = x.norm(NormKind::linf());
    CHECK(l1 <= l2 + 1e-12);
    CHECK(l2 <= l4 + 1e-12);
    CHECK(l4 <= li + 1e-12);
  }
}

TEST_CASE("Schatten norms come from singular values") {
  AlgebraPtr a = StarAlgebra::matrix_algebra(5);
  for (int s = 0; s < kSamples; ++s) {
    AlgebraElement x = random_element(a, 1600 + s, Dist::ComplexGaussian);
    Eigen::VectorXd sv = singular_values(a->faithful(x.coeffs()));
    double s1 = 0, s2 = 0, smax = 0;
    for (int i = 0; i < sv.size(); ++i) {
      s1 += sv[i];
      s2 += sv[i] * sv[i];
      smax = std::max(smax, sv[i]);
    }
    CHECK(x.norm(NormKind::schatten(1)) == Approx(s1).epsilon(1e-12));
    CHECK(x.norm(NormKind::schatten(2)) == Approx(std::sqrt(s2)).epsilon(1e-12));
    CHECK(x.norm(NormKind::schatten(std::numeric_limits<double>::infinity())) ==
          Approx(smax).epsilon(1e-12));
    CHECK(x.norm(NormKind::op()) == Approx(smax).epsilon(1e-12));
    // Frobenius = entrywise L2 at weight one
    CHECK(x.norm(NormKind::schatten(2)) == Approx(x.norm(NormKind::lp(2))).epsilon(1e-12));
  }
}

TEST_CASE("norm kind names") {
  CHECK(NormKind::lp(1).name() == "L1");
  CHECK(NormKind::lp(2).name() == "L2");
  CHECK(NormKind::linf().name() == "Linf");
  CHECK(NormKind::op().name() == "op");
  CHECK(NormKind::schatten(4).name() == "S4");
  CHECK(NormKind::schatten(std::numeric_limits<double>::infinity()).name() == "Sinf");
}

// ============================================================================
// Spectra
// ============================================================================

TEST_CASE("abelian spectra are exactly the character values") {
  // eigenvalues of the left regular matrix of f are { f-hat(chi) }
  AlgebraPtr a = StarAlgebra::group_algebra(cyclic_group(4));
  DualGroup dual = dual_group(a->group());
  for (int s = 0; s < kSamples; ++s) {
    AlgebraElement f = random_element(a, 1700 + s, Dist::ComplexGaussian);
    SpectrumResult spec = spectrum(f);
    Vec fhat = fourier_transform(dual, f.coeffs(), a->weight());
    CHECK(multiset_distance(spec.eigenvalues, fhat) < 1e-9);
    CHECK(f.norm(NormKind::op()) == Approx(max_abs(fhat)).epsilon(1e-9));
  }
}

TEST_CASE("spectrum basics") {
  AlgebraPtr a = StarAlgebra::group_algebra(symmetric_group(3));
  AlgebraElement unit(a, a->unit());
  SpectrumResult su = spectrum(unit);
  for (int i = 0; i < su.eigenvalues.size(); ++i)
    CHECK(std::abs(su.eigenvalues[i] - Complex(1, 0)) < 1e-9);
  CHECK(su.radius == Approx(1.0));
  for (int s = 0; s < kSamples; ++s) {
    AlgebraElement f = random_element(a, 1800 + s, Dist::ComplexGaussian);
    CHECK(spectrum(f).radius <= f.norm(NormKind::op()) + 1e-9);
    CHECK(spectrum(f).residual < 1e-9);
  }
}

TEST_CASE("Gelfand iteration on a nilpotent element is exactly zero") {
  AlgebraPtr a = StarAlgebra::matrix_algebra(4);
  Vec shift = a->zero();
  for (int i = 0; i + 1 < 4; ++i) shift[i * 4 + (i + 1)] = 1.0;  // N^4 = 0
  AlgebraElement n(a, shift);
  GelfandResult r = gelfand_radius(n, NormKind::op(), 12);
  CHECK(r.radius == 0.0);
  CHECK(spectrum(n).radius < 1e-9);
}

TEST_CASE("Gelfand iteration converges to the spectral radius") {
  AlgebraPtr a = StarAlgebra::matrix_algebra(2);
  Vec d = a->zero();
  d[0] = 3.0;
  d[3] = 1.0;
  AlgebraElement x(a, d);
  // trace-norm iterate (3^m + 1)^(1/m) settles onto 3
  GelfandResult r = gelfand_radius(x, NormKind::schatten(1), 12);
  CHECK(r.radius == Approx(3.0).epsilon(1e-9));

  AlgebraPtr b = StarAlgebra::group_algebra(dihedral_group(3));
  for (int s = 0; s < 10; ++s) {
    AlgebraElement f = random_element(b, 1900 + s, Dist::ComplexGaussian);
    double rho = spectrum(f).radius;
    GelfandResult g = gelfand_radius(f, NormKind::lp(1), 12, 1e-8);
    CHECK(std::abs(g.radius - rho) < 1e-6);
    CHECK(g.k_used >= 12);
  }
}

// ============================================================================
// Finite abelian duals
// ============================================================================

TEST_CASE("dual group characters are orthogonal homomorphisms") {
  for (const FiniteGroup& k : {cyclic_group(8), build_group("C2xC4")}) {
    CAPTURE(k.name());
    DualGroup dual = dual_group(k);
    const int n = k.order();
    REQUIRE(static_cast<int>(dual.char_exponents.size()) == n);
    for (int c = 0; c < n; ++c) {
      for (int s = 0; s < n; ++s) {
        CHECK(std::abs(std::abs(dual.value(c, s)) - 1.0) < kTol);
        for (int t = 0; t < n; ++t)
          CHECK(std::abs(dual.value(c, k.op(s, t)) - dual.value(c, s) * dual.value(c, t)) <
                1e-12);
      }
      for (int c2 = 0; c2 < n; ++c2) {
        Complex dot = 0;
        for (int t = 0; t < n; ++t) dot += dual.value(c, t) * std::conj(dual.value(c2, t));
        CHECK(std::abs(dot - (c == c2 ? Complex(n, 0) : Complex(0, 0))) < 1e-10);
      }
    }
    // trivial character sorts first
    for (int t = 0; t < n; ++t) CHECK(std::abs(dual.value(0, t) - Complex(1, 0)) < kTol);
  }
  CHECK_THROWS_AS(dual_group(symmetric_group(3)), std::invalid_argument);
}

TEST_CASE("Fourier transform inverts and diagonalizes") {
  AlgebraPtr a = StarAlgebra::group_algebra(build_group("C2xC4"));
  DualGroup dual = dual_group(a->group());
  Vec ones = fourier_transform(dual, a->unit(), a->weight());
  for (int i = 0; i < ones.size(); ++i) CHECK(std::abs(ones[i] - Complex(1, 0)) < kTol);
  for (int s = 0; s < kSamples; ++s) {
    AlgebraElement f = random_element(a, 2000 + s, Dist::ComplexGaussian);
    AlgebraElement g = random_element(a, 2100 + s, Dist::ComplexGaussian);
    Vec back = inverse_fourier(dual, fourier_transform(dual, f.coeffs(), a->weight()));
    CHECK(max_abs(back - f.coeffs()) < kTol);
    Vec lhs = fourier_transform(dual, (f * g).coeffs(), a->weight());
    Vec rhs = fourier_transform(dual, f.coeffs(), a->weight())
                  .cwiseProduct(fourier_transform(dual, g.coeffs(), a->weight()));
    CHECK(max_abs(lhs - rhs) < kTol);
  }
}

// ============================================================================
// Random elements
// ============================================================================

TEST_CASE("random elements are deterministic in the seed") {
  AlgebraPtr a = StarAlgebra::group_algebra(dihedral_group(4));
  for (Dist d : {Dist::ComplexGaussian, Dist::SelfAdjoint, Dist::Positive, Dist::HeavyTailed}) {
    AlgebraElement x = random_element(a, 77, d);
    AlgebraElement y = random_element(a, 77, d);
    CHECK(max_abs((x - y).coeffs()) == 0.0);
    AlgebraElement z = random_element(a, 78, d);
    CHECK(max_abs((x - z).coeffs()) > 0.0);
  }
}

TEST_CASE("distribution shapes") {
  AlgebraPtr a = StarAlgebra::group_algebra(symmetric_group(3));
  for (int s = 0; s < kSamples; ++s) {
    AlgebraElement sa = random_element(a, 2200 + s, Dist::SelfAdjoint);
    CHECK(max_abs((sa.adjoint() - sa).coeffs()) < kTol);
    AlgebraElement p = random_element(a, 2300 + s, Dist::Positive);
    SpectrumResult spec = spectrum(p);
    for (int i = 0; i < spec.eigenvalues.size(); ++i) {
      CHECK(spec.eigenvalues[i].real() >= -1e-9);
      CHECK(std::abs(spec.eigenvalues[i].imag()) < 1e-9);
    }
  }
}

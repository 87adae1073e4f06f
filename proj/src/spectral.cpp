#include "tca/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <stdexcept>

namespace tca {

SpectrumResult spectrum_of_matrix(const Mat& m) {
  Eigen::ComplexEigenSolver<Mat> solver(m, /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigenvalue solver did not converge");
  SpectrumResult out;
  out.eigenvalues = solver.eigenvalues();
  std::vector<Complex> vals(out.eigenvalues.data(), out.eigenvalues.data() + out.eigenvalues.size());
  std::sort(vals.begin(), vals.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  for (std::size_t i = 0; i < vals.size(); ++i) out.eigenvalues[static_cast<Eigen::Index>(i)] = vals[i];

  for (Eigen::Index i = 0; i < out.eigenvalues.size(); ++i)
    out.radius = std::max(out.radius, std::abs(out.eigenvalues[i]));

  // backward error: worst eigenpair residual relative to the matrix scale
  const Mat& v = solver.eigenvectors();
  double scale = std::max(1.0, m.norm());
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    double r = (m * v.col(i) - solver.eigenvalues()[i] * v.col(i)).norm();
    out.residual = std::max(out.residual, r / scale);
  }
  return out;
}

SpectrumResult spectrum(const AlgebraElement& a) {
  return spectrum_of_matrix(a.algebra()->left_regular(a.coeffs()));
}

double multiset_distance(const Vec& a, const Vec& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("multiset_distance: size mismatch");
  std::vector<Complex> rest(b.data(), b.data() + b.size());
  double worst = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < rest.size(); ++j) {
      double d = std::abs(a[i] - rest[j]);
      if (d < best_d) {
        best_d = d;
        best = j;
      }
    }
    worst = std::max(worst, best_d);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return worst;
}

GelfandResult gelfand_radius(const AlgebraElement& a, const NormKind& kind, int k_max,
                             double gap_tol) {
  GelfandOptions opt;
  opt.k_max = k_max;
  opt.gap_tol = gap_tol;
  std::function<double(const AlgebraElement&)> norm_fn = [&kind](const AlgebraElement& x) {
    return x.norm(kind);
  };
  std::function<AlgebraElement(const AlgebraElement&)> square_fn = [](const AlgebraElement& x) {
    return x * x;
  };
  std::function<AlgebraElement(const AlgebraElement&, double)> scale_fn =
      [](const AlgebraElement& x, double s) { return x.scaled(s); };
  return gelfand_iterate<AlgebraElement>(a, norm_fn, square_fn, scale_fn, opt);
}

}  // namespace tca

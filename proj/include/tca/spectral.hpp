#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "tca/algebra.hpp"

namespace tca {

/// Eigenvalues of the left-multiplication matrix plus a backward-error
/// residual from the eigenpairs.
struct SpectrumResult {
  Vec eigenvalues;   // sorted by (re, im)
  double radius = 0.0;
  double residual = 0.0;
};

SpectrumResult spectrum_of_matrix(const Mat& m);
SpectrumResult spectrum(const AlgebraElement& a);

/// Greedy nearest-neighbour matching distance between two eigenvalue
/// multisets; the comparison used wherever two spectra must agree.
double multiset_distance(const Vec& a, const Vec& b);

/// Trace of the Gelfand iteration r_k = ||a^(2^k)||^(1/2^k).
struct GelfandResult {
  std::vector<double> trace;  // r_0 .. r_k_used
  double radius = 0.0;        // last iterate
  int k_used = 0;
};

struct GelfandOptions {
  int k_max = 12;
  /// When > 0, the squaring continues past k_max until the successive-iterate
  /// gap stays below gap_tol / 4 twice in a row (hard cap k = 32). The plain
  /// iterate at fixed k carries an O(log(c)/2^k) bias, so meeting a tight
  /// tolerance needs depth chosen from the tolerance, not a fixed k.
  double gap_tol = 0.0;
  static constexpr int hard_cap = 32;
};

/// Generic renormalized repeated squaring; norm_fn and square_fn close over
/// whatever algebra the element lives in. Returns 0 immediately for 0.
template <class Element>
GelfandResult gelfand_iterate(Element a,
                              const std::function<double(const Element&)>& norm_fn,
                              const std::function<Element(const Element&)>& square_fn,
                              const std::function<Element(const Element&, double)>& scale_fn,
                              const GelfandOptions& opt) {
  GelfandResult out;
  double log_scale = 0.0;
  int settled = 0;
  int limit = opt.gap_tol > 0 ? GelfandOptions::hard_cap : opt.k_max;
  for (int k = 0;; ++k) {
    double n = norm_fn(a);
    if (n == 0.0 || !std::isfinite(n)) {
      // nilpotent (or numerically dead) power: the radius is exactly 0
      for (int j = k; j <= opt.k_max; ++j) out.trace.push_back(0.0);
      out.radius = 0.0;
      out.k_used = k;
      return out;
    }
    double r = std::exp((std::log(n) + log_scale) / std::ldexp(1.0, k));
    out.trace.push_back(r);
    out.radius = r;
    out.k_used = k;
    if (k >= limit) break;
    if (opt.gap_tol > 0 && k >= opt.k_max && out.trace.size() >= 2) {
      double gap = std::abs(out.trace[k] - out.trace[k - 1]);
      settled = gap <= opt.gap_tol / 4 ? settled + 1 : 0;
      if (settled >= 2) break;
    }
    log_scale = 2.0 * (log_scale + std::log(n));
    a = square_fn(scale_fn(a, 1.0 / n));
  }
  return out;
}

/// Gelfand iteration for an algebra element in the given norm.
GelfandResult gelfand_radius(const AlgebraElement& a, const NormKind& kind, int k_max,
                             double gap_tol = 0.0);

}  // namespace tca

#pragma once

#include <vector>

#include "tca/algebra.hpp"
#include "tca/group.hpp"

namespace tca {

/// Character group of a finite abelian K. Characters are stored exactly as
/// integer exponent vectors: chi_i(t) = exp(2 pi i k_i(t) / m) with m the
/// exponent of K, so the dual group law is integer addition mod m.
struct DualGroup {
  FiniteGroup group;                           // K-hat with pointwise product
  int exponent = 1;                            // m
  std::vector<std::vector<int>> char_exponents;  // [char][element] -> k mod m

  Complex value(int chi, int t) const;
};

/// Throws std::invalid_argument if K is not abelian.
DualGroup dual_group(const FiniteGroup& k);

/// f-hat(chi) = sum_t w f(t) conj(chi(t)); with the probability weight this
/// turns the convolution product into the pointwise product exactly.
Vec fourier_transform(const DualGroup& dual, const Vec& f, double weight);

/// f(t) = sum_chi f-hat(chi) chi(t).
Vec inverse_fourier(const DualGroup& dual, const Vec& fhat);

}  // namespace tca

#pragma once

#include <cstdint>

#include "tca/algebra.hpp"

namespace tca {

enum class Dist {
  ComplexGaussian,
  SelfAdjoint,   // (b + b*)/2 of a gaussian b
  Positive,      // b* b of a gaussian b
  HeavyTailed,   // complex Cauchy coefficients
};

/// Deterministic given (algebra, seed, dist); coefficients drawn in basis order.
AlgebraElement random_element(const AlgebraPtr& algebra, std::uint64_t seed, Dist dist);

}  // namespace tca

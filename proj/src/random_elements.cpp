#include "tca/random_elements.hpp"

namespace tca {

AlgebraElement random_element(const AlgebraPtr& algebra, std::uint64_t seed, Dist dist) {
  Rng rng(seed);
  const int d = algebra->dimension();
  Vec c(d);
  bool heavy = dist == Dist::HeavyTailed;
  for (int i = 0; i < d; ++i) c[i] = heavy ? rng.complex_cauchy() : rng.complex_gaussian();
  AlgebraElement b(algebra, std::move(c));
  switch (dist) {
    case Dist::ComplexGaussian:
    case Dist::HeavyTailed:
      return b;
    case Dist::SelfAdjoint:
      return (b + b.adjoint()).scaled(0.5);
    case Dist::Positive:
      return b.adjoint() * b;
  }
  throw std::logic_error("unreachable");
}

}  // namespace tca

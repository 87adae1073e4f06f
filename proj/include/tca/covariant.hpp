#pragma once

#include <array>
#include <string>
#include <vector>

#include "tca/twisted.hpp"

namespace tca {

/// Covariant pair (U, lambda) on the weighted l2 space of K: U_x the
/// conjugation permutation f(t) -> f(eta(x)^-1 t eta(x)), lambda the left
/// regular representation of the coefficient algebra. Only defined for split
/// systems (omega identically the unit).
struct CovariantRep {
  SystemPtr system;
  std::vector<Mat> U;  // |H| unitaries, dim x dim

  Mat lambda(const Vec& f) const { return system->algebra->left_regular(f); }
};

/// Throws std::domain_error when omega is not identically the unit.
CovariantRep build_covariant(const SystemPtr& sys);

struct CovariantViolation {
  std::string check;           // "unitary", "homomorphism", "covariance"
  std::array<int, 2> witness;  // (x, basis f) or (x, y); unused -1
  double residual = 0.0;
};

/// U_x unitary, U a homomorphism, and U_x lambda(f) U_x* = lambda(alpha_x f)
/// for every x and basis f.
std::vector<CovariantViolation> check_covariant(const CovariantRep& rep, double tol = 1e-12);

/// phi(Phi)(x) = lambda(Phi(x)) U_x.
std::vector<Mat> covariant_embed(const CovariantRep& rep, const TwistedElement& phi);

/// Plain matrix-valued convolution and involution over H, the algebra the
/// embedding lands in: (F * G)(x) = sum_y F(y) G(y^-1 x), F*(x) = F(x^-1)^H.
std::vector<Mat> matrix_convolve(const FiniteGroup& h, const std::vector<Mat>& f,
                                 const std::vector<Mat>& g);
std::vector<Mat> matrix_involution(const FiniteGroup& h, const std::vector<Mat>& f);

}  // namespace tca

#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "tca/algebra.hpp"
#include "tca/extension.hpp"
#include "tca/random_elements.hpp"
#include "tca/spectral.hpp"

namespace tca {

/// The tuple (H, A, alpha, omega, Delta). alpha is stored as one dim x dim
/// matrix per H element acting on coefficient vectors; omega(x,y) is an
/// algebra element (finite-dimensional unital A, so multipliers are elements).
/// Delta is kept although it is identically 1 here: the involution formula
/// uses it, so the code matches the general definition.
struct TwistedSystem {
  FiniteGroup group;          // H
  AlgebraPtr algebra;         // A
  std::vector<Mat> alpha;     // |H| matrices on coefficients
  std::vector<Vec> omega;     // |H|^2 row-major, elements of A
  std::vector<double> delta;  // |H| positive reals, all 1
  std::string name;

  int h_order() const { return group.order(); }
  int dim() const { return algebra->dimension(); }
  const Mat& alpha_at(int x) const { return alpha[x]; }
  const Vec& omega_at(int x, int y) const {
    return omega[static_cast<std::size_t>(x) * group.order() + y];
  }
};

using SystemPtr = std::shared_ptr<const TwistedSystem>;

/// alpha = id, omega = unit: the plain A-valued convolution algebra over H.
SystemPtr trivial_system(FiniteGroup h, AlgebraPtr a, std::string name = "");

/// The system of the extension: A = group algebra of K (probability weight),
/// alpha_x(f)(t) = f(eta(x)^-1 t eta(x)), omega(x,y) = |K| delta_tau(x,y),
/// Delta = 1.
SystemPtr action_from_extension(const GroupExtension& ext);

/// One failed twisted-action axiom with its witness in H^3 (unused slots -1).
struct TwistedViolation {
  std::string axiom;
  std::array<int, 3> witness;
  double residual = 0.0;
};

/// Exhaustive check of the twisted-action axioms:
///   cocycle      alpha_x(omega(y,z)) * omega(x,yz) = omega(x,y) * omega(xy,z)
///   intertwine   alpha_x(alpha_y(a)) * omega(x,y) = omega(x,y) * alpha_xy(a)
///   normalized   omega(x,e) = omega(e,y) = unit, alpha_e = id
/// plus unitarity of each omega(x,y), *-automorphism and isometry (L1/L2/op)
/// of each alpha_x, and Delta = 1. Violations above `tol` are returned with
/// witnesses; empty means the system is a twisted action.
std::vector<TwistedViolation> verify_twisted_axioms(const TwistedSystem& sys, double tol = 1e-12);

/// Function H -> A with pointwise linear structure, the twisted convolution
/// as product and the twisted involution as adjoint.
class TwistedElement {
 public:
  TwistedElement(SystemPtr system, std::vector<Vec> values);

  const SystemPtr& system() const { return system_; }
  const std::vector<Vec>& values() const { return values_; }
  const Vec& value(int x) const { return values_[x]; }
  Vec& value(int x) { return values_[x]; }

  TwistedElement operator+(const TwistedElement& o) const;
  TwistedElement operator-(const TwistedElement& o) const;
  TwistedElement scaled(Complex s) const;
  TwistedElement operator*(const TwistedElement& o) const;  // twisted convolution
  TwistedElement adjoint() const;                           // twisted involution

  /// All |H| * dim coefficients as one vector, block x at [x*dim, (x+1)*dim).
  Vec stacked() const;

 private:
  void require_same(const TwistedElement& o) const;

  SystemPtr system_;
  std::vector<Vec> values_;
};

TwistedElement twisted_zero(const SystemPtr& sys);
TwistedElement twisted_unit(const SystemPtr& sys);  // unit_A at e, zero elsewhere
TwistedElement twisted_basis(const SystemPtr& sys, int x, int i);  // delta_x (x) basis_i

/// (Phi * Psi)(x) = sum_y Phi(y) . alpha_y[Psi(y^-1 x)] . omega(y, y^-1 x).
TwistedElement twisted_convolve(const TwistedElement& a, const TwistedElement& b);

/// Phi*(x) = Delta(x^-1) omega(x, x^-1)* . alpha_x[Phi(x^-1)*].
TwistedElement twisted_adjoint(const TwistedElement& a);

/// sum_x ||Phi(x)|| in the coefficient norm (counting measure on H).
double l1_norm(const TwistedElement& a, const NormKind& coeff_kind);

/// Matrix of left twisted multiplication by Phi on stacked coefficients,
/// size (|H| dim) x (|H| dim).
Mat twisted_left_matrix(const TwistedElement& a);

/// Eigenvalues of the left twisted multiplication matrix.
SpectrumResult twisted_spectrum(const TwistedElement& a);

/// Deterministic given (system, seed, dist); same distributions as
/// random_element, with SelfAdjoint/Positive built from the twisted involution.
TwistedElement random_twisted_element(const SystemPtr& sys, std::uint64_t seed, Dist dist);

/// The coefficient-reindexing isomorphism between the group algebra of G
/// (weight 1/|K|, so total mass |H|) and the twisted crossed product over
/// H = G/K. Two reading conventions exist in the literature; the constructor
/// certifies both on all basis pairs and keeps the one that is a
/// *-isomorphism, so a wrong guess cannot survive construction.
class Decomposition {
 public:
  enum class Convention {
    KEta,  // Phi(x)(k) = F(k eta(x))
    EtaK,  // Phi(x)(k) = F(eta(x) k)
  };

  explicit Decomposition(GroupExtension ext);

  const GroupExtension& extension() const { return ext_; }
  const SystemPtr& system() const { return system_; }
  const AlgebraPtr& ambient() const { return ambient_; }  // group algebra of G
  Convention convention() const { return convention_; }

  /// Largest residual over basis pairs of the multiplicativity, involution,
  /// unit and round-trip checks for the selected convention.
  double certification_residual() const { return residual_; }

  TwistedElement to_twisted(const AlgebraElement& f) const;
  AlgebraElement from_twisted(const TwistedElement& phi) const;

 private:
  TwistedElement to_twisted_with(const AlgebraElement& f, Convention c) const;
  AlgebraElement from_twisted_with(const TwistedElement& phi, Convention c) const;
  double certify(Convention c) const;

  GroupExtension ext_;
  SystemPtr system_;
  AlgebraPtr ambient_;
  Convention convention_ = Convention::KEta;
  double residual_ = 0.0;
};

}  // namespace tca

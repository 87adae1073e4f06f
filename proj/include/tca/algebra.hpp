#pragma once

#include <Eigen/Dense>

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "tca/group.hpp"
#include "tca/util.hpp"

namespace tca {

using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

/// Norm selector for the family carried by every algebra: weighted L^p,
/// operator norm of the faithful matrix, Schatten-p of its singular values.
struct NormKind {
  enum class Tag { Lp, Operator, Schatten };

  Tag tag = Tag::Operator;
  double p = 2.0;  // meaningful for Lp / Schatten; may be infinity for Lp

  static NormKind lp(double p);
  static NormKind linf() { return lp(std::numeric_limits<double>::infinity()); }
  static NormKind op() { return {Tag::Operator, 0.0}; }
  static NormKind schatten(double p);

  std::string name() const;  // "L1", "L2.5", "Linf", "op", "S2"
  bool operator==(const NormKind& o) const;
};

class StarAlgebra;
using AlgebraPtr = std::shared_ptr<const StarAlgebra>;

/// Finite-dimensional *-algebra presented on a fixed basis. Two constructors:
/// the convolution algebra of a finite group K (basis = point masses, product
/// weighted by the Haar weight, default 1/|K|) and the full matrix algebra
/// M_n (basis = matrix units, row-major).
class StarAlgebra : public std::enable_shared_from_this<StarAlgebra> {
 public:
  enum class Kind { GroupAlgebra, MatrixAlgebra };

  /// weight <= 0 selects the default 1/|K| (probability Haar measure).
  static AlgebraPtr group_algebra(FiniteGroup k, double weight = 0.0);
  static AlgebraPtr matrix_algebra(int n);  // 1 <= n <= 32

  Kind kind() const { return kind_; }
  int dimension() const { return dim_; }
  double weight() const { return weight_; }
  const std::string& id() const { return id_; }
  bool is_group_algebra() const { return kind_ == Kind::GroupAlgebra; }

  const FiniteGroup& group() const;  // GroupAlgebra only
  int matrix_size() const { return matrix_n_; }

  Vec zero() const { return Vec::Zero(dim_); }
  Vec unit() const;
  Vec basis(int i) const;
  std::string basis_label(int i) const;

  Vec multiply(const Vec& a, const Vec& b) const;
  Vec adjoint(const Vec& a) const;

  /// Matrix of left multiplication by a on the algebra itself (dim x dim).
  Mat left_regular(const Vec& a) const;

  /// Matrix of right multiplication by a (x -> x a) on the algebra itself.
  Mat right_regular(const Vec& a) const;

  /// Faithful matrix used by Operator/Schatten norms: the left regular matrix
  /// for group algebras, the n x n matrix itself for matrix algebras.
  Mat faithful(const Vec& a) const;

  double norm(const Vec& a, const NormKind& kind) const;

  /// Weighted inner product sum_i w a_i conj(b_i); the L2 norm's form.
  Complex inner(const Vec& a, const Vec& b) const;

 private:
  StarAlgebra() = default;

  Kind kind_ = Kind::GroupAlgebra;
  int dim_ = 0;
  double weight_ = 1.0;
  int matrix_n_ = 0;
  std::string id_;
  std::unique_ptr<FiniteGroup> group_;
};

/// Element with its algebra; arithmetic checks algebra identity and throws
/// std::invalid_argument on mismatch.
class AlgebraElement {
 public:
  AlgebraElement(AlgebraPtr algebra, Vec coeffs);

  const AlgebraPtr& algebra() const { return algebra_; }
  const Vec& coeffs() const { return coeffs_; }
  Vec& coeffs() { return coeffs_; }

  AlgebraElement operator*(const AlgebraElement& o) const;
  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement scaled(Complex s) const;
  AlgebraElement adjoint() const;
  double norm(const NormKind& kind) const { return algebra_->norm(coeffs_, kind); }

 private:
  void require_same(const AlgebraElement& o) const;

  AlgebraPtr algebra_;
  Vec coeffs_;
};

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement adjoint(const AlgebraElement& a);

/// Singular values of a matrix, descending; shared backend for Operator and
/// Schatten norms.
Eigen::VectorXd singular_values(const Mat& m);

double operator_norm(const Mat& m);

}  // namespace tca

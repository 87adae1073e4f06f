#include "tca/algebra.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <limits>
#include <sstream>

namespace tca {

namespace {

std::string format_p(double p) {
  if (std::isinf(p)) return "inf";
  if (p == std::floor(p) && p < 1e6) return std::to_string(static_cast<long long>(p));
  std::ostringstream os;
  os << p;
  return os.str();
}

}  // namespace

NormKind NormKind::lp(double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("Lp norm needs p >= 1");
  return {Tag::Lp, p};
}

NormKind NormKind::schatten(double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("Schatten norm needs p >= 1");
  return {Tag::Schatten, p};
}

std::string NormKind::name() const {
  switch (tag) {
    case Tag::Lp:
      return "L" + format_p(p);
    case Tag::Operator:
      return "op";
    case Tag::Schatten:
      return "S" + format_p(p);
  }
  return "?";
}

bool NormKind::operator==(const NormKind& o) const {
  if (tag != o.tag) return false;
  if (tag == Tag::Operator) return true;
  return p == o.p || (std::isinf(p) && std::isinf(o.p));
}

AlgebraPtr StarAlgebra::group_algebra(FiniteGroup k, double weight) {
  if (!k.valid())
    throw std::invalid_argument("group_algebra: table has no identity/inverses; not a group");
  auto a = std::shared_ptr<StarAlgebra>(new StarAlgebra());
  a->kind_ = Kind::GroupAlgebra;
  a->dim_ = k.order();
  a->weight_ = weight > 0.0 ? weight : 1.0 / k.order();
  a->id_ = "C[" + (k.name().empty() ? "G" + std::to_string(k.order()) : k.name()) + "]";
  a->group_ = std::make_unique<FiniteGroup>(std::move(k));
  return a;
}

AlgebraPtr StarAlgebra::matrix_algebra(int n) {
  if (n < 1 || n > 32) throw std::invalid_argument("matrix_algebra: n must be in [1, 32]");
  auto a = std::shared_ptr<StarAlgebra>(new StarAlgebra());
  a->kind_ = Kind::MatrixAlgebra;
  a->dim_ = n * n;
  a->weight_ = 1.0;
  a->matrix_n_ = n;
  a->id_ = "M" + std::to_string(n);
  return a;
}

const FiniteGroup& StarAlgebra::group() const {
  if (kind_ != Kind::GroupAlgebra) throw std::logic_error("not a group algebra");
  return *group_;
}

Vec StarAlgebra::unit() const {
  Vec u = zero();
  if (kind_ == Kind::GroupAlgebra) {
    u[group_->identity()] = 1.0 / weight_;  // w * (1/w) delta_e * f = f
  } else {
    for (int i = 0; i < matrix_n_; ++i) u[static_cast<std::size_t>(i) * matrix_n_ + i] = 1.0;
  }
  return u;
}

Vec StarAlgebra::basis(int i) const {
  Vec b = zero();
  b[i] = 1.0;
  return b;
}

std::string StarAlgebra::basis_label(int i) const {
  if (kind_ == Kind::GroupAlgebra) return group_->label(i);
  return "E" + std::to_string(i / matrix_n_) + std::to_string(i % matrix_n_);
}

Vec StarAlgebra::multiply(const Vec& a, const Vec& b) const {
  Vec out = zero();
  if (kind_ == Kind::GroupAlgebra) {
    const FiniteGroup& k = *group_;
    for (int s = 0; s < dim_; ++s) {
      if (a[s] == Complex(0.0)) continue;
      Complex wa = weight_ * a[s];
      for (int u = 0; u < dim_; ++u) out[k.op(s, u)] += wa * b[u];
    }
  } else {
    const int n = matrix_n_;
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) {
        Complex v = a[static_cast<std::size_t>(i) * n + l];
        if (v == Complex(0.0)) continue;
        for (int j = 0; j < n; ++j)
          out[static_cast<std::size_t>(i) * n + j] += v * b[static_cast<std::size_t>(l) * n + j];
      }
  }
  return out;
}

Vec StarAlgebra::adjoint(const Vec& a) const {
  Vec out = zero();
  if (kind_ == Kind::GroupAlgebra) {
    for (int t = 0; t < dim_; ++t) out[t] = std::conj(a[group_->inverse(t)]);
  } else {
    const int n = matrix_n_;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        out[static_cast<std::size_t>(i) * n + j] =
            std::conj(a[static_cast<std::size_t>(j) * n + i]);
  }
  return out;
}

Mat StarAlgebra::left_regular(const Vec& a) const {
  Mat m = Mat::Zero(dim_, dim_);
  if (kind_ == Kind::GroupAlgebra) {
    const FiniteGroup& k = *group_;
    for (int t = 0; t < dim_; ++t)
      for (int s = 0; s < dim_; ++s) m(t, s) = weight_ * a[k.op(t, k.inverse(s))];
  } else {
    const int n = matrix_n_;
    for (int i = 0; i < n; ++i)
      for (int c = 0; c < n; ++c) {
        Complex v = a[static_cast<std::size_t>(i) * n + c];
        if (v == Complex(0.0)) continue;
        for (int j = 0; j < n; ++j)
          m(i * n + j, c * n + j) = v;
      }
  }
  return m;
}

Mat StarAlgebra::right_regular(const Vec& a) const {
  Mat m = Mat::Zero(dim_, dim_);
  if (kind_ == Kind::GroupAlgebra) {
    const FiniteGroup& k = *group_;
    // (x a)(t) = w sum_s x(s) a(s^-1 t)
    for (int t = 0; t < dim_; ++t)
      for (int s = 0; s < dim_; ++s) m(t, s) = weight_ * a[k.op(k.inverse(s), t)];
  } else {
    const int n = matrix_n_;
    for (int d = 0; d < n; ++d)
      for (int j = 0; j < n; ++j) {
        Complex v = a[static_cast<std::size_t>(d) * n + j];
        if (v == Complex(0.0)) continue;
        for (int i = 0; i < n; ++i)
          m(i * n + j, i * n + d) = v;
      }
  }
  return m;
}

Mat StarAlgebra::faithful(const Vec& a) const {
  if (kind_ == Kind::GroupAlgebra) return left_regular(a);
  Mat m(matrix_n_, matrix_n_);
  for (int i = 0; i < matrix_n_; ++i)
    for (int j = 0; j < matrix_n_; ++j) m(i, j) = a[static_cast<std::size_t>(i) * matrix_n_ + j];
  return m;
}

double StarAlgebra::norm(const Vec& a, const NormKind& kind) const {
  switch (kind.tag) {
    case NormKind::Tag::Lp: {
      if (std::isinf(kind.p)) {
        double mx = 0.0;
        for (int i = 0; i < dim_; ++i) mx = std::max(mx, std::abs(a[i]));
        return mx;
      }
      double acc = 0.0;
      for (int i = 0; i < dim_; ++i) acc += weight_ * std::pow(std::abs(a[i]), kind.p);
      return std::pow(acc, 1.0 / kind.p);
    }
    case NormKind::Tag::Operator:
      return operator_norm(faithful(a));
    case NormKind::Tag::Schatten: {
      Eigen::VectorXd sv = singular_values(faithful(a));
      if (std::isinf(kind.p)) return sv.size() ? sv[0] : 0.0;
      double acc = 0.0;
      for (int i = 0; i < sv.size(); ++i) acc += std::pow(sv[i], kind.p);
      return std::pow(acc, 1.0 / kind.p);
    }
  }
  throw std::logic_error("unreachable");
}

Complex StarAlgebra::inner(const Vec& a, const Vec& b) const {
  Complex acc = 0.0;
  for (int i = 0; i < dim_; ++i) acc += weight_ * a[i] * std::conj(b[i]);
  return acc;
}

AlgebraElement::AlgebraElement(AlgebraPtr algebra, Vec coeffs)
    : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)) {
  if (!algebra_) throw std::invalid_argument("element needs an algebra");
  if (coeffs_.size() != algebra_->dimension())
    throw std::invalid_argument("coefficient length does not match algebra dimension");
}

void AlgebraElement::require_same(const AlgebraElement& o) const {
  if (algebra_ != o.algebra_)
    throw std::invalid_argument("elements of different algebras (" + algebra_->id() + " vs " +
                                o.algebra_->id() + ")");
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
  require_same(o);
  return {algebra_, algebra_->multiply(coeffs_, o.coeffs_)};
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  require_same(o);
  return {algebra_, coeffs_ + o.coeffs_};
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  require_same(o);
  return {algebra_, coeffs_ - o.coeffs_};
}

AlgebraElement AlgebraElement::scaled(Complex s) const { return {algebra_, s * coeffs_}; }

AlgebraElement AlgebraElement::adjoint() const { return {algebra_, algebra_->adjoint(coeffs_)}; }

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) { return a * b; }

AlgebraElement adjoint(const AlgebraElement& a) { return a.adjoint(); }

Eigen::VectorXd singular_values(const Mat& m) {
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues();
}

double operator_norm(const Mat& m) {
  if (m.rows() == 0) return 0.0;
  return singular_values(m)(0);
}

}  // namespace tca

#include "tca/twisted.hpp"

#include <cmath>
#include <stdexcept>

namespace tca {

namespace {

Vec omega_delta(const AlgebraPtr& a, int k_index) {
  // |K| delta_k: the unitary implementing left translation by k
  Vec v = a->zero();
  v[k_index] = 1.0 / a->weight();
  return v;
}

double max_abs_diff(const Vec& a, const Vec& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

SystemPtr trivial_system(FiniteGroup h, AlgebraPtr a, std::string name) {
  const int n = h.order();
  const int d = a->dimension();
  TwistedSystem sys{std::move(h),
                    a,
                    std::vector<Mat>(n, Mat::Identity(d, d)),
                    std::vector<Vec>(static_cast<std::size_t>(n) * n, a->unit()),
                    std::vector<double>(n, 1.0),
                    std::move(name)};
  if (sys.name.empty()) sys.name = "l1(" + sys.group.name() + "," + a->id() + ")";
  return std::make_shared<TwistedSystem>(std::move(sys));
}

SystemPtr action_from_extension(const GroupExtension& ext) {
  AlgebraPtr a = StarAlgebra::group_algebra(ext.kernel_group);
  const FiniteGroup& g = ext.total;
  const int hn = ext.quotient.order();
  const int d = a->dimension();

  TwistedSystem sys{ext.quotient,
                    a,
                    {},
                    {},
                    std::vector<double>(hn, 1.0),
                    ext.name.empty() ? g.name() + "-system" : ext.name};

  sys.alpha.reserve(hn);
  for (int x = 0; x < hn; ++x) {
    // alpha_x(f)(t) = f(eta(x)^-1 t eta(x))
    Mat m = Mat::Zero(d, d);
    int eta = ext.section[x];
    for (int t = 0; t < d; ++t) {
      int conj = g.op(g.op(g.inverse(eta), ext.kernel[t]), eta);
      int s = ext.kernel_index(conj);
      if (s < 0) throw std::invalid_argument("action_from_extension: kernel is not normal");
      m(t, s) = 1.0;
    }
    sys.alpha.push_back(std::move(m));
  }

  sys.omega.reserve(static_cast<std::size_t>(hn) * hn);
  for (int x = 0; x < hn; ++x)
    for (int y = 0; y < hn; ++y) sys.omega.push_back(omega_delta(a, ext.tau_at(x, y)));
  return std::make_shared<TwistedSystem>(std::move(sys));
}

std::vector<TwistedViolation> verify_twisted_axioms(const TwistedSystem& sys, double tol) {
  std::vector<TwistedViolation> out;
  const auto& h = sys.group;
  const auto& a = *sys.algebra;
  const int n = h.order();
  const int d = sys.dim();
  const Vec unit = a.unit();
  auto report = [&](const std::string& axiom, int x, int y, int z, double r) {
    if (r > tol) out.push_back({axiom, {x, y, z}, r});
  };

  // (iii) normalization and the modular hook
  report("normalized", h.identity(), -1, -1,
         (sys.alpha_at(h.identity()) - Mat::Identity(d, d)).cwiseAbs().maxCoeff());
  for (int x = 0; x < n; ++x) {
    report("normalized", x, h.identity(), -1, max_abs_diff(sys.omega_at(x, h.identity()), unit));
    report("normalized", h.identity(), x, -1, max_abs_diff(sys.omega_at(h.identity(), x), unit));
    report("modular", x, -1, -1, std::abs(sys.delta[x] - 1.0));
  }

  // unitarity of every omega(x,y)
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const Vec& w = sys.omega_at(x, y);
      Vec ws = a.adjoint(w);
      double r = std::max(max_abs_diff(a.multiply(ws, w), unit),
                          max_abs_diff(a.multiply(w, ws), unit));
      report("omega-unitary", x, y, -1, r);
    }

  // (i) cocycle identity: alpha_x(omega(y,z)) omega(x,yz) = omega(x,y) omega(xy,z)
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Vec lhs = a.multiply(sys.alpha_at(x) * sys.omega_at(y, z), sys.omega_at(x, h.op(y, z)));
        Vec rhs = a.multiply(sys.omega_at(x, y), sys.omega_at(h.op(x, y), z));
        report("cocycle", x, y, z, max_abs_diff(lhs, rhs));
      }

  // (ii) intertwining on a basis: alpha_x(alpha_y(b)) omega(x,y) = omega(x,y) alpha_xy(b)
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const Vec& w = sys.omega_at(x, y);
      for (int i = 0; i < d; ++i) {
        Vec b = a.basis(i);
        Vec lhs = a.multiply(sys.alpha_at(x) * (sys.alpha_at(y) * b), w);
        Vec rhs = a.multiply(w, sys.alpha_at(h.op(x, y)) * b);
        report("intertwine", x, y, i, max_abs_diff(lhs, rhs));
      }
    }

  // each alpha_x a *-automorphism ...
  for (int x = 0; x < n; ++x) {
    const Mat& ax = sys.alpha_at(x);
    for (int i = 0; i < d; ++i) {
      Vec b = a.basis(i);
      report("alpha-star", x, i, -1, max_abs_diff(ax * a.adjoint(b), a.adjoint(ax * b)));
      for (int j = 0; j < d; ++j) {
        Vec c = a.basis(j);
        report("alpha-mult", x, i, j,
               max_abs_diff(ax * a.multiply(b, c), a.multiply(ax * b, ax * c)));
      }
    }
    // ... and isometric for the three coefficient norms, spot-checked on
    // deterministic random elements
    const NormKind kinds[] = {NormKind::lp(1), NormKind::lp(2), NormKind::op()};
    for (int s = 0; s < 8; ++s) {
      Rng rng(derive_seed(0x5ca1ab1e, static_cast<std::uint64_t>(x) * 8 + s));
      Vec v(d);
      for (int i = 0; i < d; ++i) v[i] = rng.complex_gaussian();
      for (const auto& kind : kinds)
        report("alpha-isometry", x, s, -1, std::abs(a.norm(ax * v, kind) - a.norm(v, kind)));
    }
  }
  return out;
}

TwistedElement::TwistedElement(SystemPtr system, std::vector<Vec> values)
    : system_(std::move(system)), values_(std::move(values)) {
  if (!system_) throw std::invalid_argument("twisted element needs a system");
  if (static_cast<int>(values_.size()) != system_->h_order())
    throw std::invalid_argument("twisted element needs one value per H element");
  for (const Vec& v : values_)
    if (v.size() != system_->dim())
      throw std::invalid_argument("twisted element value has the wrong dimension");
}

void TwistedElement::require_same(const TwistedElement& o) const {
  if (system_ != o.system_) throw std::invalid_argument("elements of different twisted systems");
}

TwistedElement TwistedElement::operator+(const TwistedElement& o) const {
  require_same(o);
  std::vector<Vec> out = values_;
  for (std::size_t x = 0; x < out.size(); ++x) out[x] += o.values_[x];
  return {system_, std::move(out)};
}

TwistedElement TwistedElement::operator-(const TwistedElement& o) const {
  require_same(o);
  std::vector<Vec> out = values_;
  for (std::size_t x = 0; x < out.size(); ++x) out[x] -= o.values_[x];
  return {system_, std::move(out)};
}

TwistedElement TwistedElement::scaled(Complex s) const {
  std::vector<Vec> out = values_;
  for (Vec& v : out) v *= s;
  return {system_, std::move(out)};
}

TwistedElement TwistedElement::operator*(const TwistedElement& o) const {
  return twisted_convolve(*this, o);
}

TwistedElement TwistedElement::adjoint() const { return twisted_adjoint(*this); }

Vec TwistedElement::stacked() const {
  const int d = system_->dim();
  Vec out(static_cast<Eigen::Index>(values_.size()) * d);
  for (std::size_t x = 0; x < values_.size(); ++x) out.segment(static_cast<Eigen::Index>(x) * d, d) = values_[x];
  return out;
}

TwistedElement twisted_zero(const SystemPtr& sys) {
  return {sys, std::vector<Vec>(sys->h_order(), sys->algebra->zero())};
}

TwistedElement twisted_unit(const SystemPtr& sys) {
  TwistedElement e = twisted_zero(sys);
  e.value(sys->group.identity()) = sys->algebra->unit();
  return e;
}

TwistedElement twisted_basis(const SystemPtr& sys, int x, int i) {
  TwistedElement e = twisted_zero(sys);
  e.value(x) = sys->algebra->basis(i);
  return e;
}

TwistedElement twisted_convolve(const TwistedElement& a, const TwistedElement& b) {
  if (a.system() != b.system())
    throw std::invalid_argument("twisted_convolve: elements of different systems");
  const TwistedSystem& sys = *a.system();
  const auto& h = sys.group;
  const auto& alg = *sys.algebra;
  const int n = h.order();
  std::vector<Vec> out(n, alg.zero());
  for (int y = 0; y < n; ++y) {
    // skip zero blocks: random elements are dense, basis elements are not
    if (a.value(y).isZero(0.0)) continue;
    for (int z = 0; z < n; ++z) {
      int x = h.op(y, z);
      Vec term = alg.multiply(a.value(y), sys.alpha_at(y) * b.value(z));
      out[x] += alg.multiply(term, sys.omega_at(y, z));
    }
  }
  return {a.system(), std::move(out)};
}

TwistedElement twisted_adjoint(const TwistedElement& a) {
  const TwistedSystem& sys = *a.system();
  const auto& h = sys.group;
  const auto& alg = *sys.algebra;
  const int n = h.order();
  std::vector<Vec> out(n);
  for (int x = 0; x < n; ++x) {
    int xi = h.inverse(x);
    Vec star = alg.adjoint(a.value(xi));
    out[x] = sys.delta[xi] *
             alg.multiply(alg.adjoint(sys.omega_at(x, xi)), sys.alpha_at(x) * star);
  }
  return {a.system(), std::move(out)};
}

double l1_norm(const TwistedElement& a, const NormKind& coeff_kind) {
  double acc = 0.0;
  for (const Vec& v : a.values()) acc += a.system()->algebra->norm(v, coeff_kind);
  return acc;
}

Mat twisted_left_matrix(const TwistedElement& a) {
  const TwistedSystem& sys = *a.system();
  const auto& h = sys.group;
  const auto& alg = *sys.algebra;
  const int n = h.order();
  const int d = sys.dim();
  Mat m = Mat::Zero(static_cast<Eigen::Index>(n) * d, static_cast<Eigen::Index>(n) * d);
  for (int y = 0; y < n; ++y) {
    if (a.value(y).isZero(0.0)) continue;
    Mat left = alg.left_regular(a.value(y));
    for (int z = 0; z < n; ++z) {
      int x = h.op(y, z);
      // f -> Phi(y) . alpha_y(f) . omega(y, z)
      Mat block = alg.right_regular(sys.omega_at(y, z)) * sys.alpha_at(y);
      m.block(static_cast<Eigen::Index>(x) * d, static_cast<Eigen::Index>(z) * d, d, d) +=
          left * block;
    }
  }
  return m;
}

SpectrumResult twisted_spectrum(const TwistedElement& a) {
  return spectrum_of_matrix(twisted_left_matrix(a));
}

TwistedElement random_twisted_element(const SystemPtr& sys, std::uint64_t seed, Dist dist) {
  Rng rng(seed);
  const int n = sys->h_order();
  const int d = sys->dim();
  bool heavy = dist == Dist::HeavyTailed;
  std::vector<Vec> values(n, sys->algebra->zero());
  for (int x = 0; x < n; ++x)
    for (int i = 0; i < d; ++i)
      values[x][i] = heavy ? rng.complex_cauchy() : rng.complex_gaussian();
  TwistedElement b(sys, std::move(values));
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

// ---- decomposition --------------------------------------------------------

Decomposition::Decomposition(GroupExtension ext) : ext_(std::move(ext)) {
  system_ = action_from_extension(ext_);
  // total measure |H| x (probability on K): weight 1/|K| per element of G
  ambient_ = StarAlgebra::group_algebra(ext_.total, 1.0 / static_cast<double>(ext_.kernel.size()));
  double r_keta = certify(Convention::KEta);
  if (r_keta <= 1e-9) {
    convention_ = Convention::KEta;
    residual_ = r_keta;
    return;
  }
  double r_etak = certify(Convention::EtaK);
  convention_ = r_etak < r_keta ? Convention::EtaK : Convention::KEta;
  residual_ = std::min(r_keta, r_etak);
}

TwistedElement Decomposition::to_twisted_with(const AlgebraElement& f, Convention c) const {
  if (f.algebra() != ambient_)
    throw std::invalid_argument("to_twisted: element does not live in the ambient group algebra");
  const FiniteGroup& g = ext_.total;
  const int hn = ext_.quotient.order();
  const int d = static_cast<int>(ext_.kernel.size());
  std::vector<Vec> values(hn, system_->algebra->zero());
  for (int x = 0; x < hn; ++x) {
    int eta = ext_.section[x];
    for (int k = 0; k < d; ++k) {
      int gi = c == Convention::KEta ? g.op(ext_.kernel[k], eta) : g.op(eta, ext_.kernel[k]);
      values[x][k] = f.coeffs()[gi];
    }
  }
  return {system_, std::move(values)};
}

AlgebraElement Decomposition::from_twisted_with(const TwistedElement& phi, Convention c) const {
  if (phi.system() != system_)
    throw std::invalid_argument("from_twisted: element does not live in this system");
  const FiniteGroup& g = ext_.total;
  Vec out = ambient_->zero();
  for (int gi = 0; gi < g.order(); ++gi) {
    int x = ext_.projection[gi];
    int eta = ext_.section[x];
    int k = c == Convention::KEta ? g.op(gi, g.inverse(eta)) : g.op(g.inverse(eta), gi);
    int ki = ext_.kernel_index(k);
    if (ki < 0) throw std::logic_error("from_twisted: coset decomposition failed");
    out[gi] = phi.value(x)[ki];
  }
  return {ambient_, std::move(out)};
}

double Decomposition::certify(Convention c) const {
  const int n = ambient_->dimension();
  double worst = 0.0;
  auto track = [&worst](double r) { worst = std::max(worst, r); };

  // units correspond
  track(max_abs_diff(to_twisted_with({ambient_, ambient_->unit()}, c).stacked(),
                     twisted_unit(system_).stacked()));

  std::vector<TwistedElement> images;
  images.reserve(n);
  for (int i = 0; i < n; ++i) {
    AlgebraElement bi(ambient_, ambient_->basis(i));
    TwistedElement ti = to_twisted_with(bi, c);
    // round trip both ways and the involution, basis by basis
    track(max_abs_diff(from_twisted_with(ti, c).coeffs(), bi.coeffs()));
    track(max_abs_diff(to_twisted_with(bi.adjoint(), c).stacked(),
                       twisted_adjoint(ti).stacked()));
    images.push_back(std::move(ti));
  }
  for (int x = 0; x < system_->h_order(); ++x)
    for (int i = 0; i < system_->dim(); ++i) {
      TwistedElement b = twisted_basis(system_, x, i);
      track(max_abs_diff(to_twisted_with(from_twisted_with(b, c), c).stacked(), b.stacked()));
    }

  // multiplicativity on every basis pair
  for (int i = 0; i < n; ++i) {
    AlgebraElement bi(ambient_, ambient_->basis(i));
    for (int j = 0; j < n; ++j) {
      AlgebraElement bj(ambient_, ambient_->basis(j));
      TwistedElement lhs = to_twisted_with(bi * bj, c);
      TwistedElement rhs = twisted_convolve(images[i], images[j]);
      track(max_abs_diff(lhs.stacked(), rhs.stacked()));
    }
  }
  return worst;
}

TwistedElement Decomposition::to_twisted(const AlgebraElement& f) const {
  return to_twisted_with(f, convention_);
}

AlgebraElement Decomposition::from_twisted(const TwistedElement& phi) const {
  return from_twisted_with(phi, convention_);
}

}  // namespace tca

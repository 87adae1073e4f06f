#include "tca/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>

#include "tca/fourier.hpp"
#include "tca/group_expr.hpp"

namespace tca {

namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

/// Base seed of a row's sample stream: a function of the row identity alone,
/// so enabling or disabling other suites never shifts anybody's samples.
std::uint64_t row_stream(const SuiteConfig& cfg, std::string_view suite, std::string_view system,
                         std::string_view tag) {
  std::string key;
  key.reserve(suite.size() + system.size() + tag.size() + 2);
  key.append(suite).push_back('|');
  key.append(system).push_back('|');
  key.append(tag);
  return cfg.master_seed ^ fnv1a(key);
}

struct SampleMax {
  double value = 0.0;
  std::uint64_t seed = 0;  // derived seed of the maximizing sample
};

/// Worst value of fn(sample_seed) over n samples, parallel but order-stable.
template <class Fn>
SampleMax sample_max(int n, std::uint64_t base_seed, int threads, Fn&& fn) {
  std::vector<double> vals(static_cast<std::size_t>(n), 0.0);
  parallel_for(static_cast<std::size_t>(n), threads,
               [&](std::size_t i) { vals[i] = fn(derive_seed(base_seed, i)); });
  SampleMax out;
  out.seed = derive_seed(base_seed, 0);
  for (std::size_t i = 0; i < vals.size(); ++i)
    if (vals[i] > out.value) {
      out.value = vals[i];
      out.seed = derive_seed(base_seed, i);
    }
  return out;
}

std::string violation_text(const std::vector<TwistedViolation>& v) {
  if (v.empty()) return "";
  std::ostringstream os;
  os << v.front().axiom << " at (" << v.front().witness[0] << "," << v.front().witness[1] << ","
     << v.front().witness[2] << ")";
  if (v.size() > 1) os << " +" << v.size() - 1 << " more";
  return os.str();
}

double stacked_diff(const TwistedElement& a, const TwistedElement& b) {
  return (a.stacked() - b.stacked()).cwiseAbs().maxCoeff();
}

}  // namespace

bool VerificationReport::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.pass; });
}

void VerificationReport::append(const VerificationReport& other) {
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
}

CheckRow DiffReport::row(std::string suite) const {
  CheckRow r;
  r.suite = std::move(suite);
  r.system = system_id;
  r.norm_pair = norm_a.name() + "|" + norm_b.name();
  r.samples = samples;
  r.value = c_hat;
  r.tolerance = threshold;
  r.pass = pass;
  r.seed = worst_seed;
  if (skipped > 0) r.detail = "skipped " + std::to_string(skipped) + " near-zero pairs";
  return r;
}

DiffReport diff_constant_estimate(const AlgebraPtr& algebra, NormKind norm_a, NormKind norm_b,
                                  int n, std::uint64_t seed, double threshold, int threads,
                                  Dist dist) {
  std::vector<double> ratios(static_cast<std::size_t>(n), -1.0);
  parallel_for(static_cast<std::size_t>(n), threads, [&](std::size_t i) {
    std::uint64_t si = derive_seed(seed, i);
    AlgebraElement a = random_element(algebra, derive_seed(si, 0), dist);
    AlgebraElement b = random_element(algebra, derive_seed(si, 1), dist);
    double den = a.norm(norm_a) * b.norm(norm_b) + a.norm(norm_b) * b.norm(norm_a);
    if (den < 1e-14) return;  // ratio slot stays -1 (skipped)
    ratios[i] = (a * b).norm(norm_a) / den;
  });
  DiffReport rep;
  rep.system_id = algebra->id();
  rep.norm_a = norm_a;
  rep.norm_b = norm_b;
  rep.samples = n;
  rep.threshold = threshold;
  rep.worst_seed = derive_seed(seed, 0);
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    if (ratios[i] < 0.0) {
      ++rep.skipped;
      continue;
    }
    if (ratios[i] > rep.c_hat) {
      rep.c_hat = ratios[i];
      rep.worst_seed = derive_seed(seed, i);
    }
  }
  rep.pass = rep.c_hat <= threshold;
  return rep;
}

DiffReport lifted_diff_check(const SystemPtr& sys, NormKind coeff_a, NormKind coeff_b, int n,
                             std::uint64_t seed, double threshold, int threads) {
  std::vector<double> ratios(static_cast<std::size_t>(n), -1.0);
  parallel_for(static_cast<std::size_t>(n), threads, [&](std::size_t i) {
    std::uint64_t si = derive_seed(seed, i);
    TwistedElement a = random_twisted_element(sys, derive_seed(si, 0), Dist::ComplexGaussian);
    TwistedElement b = random_twisted_element(sys, derive_seed(si, 1), Dist::ComplexGaussian);
    double den = l1_norm(a, coeff_a) * l1_norm(b, coeff_b) +
                 l1_norm(a, coeff_b) * l1_norm(b, coeff_a);
    if (den < 1e-14) return;
    ratios[i] = l1_norm(a * b, coeff_a) / den;
  });
  DiffReport rep;
  rep.system_id = sys->name;
  rep.norm_a = coeff_a;
  rep.norm_b = coeff_b;
  rep.samples = n;
  rep.threshold = threshold;
  rep.worst_seed = derive_seed(seed, 0);
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    if (ratios[i] < 0.0) {
      ++rep.skipped;
      continue;
    }
    if (ratios[i] > rep.c_hat) {
      rep.c_hat = ratios[i];
      rep.worst_seed = derive_seed(seed, i);
    }
  }
  rep.pass = rep.c_hat <= threshold;
  return rep;
}

VerificationReport group_axioms_suite(const FiniteGroup& g, const SuiteConfig& cfg) {
  std::vector<AxiomViolation> v = verify_group_axioms(g);
  const long long n = g.order();
  CheckRow r;
  r.suite = "group-axioms";
  r.system = g.name().empty() ? "order-" + std::to_string(n) : g.name();
  r.samples = n * n * n + 2 * n * n + n;  // associativity + closure/identity + inverses
  r.value = static_cast<double>(v.size());
  r.tolerance = 0.0;
  r.pass = v.empty();
  r.seed = cfg.master_seed;
  if (!v.empty())
    r.detail = v.front().axiom + ": " + v.front().detail +
               (v.size() > 1 ? " +" + std::to_string(v.size() - 1) + " more" : "");
  VerificationReport rep;
  rep.add(std::move(r));
  return rep;
}

VerificationReport twisted_axioms_suite(const GroupExtension& ext, const SystemPtr& sys,
                                        const SuiteConfig& cfg) {
  VerificationReport rep;
  const FiniteGroup& g = ext.total;
  const FiniteGroup& h = ext.quotient;
  const int hn = h.order();

  {  // cocycle identity in the group itself, exact
    long long bad = 0;
    std::string witness;
    for (int x = 0; x < hn; ++x)
      for (int y = 0; y < hn; ++y)
        for (int z = 0; z < hn; ++z) {
          int lhs = g.op(ext.kernel[ext.tau_at(x, y)], ext.kernel[ext.tau_at(h.op(x, y), z)]);
          int conj = g.conjugate(ext.section[x], ext.kernel[ext.tau_at(y, z)]);
          int rhs = g.op(conj, ext.kernel[ext.tau_at(x, h.op(y, z))]);
          if (lhs != rhs && bad++ == 0)
            witness = "fails at (" + h.label(x) + "," + h.label(y) + "," + h.label(z) + ")";
        }
    CheckRow r;
    r.suite = "twisted-axioms";
    r.system = sys->name;
    r.samples = static_cast<long long>(hn) * hn * hn;
    r.value = static_cast<double>(bad);
    r.tolerance = 0.0;
    r.pass = bad == 0;
    r.seed = cfg.master_seed;
    if (bad) {
      r.detail = "group cocycle identity " + witness;
    } else {
      // surface the cocycle itself: first nontrivial value, or note the split
      int e = ext.kernel_group.identity();
      r.detail = "group cocycle identity; tau = 1 (split section)";
      for (int x = 0; x < hn && r.detail.find("tau = 1") != std::string::npos; ++x)
        for (int y = 0; y < hn; ++y)
          if (ext.tau_at(x, y) != e) {
            r.detail = "group cocycle identity; tau(" + h.label(x) + "," + h.label(y) + ") = " +
                       ext.kernel_group.label(ext.tau_at(x, y));
            break;
          }
    }
    rep.add(std::move(r));
  }

  {  // the algebra-level axioms, exhaustive
    std::vector<TwistedViolation> v = verify_twisted_axioms(*sys, cfg.tol_algebraic);
    const long long d = sys->dim();
    CheckRow r;
    r.suite = "twisted-axioms";
    r.system = sys->name;
    r.samples = static_cast<long long>(hn) * hn * hn + hn * hn * (d + 1) + hn * (d * d + d) +
                hn * 8 * 3 + 3 * hn + 1;
    r.value = 0.0;
    for (const auto& viol : v) r.value = std::max(r.value, viol.residual);
    r.tolerance = cfg.tol_algebraic;
    r.pass = v.empty();
    r.seed = cfg.master_seed;
    r.detail = v.empty() ? "action axioms, unitarity, isometry" : violation_text(v);
    rep.add(std::move(r));
  }

  {  // crossed-product algebra laws on random elements
    std::uint64_t base = row_stream(cfg, "twisted-axioms", sys->name, "algebra-random");
    SampleMax worst = sample_max(cfg.samples, base, cfg.threads, [&](std::uint64_t s) {
      TwistedElement a = random_twisted_element(sys, derive_seed(s, 0), Dist::ComplexGaussian);
      TwistedElement b = random_twisted_element(sys, derive_seed(s, 1), Dist::ComplexGaussian);
      TwistedElement c = random_twisted_element(sys, derive_seed(s, 2), Dist::ComplexGaussian);
      TwistedElement unit = twisted_unit(sys);
      double r = stacked_diff((a * b) * c, a * (b * c));
      r = std::max(r, stacked_diff((a * b).adjoint(), b.adjoint() * a.adjoint()));
      r = std::max(r, stacked_diff(a.adjoint().adjoint(), a));
      r = std::max(r, stacked_diff(unit * a, a));
      r = std::max(r, stacked_diff(a * unit, a));
      return r;
    });
    CheckRow r;
    r.suite = "twisted-axioms";
    r.system = sys->name;
    r.samples = cfg.samples;
    r.value = worst.value;
    r.tolerance = cfg.tol_algebraic;
    r.pass = worst.value <= cfg.tol_algebraic;
    r.seed = worst.seed;
    r.detail = "associativity, involution, unit on random triples";
    rep.add(std::move(r));
  }
  return rep;
}

VerificationReport decomposition_suite(const Decomposition& dec, const SuiteConfig& cfg) {
  VerificationReport rep;
  const std::string& name = dec.system()->name;
  {
    CheckRow r;
    r.suite = "decomp";
    r.system = name;
    long long n = dec.ambient()->dimension();
    r.samples = n * n + 3 * n + 1;
    r.value = dec.certification_residual();
    r.tolerance = cfg.tol_algebraic;
    r.pass = r.value <= r.tolerance;
    r.seed = cfg.master_seed;
    r.detail = dec.convention() == Decomposition::Convention::KEta
                   ? "convention Phi(x)(k) = F(k eta(x))"
                   : "convention Phi(x)(k) = F(eta(x) k)";
    rep.add(std::move(r));
  }
  {
    std::uint64_t base = row_stream(cfg, "decomp", name, "isometry");
    NormKind l1 = NormKind::lp(1);
    SampleMax worst = sample_max(cfg.samples, base, cfg.threads, [&](std::uint64_t s) {
      AlgebraElement f = random_element(dec.ambient(), s, Dist::ComplexGaussian);
      return std::abs(f.norm(l1) - l1_norm(dec.to_twisted(f), l1));
    });
    CheckRow r;
    r.suite = "decomp";
    r.system = name;
    r.norm_pair = "L1|l1(L1)";
    r.samples = cfg.samples;
    r.value = worst.value;
    r.tolerance = cfg.tol_algebraic;
    r.pass = worst.value <= r.tolerance;
    r.seed = worst.seed;
    r.detail = "isometry of the decomposition";
    rep.add(std::move(r));
  }
  return rep;
}

VerificationReport spectrum_agreement_suite(const Decomposition& dec, const SuiteConfig& cfg) {
  const std::string& name = dec.system()->name;
  std::uint64_t base = row_stream(cfg, "spectrum", name, "agreement");
  SampleMax worst = sample_max(cfg.srp_samples, base, cfg.threads, [&](std::uint64_t s) {
    TwistedElement phi = random_twisted_element(dec.system(), s, Dist::ComplexGaussian);
    SpectrumResult twisted = twisted_spectrum(phi);
    SpectrumResult ambient = spectrum(dec.from_twisted(phi));
    return multiset_distance(twisted.eigenvalues, ambient.eigenvalues);
  });
  CheckRow r;
  r.suite = "spectrum";
  r.system = name;
  r.samples = cfg.srp_samples;
  r.value = worst.value;
  r.tolerance = cfg.tol_spectral;
  r.pass = worst.value <= r.tolerance;
  r.seed = worst.seed;
  r.detail = "twisted vs ambient eigenvalue multisets";
  VerificationReport rep;
  rep.add(std::move(r));
  return rep;
}

VerificationReport symmetry_suite(const SystemPtr& sys, const SuiteConfig& cfg) {
  VerificationReport rep;
  {
    std::uint64_t base = row_stream(cfg, "symmetry", sys->name, "positive");
    SampleMax worst = sample_max(cfg.samples, base, cfg.threads, [&](std::uint64_t s) {
      TwistedElement phi = random_twisted_element(sys, s, Dist::ComplexGaussian);
      SpectrumResult spec = twisted_spectrum(phi.adjoint() * phi);
      double bad = 0.0;
      for (Eigen::Index i = 0; i < spec.eigenvalues.size(); ++i) {
        bad = std::max(bad, -spec.eigenvalues[i].real());
        bad = std::max(bad, std::abs(spec.eigenvalues[i].imag()));
      }
      return bad;
    });
    CheckRow r;
    r.suite = "symmetry";
    r.system = sys->name;
    r.samples = cfg.samples;
    r.value = worst.value;
    r.tolerance = cfg.tol_spectral;
    r.pass = worst.value <= r.tolerance;
    r.seed = worst.seed;
    r.detail = "Spec(Phi* Phi) in [0, inf)";
    rep.add(std::move(r));
  }
  {
    std::uint64_t base = row_stream(cfg, "symmetry", sys->name, "self-adjoint");
    SampleMax worst = sample_max(cfg.samples, base, cfg.threads, [&](std::uint64_t s) {
      TwistedElement phi = random_twisted_element(sys, s, Dist::SelfAdjoint);
      SpectrumResult spec = twisted_spectrum(phi);
      double bad = 0.0;
      for (Eigen::Index i = 0; i < spec.eigenvalues.size(); ++i)
        bad = std::max(bad, std::abs(spec.eigenvalues[i].imag()));
      return bad;
    });
    CheckRow r;
    r.suite = "symmetry";
    r.system = sys->name;
    r.samples = cfg.samples;
    r.value = worst.value;
    r.tolerance = cfg.tol_spectral;
    r.pass = worst.value <= r.tolerance;
    r.seed = worst.seed;
    r.detail = "self-adjoint spectrum real";
    rep.add(std::move(r));
  }
  return rep;
}

namespace {

/// Shared srp core: radii_fn(seed) returns the per-kind Gelfand radii plus
/// the eigenvalue radius last; one row per kind plus a pairwise row.
VerificationReport srp_rows(const std::string& system, const std::vector<std::string>& kind_names,
                            const SuiteConfig& cfg, std::uint64_t base,
                            const std::function<std::vector<double>(std::uint64_t)>& radii_fn) {
  const std::size_t kinds = kind_names.size();
  std::vector<std::vector<double>> all(static_cast<std::size_t>(cfg.srp_samples));
  parallel_for(all.size(), cfg.threads,
               [&](std::size_t i) { all[i] = radii_fn(derive_seed(base, i)); });

  VerificationReport rep;
  for (std::size_t k = 0; k < kinds; ++k) {
    CheckRow r;
    r.suite = "srp";
    r.system = system;
    r.norm_pair = kind_names[k];
    r.samples = cfg.srp_samples;
    r.seed = derive_seed(base, 0);
    for (std::size_t i = 0; i < all.size(); ++i) {
      double gap = std::abs(all[i][k] - all[i][kinds]);
      if (gap > r.value) {
        r.value = gap;
        r.seed = derive_seed(base, i);
      }
    }
    r.tolerance = cfg.tol_gelfand;
    r.pass = r.value <= r.tolerance;
    r.detail = "Gelfand radius vs eigenvalue radius";
    rep.add(std::move(r));
  }
  CheckRow r;
  r.suite = "srp";
  r.system = system;
  r.norm_pair = "pairwise";
  r.samples = cfg.srp_samples;
  r.seed = derive_seed(base, 0);
  for (std::size_t i = 0; i < all.size(); ++i) {
    double lo = all[i][0], hi = all[i][0];
    for (std::size_t k = 1; k < kinds; ++k) {
      lo = std::min(lo, all[i][k]);
      hi = std::max(hi, all[i][k]);
    }
    if (hi - lo > r.value) {
      r.value = hi - lo;
      r.seed = derive_seed(base, i);
    }
  }
  r.tolerance = 2.0 * cfg.tol_gelfand;
  r.pass = r.value <= r.tolerance;
  r.detail = "radius agreement across norm kinds";
  rep.add(std::move(r));
  return rep;
}

}  // namespace

VerificationReport srp_suite(const AlgebraPtr& algebra, const std::vector<NormKind>& kinds,
                             const SuiteConfig& cfg) {
  std::vector<std::string> names;
  for (const auto& k : kinds) names.push_back(k.name());
  std::uint64_t base = row_stream(cfg, "srp", algebra->id(), "algebra");
  auto radii = [&, kinds](std::uint64_t s) {
    AlgebraElement a = random_element(algebra, s, Dist::ComplexGaussian);
    std::vector<double> out;
    for (const auto& kind : kinds)
      out.push_back(gelfand_radius(a, kind, cfg.k_max, cfg.tol_gelfand).radius);
    out.push_back(spectrum(a).radius);
    return out;
  };
  return srp_rows(algebra->id(), names, cfg, base, radii);
}

VerificationReport srp_suite(const SystemPtr& sys, const std::vector<NormKind>& coeff_kinds,
                             const SuiteConfig& cfg) {
  std::vector<std::string> names;
  for (const auto& k : coeff_kinds) names.push_back("l1(" + k.name() + ")");
  std::uint64_t base = row_stream(cfg, "srp", sys->name, "system");
  auto radii = [&, coeff_kinds](std::uint64_t s) {
    TwistedElement a = random_twisted_element(sys, s, Dist::ComplexGaussian);
    GelfandOptions opt;
    opt.k_max = cfg.k_max;
    opt.gap_tol = cfg.tol_gelfand;
    std::vector<double> out;
    for (const auto& kind : coeff_kinds) {
      std::function<double(const TwistedElement&)> norm_fn = [&kind](const TwistedElement& x) {
        return l1_norm(x, kind);
      };
      std::function<TwistedElement(const TwistedElement&)> square_fn =
          [](const TwistedElement& x) { return x * x; };
      std::function<TwistedElement(const TwistedElement&, double)> scale_fn =
          [](const TwistedElement& x, double v) { return x.scaled(v); };
      out.push_back(gelfand_iterate<TwistedElement>(a, norm_fn, square_fn, scale_fn, opt).radius);
    }
    out.push_back(twisted_spectrum(a).radius);
    return out;
  };
  return srp_rows(sys->name, names, cfg, base, radii);
}

VerificationReport lp_nesting_suite(const FiniteGroup& k, double p, double q,
                                    const SuiteConfig& cfg) {
  if (p < q) throw std::invalid_argument("lp_nesting_suite: need p >= q");
  AlgebraPtr alg = StarAlgebra::group_algebra(k);
  NormKind np = NormKind::lp(p), nq = NormKind::lp(q);
  VerificationReport rep;
  {
    std::uint64_t base = row_stream(cfg, "nesting", alg->id(), np.name() + nq.name());
    SampleMax worst = sample_max(cfg.samples, base, cfg.threads, [&](std::uint64_t s) {
      AlgebraElement f = random_element(alg, s, Dist::ComplexGaussian);
      return std::max(0.0, f.norm(nq) - f.norm(np));
    });
    CheckRow r;
    r.suite = "nesting";
    r.system = alg->id();
    r.norm_pair = nq.name() + "<=" + np.name();
    r.samples = cfg.samples;
    r.value = worst.value;
    r.tolerance = cfg.tol_algebraic;
    r.pass = worst.value <= r.tolerance;
    r.seed = worst.seed;
    r.detail = "norm nesting under the probability weight";
    rep.add(std::move(r));
  }
  std::uint64_t base = row_stream(cfg, "nesting", alg->id(), "diff" + np.name() + nq.name());
  rep.add(diff_constant_estimate(alg, np, nq, cfg.samples, base, 1.0 + 1e-9, cfg.threads)
              .row("nesting"));
  return rep;
}

VerificationReport schatten_suite(int n_dim, const std::vector<double>& p_values,
                                  const SuiteConfig& cfg) {
  AlgebraPtr alg = StarAlgebra::matrix_algebra(n_dim);
  SystemPtr lifted = trivial_system(cyclic_group(4), StarAlgebra::matrix_algebra(4));
  NormKind op = NormKind::op();
  VerificationReport rep;
  for (double p : p_values) {
    NormKind sp = NormKind::schatten(p);
    {
      std::uint64_t base = row_stream(cfg, "schatten", alg->id(), sp.name());
      SampleMax worst = sample_max(cfg.samples, base, cfg.threads, [&](std::uint64_t s) {
        AlgebraElement a = random_element(alg, derive_seed(s, 0), Dist::ComplexGaussian);
        AlgebraElement b = random_element(alg, derive_seed(s, 1), Dist::ComplexGaussian);
        return std::max(0.0, (a * b).norm(sp) - a.norm(op) * b.norm(sp));
      });
      CheckRow r;
      r.suite = "schatten";
      r.system = alg->id();
      r.norm_pair = sp.name() + "|op";
      r.samples = cfg.samples;
      r.value = worst.value;
      r.tolerance = cfg.tol_spectral;
      r.pass = worst.value <= r.tolerance;
      r.seed = worst.seed;
      r.detail = "||ST||_p <= ||S||_op ||T||_p";
      rep.add(std::move(r));
    }
    std::uint64_t base = row_stream(cfg, "schatten", lifted->name, "lift" + sp.name());
    rep.add(lifted_diff_check(lifted, sp, op, cfg.samples, base, 1.0 + 1e-9, cfg.threads)
                .row("schatten"));
  }
  return rep;
}

VerificationReport fourier_suite(const FiniteGroup& k, const SuiteConfig& cfg) {
  AlgebraPtr alg = StarAlgebra::group_algebra(k);
  DualGroup dual = dual_group(alg->group());
  const double w = alg->weight();
  NormKind op = NormKind::op();
  VerificationReport rep;
  {
    std::uint64_t base = row_stream(cfg, "fourier", alg->id(), "conv");
    SampleMax worst = sample_max(cfg.samples, base, cfg.threads, [&](std::uint64_t s) {
      AlgebraElement f = random_element(alg, derive_seed(s, 0), Dist::ComplexGaussian);
      AlgebraElement g = random_element(alg, derive_seed(s, 1), Dist::ComplexGaussian);
      Vec lhs = fourier_transform(dual, (f * g).coeffs(), w);
      Vec rhs = fourier_transform(dual, f.coeffs(), w)
                    .cwiseProduct(fourier_transform(dual, g.coeffs(), w));
      return (lhs - rhs).cwiseAbs().maxCoeff();
    });
    CheckRow r;
    r.suite = "fourier";
    r.system = alg->id();
    r.samples = cfg.samples;
    r.value = worst.value;
    r.tolerance = cfg.tol_algebraic;
    r.pass = worst.value <= r.tolerance;
    r.seed = worst.seed;
    r.detail = "transform turns convolution into pointwise product";
    rep.add(std::move(r));
  }
  {
    std::uint64_t base = row_stream(cfg, "fourier", alg->id(), "opnorm");
    SampleMax worst = sample_max(cfg.samples, base, cfg.threads, [&](std::uint64_t s) {
      AlgebraElement f = random_element(alg, s, Dist::ComplexGaussian);
      double fmax = fourier_transform(dual, f.coeffs(), w).cwiseAbs().maxCoeff();
      return std::abs(f.norm(op) - fmax);
    });
    CheckRow r;
    r.suite = "fourier";
    r.system = alg->id();
    r.norm_pair = "op";
    r.samples = cfg.samples;
    r.value = worst.value;
    r.tolerance = cfg.tol_algebraic;
    r.pass = worst.value <= r.tolerance;
    r.seed = worst.seed;
    r.detail = "operator norm = max |f-hat|";
    rep.add(std::move(r));
  }
  return rep;
}

VerificationReport hstar_suite(const FiniteGroup& k, const SuiteConfig& cfg) {
  AlgebraPtr alg = StarAlgebra::group_algebra(k);
  std::uint64_t base = row_stream(cfg, "hstar", alg->id(), "identities");
  SampleMax worst = sample_max(cfg.samples, base, cfg.threads, [&](std::uint64_t s) {
    AlgebraElement a = random_element(alg, derive_seed(s, 0), Dist::ComplexGaussian);
    AlgebraElement b = random_element(alg, derive_seed(s, 1), Dist::ComplexGaussian);
    AlgebraElement c = random_element(alg, derive_seed(s, 2), Dist::ComplexGaussian);
    Complex left = alg->inner((a * b).coeffs(), c.coeffs());
    Complex right = alg->inner(b.coeffs(), (a.adjoint() * c).coeffs());
    double r = std::abs(left - right);
    left = alg->inner((b * a).coeffs(), c.coeffs());
    right = alg->inner(b.coeffs(), (c * a.adjoint()).coeffs());
    return std::max(r, std::abs(left - right));
  });
  CheckRow r;
  r.suite = "hstar";
  r.system = alg->id();
  r.norm_pair = "L2";
  r.samples = cfg.samples;
  r.value = worst.value;
  r.tolerance = cfg.tol_algebraic;
  r.pass = worst.value <= r.tolerance;
  r.seed = worst.seed;
  r.detail = "<ab,c>=<b,a*c> and <ba,c>=<b,ca*>";
  VerificationReport rep;
  rep.add(std::move(r));
  return rep;
}

VerificationReport covariant_suite(const SystemPtr& sys, const SuiteConfig& cfg,
                                   const std::string& note) {
  CovariantRep rep_uv = build_covariant(sys);
  std::string suffix = note.empty() ? "" : " (" + note + ")";
  VerificationReport rep;
  {
    std::vector<CovariantViolation> v = check_covariant(rep_uv, cfg.tol_algebraic);
    const long long n = sys->h_order(), d = sys->dim();
    CheckRow r;
    r.suite = "covariant";
    r.system = sys->name;
    r.samples = n + n * n + n * d;
    r.value = 0.0;
    for (const auto& viol : v) r.value = std::max(r.value, viol.residual);
    r.tolerance = cfg.tol_algebraic;
    r.pass = v.empty();
    r.seed = cfg.master_seed;
    r.detail = (v.empty() ? std::string("U_x lambda(f) U_x* = lambda(alpha_x f)")
                          : v.front().check + " fails at (" +
                                std::to_string(v.front().witness[0]) + "," +
                                std::to_string(v.front().witness[1]) + ")") +
               suffix;
    rep.add(std::move(r));
  }
  {
    std::uint64_t base = row_stream(cfg, "covariant", sys->name, "multiplicative");
    SampleMax worst = sample_max(cfg.pair_samples, base, cfg.threads, [&](std::uint64_t s) {
      TwistedElement a = random_twisted_element(sys, derive_seed(s, 0), Dist::ComplexGaussian);
      TwistedElement b = random_twisted_element(sys, derive_seed(s, 1), Dist::ComplexGaussian);
      std::vector<Mat> fa = covariant_embed(rep_uv, a);
      std::vector<Mat> fb = covariant_embed(rep_uv, b);
      std::vector<Mat> prod = covariant_embed(rep_uv, a * b);
      std::vector<Mat> conv = matrix_convolve(sys->group, fa, fb);
      std::vector<Mat> star = covariant_embed(rep_uv, a.adjoint());
      std::vector<Mat> inv = matrix_involution(sys->group, fa);
      double r = 0.0;
      for (int x = 0; x < sys->h_order(); ++x) {
        r = std::max(r, (prod[x] - conv[x]).cwiseAbs().maxCoeff());
        r = std::max(r, (star[x] - inv[x]).cwiseAbs().maxCoeff());
      }
      return r;
    });
    CheckRow r;
    r.suite = "covariant";
    r.system = sys->name;
    r.samples = cfg.pair_samples;
    r.value = worst.value;
    r.tolerance = cfg.tol_algebraic;
    r.pass = worst.value <= r.tolerance;
    r.seed = worst.seed;
    r.detail = "phi(Phi * Psi) = phi(Phi) * phi(Psi), phi(Phi*) = phi(Phi)*" + suffix;
    rep.add(std::move(r));
  }
  {
    std::uint64_t base = row_stream(cfg, "covariant", sys->name, "norm");
    NormKind op = NormKind::op();
    SampleMax worst = sample_max(cfg.pair_samples, base, cfg.threads, [&](std::uint64_t s) {
      TwistedElement a = random_twisted_element(sys, s, Dist::ComplexGaussian);
      std::vector<Mat> fa = covariant_embed(rep_uv, a);
      double r = 0.0;
      for (int x = 0; x < sys->h_order(); ++x)
        r = std::max(r, std::abs(operator_norm(fa[x]) - sys->algebra->norm(a.value(x), op)));
      return r;
    });
    CheckRow r;
    r.suite = "covariant";
    r.system = sys->name;
    r.norm_pair = "op";
    r.samples = cfg.pair_samples;
    r.value = worst.value;
    r.tolerance = cfg.tol_algebraic;
    r.pass = worst.value <= r.tolerance;
    r.seed = worst.seed;
    r.detail = "coefficient-wise operator norms preserved" + suffix;
    rep.add(std::move(r));
  }
  return rep;
}

VerificationReport corrupt_fixture_suite(const SuiteConfig& cfg) {
  VerificationReport rep;
  {
    // C6 with one transposed entry; closure survives, associativity cannot
    FiniteGroup c6 = cyclic_group(6);
    std::vector<int> table(36);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) table[static_cast<std::size_t>(i) * 6 + j] = c6.op(i, j);
    std::swap(table[1 * 6 + 2], table[1 * 6 + 3]);
    FiniteGroup broken(6, std::move(table), c6.labels());
    broken.set_name("C6-corrupted");
    rep.append(group_axioms_suite(broken, cfg));
  }
  {
    // Q8 system with the cocycle value omega(h,h) pointed at i instead of -1;
    // unitarity survives but the 2-cocycle identity cannot
    GroupExtension ext = make_extension_from_spec("Q8 / <i>");
    SystemPtr sys = action_from_extension(ext);
    TwistedSystem detuned = *sys;
    detuned.name = "Q8/<i>-detuned";
    int h1 = 1;  // the nonidentity H element
    Vec wrong = Vec::Zero(detuned.dim());
    wrong[ext.kernel_group.element_by_label("i").value()] = 1.0 / detuned.algebra->weight();
    detuned.omega[static_cast<std::size_t>(h1) * 2 + h1] = std::move(wrong);
    std::vector<TwistedViolation> v = verify_twisted_axioms(detuned, cfg.tol_algebraic);
    CheckRow r;
    r.suite = "corrupt-fixture";
    r.system = detuned.name;
    r.samples = 1;
    r.value = 0.0;
    for (const auto& viol : v) r.value = std::max(r.value, viol.residual);
    r.tolerance = cfg.tol_algebraic;
    r.pass = v.empty();
    r.seed = cfg.master_seed;
    r.detail = v.empty() ? "expected a violation, found none" : violation_text(v);
    rep.add(std::move(r));
  }
  // rows are supposed to fail; flip the suite label so the origin is clear
  for (auto& r : rep.rows) r.suite = "corrupt-fixture";
  return rep;
}

VerificationReport run_extension_battery(const std::vector<std::string>& ext_specs,
                                         const SuiteConfig& cfg,
                                         const std::vector<std::string>& suites) {
  auto want = [&suites](std::string_view name) {
    if (suites.empty()) return name != "corrupt-fixture";
    return std::find(suites.begin(), suites.end(), name) != suites.end();
  };

  VerificationReport rep;
  for (const std::string& spec : ext_specs) {
    std::optional<GroupExtension> built;
    try {
      built = make_extension_from_spec(spec);
    } catch (const std::exception& e) {
      CheckRow r;
      r.suite = "battery";
      r.system = spec;
      r.value = 1.0;
      r.pass = false;
      r.seed = cfg.master_seed;
      r.detail = e.what();
      rep.add(std::move(r));
      continue;
    }
    const GroupExtension& ext = *built;
    SystemPtr sys = action_from_extension(ext);

    if (want("group-axioms")) {
      VerificationReport sub = group_axioms_suite(ext.total, cfg);
      for (auto& r : sub.rows) r.system = ext.name;
      rep.append(sub);
    }
    if (want("twisted-axioms")) rep.append(twisted_axioms_suite(ext, sys, cfg));
    if (want("decomp") || want("spectrum")) {
      Decomposition dec(ext);
      if (want("decomp")) rep.append(decomposition_suite(dec, cfg));
      if (want("spectrum")) rep.append(spectrum_agreement_suite(dec, cfg));
    }
    if (want("symmetry")) rep.append(symmetry_suite(sys, cfg));
    if (want("srp"))
      rep.append(srp_suite(sys, {NormKind::lp(1), NormKind::lp(2), NormKind::op()}, cfg));
    if (want("lifted-diff")) {
      std::uint64_t base = row_stream(cfg, "lifted-diff", sys->name, "L2op");
      rep.add(lifted_diff_check(sys, NormKind::lp(2), NormKind::op(), cfg.samples, base,
                                1.0 + 1e-9, cfg.threads)
                  .row("lifted-diff"));
    }
    if (want("covariant")) {
      if (is_split(ext)) {
        rep.append(covariant_suite(sys, cfg));
      } else if (auto hom = find_homomorphic_section(ext.total, ext.kernel, ext.quotient,
                                                     ext.projection)) {
        GroupExtension split_ext = with_section(ext, *hom);
        rep.append(covariant_suite(action_from_extension(split_ext), cfg,
                                   "homomorphic section"));
      }
      // no homomorphic section (e.g. Q8): nothing to represent, by design
    }
  }
  return rep;
}

VerificationReport run_full_battery(const std::vector<std::string>& ext_specs,
                                    const std::vector<std::string>& suites,
                                    const SuiteConfig& cfg) {
  auto want = [&suites](std::string_view name) {
    if (suites.empty()) return name != "corrupt-fixture";
    return std::find(suites.begin(), suites.end(), name) != suites.end();
  };

  VerificationReport rep = run_extension_battery(ext_specs, cfg, suites);

  if (want("diff")) {
    AlgebraPtr s3 = StarAlgebra::group_algebra(symmetric_group(3));
    std::uint64_t base = row_stream(cfg, "diff", s3->id(), "L2op");
    rep.add(diff_constant_estimate(s3, NormKind::lp(2), NormKind::op(), cfg.samples, base,
                                   1.0 + 1e-9, cfg.threads)
                .row("diff"));
    base = row_stream(cfg, "diff", s3->id(), "L1L1");
    rep.add(diff_constant_estimate(s3, NormKind::lp(1), NormKind::lp(1), cfg.samples, base, 1.0,
                                   cfg.threads)
                .row("diff"));
    AlgebraPtr m8 = StarAlgebra::matrix_algebra(8);
    for (double p : {1.0, 2.0, 4.0}) {
      base = row_stream(cfg, "diff", m8->id(), "S" + std::to_string(static_cast<int>(p)));
      rep.add(diff_constant_estimate(m8, NormKind::schatten(p), NormKind::op(), cfg.samples,
                                     base, 1.0 + 1e-9, cfg.threads)
                  .row("diff"));
    }
  }
  if (want("nesting")) {
    const double inf = std::numeric_limits<double>::infinity();
    for (const auto& k : {cyclic_group(12), symmetric_group(3)})
      for (auto [p, q] :
           {std::pair{2.0, 1.0}, std::pair{4.0, 2.0}, std::pair{inf, 2.0}})
        rep.append(lp_nesting_suite(k, p, q, cfg));
  }
  if (want("schatten")) rep.append(schatten_suite(8, {1.0, 2.0, 4.0}, cfg));
  if (want("fourier")) {
    rep.append(fourier_suite(cyclic_group(8), cfg));
    rep.append(fourier_suite(build_group("C2xC4"), cfg));
  }
  if (want("hstar")) {
    rep.append(hstar_suite(symmetric_group(3), cfg));
    rep.append(hstar_suite(cyclic_group(12), cfg));
  }
  if (!suites.empty() && want("corrupt-fixture")) rep.append(corrupt_fixture_suite(cfg));
  return rep;
}

const std::vector<std::string>& default_extension_specs() {
  static const std::vector<std::string> specs = {
      "Q8 / <i>", "D4 / <r>", "C6 / <a^2>", "sd(C2xC2xC2,C3,cyc) / base",
      "wr(C2,3,cyc) / base"};
  return specs;
}

const std::vector<std::string>& known_suite_names() {
  static const std::vector<std::string> names = {
      "group-axioms", "twisted-axioms", "decomp",   "spectrum", "symmetry",
      "srp",          "lifted-diff",    "covariant", "diff",     "nesting",
      "schatten",     "fourier",        "hstar",    "corrupt-fixture"};
  return names;
}

}  // namespace tca

// Acceptance gate for the verification artifact. Each numbered check prints
// exactly one [PASS]/[FAIL] line; tolerances and wall-clock budgets are
// pinned here, not read from any config. Exit 0 only when every check holds.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "tca/report.hpp"
#include "tca/verify.hpp"

using namespace tca;

namespace {

constexpr std::uint64_t kSeed = 42;
constexpr double kTolExact = 1e-12;
constexpr double kTolDiff = 1.0 + 1e-9;

int g_failures = 0;

struct Outcome {
  bool ok = false;
  std::string note;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// budget_s <= 0 means no wall-clock requirement for that check
void run_check(int index, const char* title, double budget_s,
               const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  double dt = seconds_since(t0);
  bool in_budget = budget_s <= 0.0 || dt <= budget_s;
  bool pass = out.ok && in_budget;
  if (!pass) ++g_failures;
  std::printf("[%s] %d. %s (%.2fs)", pass ? "PASS" : "FAIL", index, title, dt);
  if (!out.note.empty()) std::printf(" — %s", out.note.c_str());
  if (out.ok && !in_budget) std::printf(" — over budget of %.0fs", budget_s);
  std::printf("\n");
  std::fflush(stdout);
}

Outcome fail_row(const std::string& system, const CheckRow& r) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s: %s/%s value %.3g vs tol %.3g", system.c_str(),
                r.suite.c_str(), r.norm_pair.c_str(), r.value, r.tolerance);
  return {false, buf};
}

}  // namespace

int main() {
  const std::vector<std::string>& battery = default_extension_specs();

  run_check(1, "twisted-action axioms exhaustive on the extension battery", 5.0, [&] {
    bool q8_witness = false;
    for (const std::string& spec : battery) {
      GroupExtension ext = make_extension_from_spec(spec);
      SystemPtr sys = action_from_extension(ext);
      SuiteConfig cfg;
      VerificationReport rep = group_axioms_suite(ext.total, cfg);
      rep.append(twisted_axioms_suite(ext, sys, cfg));
      for (const CheckRow& r : rep.rows)
        if (!r.pass || r.value > kTolExact) return fail_row(spec, r);
      if (spec.rfind("Q8", 0) == 0)
        q8_witness = rep.rows[1].detail.find("tau([j],[j]) = -1") != std::string::npos;
    }
    if (!q8_witness) return Outcome{false, "Q8 run did not report the tau(h,h) = -1 witness"};
    return Outcome{true, "5 systems, all residuals <= 1e-12, cocycle witness present"};
  });

  run_check(2, "decomposition is a certified *-isomorphism with exact round-trip", 2.0, [&] {
    for (const char* spec : {"Q8 / <i>", "D4 / <r>", "C6 / <a^2>"}) {
      Decomposition dec{make_extension_from_spec(spec)};
      if (dec.certification_residual() > kTolExact) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "%s: certification residual %.3g", spec,
                      dec.certification_residual());
        return Outcome{false, buf};
      }
      const AlgebraPtr& amb = dec.ambient();
      for (int i = 0; i < amb->dimension(); ++i) {
        AlgebraElement f(amb, amb->basis(i));
        AlgebraElement back = dec.from_twisted(dec.to_twisted(f));
        if ((back.coeffs() - f.coeffs()).cwiseAbs().maxCoeff() != 0.0)
          return Outcome{false, std::string(spec) + ": round-trip not exact on basis " +
                                    std::to_string(i)};
      }
    }
    return Outcome{true, "Q8, D4, C6: residual <= 1e-12, round-trip bit-exact"};
  });

  run_check(3, "differential constant survives the lift (1000 pairs per system)", 30.0, [&] {
    NormKind l2 = NormKind::lp(2), op = NormKind::op();
    double worst = 0.0;
    for (const std::string& spec : battery) {
      SystemPtr sys = action_from_extension(make_extension_from_spec(spec));
      DiffReport rep = lifted_diff_check(sys, l2, op, 1000, kSeed, kTolDiff);
      if (!rep.pass) return Outcome{false, spec + ": lifted c_hat " + std::to_string(rep.c_hat)};
      worst = std::max(worst, rep.c_hat);
    }
    for (const AlgebraPtr& alg : {StarAlgebra::group_algebra(symmetric_group(3)),
                                  StarAlgebra::group_algebra(cyclic_group(12))}) {
      DiffReport rep = diff_constant_estimate(alg, l2, op, 1000, kSeed, kTolDiff);
      if (!rep.pass)
        return Outcome{false, alg->id() + ": c_hat " + std::to_string(rep.c_hat)};
      worst = std::max(worst, rep.c_hat);
    }
    AlgebraPtr m8 = StarAlgebra::matrix_algebra(8);
    for (double p : {1.0, 2.0, 4.0}) {
      DiffReport rep = diff_constant_estimate(m8, NormKind::schatten(p), op, 1000, kSeed,
                                              kTolDiff);
      if (!rep.pass)
        return Outcome{false, "M8 S" + std::to_string(static_cast<int>(p)) + ": c_hat " +
                                  std::to_string(rep.c_hat)};
      worst = std::max(worst, rep.c_hat);
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "worst c_hat %.6f <= 1 + 1e-9", worst);
    return Outcome{true, buf};
  });

  run_check(4, "spectral radius agrees across L1, L2, operator norms (200 draws)", 60.0, [&] {
    SuiteConfig cfg;
    cfg.srp_samples = 200;
    std::vector<NormKind> kinds = {NormKind::lp(1), NormKind::lp(2), NormKind::op()};
    for (const std::string& spec : battery) {
      SystemPtr sys = action_from_extension(make_extension_from_spec(spec));
      VerificationReport rep = srp_suite(sys, kinds, cfg);
      for (const CheckRow& r : rep.rows)
        if (!r.pass) return fail_row(spec, r);
    }
    return Outcome{true, "5 systems: Gelfand vs eigenvalue <= 1e-6, pairwise <= 2e-6"};
  });

  run_check(5, "spectra are symmetric: Spec(Phi* Phi) >= 0, self-adjoint real (1000 draws)",
            60.0, [&] {
              SuiteConfig cfg;
              cfg.samples = 1000;
              for (const std::string& spec : battery) {
                SystemPtr sys = action_from_extension(make_extension_from_spec(spec));
                VerificationReport rep = symmetry_suite(sys, cfg);
                for (const CheckRow& r : rep.rows)
                  if (!r.pass || r.tolerance > 1e-9) return fail_row(spec, r);
              }
              return Outcome{true, "5 systems, worst deviation <= 1e-9"};
            });

  run_check(6, "covariant representation: exact covariance, *-homomorphism on 100 pairs", 0.0,
            [&] {
              SuiteConfig cfg;
              cfg.pair_samples = 100;
              int covered = 0;
              for (const std::string& spec : battery) {
                GroupExtension ext = make_extension_from_spec(spec);
                std::string note;
                if (!is_split(ext)) {
                  auto hom = find_homomorphic_section(ext.total, ext.kernel, ext.quotient,
                                                      ext.projection);
                  if (!hom) continue;  // genuinely non-split (Q8)
                  ext = with_section(ext, *hom);
                  note = "homomorphic section";
                }
                VerificationReport rep =
                    covariant_suite(action_from_extension(ext), cfg, note);
                for (const CheckRow& r : rep.rows)
                  if (!r.pass || r.tolerance > kTolExact) return fail_row(spec, r);
                ++covered;
              }
              if (covered < 4)
                return Outcome{false,
                               "expected >= 4 split systems, got " + std::to_string(covered)};
              return Outcome{true, std::to_string(covered) + " split systems, all exact"};
            });

  run_check(7, "Lp norms nest and stay differential across (2,1), (4,2), (inf,2)", 0.0, [&] {
    SuiteConfig cfg;
    cfg.samples = 1000;
    const double inf = std::numeric_limits<double>::infinity();
    for (const FiniteGroup& k : {cyclic_group(12), symmetric_group(3)}) {
      for (auto [p, q] : {std::pair{2.0, 1.0}, std::pair{4.0, 2.0}, std::pair{inf, 2.0}}) {
        VerificationReport rep = lp_nesting_suite(k, p, q, cfg);
        for (const CheckRow& r : rep.rows)
          if (!r.pass) return fail_row(k.name(), r);
      }
    }
    return Outcome{true, "C12 and S3, all six (p,q) pairs"};
  });

  run_check(8, "Fourier transform diagonalizes convolution on C8 and C2xC4", 0.0, [&] {
    SuiteConfig cfg;
    cfg.samples = 1000;
    for (const FiniteGroup& k :
         {cyclic_group(8), direct_product(cyclic_group(2), cyclic_group(4))}) {
      VerificationReport rep = fourier_suite(k, cfg);
      for (const CheckRow& r : rep.rows)
        if (!r.pass || r.tolerance > kTolExact) return fail_row(k.name(), r);
    }
    return Outcome{true, "convolution theorem and op-norm identity <= 1e-12"};
  });

  run_check(9, "full battery byte-identical across runs and thread counts", 0.0, [&] {
    SuiteConfig cfg;
    auto t0 = std::chrono::steady_clock::now();
    std::string first = to_csv(run_full_battery(battery, {}, cfg));
    double once = seconds_since(t0);
    if (once > 180.0) {
      char buf[80];
      std::snprintf(buf, sizeof buf, "single battery run took %.1fs > 180s", once);
      return Outcome{false, buf};
    }
    if (first.find(",fail,") != std::string::npos ||
        first.find(",incomplete,") != std::string::npos)
      return Outcome{false, "battery reported failing rows"};
    if (to_csv(run_full_battery(battery, {}, cfg)) != first)
      return Outcome{false, "same config and seed produced different csv"};
    cfg.threads = 2;
    if (to_csv(run_full_battery(battery, {}, cfg)) != first)
      return Outcome{false, "thread count changed the csv"};
    char buf[96];
    std::snprintf(buf, sizeof buf, "three runs byte-identical, single run %.1fs", once);
    return Outcome{true, buf};
  });

  if (g_failures == 0)
    std::printf("acceptance: 9/9 checks passed\n");
  else
    std::printf("acceptance: %d/9 checks FAILED\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}

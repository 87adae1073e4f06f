#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tca/covariant.hpp"
#include "tca/twisted.hpp"

namespace tca {

/// One reported check. The first eight fields map 1:1 onto a CSV row;
/// `detail` is advisory (witnesses, sections used) and shown only in the
/// human table.
struct CheckRow {
  std::string suite;
  std::string system;
  std::string norm_pair = "-";
  long long samples = 0;
  double value = 0.0;  // c_hat or worst residual
  double tolerance = 0.0;
  bool pass = false;
  bool incomplete = false;  // verdict "incomplete": flushed but not decided
  std::uint64_t seed = 0;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckRow> rows;

  bool all_pass() const;
  void add(CheckRow row) { rows.push_back(std::move(row)); }
  void append(const VerificationReport& other);
};

/// Shared suite knobs. Per-sample seeds are derived from (master_seed, a salt
/// of the row identity, sample index), so neither the thread count nor the
/// set of enabled suites changes any reported value.
struct SuiteConfig {
  std::uint64_t master_seed = 42;
  int samples = 1000;      // algebraic / symmetry / c_hat suites
  int srp_samples = 200;   // Gelfand-vs-eigenvalue comparisons
  int pair_samples = 100;  // covariant multiplicativity pairs
  int k_max = 12;          // Gelfand floor; extended until the gap meets tol
  double tol_algebraic = 1e-12;
  double tol_spectral = 1e-9;
  double tol_gelfand = 1e-6;
  int threads = 1;
};

/// Estimate of the differential-subalgebra constant
///   c_hat = max_n ||ab||_A / (||a||_A ||b||_B + ||a||_B ||b||_A).
struct DiffReport {
  std::string system_id;
  NormKind norm_a;
  NormKind norm_b;
  long long samples = 0;
  long long skipped = 0;  // denominators below 1e-14
  double c_hat = 0.0;
  std::uint64_t worst_seed = 0;  // reproduces the maximizing pair
  double threshold = 0.0;
  bool pass = false;

  CheckRow row(std::string suite) const;
};

DiffReport diff_constant_estimate(const AlgebraPtr& algebra, NormKind norm_a, NormKind norm_b,
                                  int n, std::uint64_t seed, double threshold, int threads = 1,
                                  Dist dist = Dist::ComplexGaussian);

/// Same constant over the crossed product with coefficient norms A, B inside
/// the l1 norm; the point of the check is that the coefficient-level constant
/// survives the lift unchanged.
DiffReport lifted_diff_check(const SystemPtr& sys, NormKind coeff_a, NormKind coeff_b, int n,
                             std::uint64_t seed, double threshold, int threads = 1);

// ---- suites ---------------------------------------------------------------
// Each returns deterministic rows; worst-sample seeds land in CheckRow::seed.

VerificationReport group_axioms_suite(const FiniteGroup& g, const SuiteConfig& cfg);
VerificationReport twisted_axioms_suite(const GroupExtension& ext, const SystemPtr& sys,
                                        const SuiteConfig& cfg);
VerificationReport decomposition_suite(const Decomposition& dec, const SuiteConfig& cfg);
VerificationReport spectrum_agreement_suite(const Decomposition& dec, const SuiteConfig& cfg);
VerificationReport symmetry_suite(const SystemPtr& sys, const SuiteConfig& cfg);
VerificationReport srp_suite(const AlgebraPtr& algebra, const std::vector<NormKind>& kinds,
                             const SuiteConfig& cfg);
VerificationReport srp_suite(const SystemPtr& sys, const std::vector<NormKind>& coeff_kinds,
                             const SuiteConfig& cfg);
VerificationReport lp_nesting_suite(const FiniteGroup& k, double p, double q,
                                    const SuiteConfig& cfg);
VerificationReport schatten_suite(int n_dim, const std::vector<double>& p_values,
                                  const SuiteConfig& cfg);
VerificationReport fourier_suite(const FiniteGroup& k, const SuiteConfig& cfg);
VerificationReport hstar_suite(const FiniteGroup& k, const SuiteConfig& cfg);
/// Split systems only (throws std::domain_error otherwise); `note` lands in
/// the row detail, e.g. which section made the system split.
VerificationReport covariant_suite(const SystemPtr& sys, const SuiteConfig& cfg,
                                   const std::string& note = "");

/// Deliberately broken fixtures (corrupted Cayley table, detuned cocycle);
/// every row fails with a witness. Run only when asked for by name: its job
/// is to prove the pipeline reports violations instead of absorbing them.
VerificationReport corrupt_fixture_suite(const SuiteConfig& cfg);

/// Whole-extension pass: axioms, decomposition certification, spectrum
/// agreement, symmetry, srp, lifted diff; covariance additionally on systems
/// that split (directly or after swapping in a homomorphic section). Spec
/// strings that fail to build are recorded as failing rows and skipped.
/// `suites` filters by suite name; empty = all.
VerificationReport run_extension_battery(const std::vector<std::string>& ext_specs,
                                         const SuiteConfig& cfg,
                                         const std::vector<std::string>& suites = {});

/// Battery plus the standalone suites (diff examples, nesting, schatten,
/// fourier, hstar) on their fixed systems. This is the CLI's default run.
VerificationReport run_full_battery(const std::vector<std::string>& ext_specs,
                                    const std::vector<std::string>& suites,
                                    const SuiteConfig& cfg);

const std::vector<std::string>& default_extension_specs();
const std::vector<std::string>& known_suite_names();

}  // namespace tca

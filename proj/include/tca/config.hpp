#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tca/verify.hpp"

namespace tca {

class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string message, int line)
      : std::runtime_error(std::move(message)), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Everything a run needs. Field defaults are the documented config defaults;
/// flags override whatever the config file set.
struct RunConfig {
  std::vector<std::string> extensions;  // "EXPR / SELECTOR"; empty = built-in set
  std::vector<std::string> suites;      // empty = all except corrupt-fixture
  std::uint64_t seed = 42;
  int samples = 1000;
  int srp_samples = 200;
  int pair_samples = 100;
  int k_max = 12;
  double tol_algebraic = 1e-12;
  double tol_spectral = 1e-9;
  double tol_gelfand = 1e-6;
  int threads = 1;
  std::string format = "table";  // "csv" | "table"
  std::string out;               // empty = stdout

  SuiteConfig suite_config() const;
};

/// Line-oriented `key = value` with optional [section] headers:
///   [run]        seed, samples, srp_samples, pair_samples, k_max, threads,
///                format, out
///   [tolerances] algebraic, spectral, gelfand
///   [systems]    extension = EXPR / SELECTOR   (repeatable)
///   [suites]     suite = NAME                  (repeatable)
/// Keys before any header belong to [run]. `#` and `;` start comments.
/// Unknown sections, unknown keys, and malformed values throw ConfigError
/// with the line number.
RunConfig parse_config(std::string_view text);

/// parse_config of a file's contents; I/O failure throws std::runtime_error.
RunConfig load_config(const std::string& path);

}  // namespace tca

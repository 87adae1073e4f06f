// tca-verify: build the configured extension systems, run the verification
// suites, and emit the report. Exit codes: 0 all rows pass, 1 at least one
// row fails, 2 bad config or flags, 3 internal failure (report still
// flushed, with verdict "incomplete" on the trailing row).

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tca/config.hpp"
#include "tca/report.hpp"
#include "tca/verify.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Twisted crossed-product verification battery"};

  std::string config_path;
  std::uint64_t seed = 0;
  std::vector<std::string> suites;
  std::vector<std::string> extensions;
  std::string format;
  std::string out;
  int threads = 0;

  app.add_option("--config", config_path, "Config file (flags override its values)")
      ->check(CLI::ExistingFile);
  auto* seed_opt = app.add_option("--seed", seed, "Master seed");
  app.add_option("--suite", suites, "Suite to run (repeatable; default: all)")
      ->check(CLI::IsMember(tca::known_suite_names()));
  app.add_option("--extension", extensions,
                 "Extension spec \"EXPR / SELECTOR\" (repeatable; default: built-in set)");
  auto* format_opt = app.add_option("--format", format, "Report format")
                         ->check(CLI::IsMember({"csv", "table"}));
  auto* out_opt = app.add_option("--out", out, "Report path (default: stdout)");
  auto* threads_opt =
      app.add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 256));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  tca::RunConfig cfg;
  if (!config_path.empty()) {
    try {
      cfg = tca::load_config(config_path);
    } catch (const tca::ConfigError& e) {
      std::cerr << "error: " << config_path << ":" << e.line() << ": " << e.what() << "\n";
      return 2;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }

  if (*seed_opt) cfg.seed = seed;
  if (!suites.empty()) cfg.suites = suites;
  if (!extensions.empty()) cfg.extensions = extensions;
  if (*format_opt) cfg.format = format;
  if (*out_opt) cfg.out = out;
  if (*threads_opt) cfg.threads = threads;

  if (cfg.extensions.empty()) cfg.extensions = tca::default_extension_specs();
  for (const std::string& spec : cfg.extensions) {
    try {
      tca::make_extension_from_spec(spec);
    } catch (const std::exception& e) {
      std::cerr << "error: extension '" << spec << "': " << e.what() << "\n";
      return 2;
    }
  }

  tca::VerificationReport report;
  int rc = 0;
  try {
    report = tca::run_full_battery(cfg.extensions, cfg.suites, cfg.suite_config());
    rc = report.all_pass() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    tca::CheckRow row;
    row.suite = "internal";
    row.system = "-";
    row.incomplete = true;
    row.seed = cfg.seed;
    row.detail = e.what();
    report.add(std::move(row));
    rc = 3;
  }

  try {
    tca::write_report(report, cfg.format, cfg.out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    tca::CheckRow row;
    row.suite = "internal";
    row.system = "-";
    row.incomplete = true;
    row.seed = cfg.seed;
    row.detail = e.what();
    report.add(std::move(row));
    tca::write_report(report, cfg.format, "");
    rc = 3;
  }
  return rc;
}

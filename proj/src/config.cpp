#include "tca/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace tca {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

long long parse_int(std::string_view v, int line, long long lo, long long hi) {
  long long out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size() || out < lo || out > hi)
    throw ConfigError("expected an integer in [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "], got '" + std::string(v) + "'",
                      line);
  return out;
}

std::uint64_t parse_seed(std::string_view v, int line) {
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size())
    throw ConfigError("expected an unsigned integer, got '" + std::string(v) + "'", line);
  return out;
}

double parse_tol(std::string_view v, int line) {
  std::string s(v);
  char* end = nullptr;
  double out = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || !(out > 0.0))
    throw ConfigError("expected a positive tolerance, got '" + s + "'", line);
  return out;
}

}  // namespace

SuiteConfig RunConfig::suite_config() const {
  SuiteConfig cfg;
  cfg.master_seed = seed;
  cfg.samples = samples;
  cfg.srp_samples = srp_samples;
  cfg.pair_samples = pair_samples;
  cfg.k_max = k_max;
  cfg.tol_algebraic = tol_algebraic;
  cfg.tol_spectral = tol_spectral;
  cfg.tol_gelfand = tol_gelfand;
  cfg.threads = threads;
  return cfg;
}

RunConfig parse_config(std::string_view text) {
  RunConfig cfg;
  std::string section = "run";
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (std::size_t c = line.find_first_of("#;"); c != std::string_view::npos)
      line = line.substr(0, c);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError("unterminated section header", line_no);
      std::string name(trim(line.substr(1, line.size() - 2)));
      if (name != "run" && name != "tolerances" && name != "systems" && name != "suites")
        throw ConfigError("unknown section [" + name + "]", line_no);
      section = name;
      continue;
    }

    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("expected 'key = value', got '" + std::string(line) + "'", line_no);
    std::string key(trim(line.substr(0, eq)));
    std::string_view value = trim(line.substr(eq + 1));

    if (section == "run") {
      if (key == "seed")
        cfg.seed = parse_seed(value, line_no);
      else if (key == "samples")
        cfg.samples = static_cast<int>(parse_int(value, line_no, 1, 1'000'000));
      else if (key == "srp_samples")
        cfg.srp_samples = static_cast<int>(parse_int(value, line_no, 1, 1'000'000));
      else if (key == "pair_samples")
        cfg.pair_samples = static_cast<int>(parse_int(value, line_no, 1, 1'000'000));
      else if (key == "k_max")
        cfg.k_max = static_cast<int>(parse_int(value, line_no, 1, 32));
      else if (key == "threads")
        cfg.threads = static_cast<int>(parse_int(value, line_no, 1, 256));
      else if (key == "format") {
        if (value != "csv" && value != "table")
          throw ConfigError("format must be 'csv' or 'table', got '" + std::string(value) + "'",
                            line_no);
        cfg.format = std::string(value);
      } else if (key == "out")
        cfg.out = std::string(value);
      else
        throw ConfigError("unknown key '" + key + "' in [run]", line_no);
    } else if (section == "tolerances") {
      if (key == "algebraic")
        cfg.tol_algebraic = parse_tol(value, line_no);
      else if (key == "spectral")
        cfg.tol_spectral = parse_tol(value, line_no);
      else if (key == "gelfand")
        cfg.tol_gelfand = parse_tol(value, line_no);
      else
        throw ConfigError("unknown key '" + key + "' in [tolerances]", line_no);
    } else if (section == "systems") {
      if (key != "extension")
        throw ConfigError("unknown key '" + key + "' in [systems]", line_no);
      cfg.extensions.emplace_back(value);
    } else {  // suites
      if (key != "suite")
        throw ConfigError("unknown key '" + key + "' in [suites]", line_no);
      const auto& known = known_suite_names();
      if (std::find(known.begin(), known.end(), value) == known.end())
        throw ConfigError("unknown suite '" + std::string(value) + "'", line_no);
      cfg.suites.emplace_back(value);
    }
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace tca

#include "tca/report.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace tca {

namespace {

/// Shortest decimal spelling that parses back to exactly the same double.
std::string roundtrip(double x) {
  char buf[64];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, x);
    if (std::strtod(buf, nullptr) == x) return buf;
  }
  return buf;  // non-finite values land here; the %.17g spelling is fine
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    out.push_back(c);
    if (c == '"') out.push_back('"');
  }
  out.push_back('"');
  return out;
}

const char* verdict(const CheckRow& r) {
  if (r.incomplete) return "incomplete";
  return r.pass ? "pass" : "fail";
}

std::array<std::string, 8> row_fields(const CheckRow& r) {
  return {r.suite,
          r.system,
          r.norm_pair,
          std::to_string(r.samples),
          roundtrip(r.value),
          roundtrip(r.tolerance),
          verdict(r),
          std::to_string(r.seed)};
}

}  // namespace

std::string to_csv(const VerificationReport& report) {
  std::string out = "suite,system,norm_pair,samples,c_hat_or_residual,tolerance,verdict,seed\n";
  for (const CheckRow& r : report.rows) {
    auto f = row_fields(r);
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) out.push_back(',');
      out += csv_field(f[i]);
    }
    out.push_back('\n');
  }
  return out;
}

std::string to_table(const VerificationReport& report) {
  static const std::array<std::string, 9> header = {
      "suite", "system", "norm_pair", "samples", "c_hat_or_residual",
      "tolerance", "verdict", "seed", "detail"};
  // numeric columns get a compact spelling; the CSV is the exact one
  auto fields = [](const CheckRow& r) {
    char value[32], tol[32];
    std::snprintf(value, sizeof value, "%.6g", r.value);
    std::snprintf(tol, sizeof tol, "%.6g", r.tolerance);
    return std::array<std::string, 9>{r.suite,  r.system,   r.norm_pair,
                                      std::to_string(r.samples), value, tol,
                                      verdict(r), std::to_string(r.seed), r.detail};
  };
  std::array<std::size_t, 9> width{};
  for (std::size_t i = 0; i < 9; ++i) width[i] = header[i].size();
  std::vector<std::array<std::string, 9>> body;
  for (const CheckRow& r : report.rows) {
    body.push_back(fields(r));
    for (std::size_t i = 0; i < 9; ++i) width[i] = std::max(width[i], body.back()[i].size());
  }

  std::ostringstream os;
  auto line = [&](const std::array<std::string, 9>& f) {
    for (std::size_t i = 0; i < 9; ++i) {
      if (i) os << "  ";
      os << f[i];
      if (i + 1 < 9) os << std::string(width[i] - f[i].size(), ' ');
    }
    os << '\n';
  };
  line(header);
  std::size_t total = 8 * 2;
  for (std::size_t w : width) total += w;
  os << std::string(total, '-') << '\n';
  for (const auto& f : body) line(f);
  return os.str();
}

void write_report(const VerificationReport& report, const std::string& format,
                  const std::string& path) {
  std::string text;
  if (format == "csv") {
    text = to_csv(report);
  } else if (format == "table") {
    text = to_table(report);
  } else {
    throw std::invalid_argument("unknown report format '" + format + "'");
  }
  if (path.empty() || path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("cannot write report to '" + path + "'");
}

}  // namespace tca

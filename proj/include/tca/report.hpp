#pragma once

#include <string>

#include "tca/verify.hpp"

namespace tca {

/// Header + one line per row, LF endings, doubles printed with enough digits
/// to round-trip. This is the bit-exact interchange format.
std::string to_csv(const VerificationReport& report);

/// Aligned human-readable table: the CSV columns plus the advisory detail.
std::string to_table(const VerificationReport& report);

/// format is "csv" or "table"; empty path or "-" writes to stdout.
/// Throws std::runtime_error on I/O failure.
void write_report(const VerificationReport& report, const std::string& format,
                  const std::string& path);

}  // namespace tca

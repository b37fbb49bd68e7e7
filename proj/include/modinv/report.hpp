#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace modinv {

enum class Status { Pass, Fail, Skipped };

std::string_view to_string(Status s) noexcept;
Status parse_status(std::string_view s);

struct Check {
  std::string name;
  Status status = Status::Pass;
  std::string expected;
  std::string got;
  /// Set for skipped checks.
  std::string reason;

  friend bool operator==(const Check&, const Check&) = default;
};

/// Pass/fail record of one theorem check at one prime. Any failing check makes
/// the report fail; a report whose checks are all skipped is skipped.
struct VerificationReport {
  std::uint32_t prime = 0;
  std::string target;
  std::vector<Check> checks;
  std::int64_t elapsed_ms = 0;

  Status status() const noexcept;

  void expect(bool ok, std::string name, std::string expected, std::string got);
  void skip(std::string name, std::string reason);
  /// Appends another report's checks, prefixing their names.
  void absorb(const VerificationReport& other, std::string_view prefix);

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

enum class ReportFormat { Text, Json };

nlohmann::ordered_json to_json(const VerificationReport& r);
VerificationReport report_from_json(const nlohmann::ordered_json& j);

std::string emit_reports(std::span<const VerificationReport> reports, ReportFormat format);
std::vector<VerificationReport> parse_reports(std::string_view json_text);

}  // namespace modinv

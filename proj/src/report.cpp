#include "modinv/report.hpp"

#include <algorithm>
#include <sstream>

#include "modinv/errors.hpp"

namespace modinv {

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Skipped:
      return "skipped";
  }
  return "fail";
}

Status parse_status(std::string_view s) {
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "skipped") return Status::Skipped;
  throw ParseError("unknown status '" + std::string(s) + "'");
}

Status VerificationReport::status() const noexcept {
  bool any_pass = false;
  for (const auto& c : checks) {
    if (c.status == Status::Fail) return Status::Fail;
    if (c.status == Status::Pass) any_pass = true;
  }
  return any_pass || checks.empty() ? Status::Pass : Status::Skipped;
}

void VerificationReport::expect(bool ok, std::string name, std::string expected, std::string got) {
  checks.push_back({std::move(name), ok ? Status::Pass : Status::Fail, std::move(expected), std::move(got), {}});
}

void VerificationReport::skip(std::string name, std::string reason) {
  checks.push_back({std::move(name), Status::Skipped, {}, {}, std::move(reason)});
}

void VerificationReport::absorb(const VerificationReport& other, std::string_view prefix) {
  for (Check c : other.checks) {
    c.name = std::string(prefix) + c.name;
    checks.push_back(std::move(c));
  }
}

nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["prime"] = r.prime;
  j["target"] = r.target;
  j["status"] = to_string(r.status());
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["status"] = to_string(c.status);
    cj["expected"] = c.expected;
    cj["got"] = c.got;
    if (c.status == Status::Skipped) cj["reason"] = c.reason;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

VerificationReport report_from_json(const nlohmann::ordered_json& j) {
  try {
    VerificationReport r;
    r.prime = j.at("prime").get<std::uint32_t>();
    r.target = j.at("target").get<std::string>();
    r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    for (const auto& cj : j.at("checks")) {
      Check c;
      c.name = cj.at("name").get<std::string>();
      c.status = parse_status(cj.at("status").get<std::string>());
      c.expected = cj.at("expected").get<std::string>();
      c.got = cj.at("got").get<std::string>();
      if (cj.contains("reason")) c.reason = cj.at("reason").get<std::string>();
      r.checks.push_back(std::move(c));
    }
    if (parse_status(j.at("status").get<std::string>()) != r.status())
      throw ParseError("report status inconsistent with its checks");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

std::string emit_reports(std::span<const VerificationReport> reports, ReportFormat format) {
  if (format == ReportFormat::Json) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return arr.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const auto& r : reports) {
    os << "== " << r.target << " p=" << r.prime << " : " << to_string(r.status());
    if (r.elapsed_ms > 0) os << " (" << r.elapsed_ms << " ms)";
    os << '\n';
    for (const auto& c : r.checks) {
      os << "  [" << to_string(c.status) << "] " << c.name;
      if (c.status == Status::Skipped)
        os << " -- " << c.reason;
      else if (c.status == Status::Fail)
        os << "\n      expected: " << c.expected << "\n      got:      " << c.got;
      os << '\n';
    }
  }
  const auto failed = std::count_if(reports.begin(), reports.end(),
                                    [](const auto& r) { return r.status() == Status::Fail; });
  os << reports.size() << " report(s), " << failed << " failed\n";
  return os.str();
}

std::vector<VerificationReport> parse_reports(std::string_view json_text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid json: ") + e.what());
  }
  if (!j.is_array()) throw ParseError("report stream must be a JSON array");
  std::vector<VerificationReport> out;
  for (const auto& r : j) out.push_back(report_from_json(r));
  return out;
}

}  // namespace modinv

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "modinv/fp.hpp"
#include "modinv/report.hpp"

namespace modinv {

struct TheoremSpec {
  std::string id;
  std::string summary;
  std::function<VerificationReport(Prime)> run;
};

/// All theorem checks in canonical order.
const std::vector<TheoremSpec>& theorem_catalog();

/// Throws UnknownTarget.
const TheoremSpec& find_theorem(std::string_view id);

struct RunOptions {
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
  /// Record wall-clock time in elapsed_ms; left at 0 otherwise so output is reproducible.
  bool timing = false;
};

/// Runs one check, converting engine errors into a failing entry.
VerificationReport run_theorem(const TheoremSpec& spec, Prime p, bool timing = false);

/// Runs every (prime, target) pair on a worker pool. Results are ordered by
/// prime, then by catalog order of the targets.
std::vector<VerificationReport> run_verification(std::span<const Prime> primes, std::span<const std::string> targets,
                                                 const RunOptions& options = {});

}  // namespace modinv

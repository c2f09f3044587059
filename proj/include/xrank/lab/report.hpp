#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "xrank/core/certificate.hpp"

namespace xrank {

enum class ReportStatus { Verified, Refuted, Undecided };

const char* to_string(ReportStatus s);

/// Outcome of one claim check. Verified and refuted reports carry the
/// certificates they rest on; undecided ones name the limit that was hit.
struct VerificationReport {
  std::string claim;
  ReportStatus status = ReportStatus::Undecided;
  std::vector<RankCertificate> certificates;
  std::vector<std::uint64_t> seeds;
  std::string limit;
  Json data = Json::object();
  double seconds = 0;  // wall time; kept out of to_json so output is reproducible

  /// Re-runs every stored certificate check.
  bool revalidate() const;
  Json to_json() const;
};

/// Exit code used by the command-line tool: 0 verified, 1 refuted, 3 undecided.
int exit_code(ReportStatus s);

}  // namespace xrank

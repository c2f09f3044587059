#include "xrank/lab/report.hpp"

namespace xrank {

const char* to_string(ReportStatus s) {
  switch (s) {
    case ReportStatus::Verified: return "verified";
    case ReportStatus::Refuted: return "refuted";
    case ReportStatus::Undecided: return "undecided";
  }
  return "?";
}

bool VerificationReport::revalidate() const {
  if (status != ReportStatus::Undecided && certificates.empty()) return false;
  for (const auto& c : certificates)
    if (!c.validate()) return false;
  return true;
}

Json VerificationReport::to_json() const {
  Json j;
  j["claim"] = claim;
  j["status"] = to_string(status);
  j["seeds"] = seeds;
  if (!limit.empty()) j["limit"] = limit;
  j["data"] = data;
  Json c = Json::array();
  for (const auto& x : certificates) c.push_back(x.to_json());
  j["certificates"] = std::move(c);
  return j;
}

int exit_code(ReportStatus s) {
  switch (s) {
    case ReportStatus::Verified: return 0;
    case ReportStatus::Refuted: return 1;
    case ReportStatus::Undecided: return 3;
  }
  return 3;
}

}  // namespace xrank

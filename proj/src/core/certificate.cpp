#include "xrank/core/certificate.hpp"

namespace xrank {

const char* to_string(CertKind k) {
  switch (k) {
    case CertKind::Decomposition: return "decomposition";
    case CertKind::SchemeMembership: return "scheme-membership";
    case CertKind::Refutation: return "refutation";
    case CertKind::Membership: return "membership";
  }
  return "?";
}

bool RankCertificate::validate() const {
  if (recheck && !recheck()) return false;
  for (const auto& c : chain)
    if (!c.validate()) return false;
  return true;
}

Json RankCertificate::to_json() const {
  Json j;
  j["kind"] = to_string(kind);
  j["claim"] = claim;
  j["detail"] = detail;
  if (!chain.empty()) {
    Json c = Json::array();
    for (const auto& x : chain) c.push_back(x.to_json());
    j["chain"] = std::move(c);
  }
  return j;
}

Json to_json(const SystemWitness& w) {
  Json j;
  j["status"] = to_string(w.status);
  if (!w.description.empty()) j["description"] = w.description;
  if (!w.limit.empty()) j["limit"] = w.limit;
  return j;
}

std::string rationals_to_string(const std::vector<Rational>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ":" : "") + v[i].to_string();
  return s + ")";
}

Json rationals_to_json(const std::vector<Rational>& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(x.to_string());
  return j;
}

Json upoly_to_json(const UPoly<Rational>& p) {
  Json j = Json::array();
  for (const auto& x : p.coeffs()) j.push_back(x.to_string());
  return j;
}

}  // namespace xrank

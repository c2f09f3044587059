#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "xrank/core/algebra.hpp"

namespace xrank {

using Json = nlohmann::ordered_json;

enum class CertKind { Decomposition, SchemeMembership, Refutation, Membership };

const char* to_string(CertKind k);

/// Evidence for a rank statement. `recheck` re-validates the stored data
/// without rerunning any elimination (products, exact divisions, spans).
struct RankCertificate {
  CertKind kind = CertKind::Decomposition;
  std::string claim;
  Json detail = Json::object();
  std::vector<RankCertificate> chain;
  std::function<bool()> recheck;

  /// Runs recheck on this certificate and every chained one.
  bool validate() const;
  Json to_json() const;
};

Json to_json(const SystemWitness& w);
std::string rationals_to_string(const std::vector<Rational>& v);
Json rationals_to_json(const std::vector<Rational>& v);
Json upoly_to_json(const UPoly<Rational>& p);

/// JSON rendering of a no-zero certificate (for reports).
template <class F>
Json elimination_to_json(const EliminationCert<F>& c) {
  Json j;
  j["order"] = c.swapped ? "t-then-s" : "s-then-t";
  j["common_factor"] = to_string(c.common, "t");
  j["eliminant"] = to_string(c.eliminant, "s");
  j["resultant_cofactors_stored"] = c.has_cofactors;
  if (!c.extra.empty()) {
    j["first_resultant"] = to_string(c.first_eliminant, "s");
    j["extra_resultants"] = c.extra.size();
  }
  Json br = Json::array();
  for (const auto& b : c.branches) {
    Json x;
    x["modulus"] = to_string(b.modulus, "s");
    x["gcd"] = to_string(b.gcd, "t");
    x["excluded_power"] = b.excluded_power;
    br.push_back(std::move(x));
  }
  j["branches"] = std::move(br);
  return j;
}

}  // namespace xrank

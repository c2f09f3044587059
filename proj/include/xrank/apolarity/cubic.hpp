#pragma once

// Ranks of plane cubics and the De Paolis scheme Z(3,p) + Z(1,q).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "xrank/apolarity/scheme.hpp"
#include "xrank/core/certificate.hpp"

namespace xrank {

struct CubicRank {
  std::optional<int> rank;  // empty when undetermined
  std::string route;        // power, binary, tangent-conic, three-points, two-conic, undetermined
  RankCertificate cert;
  std::optional<ZeroDimScheme> scheme;
  std::string diagnostics;
};

/// Rank of a ternary cubic. Routes, in order: Cat_(1,2) rank <= 2 reduces to a
/// binary form; f = L*Q with L tangent to a smooth conic Q gives 5; a reduced
/// base scheme of (f^perp)_2 of length 3 gives 3; two seeded members of
/// (f^perp)_2 meeting in 4 distinct points give 4.
CubicRank cubic_rank(const SymForm& f, std::uint64_t seed = 0);

/// Linear factor of a ternary form over Q, with the cofactor.
std::optional<std::pair<MPoly, MPoly>> linear_factor(const MPoly& f);

MPoly hessian(const MPoly& f);

struct DePaolis {
  ZeroDimScheme scheme;          // two conics of (f^perp)_2 over Q[a]/(modulus)
  UPoly<Rational> modulus;       // the points are defined over Q[a]/(modulus)
  std::vector<UPoly<Rational>> triple_point;  // p, coordinates as polynomials in a
  std::vector<UPoly<Rational>> simple_point;  // q
  std::vector<UPoly<Rational>> singular_conic, other_conic;  // coordinates in the basis of (f^perp)_2
  std::vector<MPoly> net;        // that basis
  RankCertificate cert;
};

/// Pencil in (f^perp)_2 whose base scheme is a curvilinear length-3 piece at p
/// plus a simple point q. Throws UnsupportedInstance when f is not concise, the
/// Hessian is singular or the net has base points, and Undecided when the
/// construction needs more than opt allows.
DePaolis de_paolis_decompose(const SymForm& f, const SolveOptions& opt = {});

}  // namespace xrank

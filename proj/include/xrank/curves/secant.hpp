#pragma once

// Exact rank of a point with respect to a rational curve in P^2, P^3 or P^4.
//
// Secant membership is decided by the bivariate solver on the 3x3 minors of
// [q; phi(1,s); phi(1,t)] off s = t, plus the pairs involving (0:1). A
// refutation is accepted only when both elimination orders agree.
//
// Trisecant membership in P^4 uses lifts: phi = P * nu_d, so q lies on the span
// of three curve points iff some F with P F = q is a binary form of Waring rank
// at most 3, i.e. ker Cat_3(F) contains a square-free cubic.

#include <string>
#include <vector>

#include "xrank/core/certificate.hpp"
#include "xrank/curves/curve.hpp"

namespace xrank {

struct MembershipResult {
  bool member = false;
  RankCertificate cert;
  std::vector<std::vector<Rational>> witness;  // rational parameters, when found
  std::string flag;                            // e.g. "secant suffices"
};

/// Throws InvalidInput if q is on X and Undecided at the solver limits.
MembershipResult secant_membership(const RationalCurve& x, const std::vector<Rational>& q, const SolveOptions& opt = {});

/// Curves in P^4 of degree 4 or 5. Throws Undecided for other degrees.
MembershipResult trisecant_membership(const RationalCurve& x, const std::vector<Rational>& q, const SolveOptions& opt = {});

struct PointRank {
  int rank = 0;
  RankCertificate cert;
};

/// Ranks in P^2..P^4 using the ceilings 3 (P^3) and 4 (P^4).
PointRank curve_point_rank(const RationalCurve& x, const std::vector<Rational>& q, const SolveOptions& opt = {});

/// The 3x3 minors of [q; phi(1,s); phi(1,t)] as polynomials in (s, t).
std::vector<MPoly> secant_minors(const RationalCurve& x, const std::vector<Rational>& q);

}  // namespace xrank

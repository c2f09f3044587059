#pragma once

// Space-curve families: the normal form (z0^d : z1 z0^(d-1) : a2 z1^(d-1) z0 : a3 z1^d),
// the numeric (d, g) checks, and projections of the rational normal quartic.

#include <cstdint>
#include <optional>

#include "xrank/curves/curve.hpp"
#include "xrank/curves/secant.hpp"
#include "xrank/curves/singular.hpp"
#include "xrank/lab/report.hpp"

namespace xrank {

/// Throws InvalidInput unless d >= 4 and a2 * a3 != 0.
RationalCurve ii0_curve(int d, const Rational& a2, const Rational& a3);

/// Contact degree of the tangent at p = (1:0:0:0) and rank 3 at `samples`
/// seeded points of that tangent line (p excluded).
VerificationReport verify_ii0(int d, const Rational& a2, const Rational& a3, int samples, std::uint64_t seed = 0);

struct Ii1Record {
  bool odd_route = false;   // 23 g < d^2 - 3d - 15
  bool even_route = false;  // d even and 16 g < 3d^2 - 16d + 16
  long cusp_count = 0;      // (d-1)(d-2)/2 - g
  Rational tono_threshold;  // (21 g + 17)/2
  std::optional<long> hirzebruch_bound;  // floor(d(5d-6)/16), d even
};

/// Throws InvalidInput for d < 3 or g < 0.
Ii1Record ii1_check(long d, long g);

/// The rational normal quartic (z0^4 : z0^3 z1 : ... : z1^4).
RationalCurve rational_normal_quartic();

struct PieneData {
  std::vector<Rational> center;           // in P^4
  std::optional<RationalCurve> curve;     // the projection to P^3
  std::vector<std::vector<Rational>> stalls;        // rational stall parameters
  std::vector<UPoly<Rational>> other_stalls;        // remaining stall factors over Q
  std::vector<std::vector<Rational>> tangent_hits;  // ordinary tangent parameters meeting a stall tangent
  std::vector<std::vector<Rational>> points;        // the intersection points
};

/// Seeded projection of the rational normal quartic with a rational stall,
/// rank 3 at the stall/ordinary tangent intersection, the plane projection from
/// it, and rank 2 at five seeded points off the tangent surface.
VerificationReport piene_verify(std::uint64_t seed, PieneData* out = nullptr);

/// Parameters u != v0 with T_u meeting T_v0 (affine roots, plus infinity).
ParamDivisor tangents_meeting(const RationalCurve& x, const std::vector<Rational>& v0);

/// Polynomial in t whose roots are the affine stall parameters (profile (0,0,1) or worse).
UPoly<Rational> stall_polynomial(const RationalCurve& x);

/// Is q on a tangent line of x?
bool on_tangent_surface(const RationalCurve& x, const std::vector<Rational>& q);

/// Upper bound for the dimension of a join: dim W + dim X + 1.
int join_dim_bound(int dim_w, int dim_x);

}  // namespace xrank

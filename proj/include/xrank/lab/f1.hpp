#pragma once

// Curves on the Hirzebruch surface F1 embedded in P^4 as the cubic scroll.
//
// Cox coordinates z0, z1, w0, w1 (variables 0..3). A curve in |C0 + (d-1) f| is
// F = A(z) w0 + B(z) w1 with deg A = d-1, deg B = d-2, and the embedding is
// x = (z0^2 w0, z0 z1 w0, z1^2 w0, z0 w1, z1 w1). C0 = {w0 = 0} maps to the
// line {x0 = x1 = x2 = 0}; the point o is ((1:0), w0 = 0), i.e. (0:0:0:1:0).

#include <cstdint>
#include <optional>
#include <vector>

#include "xrank/curves/curve.hpp"
#include "xrank/lab/report.hpp"

namespace xrank {

/// The class a C0 + b f. Intersection form: C0^2 = -1, C0.f = 1, f^2 = 0.
struct F1Class {
  long a = 0, b = 0;
  bool operator==(const F1Class&) const = default;
};

inline const F1Class kF1Canonical{-2, -3};

long f1_intersection(const F1Class& c1, const F1Class& c2);
/// 1 + (c.c + c.K)/2.
long f1_genus(const F1Class& c);

struct F1System {
  int dimension = 0;           // projective dimension
  std::vector<MPoly> basis;    // polynomials in z0, z1, w0, w1
};

/// |a C0 + b f| for a in {0, 1}; with a = 1 an optional length e of the
/// curvilinear scheme E on C0 at o, which forces z1^e | B. Throws InvalidInput
/// for other shapes.
F1System f1_system_dimension(const F1Class& c, std::optional<int> e = std::nullopt);

struct F1Curve {
  int d = 0;
  UPoly<Rational> a, b;  // A(1, t), B(1, t) as dehomogenized forms of degree d-1, d-2
  MPoly equation() const;  // F in Cox coordinates
};

/// The image in P^4 of {F = 0}: (z0^2 B, z0 z1 B, z1^2 B, -z0 A, -z1 A).
/// Throws InvalidInput if A and B share a factor.
RationalCurve f1_image(const F1Curve& y);

/// Affine-chart Jacobian systems of F on the four charts, each refuted by elimination.
VerificationReport f1_smoothness(const F1Curve& y, std::uint64_t seed = 0);

struct F1Sample {
  F1Curve curve;
  std::optional<RationalCurve> image;
  VerificationReport report;
};

/// B = z1^(d-2) and A drawn from the seed schedule until the curve is smooth
/// and spans P^4. Undecided report when every attempt fails.
F1Sample f1_sample_curve(int d, std::uint64_t seed = 0);

/// Rank 4 at every sample point of C0 \ {o} (points (0:0:0:a:b), b != 0).
VerificationReport verify_claim2(int d, const std::vector<std::vector<Rational>>& samples, std::uint64_t seed = 0);

}  // namespace xrank

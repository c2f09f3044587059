#pragma once

// The six scheme shapes of cactus rank 3..5 for plane quartics of rank 7 and the
// parameter count bounding the dimension of the rank-7 locus.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xrank/apolarity/scheme.hpp"

namespace xrank {

enum class QuarticCase { I, IIa, IIb, IIIa, IIIb, IIIc };

std::string to_string(QuarticCase c);
/// Accepts "I", "IIa", ... ; throws InvalidInput otherwise.
QuarticCase parse_quartic_case(const std::string& s);
const std::vector<QuarticCase>& all_quartic_cases();

/// Free choices of a case. Lines are coefficient vectors (a, b, c) of ax + by + cz.
///   I:    conic; points {p}
///   IIa:  points {p, l}; lines {through p, through l}
///   IIb:  points {p, l, q}; lines {through p}
///   IIIa: points {p, l}; lines {carrying the 3-jet at p, through l}
///   IIIb: points {p, l}; lines {the reduced line L}; conic Q through p, either
///         smooth and tangent to L at p or singular at p
///   IIIc: points {p, l, q} on the line, plus a vertex v off it; lines {L}.
///         The 2-jets at p and l point towards v.
struct QuarticParams {
  std::vector<std::vector<Rational>> points;
  std::vector<std::vector<Rational>> lines;
  std::optional<MPoly> conic;
};

QuarticParams default_quartic_params(QuarticCase c);

/// The scheme of the case, generated in degrees <= 4 and checked at degree 4.
/// Throws InvalidInput when the parameters violate the case constraints.
ZeroDimScheme quartic_scheme(QuarticCase c, const QuarticParams& params);
ZeroDimScheme quartic_scheme(QuarticCase c);

/// Expected scheme degree of each case.
int quartic_case_degree(QuarticCase c);

struct LedgerRow {
  std::string label;
  std::vector<std::pair<std::string, int>> summands;
  int total = 0;
};

struct DimensionLedger {
  std::vector<LedgerRow> rows;
  std::vector<LedgerRow> alternatives;  // other counts of the same case, never above the row
  int bound = 0;                        // max of the row totals
  int surface_dim = 2;
  int join_bound = 0;                   // bound + surface_dim + 1
  int ambient_dim = 14;
  bool join_is_proper() const { return join_bound < ambient_dim; }
};

DimensionLedger quartic_case_table();

}  // namespace xrank

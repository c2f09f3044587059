#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xrank/core/bisolve.hpp"
#include "xrank/core/mpoly.hpp"
#include "xrank/core/qmatrix.hpp"

namespace xrank {

/// Monic square-free part of a univariate polynomial and whether p was already square-free.
std::pair<MPoly, bool> squarefree_part(const MPoly& p);

/// Resultant with respect to variable `var`. Sylvester determinant up to degree 6,
/// subresultant remainder sequence above.
MPoly resultant(const MPoly& p, const MPoly& q, int var);

struct SystemWitness {
  ZeroStatus status = ZeroStatus::Undecided;
  std::string description;  // nonempty for zero-exists
  std::string limit;        // nonempty for undecided
};

/// Common zero of bivariate polynomials in (s, t) = (x0, x1) off {excluded = 0}.
SystemWitness system_has_zero_off(const std::vector<MPoly>& polys, const MPoly& excluded, const SolveOptions& opt = {});

/// Lower-level variant returning the full solver result.
BiSolve<Rational> solve_bivariate(const std::vector<MPoly>& polys, const MPoly& excluded, const SolveOptions& opt = {});

SystemWitness to_witness(ZeroStatus status, const std::string& description, const std::string& limit);

/// Common zeros of ternary forms in P^2, over the charts z = 1, (x:1:0) and (1:0:0).
struct PlaneZeros {
  SystemWitness witness;
  std::vector<std::vector<Rational>> rational_points;  // normalized: last nonzero coordinate is 1
  bool all_rational = false;  // the zero set is finite and equals rational_points
  std::optional<EliminationCert<Rational>> affine_cert;  // no-zero certificate of the z = 1 chart
  std::vector<MPoly> forms;

  /// Re-checks a no-zero verdict: the stored affine certificate plus the line at infinity.
  bool recheck_no_zero() const;
};

PlaneZeros projective_plane_zeros(const std::vector<MPoly>& forms, const SolveOptions& opt = {});

}  // namespace xrank

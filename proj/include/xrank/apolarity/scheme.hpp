#pragma once

// Zero-dimensional schemes given by homogeneous generators, and the apolarity
// test f in <nu_d(Z)>  <=>  (I_Z)_d annihilates f.

#include <optional>
#include <vector>

#include "xrank/apolarity/symform.hpp"
#include "xrank/core/upoly.hpp"

namespace xrank {

struct ZeroDimScheme {
  int nvars = 3;  // ambient P^(nvars-1)
  /// Forms in nvars variables. With a modulus each generator carries one extra
  /// trailing variable a, and coefficients are read in Q[a]/(modulus).
  std::vector<MPoly> generators;
  std::optional<UPoly<Rational>> modulus;
  int claimed_degree = 0;
  int support_size = 0;
};

/// Codimension of the degree-k part of the ideal generated by z.generators.
int scheme_codim(const ZeroDimScheme& z, int k);

/// scheme_codim(z, k) == z.claimed_degree and support_size <= claimed_degree.
bool degree_invariant_holds(const ZeroDimScheme& z, int k);

/// Every generator g satisfies g o f = 0. Throws UnsupportedInstance for a
/// generator of degree above deg f.
bool apolarity_membership(const SymForm& f, const ZeroDimScheme& z);

/// The reduced scheme on distinct points, generated by its degree-k forms.
ZeroDimScheme reduced_points(const std::vector<std::vector<Rational>>& points, int k);

/// Degree-k forms vanishing to order m at p, as a basis.
std::vector<MPoly> fat_point_forms(const std::vector<Rational>& p, int m, int k);

/// Coefficient vectors spanning the degree-k part of the ideal generated by gens.
std::vector<std::vector<Rational>> ideal_piece(const std::vector<MPoly>& gens, int nvars, int k);

/// Intersection of two subspaces of Q^dim given by spanning vectors.
std::vector<std::vector<Rational>> intersect_spaces(const std::vector<std::vector<Rational>>& a,
                                                    const std::vector<std::vector<Rational>>& b, int dim);

/// Generators of the ideal whose degree-k parts (1 <= k <= top) are pieces[k-1],
/// chosen degree by degree as complements of what lower generators already give.
std::vector<MPoly> generators_from_pieces(const std::vector<std::vector<std::vector<Rational>>>& pieces, int nvars);

}  // namespace xrank

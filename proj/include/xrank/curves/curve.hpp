#pragma once

// Parametrized rational curves phi: P^1 -> P^n.
//
// A parameter (z0:z1) is written as a pair; the affine chart is t = z1/z0 and
// (0:1) is the point at infinity. Local expansions at a parameter use the
// Taylor vectors v_k of phi(t0 + u) (or of phi(u, 1) at infinity).

#include <optional>
#include <string>
#include <vector>

#include "xrank/binary/sylvester.hpp"
#include "xrank/core/algebra.hpp"
#include "xrank/core/linalg.hpp"

namespace xrank {

/// Primitive integer vector with positive leading nonzero entry.
std::vector<Rational> normalize_point(std::vector<Rational> p);

class RationalCurve {
 public:
  /// Components x_0..x_n, all of one degree d >= 1. Throws InvalidInput on a
  /// common factor (base point) or when the components are linearly dependent.
  explicit RationalCurve(std::vector<BinaryForm> components);
  /// From homogeneous polynomials in two variables.
  static RationalCurve from_mpolys(const std::vector<MPoly>& components);

  int ambient() const { return static_cast<int>(comp_.size()) - 1; }
  int degree() const { return comp_[0].degree(); }
  const std::vector<BinaryForm>& components() const { return comp_; }
  std::vector<MPoly> component_polys() const;
  /// x_i(1, t) as polynomials in t.
  const std::vector<UPoly<Rational>>& affine() const { return aff_; }
  /// x_i(s, 1) as polynomials in s (chart at infinity).
  std::vector<UPoly<Rational>> affine_at_infinity() const;
  /// (n+1) x (d+1) matrix of plain coefficients: x_i = sum_k P[i][k] z0^(d-k) z1^k.
  const Mat<Rational>& coefficient_matrix() const { return coef_; }

  std::vector<Rational> point(const std::vector<Rational>& z) const;
  /// Same curve after z0 -> z0 + k z1.
  RationalCurve shifted(const Rational& k) const;

 private:
  std::vector<BinaryForm> comp_;
  std::vector<UPoly<Rational>> aff_;
  Mat<Rational> coef_;
};

/// Linear subspace of P^n, kept both as spanning points and as equations.
class LinearSubspace {
 public:
  static LinearSubspace from_points(int ambient, const std::vector<std::vector<Rational>>& points);
  static LinearSubspace from_equations(int ambient, const std::vector<std::vector<Rational>>& equations);

  int ambient() const { return n_; }
  /// Projective dimension; -1 for the empty subspace.
  int dim() const { return static_cast<int>(basis_.size()) - 1; }
  const std::vector<std::vector<Rational>>& basis() const { return basis_; }
  const std::vector<std::vector<Rational>>& equations() const { return eqs_; }
  bool contains(const std::vector<Rational>& p) const;
  bool operator==(const LinearSubspace& o) const;

 private:
  int n_ = 0;
  std::vector<std::vector<Rational>> basis_, eqs_;
};

/// Orders l_0 <= l_1 <= ... of the adapted local expansion; l_0 = 0 iff immersive.
struct ContactProfile {
  std::vector<int> l;
  bool operator==(const ContactProfile&) const = default;
};

/// Taylor vectors v_0..v_order of the chart polynomials at t0.
template <class F>
Mat<F> taylor_vectors(const std::vector<UPoly<F>>& chart, const F& t0, int order) {
  Mat<F> v(static_cast<std::size_t>(order) + 1, std::vector<F>(chart.size(), zero_like(t0)));
  for (std::size_t i = 0; i < chart.size(); ++i) {
    // repeated synthetic division by (x - t0) gives the shifted coefficients
    std::vector<F> c = chart[i].coeffs();
    const int deg = static_cast<int>(c.size()) - 1;
    for (int k = 0; k <= deg && k <= order; ++k) {
      for (int j = deg - 1; j >= k; --j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j)] + t0 * c[static_cast<std::size_t>(j) + 1];
      v[static_cast<std::size_t>(k)][i] = c[static_cast<std::size_t>(k)];
    }
  }
  return v;
}

/// Orders j_0 = 0 < j_1 < ... < j_n at which the Taylor span grows.
template <class F>
std::vector<int> jump_orders(const Mat<F>& taylor, int n) {
  std::vector<int> out;
  Mat<F> acc;
  int r = 0;
  for (std::size_t k = 0; k < taylor.size() && static_cast<int>(out.size()) <= n; ++k) {
    acc.push_back(taylor[k]);
    int nr = mat_rank(acc);
    if (nr > r) out.push_back(static_cast<int>(k));
    r = nr;
  }
  return out;
}

inline ContactProfile profile_from_jumps(const std::vector<int>& j) {
  ContactProfile p;
  for (std::size_t i = 1; i < j.size(); ++i) p.l.push_back(j[i] - static_cast<int>(i));
  return p;
}

/// Contact profile at the affine parameter t0 over any field.
template <class F>
ContactProfile contact_profile_at(const RationalCurve& x, const F& t0) {
  std::vector<UPoly<F>> chart;
  for (const auto& p : x.affine()) {
    std::vector<F> c;
    for (const auto& a : p.coeffs()) c.push_back(from_rational(t0, a));
    chart.emplace_back(std::move(c));
  }
  return profile_from_jumps(jump_orders(taylor_vectors(chart, t0, x.degree()), x.ambient()));
}

ContactProfile contact_profile(const RationalCurve& x, const std::vector<Rational>& t0);

/// Span of the first k+1 independent Taylor vectors (k = 1 tangent line, k = 2 osculating plane).
LinearSubspace osculating_subspace(const RationalCurve& x, const std::vector<Rational>& t0, int k);

/// Binary form in (z0, z1) of degree d, split into affine part and order at infinity.
struct ParamDivisor {
  UPoly<Rational> affine;  // monic; roots are the affine parameters
  int at_infinity = 0;
  int degree() const { return (affine.is_zero() ? 0 : affine.degree()) + at_infinity; }
};

struct ContactDegree {
  int degree = 0;
  std::vector<std::pair<std::vector<Rational>, int>> rational_support;  // (parameter, multiplicity)
  std::vector<std::pair<UPoly<Rational>, int>> other_support;          // irreducible-over-Q remainder
};

/// Length of X cap L read off the pulled-back equations. Throws InvalidInput if L contains X.
ContactDegree subspace_contact_degree(const RationalCurve& x, const LinearSubspace& l);

/// Projection from a point or a line (given by spanning points); common factors cleared.
/// Throws InvalidInput for a line center meeting X or a center of the wrong dimension.
RationalCurve project(const RationalCurve& x, const std::vector<std::vector<Rational>>& center);

/// Common zeros of degree-d binary forms given by their chart-(1,t) polynomials.
ParamDivisor common_divisor(const std::vector<UPoly<Rational>>& forms, int d);

/// Parameters z with phi(z) proportional to q (at most finitely many for q != curve).
std::vector<std::vector<Rational>> rational_preimages(const RationalCurve& x, const std::vector<Rational>& q);
/// Is q on the curve (over the algebraic closure)?
bool on_curve(const RationalCurve& x, const std::vector<Rational>& q);

/// Injective and immersive, decided exactly. Throws Undecided at the solver limits.
bool is_embedded(const RationalCurve& x, const SolveOptions& opt = {});

}  // namespace xrank

#pragma once

// Homogeneous forms and the apolar action g(d) o f by plain differentiation.
// With l_p = sum p_i x_i one has g(d) o l_p^d = d!/(d-k)! g(p) l_p^(d-k) for g of
// degree k, so points of P^n and linear forms are identified through p.

#include <vector>

#include "xrank/core/mpoly.hpp"
#include "xrank/core/qmatrix.hpp"

namespace xrank {

class SymForm {
 public:
  /// body must be nonzero and homogeneous.
  explicit SymForm(MPoly body);

  int nvars() const { return body_.nvars(); }
  int degree() const { return d_; }
  const MPoly& body() const { return body_; }

 private:
  MPoly body_;
  int d_ = 0;
};

/// g(d) o f: differentiate f by the operator obtained from g by x_i -> d/dx_i.
MPoly apply_operator(const MPoly& g, const MPoly& f);

/// Matrix of g -> g o f from degree-a operators to degree-(d-a) forms. Rows follow
/// monomials_of_degree(n, d-a), columns monomials_of_degree(n, a).
QMatrix catalecticant(const SymForm& f, int a);

/// Basis of (f^perp)_k, i.e. the kernel of catalecticant(f, k), as forms.
std::vector<MPoly> apolar_basis(const SymForm& f, int k);

/// max_a rank catalecticant(f, a).
int border_rank_lb(const SymForm& f);

/// (sum p_i x_i)^d.
MPoly linear_power(const std::vector<Rational>& p, int d);

/// sum_k lambdas[k] * linear_power(points[k], d).
MPoly sum_of_powers(const std::vector<std::vector<Rational>>& points, const std::vector<Rational>& lambdas, int d);

/// Coefficient vector of a form of degree k against monomials_of_degree(n, k).
std::vector<Rational> form_coefficients(const MPoly& p, int k);
MPoly form_from_coefficients(const std::vector<Rational>& c, int nvars, int k);

}  // namespace xrank

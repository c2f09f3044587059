#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xrank/core/rational.hpp"
#include "xrank/core/upoly.hpp"

namespace xrank {

using Exponents = std::vector<int>;

/// True when a > b in graded reverse lexicographic order.
bool grevlex_greater(const Exponents& a, const Exponents& b);

struct Term {
  Exponents exps;
  Rational coeff;
};

/// Sparse multivariate polynomial with Rational coefficients. Terms are kept
/// sorted in decreasing grevlex order with no zero coefficients.
class MPoly {
 public:
  explicit MPoly(int nvars = 0) : nvars_(nvars) {}

  /// Sums duplicate monomials, drops zeros and sorts. Exponent vectors must have length nvars.
  static MPoly from_terms(int nvars, std::vector<Term> terms);
  static MPoly constant(int nvars, const Rational& c);
  static MPoly var(int nvars, int i);
  static MPoly monomial(int nvars, Exponents exps, const Rational& c = Rational(1));

  int nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(int v) const;
  bool is_homogeneous() const;
  bool is_constant() const { return terms_.empty() || total_degree() == 0; }
  Rational coeff(const Exponents& e) const;
  const Term& leading() const { return terms_.front(); }

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator-(const MPoly& a);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const Rational& k, const MPoly& a);
  friend bool operator==(const MPoly& a, const MPoly& b);

  Rational eval(const std::vector<Rational>& x) const;
  MPoly derivative(int v) const;
  /// Replaces variable i by images[i]; all images share one variable count.
  MPoly compose(const std::vector<MPoly>& images) const;
  /// Same polynomial viewed in a ring with more (or fewer, if unused) variables.
  MPoly with_nvars(int n) const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  int nvars_;
  std::vector<Term> terms_;
};

MPoly pow(const MPoly& p, unsigned e);

/// Exact quotient a / b, or nullopt if b does not divide a.
std::optional<MPoly> exact_divide(const MPoly& a, const MPoly& b);

// Ring interface so that UPoly<MPoly> can run the fraction-free algorithms.
// The variable count of a zero-like value is taken from its argument.
inline MPoly zero_like(const MPoly& p) { return MPoly(p.nvars()); }
inline MPoly one_like(const MPoly& p) { return MPoly::constant(p.nvars(), Rational(1)); }
inline bool is_zero(const MPoly& p) { return p.is_zero(); }
inline bool xrank_is_structural_zero(const MPoly& p) { return p.is_zero(); }
inline bool same_value(const MPoly& a, const MPoly& b) { return a == b; }
inline std::string describe(const MPoly& p) { return p.to_string(); }
inline MPoly scale(const MPoly& p, const Rational& r) { return r * p; }
MPoly exact_div(const MPoly& a, const MPoly& b);

/// All exponent vectors of total degree d in n variables, in decreasing grevlex order.
std::vector<Exponents> monomials_of_degree(int n, int d);

/// Conversions between MPoly and the dense univariate / bivariate types.
UPoly<Rational> to_upoly(const MPoly& p, int v);
MPoly from_upoly(const UPoly<Rational>& p, int nvars, int v);
UPoly<UPoly<Rational>> to_bipoly(const MPoly& p, int s_var, int t_var);
MPoly from_bipoly(const UPoly<UPoly<Rational>>& p, int nvars, int s_var, int t_var);

}  // namespace xrank

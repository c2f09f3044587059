#pragma once

// Sylvester's algorithm for binary forms.
//
// Coordinates are binomial weighted: f = sum_i C(d,i) f_i z0^(d-i) z1^i, so the
// point l^d with l = z0 + t z1 has coordinates (1, t, ..., t^d) and the
// catalecticant is the Hankel matrix H_a[m][j] = f_(m+j). A kernel vector h of
// H_a is read as h(t) = sum_j h_j t^j; its roots t are the points (1:t) and a
// drop in degree is a root at (0:1).

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "xrank/core/certificate.hpp"
#include "xrank/core/linalg.hpp"
#include "xrank/core/mpoly.hpp"
#include "xrank/core/qmatrix.hpp"

namespace xrank {

class BinaryForm {
 public:
  /// coeffs are the binomial-weighted coordinates f_0..f_d; not all zero.
  explicit BinaryForm(std::vector<Rational> coeffs);
  /// From ordinary coefficients a_i of z0^(d-i) z1^i.
  static BinaryForm from_plain(const std::vector<Rational>& plain);
  /// From a homogeneous polynomial in two variables.
  static BinaryForm from_mpoly(const MPoly& p);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  std::vector<Rational> plain() const;
  MPoly to_mpoly() const;

 private:
  std::vector<Rational> c_;
};

/// H_a: (d-a+1) x (a+1) Hankel matrix over any field.
template <class F>
Mat<F> hankel(const std::vector<F>& f, int a) {
  const int d = static_cast<int>(f.size()) - 1;
  Mat<F> h(static_cast<std::size_t>(d - a + 1), std::vector<F>(static_cast<std::size_t>(a + 1)));
  for (int m = 0; m <= d - a; ++m)
    for (int j = 0; j <= a; ++j) h[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)] = f[static_cast<std::size_t>(m + j)];
  return h;
}

QMatrix hankel(const BinaryForm& f, int a);

/// Is sum_j h_j t^j, read as a binary form of degree a = h.size()-1, square-free?
template <class F>
bool binary_squarefree(const std::vector<F>& h) {
  const int a = static_cast<int>(h.size()) - 1;
  UPoly<F> p(h);
  if (p.is_zero()) return false;
  if (a - p.degree() >= 2) return false;
  if (p.degree() <= 1) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

/// Does the span of the given degree-a forms contain a square-free member?
/// By Bertini this fails exactly when all members share a double root.
template <class F>
bool span_has_squarefree(const std::vector<std::vector<F>>& basis) {
  if (basis.empty()) return false;
  const int a = static_cast<int>(basis[0].size()) - 1;
  if (a <= 1) return true;
  bool all_low = true;
  UPoly<F> g;
  for (const auto& h : basis) {
    UPoly<F> p(h);
    if (p.degree() >= a - 1) all_low = false;
    g = gcd(g, p);
    g = gcd(g, p.derivative());
  }
  if (all_low) return false;  // common double root at (0:1)
  return g.is_zero() ? false : g.degree() == 0;
}

struct SylvesterResult {
  int rank = 0;
  int level = 0;                       // smallest a with ker H_a != 0
  std::vector<Rational> kernel_form;   // h_0..h_a of the chosen kernel element
  bool squarefree = false;
  int draws = 0;                       // pseudo-random draws used
  /// Decomposition f = sum lambda_k (t0 z0 + t1 z1)^d when it splits over Q.
  std::vector<std::vector<Rational>> points;  // (t0:t1)
  std::vector<Rational> lambdas;
};

/// Rank of f with a certificate. Seeded draws pick the generic kernel element.
std::pair<SylvesterResult, RankCertificate> sylvester_rank(const BinaryForm& f, std::uint64_t seed = 0);

/// A point of P^d in binomial-weighted coordinates, identified with a binary form.
std::pair<SylvesterResult, RankCertificate> rnc_point_rank(const std::vector<Rational>& point, std::uint64_t seed = 0);

/// Binomial-weighted coordinates of (t0 z0 + t1 z1)^d.
std::vector<Rational> veronese_point(const std::vector<Rational>& t, int d);

/// Generic-field rank by the same rule (used over extension fields).
/// Returns the rank; `draw` supplies scalars for the generic kernel element.
template <class F>
int sylvester_rank_generic(const std::vector<F>& f, const F& like) {
  const int d = static_cast<int>(f.size()) - 1;
  for (int a = 1; a <= d; ++a) {
    auto h = hankel(f, a);
    auto ker = mat_kernel(h, static_cast<std::size_t>(a + 1), like);
    if (ker.empty()) continue;
    return span_has_squarefree(ker) ? a : d - a + 2;
  }
  return d;  // unreachable for nonzero f
}

}  // namespace xrank

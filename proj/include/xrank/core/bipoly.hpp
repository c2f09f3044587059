#pragma once

// Bivariate polynomials as UPoly<UPoly<F>>: the outer variable is t, the
// coefficients are polynomials in s.

#include <algorithm>
#include <vector>

#include "xrank/core/ext.hpp"
#include "xrank/core/upoly.hpp"

namespace xrank {

template <class F>
using BiPoly = UPoly<UPoly<F>>;

/// Coefficient table c[i][j] of s^j t^i.
template <class F>
BiPoly<F> bipoly_from_table(const std::vector<std::vector<F>>& c) {
  std::vector<UPoly<F>> rows;
  for (const auto& r : c) rows.push_back(UPoly<F>(r));
  return BiPoly<F>(std::move(rows));
}

template <class F>
BiPoly<F> bi_const(const UPoly<F>& s_poly) { return BiPoly<F>::constant(s_poly); }

/// The polynomial t (as BiPoly).
template <class F>
BiPoly<F> bi_t(const F& like) {
  return BiPoly<F>(std::vector<UPoly<F>>{UPoly<F>{}, UPoly<F>::constant(one_like(like))});
}

/// The polynomial s (as BiPoly).
template <class F>
BiPoly<F> bi_s(const F& like) { return bi_const(UPoly<F>::monomial(one_like(like), 1)); }

template <class F>
int deg_s(const BiPoly<F>& p) {
  int d = -1;
  for (const auto& c : p.coeffs()) d = std::max(d, c.degree());
  return d;
}

template <class F>
int total_degree(const BiPoly<F>& p) {
  int d = -1;
  for (int i = 0; i <= p.degree(); ++i) {
    const auto& c = p[static_cast<std::size_t>(i)];
    if (!c.is_zero()) d = std::max(d, i + c.degree());
  }
  return d;
}

/// Swaps the roles of s and t.
template <class F>
BiPoly<F> bi_swap(const BiPoly<F>& p, const F& like) {
  int ds = deg_s(p);
  if (ds < 0) return {};
  std::vector<std::vector<F>> table(static_cast<std::size_t>(ds) + 1,
                                    std::vector<F>(static_cast<std::size_t>(p.degree()) + 1, zero_like(like)));
  for (int i = 0; i <= p.degree(); ++i) {
    const auto& c = p[static_cast<std::size_t>(i)];
    for (int j = 0; j <= c.degree(); ++j) table[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(j)];
  }
  return bipoly_from_table(table);
}

/// Content with respect to t: the monic gcd of the s-coefficients.
template <class F>
UPoly<F> bi_content(const BiPoly<F>& p) {
  UPoly<F> g;
  for (const auto& c : p.coeffs()) {
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

template <class F>
BiPoly<F> bi_div_by_s_poly(const BiPoly<F>& p, const UPoly<F>& c) {
  std::vector<UPoly<F>> out;
  for (const auto& x : p.coeffs()) out.push_back(exact_quotient(x, c));
  return BiPoly<F>(std::move(out));
}

/// Scales so that the leading coefficient of the leading s-coefficient is 1.
template <class F>
BiPoly<F> bi_normalize(const BiPoly<F>& p) {
  if (p.is_zero()) return p;
  F k = inv(p.lc().lc());
  std::vector<UPoly<F>> out;
  for (const auto& x : p.coeffs()) out.push_back(x.times(k));
  return BiPoly<F>(std::move(out));
}

template <class F>
BiPoly<F> bi_primitive(const BiPoly<F>& p) {
  if (p.is_zero()) return p;
  return bi_normalize(bi_div_by_s_poly(p, bi_content(p)));
}

/// Normalized gcd in F[s,t].
template <class F>
BiPoly<F> bi_gcd(const BiPoly<F>& a, const BiPoly<F>& b) {
  if (a.is_zero()) return bi_normalize(b);
  if (b.is_zero()) return bi_normalize(a);
  UPoly<F> c = gcd(bi_content(a), bi_content(b));
  BiPoly<F> x = bi_primitive(a), y = bi_primitive(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero() && y.degree() > 0) {
    BiPoly<F> r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.is_zero() ? r : bi_primitive(r);
  }
  BiPoly<F> g = y.is_zero() ? x : BiPoly<F>::constant(UPoly<F>::constant(one_like(c.lc())));
  return bi_normalize(g * BiPoly<F>::constant(c));
}

template <class F>
bool bi_is_constant(const BiPoly<F>& p) { return p.degree() <= 0 && deg_s(p) <= 0; }

/// Evaluates s at a value of a field K, embedding F-coefficients with `embed`.
template <class F, class K, class Embed>
UPoly<K> bi_eval_s(const BiPoly<F>& p, const K& s, Embed&& embed) {
  std::vector<K> out;
  for (const auto& c : p.coeffs()) {
    K acc = zero_like(s);
    for (int j = c.degree(); j >= 0; --j) acc = acc * s + embed(c[static_cast<std::size_t>(j)]);
    out.push_back(acc);
  }
  return UPoly<K>(std::move(out));
}

/// Evaluates t at a value in F, leaving a polynomial in s.
template <class F>
UPoly<F> bi_eval_t(const BiPoly<F>& p, const F& t) {
  UPoly<F> acc;
  for (int i = p.degree(); i >= 0; --i) acc = acc.times(t) + p[static_cast<std::size_t>(i)];
  return acc;
}

/// Evaluates s at a value in F, leaving a polynomial in t.
template <class F>
UPoly<F> bi_eval_s_base(const BiPoly<F>& p, const F& s) {
  std::vector<F> out;
  for (const auto& c : p.coeffs()) out.push_back(c.eval(s));
  return UPoly<F>(std::move(out));
}

template <class F>
F bi_eval(const BiPoly<F>& p, const F& s, const F& t) { return bi_eval_s_base(p, s).eval(t); }

/// Maps every coefficient through fn (e.g. embedding into an extension).
template <class F, class G, class Fn>
BiPoly<G> bi_map(const BiPoly<F>& p, Fn&& fn) {
  std::vector<UPoly<G>> rows;
  for (const auto& c : p.coeffs()) {
    std::vector<G> r;
    for (const auto& x : c.coeffs()) r.push_back(fn(x));
    rows.push_back(UPoly<G>(std::move(r)));
  }
  return BiPoly<G>(std::move(rows));
}

template <class F, class G, class Fn>
UPoly<G> upoly_map(const UPoly<F>& p, Fn&& fn) {
  std::vector<G> r;
  for (const auto& x : p.coeffs()) r.push_back(fn(x));
  return UPoly<G>(std::move(r));
}

/// Divides p(s,t) by (t - s) exactly.
template <class F>
BiPoly<F> bi_div_t_minus_s(const BiPoly<F>& p, const F& like) {
  BiPoly<F> d(std::vector<UPoly<F>>{UPoly<F>::monomial(-one_like(like), 1), UPoly<F>::constant(one_like(like))});
  return exact_div(p, d);
}

/// Binomial coefficient as a Rational.
inline Rational binom(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

/// Rewrites a symmetric polynomial p(s,t) as q(e1, e2) with e1 = s+t, e2 = s*t.
/// The result uses s for e1 and t for e2. Throws if p is not symmetric.
template <class F>
BiPoly<F> bi_to_symmetric(BiPoly<F> p, const F& like) {
  const F one = one_like(like);
  BiPoly<F> e1 = bi_s(like) + bi_t(like);
  BiPoly<F> e2 = bi_s(like) * bi_t(like);
  BiPoly<F> one_b = BiPoly<F>::constant(UPoly<F>::constant(one));
  std::vector<std::vector<F>> q;  // q[j][i] coefficient of e1^i e2^j
  auto put = [&](int i, int j, const F& c) {
    if (static_cast<int>(q.size()) <= j) q.resize(static_cast<std::size_t>(j) + 1);
    auto& row = q[static_cast<std::size_t>(j)];
    if (static_cast<int>(row.size()) <= i) row.resize(static_cast<std::size_t>(i) + 1, zero_like(like));
    row[static_cast<std::size_t>(i)] = row[static_cast<std::size_t>(i)] + c;
  };
  while (!p.is_zero()) {
    // leading term in lex order with t > s: highest t power, then highest s power
    int a = p.degree();
    const UPoly<F>& ca = p.lc();
    int b = ca.degree();
    if (b > a) throw std::logic_error("bi_to_symmetric: polynomial is not symmetric");
    // s^b t^a = (st)^b t^(a-b) -> e2^b * e1^(a-b) leading term t^a s^b
    F c = ca.lc();
    put(a - b, b, c);
    BiPoly<F> term = pow(e1, static_cast<unsigned>(a - b), one_b) * pow(e2, static_cast<unsigned>(b), one_b);
    p = p - term.times(UPoly<F>::constant(c));
  }
  for (auto& row : q)
    if (row.empty()) row.push_back(zero_like(like));
  // table indexed [power of t (= e2)][power of s (= e1)]
  return bipoly_from_table(q);
}

}  // namespace xrank

#pragma once

// Dense univariate polynomials over an exact coefficient ring.
//
// Coefficient types model a small interface found by ADL:
//   zero_like(x), one_like(x), is_zero(x), scale(x, Rational), same_value(x, y)
// and, for fields, inv(x). Rational and Ext<F> (ext.hpp) are fields; UPoly<F>
// is itself a ring with exact_div, which is how bivariate polynomials are built
// as UPoly<UPoly<F>>.

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "xrank/core/rational.hpp"

namespace xrank {

inline Rational scale(const Rational& x, const Rational& r) { return x * r; }

template <class R>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly constant(const R& a) { return UPoly(std::vector<R>{a}); }
  static UPoly monomial(const R& a, int k) {
    std::vector<R> v(static_cast<std::size_t>(k) + 1, zero_like(a));
    v.back() = a;
    return UPoly(std::move(v));
  }
  /// x - a
  static UPoly linear_root(const R& a) { return UPoly(std::vector<R>{-a, one_like(a)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const R& lc() const { return c_.back(); }
  const std::vector<R>& coeffs() const { return c_; }
  std::size_t size() const { return c_.size(); }
  const R& operator[](std::size_t i) const { return c_[i]; }

  /// Coefficient of x^i, or zero_like(fallback) when i is out of range.
  R coeff(int i, const R& fallback) const {
    if (i < 0 || i > degree()) return zero_like(fallback);
    return c_[static_cast<std::size_t>(i)];
  }

  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_like(o.c_.back()));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_like(o.c_.back()));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator-(const UPoly& a) {
    std::vector<R> v;
    v.reserve(a.c_.size());
    for (const auto& x : a.c_) v.push_back(-x);
    UPoly r;
    r.c_ = std::move(v);
    return r;
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> v(a.c_.size() + b.c_.size() - 1, zero_like(a.c_[0]));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (xrank_is_structural_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(v));
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

  /// Multiply every coefficient by a ring element.
  UPoly times(const R& k) const {
    std::vector<R> v;
    v.reserve(c_.size());
    for (const auto& x : c_) v.push_back(x * k);
    return UPoly(std::move(v));
  }

  /// Multiply by x^k.
  UPoly shift(int k) const {
    if (is_zero()) return {};
    std::vector<R> v(static_cast<std::size_t>(k), zero_like(c_[0]));
    v.insert(v.end(), c_.begin(), c_.end());
    UPoly r;
    r.c_ = std::move(v);
    return r;
  }

  R eval(const R& x) const {
    if (is_zero()) return zero_like(x);
    R acc = c_.back();
    for (int i = degree() - 1; i >= 0; --i) acc = acc * x + c_[static_cast<std::size_t>(i)];
    return acc;
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<R> v;
    for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(scale(c_[i], Rational(static_cast<long>(i))));
    return UPoly(std::move(v));
  }

  friend bool same_value(const UPoly& a, const UPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!same_value(a.c_[i], b.c_[i])) return false;
    return true;
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return same_value(a, b); }

  // Representations are canonical, so a structural zero test is exact here and
  // never triggers a split in an extension.
  void trim() {
    while (!c_.empty() && xrank_is_structural_zero(c_.back())) c_.pop_back();
  }

 private:
  std::vector<R> c_;
};

/// Cheap check used only to skip work; never a semantic zero test.
inline bool xrank_is_structural_zero(const Rational& r) { return r.is_zero(); }
template <class R>
bool xrank_is_structural_zero(const UPoly<R>& p) { return p.is_zero(); }

template <class R>
UPoly<R> zero_like(const UPoly<R>&) { return {}; }
template <class R>
bool is_zero(const UPoly<R>& p) { return p.is_zero(); }
template <class R>
UPoly<R> scale(const UPoly<R>& p, const Rational& r) {
  std::vector<R> v;
  for (const auto& x : p.coeffs()) v.push_back(scale(x, r));
  return UPoly<R>(std::move(v));
}

template <class R>
UPoly<R> pow(const UPoly<R>& p, unsigned e, const UPoly<R>& one) {
  UPoly<R> result = one, base = p;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

template <class R>
R ring_pow(const R& x, unsigned e, const R& one) {
  R result = one, base = x;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

template <class R>
std::string to_string(const UPoly<R>& p, const std::string& var = "x") {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const R& a = p[static_cast<std::size_t>(i)];
    if (is_zero(a)) continue;
    if (!out.empty()) out += " + ";
    out += "(" + describe(a) + ")";
    if (i > 0) out += "*" + var + (i > 1 ? "^" + std::to_string(i) : "");
  }
  return out;
}

template <class R>
std::string describe(const UPoly<R>& p) { return to_string(p, "y"); }

// ---------------------------------------------------------------------------
// Field algorithms

template <class F>
struct DivMod {
  UPoly<F> quot, rem;
};

template <class F>
DivMod<F> divmod(const UPoly<F>& a, const UPoly<F>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {{}, a};
  F lc_inv = inv(b.lc());
  std::vector<F> r = a.coeffs();
  std::vector<F> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), zero_like(b.lc()));
  for (int i = a.degree(); i >= b.degree(); --i) {
    F coef = r[static_cast<std::size_t>(i)] * lc_inv;
    q[static_cast<std::size_t>(i - b.degree())] = coef;
    if (xrank_is_structural_zero(coef)) continue;
    for (int j = 0; j <= b.degree(); ++j)
      r[static_cast<std::size_t>(i - b.degree() + j)] =
          r[static_cast<std::size_t>(i - b.degree() + j)] - coef * b[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(b.degree()));
  return {UPoly<F>(std::move(q)), UPoly<F>(std::move(r))};
}

template <class F>
UPoly<F> operator%(const UPoly<F>& a, const UPoly<F>& b) { return divmod(a, b).rem; }

template <class F>
UPoly<F> make_monic(const UPoly<F>& p) {
  if (p.is_zero()) return p;
  return p.times(inv(p.lc()));
}

template <class F>
UPoly<F> gcd(UPoly<F> a, UPoly<F> b) {
  while (!b.is_zero()) {
    UPoly<F> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

template <class F>
struct XGcd {
  UPoly<F> g, u, v;  // u*a + v*b = g, g monic (or zero)
};

template <class F>
XGcd<F> xgcd(const UPoly<F>& a, const UPoly<F>& b, const F& like) {
  UPoly<F> r0 = a, r1 = b;
  UPoly<F> s0 = UPoly<F>::constant(one_like(like)), s1;
  UPoly<F> t0, t1 = UPoly<F>::constant(one_like(like));
  while (!r1.is_zero()) {
    auto qr = divmod(r0, r1);
    r0 = std::exchange(r1, qr.rem);
    s0 = std::exchange(s1, s0 - qr.quot * s1);
    t0 = std::exchange(t1, t0 - qr.quot * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  F k = inv(r0.lc());
  return {r0.times(k), s0.times(k), t0.times(k)};
}

/// Exact division; throws if b does not divide a.
template <class F>
UPoly<F> exact_quotient(const UPoly<F>& a, const UPoly<F>& b) {
  auto qr = divmod(a, b);
  if (!qr.rem.is_zero()) throw std::logic_error("exact_quotient: nonzero remainder");
  return qr.quot;
}

template <class F>
bool divides(const UPoly<F>& b, const UPoly<F>& a) {
  return (a % b).is_zero();
}

/// Yun's square-free decomposition: p = lc * prod_i f_i^i with f_i monic square-free and pairwise coprime.
/// Entry i-1 of the result is f_i (possibly constant 1).
template <class F>
std::vector<UPoly<F>> squarefree_decomposition(const UPoly<F>& p) {
  std::vector<UPoly<F>> out;
  if (p.degree() <= 0) return out;
  UPoly<F> a = make_monic(p);
  UPoly<F> b = a.derivative();
  UPoly<F> c = gcd(a, b);
  UPoly<F> w = exact_quotient(a, c);
  UPoly<F> y = exact_quotient(b, c);
  UPoly<F> z = y - w.derivative();
  while (w.degree() > 0) {
    UPoly<F> g = gcd(w, z);
    out.push_back(g);
    w = exact_quotient(w, g);
    y = exact_quotient(z, g);
    z = y - w.derivative();
  }
  while (!out.empty() && out.back().degree() <= 0) out.pop_back();
  return out;
}

/// Monic square-free part p / gcd(p, p').
template <class F>
UPoly<F> squarefree_part(const UPoly<F>& p) {
  if (p.degree() <= 0) return make_monic(p);
  return make_monic(exact_quotient(p, gcd(p, p.derivative())));
}

/// Resultant over a field via the Euclidean remainder sequence.
template <class F>
F field_resultant(UPoly<F> a, UPoly<F> b, const F& like) {
  if (a.is_zero() || b.is_zero()) return zero_like(like);
  F result = one_like(like);
  if (a.degree() < b.degree()) {
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) result = -result;
    std::swap(a, b);
  }
  while (b.degree() > 0) {
    UPoly<F> r = a % b;
    if (r.is_zero()) return zero_like(like);
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) result = -result;
    result = result * ring_pow(b.lc(), static_cast<unsigned>(a.degree() - r.degree()), one_like(like));
    a = std::move(b);
    b = std::move(r);
  }
  return result * ring_pow(b.lc(), static_cast<unsigned>(a.degree()), one_like(like));
}

/// p(q(x))
template <class R>
UPoly<R> compose(const UPoly<R>& p, const UPoly<R>& q) {
  UPoly<R> acc;
  for (int i = p.degree(); i >= 0; --i) acc = acc * q + UPoly<R>::constant(p[static_cast<std::size_t>(i)]);
  return acc;
}

// ---------------------------------------------------------------------------
// Ring algorithms (coefficients need only exact_div)

/// lc(b)^(deg a - deg b + 1) * a mod b, computed without division.
template <class R>
UPoly<R> pseudo_remainder(const UPoly<R>& a, const UPoly<R>& b) {
  if (b.is_zero()) throw std::domain_error("pseudo_remainder by zero");
  if (a.degree() < b.degree()) return a;
  std::vector<R> r = a.coeffs();
  const R& l = b.lc();
  int db = b.degree();
  int steps = a.degree() - db + 1;
  for (int i = a.degree(); i >= db; --i) {
    R top = r[static_cast<std::size_t>(i)];
    for (auto& x : r) x = x * l;
    for (int j = 0; j <= db; ++j)
      r[static_cast<std::size_t>(i - db + j)] =
          r[static_cast<std::size_t>(i - db + j)] - top * b[static_cast<std::size_t>(j)];
    r.resize(static_cast<std::size_t>(i));
    --steps;
  }
  (void)steps;
  return UPoly<R>(std::move(r));
}

/// Exact division in R[x]; coefficient divisions must be exact in R.
template <class R>
UPoly<R> exact_div(const UPoly<R>& a, const UPoly<R>& b) {
  if (b.is_zero()) throw std::domain_error("exact_div by zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw std::logic_error("exact_div: degree mismatch");
  std::vector<R> r = a.coeffs();
  std::vector<R> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), zero_like(b.lc()));
  for (int i = a.degree(); i >= b.degree(); --i) {
    if (is_zero(r[static_cast<std::size_t>(i)])) continue;
    R coef = exact_div(r[static_cast<std::size_t>(i)], b.lc());
    q[static_cast<std::size_t>(i - b.degree())] = coef;
    for (int j = 0; j <= b.degree(); ++j)
      r[static_cast<std::size_t>(i - b.degree() + j)] =
          r[static_cast<std::size_t>(i - b.degree() + j)] - coef * b[static_cast<std::size_t>(j)];
  }
  for (int i = 0; i < b.degree(); ++i)
    if (!is_zero(r[static_cast<std::size_t>(i)])) throw std::logic_error("exact_div: nonzero remainder");
  return UPoly<R>(std::move(q));
}

/// Resultant over an integral domain by the subresultant remainder sequence.
template <class R>
R subresultant_resultant(UPoly<R> a, UPoly<R> b, const R& one) {
  if (a.is_zero() || b.is_zero()) return zero_like(one);
  R sign = one;
  if (a.degree() < b.degree()) {
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) sign = -sign;
    std::swap(a, b);
  }
  if (b.degree() == 0) return sign * ring_pow(b.lc(), static_cast<unsigned>(a.degree()), one);
  R g = one, h = one;
  while (true) {
    int delta = a.degree() - b.degree();
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) sign = -sign;
    UPoly<R> r = pseudo_remainder(a, b);
    if (r.is_zero()) return zero_like(one);
    a = std::move(b);
    R denom = g * ring_pow(h, static_cast<unsigned>(delta), one);
    std::vector<R> bc;
    for (const auto& x : r.coeffs()) bc.push_back(exact_div(x, denom));
    b = UPoly<R>(std::move(bc));
    g = a.lc();
    // h <- g^delta / h^(delta-1)
    if (delta > 0) {
      h = exact_div(ring_pow(g, static_cast<unsigned>(delta), one),
                    ring_pow(h, static_cast<unsigned>(delta - 1), one));
    }
    if (b.degree() == 0) break;
  }
  int da = a.degree();
  R num = ring_pow(b.lc(), static_cast<unsigned>(da), one);
  R res = da >= 1 ? exact_div(num, ring_pow(h, static_cast<unsigned>(da - 1), one)) : num;
  return sign * res;
}

/// Determinant by fraction-free (Bareiss) elimination over an integral domain.
template <class R>
R bareiss_determinant(std::vector<std::vector<R>> m, const R& one) {
  const std::size_t n = m.size();
  if (n == 0) return one;
  R sign = one, prev = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m[k][k])) {
      std::size_t p = k + 1;
      while (p < n && is_zero(m[p][k])) ++p;
      if (p == n) return zero_like(one);
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// Resultant as the determinant of the Sylvester matrix.
template <class R>
R sylvester_resultant(const UPoly<R>& a, const UPoly<R>& b, const R& one) {
  if (a.is_zero() || b.is_zero()) return zero_like(one);
  int m = a.degree(), n = b.degree();
  if (m == 0 && n == 0) return one;
  std::size_t sz = static_cast<std::size_t>(m + n);
  std::vector<std::vector<R>> s(sz, std::vector<R>(sz, zero_like(one)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] = a[static_cast<std::size_t>(m - j)];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j)
      s[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + j)] = b[static_cast<std::size_t>(n - j)];
  return bareiss_determinant(std::move(s), one);
}

}  // namespace xrank

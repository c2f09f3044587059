#pragma once

// Oracles for the curve tests. They use evaluation/interpolation and closed
// formulas instead of the library's bivariate solver and lift route.

#include <optional>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "span_oracles.hpp"
#include "xrank/core/bisolve.hpp"
#include "xrank/core/mpoly.hpp"

namespace oracle {

/// Lagrange interpolation through (x_i, y_i).
inline Poly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  Poly out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Poly basis = Poly::constant(Rational(1));
    Rational den(1);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * Poly::linear_root(xs[j]);
      den *= xs[i] - xs[j];
    }
    out += basis.times(ys[i] / den);
  }
  return out;
}

/// Determinant of a rational matrix by Gaussian elimination.
inline Rational gauss_det(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

/// Res_t(a, b) at formal t-degrees da, db, for univariate coefficient lists.
inline Rational sylvester_res(const std::vector<Rational>& a, const std::vector<Rational>& b, int da, int db) {
  const int n = da + db;
  std::vector<std::vector<Rational>> s(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  auto at = [](const std::vector<Rational>& v, int k) { return k < static_cast<int>(v.size()) ? v[static_cast<std::size_t>(k)] : Rational(0); };
  for (int i = 0; i < db; ++i)
    for (int k = 0; k <= da; ++k) s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + k)] = at(a, da - k);
  for (int i = 0; i < da; ++i)
    for (int k = 0; k <= db; ++k) s[static_cast<std::size_t>(db + i)][static_cast<std::size_t>(i + k)] = at(b, db - k);
  return gauss_det(std::move(s));
}

/// Coefficients in t of p(u0, t) for p in variables (u, t).
inline std::vector<Rational> specialize(const MPoly& p, const Rational& u0) {
  std::vector<Rational> c(static_cast<std::size_t>(std::max(0, p.degree_in(1)) + 1));
  for (const auto& term : p.terms()) {
    Rational v = term.coeff;
    for (int i = 0; i < term.exps[0]; ++i) v *= u0;
    c[static_cast<std::size_t>(term.exps[1])] += v;
  }
  return c;
}

/// Proves that every common zero of `polys` (in s, t) lies on s = t: with
/// u = s - t, the gcd of a few resultants in t must be a power of u. Returns
/// nullopt when the check is inconclusive.
inline std::optional<bool> only_diagonal_zeros(const std::vector<MPoly>& polys, std::uint64_t seed) {
  const MPoly u = MPoly::var(2, 0), t = MPoly::var(2, 1);
  std::vector<MPoly> shifted;
  for (const auto& p : polys)
    if (!p.is_zero()) shifted.push_back(p.compose({u + t, t}));
  std::mt19937_64 rng(seed);
  Poly g;
  for (int round = 0; round < 4; ++round) {
    MPoly a(2), b(2);
    for (const auto& p : shifted) {
      a += Rational(static_cast<long>(rng() % 13) - 6) * p;
      b += Rational(static_cast<long>(rng() % 13) - 6) * p;
    }
    const int da = a.degree_in(1), db = b.degree_in(1);
    if (da <= 0 || db <= 0) continue;
    const int bound = a.total_degree() * b.total_degree();
    std::vector<Rational> xs, ys;
    for (int i = 0; i <= bound; ++i) {
      Rational u0(i - bound / 2);
      xs.push_back(u0);
      ys.push_back(sylvester_res(specialize(a, u0), specialize(b, u0), da, db));
    }
    Poly r = interpolate(xs, ys);
    if (r.is_zero()) continue;
    g = gcd(g, r);
  }
  if (g.is_zero()) return std::nullopt;
  for (int k = 0; k < g.degree(); ++k)
    if (!g[static_cast<std::size_t>(k)].is_zero()) return std::nullopt;
  return true;
}

/// Discriminant of the binary cubic a t^3 + b t^2 + c t + d (zero iff a
/// repeated root in P^1).
inline Poly cubic_discriminant(const Poly& d, const Poly& c, const Poly& b, const Poly& a) {
  auto k = [](long v) { return Poly::constant(Rational(v)); };
  return b * b * c * c - k(4) * a * c * c * c - k(4) * b * b * b * d - k(27) * a * a * d * d + k(18) * a * b * c * d;
}

/// Waring rank of a binary form is at most 3? Input as the Hankel sequence
/// f_0..f_d (powers (x + t y)^d have sequence (1, t, ..., t^d)), degree 4 or 5. nullopt if undecided here.
inline std::optional<bool> binary_rank_at_most_3(const std::vector<Rational>& f) {
  const int d = static_cast<int>(f.size()) - 1;
  auto cat = [&](int a) {
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(d - a + 1), std::vector<Rational>(static_cast<std::size_t>(a + 1)));
    for (int i = 0; i <= d - a; ++i)
      for (int j = 0; j <= a; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = f[static_cast<std::size_t>(i + j)];
    return m;
  };
  // apolar generator of degree a: kernel of the (d-a+1) x (a+1) Hankel matrix
  for (int a = 1; a <= 2; ++a) {
    auto ker = gauss_kernel(cat(a), a + 1);
    if (ker.empty()) continue;
    if (ker.size() > 1 || a == 1) return true;
    // kernel quadratic g0 + g1 t + g2 t^2 in the dual variable: rank 2 iff squarefree
    const auto& g = ker[0];
    if (g[1] * g[1] != 4 * g[0] * g[2]) return true;
    return d - a + 2 <= 3;
  }
  if (d == 4) return true;  // generators in degrees 3 and 3
  return std::nullopt;
}

/// Curve of degree d in P^4 (d = 4 or 5) with plain coefficient matrix p
/// (5 x (d+1)): is q in the span of at most three curve points? Lifts q to
/// Hankel sequences of degree d and applies apolarity. nullopt when inconclusive.
inline std::optional<bool> lift_trisecant(const std::vector<std::vector<Rational>>& p, const std::vector<Rational>& q) {
  const int d = static_cast<int>(p[0].size()) - 1;
  std::vector<std::vector<Rational>> aug = p;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(-q[i]);
  auto ker = gauss_kernel(aug, d + 2);
  std::optional<std::vector<Rational>> c0;
  for (const auto& v : ker)
    if (!v[static_cast<std::size_t>(d + 1)].is_zero()) c0 = v;
  if (!c0) return std::nullopt;
  for (auto& x : *c0) x /= (*c0)[static_cast<std::size_t>(d + 1)];
  c0->pop_back();
  if (d == 4) return binary_rank_at_most_3(*c0);
  if (d != 5) return std::nullopt;
  std::vector<Rational> k;
  for (const auto& v : gauss_kernel(p, 6)) k = v;
  if (k.empty()) return std::nullopt;
  // F(mu) = c0 + mu k; curve points pull back to the moment vectors (1, t, ..., t^d)
  std::vector<Poly> f;
  for (int i = 0; i <= 5; ++i) f.push_back(Poly({(*c0)[static_cast<std::size_t>(i)], k[static_cast<std::size_t>(i)]}));
  // kernel of the 3x4 Hankel matrix: signed maximal minors
  std::vector<Poly> h;
  for (int j = 0; j < 4; ++j) {
    std::vector<std::vector<Poly>> m;
    for (int r = 0; r < 3; ++r) {
      std::vector<Poly> row;
      for (int cidx = 0; cidx < 4; ++cidx)
        if (cidx != j) row.push_back(f[static_cast<std::size_t>(r + cidx)]);
      m.push_back(row);
    }
    Poly dt = det_poly(m);
    h.push_back(j % 2 ? -dt : dt);
  }
  Poly g;
  for (const auto& x : h) g = gcd(g, x);
  if (g.is_zero()) return std::nullopt;
  for (auto& x : h) x = exact_quotient(x, g);
  if (!cubic_discriminant(h[0], h[1], h[2], h[3]).is_zero()) return true;
  // the remaining lifts are the roots of g, where the Hankel rank drops
  if (g.degree() == 0) return false;
  const Poly gs = xrank::squarefree_part(g);
  const auto roots = xrank::rational_roots(gs);
  if (static_cast<int>(roots.size()) != gs.degree()) return std::nullopt;
  for (const auto& mu : roots) {
    std::vector<Rational> fm;
    for (const auto& x : f) fm.push_back(x.eval(mu));
    auto r = binary_rank_at_most_3(fm);
    if (!r) return std::nullopt;
    if (*r) return true;
  }
  return false;
}

}  // namespace oracle

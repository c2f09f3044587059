#pragma once

// Independent brute-force oracles shared by the unit and acceptance tests.
// They deliberately avoid the library's rank and elimination code paths.

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "xrank/core/rational.hpp"

namespace oracle {

using xrank::Rational;

inline int gauss_rank(std::vector<std::vector<Rational>> m) {
  int r = 0;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Rational f = m[i][c] / m[r][c];
      for (int j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

/// Kernel basis by plain Gauss-Jordan elimination.
inline std::vector<std::vector<Rational>> gauss_kernel(std::vector<std::vector<Rational>> m, int cols) {
  const int rows = static_cast<int>(m.size());
  std::vector<int> piv;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rational k = Rational(1) / m[r][c];
    for (auto& x : m[r]) x *= k;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Rational f = m[i][c];
      for (int j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  std::vector<std::vector<Rational>> out;
  for (int free = 0; free < cols; ++free) {
    bool is_piv = false;
    for (int p : piv) is_piv = is_piv || p == free;
    if (is_piv) continue;
    std::vector<Rational> v(cols);
    v[free] = Rational(1);
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m[i][free];
    out.push_back(v);
  }
  return out;
}

/// Polynomial sum h_j t^j as a binary form of degree h.size()-1: square-free?
/// Uses the discriminant-free test: distinct roots iff the Sylvester matrix of
/// h and h' is nonsingular, plus a degree-drop check for the point at infinity.
inline bool squarefree_binary(const std::vector<Rational>& h) {
  int a = static_cast<int>(h.size()) - 1;
  int deg = a;
  while (deg >= 0 && h[deg].is_zero()) --deg;
  if (deg < 0 || a - deg >= 2) return false;
  if (deg <= 1) return true;
  std::vector<Rational> dh;
  for (int j = 1; j <= deg; ++j) dh.push_back(h[j] * Rational(j));
  int m = deg, n = deg - 1, size = m + n;
  std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[i][i + j] = h[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s[n + i][i + j] = dh[n - j];
  return gauss_rank(s) == size;
}

inline std::vector<std::vector<Rational>> hankel(const std::vector<Rational>& f, int a) {
  int d = static_cast<int>(f.size()) - 1;
  std::vector<std::vector<Rational>> h(d - a + 1, std::vector<Rational>(a + 1));
  for (int m = 0; m <= d - a; ++m)
    for (int j = 0; j <= a; ++j) h[m][j] = f[m + j];
  return h;
}

/// Smallest a whose Hankel kernel contains a square-free form, searching all
/// integer combinations of the kernel basis with coefficients in [-2, 2].
inline int exhaustive_binary_rank(const std::vector<Rational>& f) {
  int d = static_cast<int>(f.size()) - 1;
  for (int a = 1; a <= d + 1; ++a) {
    if (a > d) return d + 1;
    auto ker = gauss_kernel(hankel(f, a), a + 1);
    if (ker.empty()) continue;
    std::vector<int> c(ker.size(), -2);
    while (true) {
      std::vector<Rational> h(a + 1);
      bool nz = false;
      for (std::size_t k = 0; k < ker.size(); ++k)
        for (int j = 0; j <= a; ++j) h[j] += Rational(c[k]) * ker[k][j];
      for (auto& x : h) nz = nz || !x.is_zero();
      if (nz && squarefree_binary(h)) return a;
      std::size_t k = 0;
      while (k < c.size() && c[k] == 2) c[k++] = -2;
      if (k == c.size()) break;
      ++c[k];
    }
  }
  return d + 1;
}

/// Rational roots of an integer-coefficient polynomial (coefficients low to high)
/// by the rational root theorem with trial-division divisor lists.
inline std::vector<Rational> small_rational_roots(const std::vector<Rational>& c) {
  std::vector<Rational> out;
  int deg = static_cast<int>(c.size()) - 1;
  while (deg >= 0 && c[deg].is_zero()) --deg;
  if (deg <= 0) return out;
  mpz_class l = 1;
  for (int i = 0; i <= deg; ++i) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c[i].den().get_mpz_t());
  std::vector<mpz_class> z;
  for (int i = 0; i <= deg; ++i) z.push_back(c[i].num() * (l / c[i].den()));
  int low = 0;
  while (z[low] == 0) ++low;
  if (low > 0) out.push_back(Rational(0));
  auto divs = [](mpz_class n) {
    std::vector<mpz_class> d;
    n = abs(n);
    if (n > 100000) return d;  // too large for this oracle; caller resamples
    for (mpz_class k = 1; k <= n; ++k)
      if (n % k == 0) d.push_back(k);
    return d;
  };
  auto eval = [&](const Rational& t) {
    Rational acc;
    for (int i = deg; i >= 0; --i) acc = acc * t + c[i];
    return acc;
  };
  for (const auto& q : divs(z[deg]))
    for (const auto& p : divs(z[low]))
      for (int sg : {1, -1}) {
        Rational t(mpz_class(p * sg), q);
        if (eval(t).is_zero() && std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
      }
  return out;
}

/// Randomized span search: smallest r <= max_r for which a sampled set of r
/// distinct parameters has f in the span of their Veronese points. Each sample
/// draws r-1 parameters and solves for the last one.
inline std::optional<int> span_search_upper_bound(const std::vector<Rational>& f, int max_r, int samples,
                                                  std::uint64_t seed, int min_r = 1) {
  int d = static_cast<int>(f.size()) - 1;
  std::mt19937_64 rng(seed);
  auto point = [&](const Rational& t0, const Rational& t1) {
    std::vector<Rational> v;
    for (int i = 0; i <= d; ++i) v.push_back(xrank::pow(t0, d - i) * xrank::pow(t1, i));
    return v;
  };
  auto in_span = [&](const std::vector<std::vector<Rational>>& cols) {
    std::vector<std::vector<Rational>> m(d + 1);
    for (int i = 0; i <= d; ++i)
      for (auto& c : cols) m[i].push_back(c[i]);
    int base = gauss_rank(m);
    for (int i = 0; i <= d; ++i) m[i].push_back(f[i]);
    return gauss_rank(m) == base;
  };
  for (int r = min_r; r <= max_r; ++r) {
    for (int s = 0; s < samples; ++s) {
      std::vector<std::vector<Rational>> cols;
      std::vector<Rational> used;
      bool inf = r >= 2 && (rng() % 8 == 0);
      if (inf) cols.push_back(point(Rational(0), Rational(1)));
      while (static_cast<int>(cols.size()) < r - 1) {
        Rational t(static_cast<long>(rng() % 13) - 6, static_cast<long>(1 + rng() % 4));
        if (std::find(used.begin(), used.end(), t) != used.end()) continue;
        used.push_back(t);
        cols.push_back(point(Rational(1), t));
      }
      // candidates for the last parameter: common roots of the left kernel of [cols, f]
      std::vector<std::vector<Rational>> a(d + 1);
      for (int i = 0; i <= d; ++i) {
        for (auto& c : cols) a[i].push_back(c[i]);
        a[i].push_back(f[i]);
      }
      std::vector<std::vector<Rational>> at(a[0].size(), std::vector<Rational>(d + 1));
      for (int i = 0; i <= d; ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) at[j][i] = a[i][j];
      auto left = gauss_kernel(at, d + 1);
      std::vector<std::vector<Rational>> cand;
      if (!inf) cand.push_back({Rational(0), Rational(1)});
      if (!left.empty())
        for (const auto& t : small_rational_roots(left[0]))
          if (std::find(used.begin(), used.end(), t) == used.end()) cand.push_back({Rational(1), t});
      for (const auto& tt : cand) {
        auto with = cols;
        with.push_back(point(tt[0], tt[1]));
        if (in_span(with)) return r;
      }
    }
  }
  return std::nullopt;
}

}  // namespace oracle

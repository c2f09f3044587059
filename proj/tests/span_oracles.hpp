#pragma once

// Span checks for schemes with irrational support, independent of the apolarity
// criterion. They work directly with points over Q[x]/(R).

#include <optional>
#include <vector>

#include "oracles.hpp"
#include "xrank/apolarity/cubic.hpp"
#include "xrank/core/ext.hpp"
#include "xrank/core/linalg.hpp"

namespace oracle {

using xrank::MPoly;
using Poly = xrank::UPoly<Rational>;

inline Rational multinomial(const std::vector<int>& a) {
  int n = 0;
  Rational r(1);
  for (int k : a)
    for (int i = 1; i <= k; ++i) r = r * Rational(++n) / Rational(i);
  return r;
}

inline Poly det_poly(const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Poly acc;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Poly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Poly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    Poly term = m[0][j] * det_poly(minor);
    acc = (j % 2) ? acc - term : acc + term;
  }
  return acc;
}

/// Is the ternary cubic f in the span of the cubes of the four points of
/// {c1 = c2 = 0}? Uses the generic point (x, y(x), 1) over A = Q[x]/(R) and the
/// trace form of A. nullopt when the chart z = 1 does not see four points with
/// distinct x.
inline std::optional<bool> two_conic_span(const MPoly& f, const MPoly& c1, const MPoly& c2) {
  const std::vector<MPoly> chart{MPoly::var(2, 0), MPoly::var(2, 1), MPoly::constant(2, Rational(1))};
  auto coeffs_in_y = [&](const MPoly& c) {
    std::vector<Poly> out(3);
    const MPoly affine = c.compose(chart);
    for (const auto& t : affine.terms()) out[static_cast<std::size_t>(t.exps[1])] += Poly::monomial(t.coeff, t.exps[0]);
    return out;  // c = out[0] + out[1] y + out[2] y^2
  };
  auto a = coeffs_in_y(c1), b = coeffs_in_y(c2);
  std::vector<std::vector<Poly>> syl{{a[2], a[1], a[0], Poly{}}, {Poly{}, a[2], a[1], a[0]},
                                     {b[2], b[1], b[0], Poly{}}, {Poly{}, b[2], b[1], b[0]}};
  Poly r = det_poly(syl);
  if (r.degree() != 4 || xrank::gcd(r, r.derivative()).degree() != 0) return std::nullopt;
  auto mod = [&](const Poly& p) { return xrank::divmod(p, r).rem; };
  // b2*c1 - a2*c2 is linear in y
  Poly lin1 = mod(b[2] * a[1] - a[2] * b[1]), lin0 = mod(b[2] * a[0] - a[2] * b[0]);
  auto g = xrank::xgcd(lin1, r, Rational());
  if (g.g.degree() != 0) return std::nullopt;
  Poly y = mod(Poly{} - lin0 * g.u * Poly::constant(Rational(1) / g.g[0]));
  auto trace = [&](const Poly& e) {
    Rational t;
    for (int k = 0; k < 4; ++k) t += mod(e * Poly::monomial(Rational(1), k)).coeff(k, Rational());
    return t;
  };
  auto mons = xrank::monomials_of_degree(3, 3);
  std::vector<std::vector<Rational>> aug;
  for (const auto& m : mons) {
    Poly c = Poly::constant(multinomial(m));
    for (int i = 0; i < m[0]; ++i) c = mod(c * Poly::monomial(Rational(1), 1));
    for (int i = 0; i < m[1]; ++i) c = mod(c * y);
    std::vector<Rational> row;
    for (int i = 0; i < 4; ++i) row.push_back(trace(c * Poly::monomial(Rational(1), i)));
    row.push_back(f.coeff(m));
    aug.push_back(row);
  }
  auto plain = aug;
  for (auto& row : plain) row.pop_back();
  return gauss_rank(plain) == gauss_rank(aug);
}

/// Is f in the span of nu_3 of the curvilinear length-3 piece at p of the conic
/// B = other_conic and of the point q? Jets of a local parametrization of B.
inline bool de_paolis_jet_span(const MPoly& f, const xrank::DePaolis& dp) {
  using K = xrank::Ext<Rational>;
  auto branches = xrank::d5_branches(dp.modulus, [&](xrank::ExtCtxPtr<Rational> ctx) {
    auto lift = [&](const std::vector<Poly>& v) {
      std::vector<K> out;
      for (const auto& x : v) out.push_back(K(ctx, x));
      return out;
    };
    auto p = lift(dp.triple_point), q = lift(dp.simple_point), b = lift(dp.other_conic);
    const K zero = K::from_base(ctx, Rational()), one = K::from_base(ctx, Rational(1));
    // B as a symmetric matrix
    std::vector<std::vector<K>> bm(3, std::vector<K>(3, zero));
    for (std::size_t k = 0; k < dp.net.size(); ++k)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          bm[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
              b[k] * K::from_base(ctx, dp.net[k].derivative(i).derivative(j).eval({0, 0, 0}) / Rational(2));
    auto apply = [&](const std::vector<K>& v) {
      std::vector<K> out(3, zero);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[static_cast<std::size_t>(i)] += bm[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(j)];
      return out;
    };
    auto dot = [&](const std::vector<K>& a, const std::vector<K>& c) { return a[0] * c[0] + a[1] * c[1] + a[2] * c[2]; };
    auto w = apply(p);
    std::vector<K> u{w[1] * p[2] - w[2] * p[1], w[2] * p[0] - w[0] * p[2], w[0] * p[1] - w[1] * p[0]};
    int e = 0;
    while (e < 3 && is_zero(w[static_cast<std::size_t>(e)])) ++e;
    if (e == 3) return false;
    // gamma(s) = p + s u + s^2 c stays on B to order 2
    std::vector<K> c(3, zero);
    c[static_cast<std::size_t>(e)] = -dot(u, apply(u)) / (w[static_cast<std::size_t>(e)] + w[static_cast<std::size_t>(e)]);
    auto mons = xrank::monomials_of_degree(3, 3);
    xrank::Mat<K> m;
    std::vector<K> rhs;
    for (const auto& mon : mons) {
      // truncated gamma(s)^mon as coefficients of s^0, s^1, s^2
      std::vector<K> acc{one, zero, zero};
      for (int i = 0; i < 3; ++i)
        for (int k = 0; k < mon[static_cast<std::size_t>(i)]; ++k) {
          std::vector<K> g{p[static_cast<std::size_t>(i)], u[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(i)]};
          std::vector<K> nxt{acc[0] * g[0], acc[0] * g[1] + acc[1] * g[0], acc[0] * g[2] + acc[1] * g[1] + acc[2] * g[0]};
          acc = nxt;
        }
      K qm = one;
      for (int i = 0; i < 3; ++i)
        for (int k = 0; k < mon[static_cast<std::size_t>(i)]; ++k) qm *= q[static_cast<std::size_t>(i)];
      K mult = K::from_base(ctx, multinomial(mon));
      m.push_back({mult * acc[0], mult * acc[1], mult * acc[2], mult * qm});
      rhs.push_back(K::from_base(ctx, f.coeff(mon)));
    }
    return xrank::mat_solve(m, rhs, 4, zero).has_value();
  });
  for (const auto& br : branches)
    if (!br.value) return false;
  return true;
}

}  // namespace oracle

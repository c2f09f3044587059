#include "xrank/curves/singular.hpp"

#include <algorithm>
#include <map>

#include "xrank/core/algebra.hpp"

namespace xrank {

namespace {

using K = Ext<Rational>;
using Vec = std::vector<K>;

K det3(const Vec& a, const Vec& b, const Vec& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

Vec cross(const Vec& a, const Vec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

K dot(const Vec& a, const Vec& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec unit_vec(const K& like, int k) {
  Vec e(3, zero_like(like));
  e[static_cast<std::size_t>(k)] = one_like(like);
  return e;
}

std::vector<UPoly<K>> chart_over(const RationalCurve& c, const K& like) {
  std::vector<UPoly<K>> out;
  for (const auto& p : c.affine()) {
    std::vector<K> v;
    for (const auto& a : p.coeffs()) v.push_back(from_rational(like, a));
    out.emplace_back(std::move(v));
  }
  return out;
}

UPoly<K> remap(const UPoly<K>& p, const ExtCtxPtr<Rational>& ctx) {
  std::vector<K> v;
  for (const auto& c : p.coeffs()) v.emplace_back(ctx, c.rep());
  return UPoly<K>(std::move(v));
}

/// Characteristic polynomial of multiplication by a on Q[x]/(m).
UPoly<Rational> charpoly(const K& a) {
  const UPoly<Rational>& m = a.ctx()->modulus;
  const int n = m.degree();
  const UPoly<Rational> one = UPoly<Rational>::constant(Rational(1));
  std::vector<std::vector<UPoly<Rational>>> mat(static_cast<std::size_t>(n), std::vector<UPoly<Rational>>(static_cast<std::size_t>(n)));
  K basis = one_like(a);
  const K x = K::generator(a.ctx());
  for (int j = 0; j < n; ++j) {
    K col = a * basis;
    for (int i = 0; i < n; ++i) {
      Rational c = i <= col.rep().degree() ? col.rep()[static_cast<std::size_t>(i)] : Rational(0);
      mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = UPoly<Rational>::constant(-c);
    }
    mat[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] += UPoly<Rational>::monomial(Rational(1), 1);
    basis = basis * x;
  }
  return make_monic(bareiss_determinant(std::move(mat), one));
}

int first_nonzero(const Vec& v) {
  for (int k = 0; k < 3; ++k)
    if (!is_zero(v[static_cast<std::size_t>(k)])) return k;
  return -1;
}

/// A line through p (as a functional) that does not vanish at w.
Vec line_through_avoiding(const Vec& p, const Vec& w) {
  for (int k = 0; k < 3; ++k) {
    Vec l = cross(p, unit_vec(p[0], k));
    if (!is_zero(dot(l, w))) return l;
  }
  throw std::logic_error("line_through_avoiding: w equals p");
}

struct PairInfo {
  bool present = false;
  std::string type;
  int delta = -1;
  int mult = 2;  // image multiplicity seen from this branch
  int tdeg = 1;
  UPoly<Rational> modulus, partner;
  std::vector<Rational> s, t, point;  // rational data when the modulus is linear
  std::string detail;
};

PairInfo classify_pair(const RationalCurve& c, const UPoly<K>& tf, const ExtCtxPtr<Rational>& ctx) {
  PairInfo info;
  info.modulus = ctx->modulus;
  const K alpha = K::generator(ctx);
  UPoly<K> h = remap(tf, ctx);
  if (h.is_zero()) {
    info.present = true;
    info.type = "other";
    info.detail = "whole fibre";
    return info;
  }
  const UPoly<K> lin = UPoly<K>::linear_root(alpha);
  for (;;) {
    if (h.degree() < 1) break;
    auto qr = divmod(h, lin);
    bool exact = true;
    for (const auto& r : qr.rem.coeffs())
      if (!is_zero(r)) exact = false;
    if (!exact) break;
    h = qr.quot;
  }
  if (h.degree() < 1) return info;
  info.present = true;
  info.tdeg = h.degree();
  if (h.degree() > 1) {
    info.type = "other";
    info.mult = h.degree() + 1;
    info.detail = "m=" + std::to_string(info.mult) + " branches";
    return info;
  }
  const K tau = -(h[0] / h[1]);
  info.partner = charpoly(tau);
  auto chart = chart_over(c, alpha);
  auto va = taylor_vectors(chart, alpha, 2);
  auto vb = taylor_vectors(chart, tau, 2);
  if (ctx->modulus.degree() == 1) {
    info.s = {Rational(1), -ctx->modulus[0]};
    info.t = {Rational(1), tau.rep().is_zero() ? Rational(0) : tau.rep()[0]};
    info.point = normalize_point(c.point(info.s));
  }
  auto immersive = [](const Mat<K>& v) { return first_nonzero(cross(v[0], v[1])) >= 0; };
  if (!immersive(va) || !immersive(vb)) {
    info.type = "other";
    info.detail = "singular branch through a multiple point";
    return info;
  }
  if (!is_zero(det3(va[0], va[1], vb[1]))) {
    info.type = "node";
    info.delta = 1;
    info.detail = "m=2 transversal branches";
    return info;
  }
  // common tangent: compare second-order graph coefficients y = c2 x^2 + ...
  const Vec ly = cross(va[0], va[1]);
  const Vec lx = line_through_avoiding(va[0], va[1]);
  const Vec l0 = unit_vec(alpha, first_nonzero(va[0]));
  auto c2 = [&](const Mat<K>& v) {
    K x1 = dot(lx, v[1]);
    return dot(ly, v[2]) * dot(l0, v[0]) / (x1 * x1);
  };
  if (!is_zero(c2(va) - c2(vb))) {
    info.type = "tacnode";
    info.delta = 2;
    info.detail = "m=2 tangent branches, contact 2";
    return info;
  }
  info.type = "other";
  info.detail = "m=2 tangent branches, contact > 2";
  return info;
}

struct CuspInfo {
  std::string type;
  int delta = -1;
  UPoly<Rational> modulus;
  std::vector<Rational> s, point;
  std::string detail;
};

CuspInfo classify_cusp(const RationalCurve& c, const ExtCtxPtr<Rational>& ctx) {
  CuspInfo info;
  info.modulus = ctx->modulus;
  const K alpha = K::generator(ctx);
  if (ctx->modulus.degree() == 1) {
    info.s = {Rational(1), -ctx->modulus[0]};
    info.point = normalize_point(c.point(info.s));
  }
  const int d = c.degree();
  auto v = taylor_vectors(chart_over(c, alpha), alpha, d);
  auto j = jump_orders(v, 2);
  if (j.size() < 3) throw std::logic_error("classify_cusp: degenerate plane curve");
  const int m = j[1];
  if (m != 2) {
    info.type = "other";
    info.detail = "m=" + std::to_string(m);
    return info;
  }
  const Vec& p = v[0];
  const Vec& tan = v[2];
  const Vec l0 = unit_vec(alpha, first_nonzero(p));
  const Vec ly = cross(p, tan);
  const Vec lx = line_through_avoiding(p, tan);
  constexpr std::size_t n = 10;
  Vec nx, ny, den;
  for (int k = 0; k <= d; ++k) {
    nx.push_back(dot(lx, v[static_cast<std::size_t>(k)]));
    ny.push_back(dot(ly, v[static_cast<std::size_t>(k)]));
    den.push_back(dot(l0, v[static_cast<std::size_t>(k)]));
  }
  Vec di = series::inverse(den, n + 2);
  Vec x = series::mul(nx, di, n + 2), y = series::mul(ny, di, n + 2);
  // X = x2 u^2 q(u), w = u sqrt(q(u)), so X = x2 w^2
  const K x2inv = inv(x[2]);
  Vec q;
  for (std::size_t i = 2; i < n + 2; ++i) q.push_back(x[i] * x2inv);
  Vec s = series::sqrt1(q, n);
  Vec w(n, zero_like(alpha));
  for (std::size_t i = 1; i < n; ++i) w[i] = s[i - 1];
  Vec u = series::revert(w, n);
  Vec yw = series::compose(Vec(y.begin(), y.begin() + static_cast<long>(n)), u, n);
  int odd = -1;
  for (std::size_t k = 3; k < n; k += 2)
    if (!is_zero(yw[k])) {
      odd = static_cast<int>(k);
      break;
    }
  info.detail = "m=2 puiseux (2," + (odd < 0 ? std::string("?") : std::to_string(odd)) + ")";
  if (odd == 3) {
    info.type = "ordinary-cusp";
    info.delta = 1;
  } else if (odd == 5) {
    info.type = "ramphoid-cusp";
    info.delta = 2;
  } else {
    info.type = "other";
  }
  return info;
}

bool infinity_is_clean(const RationalCurve& c) {
  if (mat_rank(taylor_vectors(c.affine_at_infinity(), Rational(0), 1)) < 2) return false;
  auto q = c.point({Rational(0), Rational(1)});
  const auto& a = c.affine();
  std::vector<UPoly<Rational>> m;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) m.push_back(a[j].times(q[i]) - a[i].times(q[j]));
  return common_divisor(m, c.degree()).affine.degree() <= 0;
}

/// Parameters of the shifted curve back in the original coordinates:
/// t' corresponds to (1 + k t' : t').
std::vector<Rational> unshift_point(const std::vector<Rational>& z, const Rational& k) {
  return normalize_point({z[0] + k * z[1], z[1]});
}

UPoly<Rational> unshift_modulus(const UPoly<Rational>& m, const Rational& k) {
  // roots t = t'/(1 + k t'), i.e. t' = t/(1 - k t)
  const int n = m.degree();
  const UPoly<Rational> t = UPoly<Rational>::monomial(Rational(1), 1);
  const UPoly<Rational> one = UPoly<Rational>::constant(Rational(1));
  const UPoly<Rational> lin = one - t.times(k);
  UPoly<Rational> out;
  for (int i = 0; i <= n; ++i)
    out += (pow(t, static_cast<unsigned>(i), one) * pow(lin, static_cast<unsigned>(n - i), one)).times(m[static_cast<std::size_t>(i)]);
  return make_monic(out);
}

}  // namespace

SingularityReport plane_singularities(const RationalCurve& c0, const SolveOptions& opt) {
  if (c0.ambient() != 2) throw InvalidInput("plane_singularities: curve must lie in P^2");
  Rational k(0);
  for (int i = 0; i < 64 && !infinity_is_clean(c0.shifted(k)); ++i) k = Rational((i / 2 + 1) * (i % 2 == 0 ? 1 : -1));
  const RationalCurve c = c0.shifted(k);
  if (!infinity_is_clean(c)) throw InvalidInput("plane_singularities: parametrization is not birational");
  const auto& a = c.affine();

  SingularityReport rep;
  // pairs with equal images
  std::vector<MPoly> minors;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      minors.push_back(from_upoly(a[i], 2, 0) * from_upoly(a[j], 2, 1) - from_upoly(a[j], 2, 0) * from_upoly(a[i], 2, 1));
  auto sol = solve_bivariate(minors, MPoly::var(2, 0) - MPoly::var(2, 1), opt);
  if (sol.status == ZeroStatus::Undecided) throw Undecided("plane_singularities: " + sol.limit);
  if (!sol.limit.empty()) throw Undecided("plane_singularities: " + sol.limit);
  if (sol.component) throw InvalidInput("plane_singularities: parametrization is not birational");

  std::vector<PairInfo> pairs;
  for (const auto& z : sol.zeros)
    for (auto& br : d5_branches(z.s_modulus, [&](ExtCtxPtr<Rational> ctx) { return classify_pair(c, z.t_factor, ctx); }))
      if (br.value.present) pairs.push_back(std::move(br.value));
  auto key = [](const UPoly<Rational>& m) { return std::make_pair(m.degree(), to_string(m, "t")); };
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& p = pairs[i];
    SingularityEntry e;
    e.type = p.type;
    e.delta = p.delta;
    e.multiplicity = p.detail;
    const int deg = p.modulus.degree();
    const bool self = p.tdeg == 1 && same_value(p.partner, p.modulus);
    int ordered = deg * p.tdeg;
    if (p.tdeg == 1 && !self) {
      bool partner_listed = false, skip = false;
      for (std::size_t j = 0; j < pairs.size(); ++j)
        if (j != i && same_value(pairs[j].modulus, p.partner)) {
          partner_listed = true;
          skip = key(p.modulus) > key(p.partner) || (key(p.modulus) == key(p.partner) && j < i);
        }
      if (skip) continue;
      e.points = partner_listed ? deg : std::max(1, deg / 2);
    } else {
      e.points = std::max(1, ordered / (p.mult * (p.mult - 1)));
    }
    if (!p.point.empty()) {
      e.point = p.point;
      e.parameters = {unshift_point(p.s, k), unshift_point(p.t, k)};
    } else {
      e.parameter_moduli.push_back(unshift_modulus(p.modulus, k));
      if (p.tdeg == 1 && !self) e.parameter_moduli.push_back(unshift_modulus(p.partner, k));
    }
    rep.entries.push_back(std::move(e));
  }

  // cusps: phi and phi' dependent
  UPoly<Rational> g;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) g = gcd(g, a[i] * a[j].derivative() - a[j] * a[i].derivative());
  if (g.is_zero()) throw InvalidInput("plane_singularities: curve is a line");
  if (g.degree() > 0) {
    UPoly<Rational> sf = squarefree_part(g);
    std::vector<UPoly<Rational>> factors;
    for (const auto& r : rational_roots(sf)) {
      factors.push_back(UPoly<Rational>::linear_root(r));
      sf = exact_quotient(sf, factors.back());
    }
    if (sf.degree() > 0) factors.push_back(make_monic(sf));
    for (const auto& f : factors)
      for (auto& br : d5_branches(f, [&](ExtCtxPtr<Rational> ctx) { return classify_cusp(c, ctx); })) {
        SingularityEntry e;
        e.type = br.value.type;
        e.delta = br.value.delta;
        e.multiplicity = br.value.detail;
        e.points = br.modulus.degree();
        if (!br.value.point.empty()) {
          e.point = br.value.point;
          e.parameters = {unshift_point(br.value.s, k)};
        } else {
          e.parameter_moduli.push_back(unshift_modulus(br.modulus, k));
        }
        rep.entries.push_back(std::move(e));
      }
  }

  bool supported = true;
  for (const auto& e : rep.entries) {
    if (e.type == "ordinary-cusp" || e.type == "ramphoid-cusp") rep.kappa += e.points;
    if (e.delta < 0 || e.type == "other")
      supported = false;
    else
      rep.delta_sum += e.delta * e.points;
  }
  const int d = c.degree();
  if (supported) rep.genus = (d - 1) * (d - 2) / 2 - rep.delta_sum;
  return rep;
}

}  // namespace xrank

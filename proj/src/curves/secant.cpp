#include "xrank/curves/secant.hpp"

#include <algorithm>
#include <numeric>

namespace xrank {

namespace {

using QPoly = UPoly<Rational>;
using K = Ext<Rational>;

template <class T>
T det3(const T& a0, const T& a1, const T& a2, const T& b0, const T& b1, const T& b2, const T& c0, const T& c1,
       const T& c2) {
  return a0 * (b1 * c2 - b2 * c1) - a1 * (b0 * c2 - b2 * c0) + a2 * (b0 * c1 - b1 * c0);
}

std::vector<QPoly> infinity_minors(const RationalCurve& x, const std::vector<Rational>& q) {
  const auto c = x.point({Rational(0), Rational(1)});
  const auto& a = x.affine();
  std::vector<QPoly> out;
  const std::size_t m = q.size();
  auto k = [](const Rational& r) { return QPoly::constant(r); };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t l = j + 1; l < m; ++l)
        out.push_back(det3(k(q[i]), k(q[j]), k(q[l]), k(c[i]), k(c[j]), k(c[l]), a[i], a[j], a[l]));
  return out;
}

bool cert_matches(const EliminationCert<Rational>& c, const std::vector<MPoly>& polys, const MPoly& excluded) {
  if (c.polys.size() != polys.size()) return false;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    auto b = to_bipoly(polys[i], 0, 1);
    if (c.swapped) b = bi_swap(b, Rational());
    if (!same_value(b, c.polys[i])) return false;
  }
  auto e = to_bipoly(excluded, 0, 1);
  if (c.swapped) e = bi_swap(e, Rational());
  return same_value(e, c.excluded);
}

// Back-substitution of a zero family into the original system (unswapped order).
bool verify_zero_branch(const std::vector<MPoly>& polys, const MPoly& excluded, const ZeroBranch<Rational>& z) {
  if (z.t_factor.is_zero() || z.t_factor.degree() < 1) return false;
  std::vector<BiPoly<Rational>> bp;
  for (const auto& p : polys) bp.push_back(to_bipoly(p, 0, 1));
  const auto eb = to_bipoly(excluded, 0, 1);
  auto res = d5_branches(z.s_modulus, [&](ExtCtxPtr<Rational> ctx) {
    std::vector<K> c;
    for (const auto& a : z.t_factor.coeffs()) c.emplace_back(ctx, a.rep());
    UPoly<K> tf(c);
    if (tf.degree() < 1) return false;
    for (const auto& b : bp)
      if (!divmod(detail::eval_at_generator(b, ctx), tf).rem.is_zero()) return false;
    return gcd(detail::eval_at_generator(eb, ctx), tf).degree() == 0;
  });
  return std::any_of(res.begin(), res.end(), [](const auto& b) { return b.value; });
}

std::string describe_branch(const ZeroBranch<Rational>& z) {
  return "s root of " + to_string(z.s_modulus, "s") + ", t root of " + to_string(z.t_factor, "t") + " (coefficients in a = s)";
}

std::vector<Rational> combine(const std::vector<std::vector<Rational>>& pts, const std::vector<Rational>& lam) {
  std::vector<Rational> acc(pts[0].size());
  for (std::size_t k = 0; k < pts.size(); ++k)
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += lam[k] * pts[k][i];
  return acc;
}

// Exact coefficients with q = sum lam_k phi(z_k), or nullopt.
std::optional<std::vector<Rational>> span_coefficients(const RationalCurve& x, const std::vector<std::vector<Rational>>& params,
                                                       const std::vector<Rational>& q) {
  std::vector<std::vector<Rational>> pts;
  for (const auto& z : params) pts.push_back(x.point(z));
  Mat<Rational> m(q.size(), std::vector<Rational>(pts.size()));
  for (std::size_t k = 0; k < pts.size(); ++k)
    for (std::size_t i = 0; i < q.size(); ++i) m[i][k] = pts[k][i];
  auto lam = mat_solve(m, q, pts.size(), Rational());
  if (!lam || combine(pts, *lam) != q) return std::nullopt;
  return lam;
}

RankCertificate decomposition_cert(const RationalCurve& x, const std::vector<std::vector<Rational>>& params,
                                   const std::vector<Rational>& lam, const std::vector<Rational>& q, const std::string& claim) {
  RankCertificate c;
  c.kind = CertKind::Decomposition;
  c.claim = claim;
  Json pj = Json::array();
  for (const auto& z : params) pj.push_back(rationals_to_json(z));
  c.detail["parameters"] = pj;
  c.detail["coefficients"] = rationals_to_json(lam);
  c.recheck = [x, params, lam, q]() {
    std::vector<std::vector<Rational>> pts;
    for (const auto& z : params) pts.push_back(x.point(z));
    for (std::size_t a = 0; a < params.size(); ++a)
      for (std::size_t b = a + 1; b < params.size(); ++b)
        if (params[a][0] * params[b][1] == params[a][1] * params[b][0]) return false;
    return combine(pts, lam) == q;
  };
  return c;
}

}  // namespace

std::vector<MPoly> secant_minors(const RationalCurve& x, const std::vector<Rational>& q) {
  if (static_cast<int>(q.size()) != x.ambient() + 1) throw InvalidInput("point has the wrong number of coordinates");
  std::vector<MPoly> a, b;
  for (const auto& p : x.affine()) {
    a.push_back(from_upoly(p, 2, 0));
    b.push_back(from_upoly(p, 2, 1));
  }
  auto k = [](const Rational& r) { return MPoly::constant(2, r); };
  std::vector<MPoly> out;
  const std::size_t m = q.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t l = j + 1; l < m; ++l) out.push_back(det3(k(q[i]), k(q[j]), k(q[l]), a[i], a[j], a[l], b[i], b[j], b[l]));
  return out;
}

MembershipResult secant_membership(const RationalCurve& x, const std::vector<Rational>& q, const SolveOptions& opt) {
  if (static_cast<int>(q.size()) != x.ambient() + 1) throw InvalidInput("point has the wrong number of coordinates");
  if (on_curve(x, q)) throw InvalidInput("point lies on the curve (rank 1)");
  MembershipResult out;
  const int d = x.degree();

  // pairs ((0:1), (1:t))
  ParamDivisor gi = common_divisor(infinity_minors(x, q), d);
  if (gi.affine.degree() > 0) {
    out.member = true;
    auto roots = rational_roots(gi.affine);
    if (!roots.empty()) {
      std::vector<std::vector<Rational>> params{{Rational(0), Rational(1)}, {Rational(1), roots[0]}};
      if (auto lam = span_coefficients(x, params, q)) {
        out.witness = params;
        out.cert = decomposition_cert(x, params, *lam, q, "rank 2 (secant)");
        return out;
      }
    }
    out.cert.kind = CertKind::Membership;
    out.cert.claim = "on a secant through the point at infinity";
    out.cert.detail["t_factor"] = upoly_to_json(gi.affine);
    out.cert.recheck = [x, q, d]() { return common_divisor(infinity_minors(x, q), d).affine.degree() > 0; };
    return out;
  }

  const auto minors = secant_minors(x, q);
  const MPoly excl = MPoly::var(2, 0) - MPoly::var(2, 1);
  auto r = solve_bivariate(minors, excl, opt);
  if (r.status == ZeroStatus::Undecided) throw Undecided("secant elimination: " + r.limit);
  if (r.status == ZeroStatus::ZeroExists) {
    out.member = true;
    if (r.rational_witness) {
      std::vector<std::vector<Rational>> params{{Rational(1), r.rational_witness->first}, {Rational(1), r.rational_witness->second}};
      if (auto lam = span_coefficients(x, params, q)) {
        out.witness = params;
        out.cert = decomposition_cert(x, params, *lam, q, "rank 2 (secant)");
        return out;
      }
    }
    if (r.component) throw Undecided("secant system has a curve of solutions; the map is not birational");
    for (const auto& z : r.zeros) {
      if (!verify_zero_branch(minors, excl, z)) continue;
      out.cert.kind = CertKind::Membership;
      out.cert.claim = "rank 2 (secant over an extension)";
      out.cert.detail["witness"] = describe_branch(z);
      out.cert.recheck = [minors, excl, z]() { return verify_zero_branch(minors, excl, z); };
      return out;
    }
    throw std::logic_error("secant eliminant zero failed back-substitution");
  }

  SolveOptions swapped = opt;
  swapped.swap_order = !opt.swap_order;
  auto r2 = solve_bivariate(minors, excl, swapped);
  if (r2.status == ZeroStatus::Undecided) throw Undecided("secant elimination (second order): " + r2.limit);
  if (r2.status != ZeroStatus::NoZero || !r.cert || !r2.cert) throw std::logic_error("elimination orders disagree on the secant system");
  out.member = false;
  out.cert.kind = CertKind::Refutation;
  out.cert.claim = "no secant line through the point";
  out.cert.detail["point"] = rationals_to_json(q);
  out.cert.detail["first_order"] = elimination_to_json(*r.cert);
  out.cert.detail["second_order"] = elimination_to_json(*r2.cert);
  auto c1 = *r.cert, c2 = *r2.cert;
  out.cert.recheck = [x, q, d, c1, c2]() {
    auto m = secant_minors(x, q);
    const MPoly e = MPoly::var(2, 0) - MPoly::var(2, 1);
    if (!cert_matches(c1, m, e) || !cert_matches(c2, m, e)) return false;
    if (!validate_elimination(c1, Rational()) || !validate_elimination(c2, Rational())) return false;
    return common_divisor(infinity_minors(x, q), d).affine.degree() <= 0;
  };
  return out;
}

namespace {

// Signed maximal minors of the 3x4 matrix H_3(f0 + mu k); they span its kernel when it has rank 3.
std::vector<QPoly> kernel_minors(const std::vector<Rational>& f0, const std::vector<Rational>& k) {
  Mat<QPoly> m(3, std::vector<QPoly>(4));
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 4; ++c) m[r][c] = QPoly(std::vector<Rational>{f0[r + c], k[r + c]});
  std::vector<QPoly> h;
  for (std::size_t skip = 0; skip < 4; ++skip) {
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < 4; ++c)
      if (c != skip) cols.push_back(c);
    auto e = [&](std::size_t r, std::size_t i) { return m[r][cols[i]]; };
    QPoly v = det3(e(0, 0), e(0, 1), e(0, 2), e(1, 0), e(1, 1), e(1, 2), e(2, 0), e(2, 1), e(2, 2));
    h.push_back(skip % 2 ? -v : v);
  }
  return h;
}

// Discriminant of the binary cubic sum_j h_j z0^(3-j) z1^j.
template <class T>
T cubic_disc(const std::vector<T>& h) {
  const T &h0 = h[0], &h1 = h[1], &h2 = h[2], &h3 = h[3];
  auto sc = [](const T& v, long c) { return scale(v, Rational(c)); };
  return h1 * h1 * h2 * h2 - sc(h0 * h2 * h2 * h2, 4) - sc(h1 * h1 * h1 * h3, 4) - sc(h0 * h0 * h3 * h3, 27) +
         sc(h0 * h1 * h2 * h3, 18);
}

std::vector<Rational> eval_all(const std::vector<QPoly>& h, const Rational& mu) {
  std::vector<Rational> v;
  for (const auto& p : h) v.push_back(p.is_zero() ? Rational() : p.eval(mu));
  return v;
}

std::vector<Rational> lift_at(const std::vector<Rational>& f0, const std::vector<Rational>& k, const Rational& mu) {
  std::vector<Rational> f = f0;
  for (std::size_t i = 0; i < f.size(); ++i) f[i] += mu * k[i];
  return f;
}

bool annihilates(const std::vector<Rational>& f, const std::vector<Rational>& h) {
  for (const auto& v : hankel(f, 3))
    if (!std::inner_product(v.begin(), v.end(), h.begin(), Rational()).is_zero()) return false;
  return true;
}

// Over the roots of g: does ker H_3(f0 + mu k) contain a square-free cubic?
bool special_lift_has_squarefree(const QPoly& g, const std::vector<Rational>& f0, const std::vector<Rational>& k) {
  if (g.degree() < 1) return false;
  auto res = d5_branches(squarefree_part(g), [&](ExtCtxPtr<Rational> ctx) {
    K mu = K::generator(ctx);
    std::vector<K> f;
    for (std::size_t i = 0; i < f0.size(); ++i) f.push_back(K::from_base(ctx, f0[i]) + mu * K::from_base(ctx, k[i]));
    auto ker = mat_kernel(hankel(f, 3), 4, mu);
    return span_has_squarefree(ker);
  });
  return std::any_of(res.begin(), res.end(), [](const auto& b) { return b.value; });
}

QPoly nonzero_gcd(const std::vector<QPoly>& h) {
  QPoly g;
  for (const auto& p : h) g = gcd(g, p);
  return g;
}

}  // namespace

MembershipResult trisecant_membership(const RationalCurve& x, const std::vector<Rational>& q, const SolveOptions& opt) {
  if (x.ambient() != 4) throw InvalidInput("trisecant membership needs a curve in P^4");
  const int d = x.degree();
  if (d > 5) throw Undecided("trisecant decision implemented for degree 4 and 5 only");
  auto sec = secant_membership(x, q, opt);
  MembershipResult out;
  if (sec.member) {
    out.member = true;
    out.flag = "secant suffices";
    out.witness = sec.witness;
    out.cert = sec.cert;
    return out;
  }
  const auto& pm = x.coefficient_matrix();
  auto f0 = mat_solve(pm, q, static_cast<std::size_t>(d) + 1, Rational());
  if (!f0) throw std::logic_error("non-degenerate curve has no lift");
  auto ker = mat_kernel(pm, static_cast<std::size_t>(d) + 1, Rational());

  if (d == 4) {
    auto [res, scert] = sylvester_rank(BinaryForm(*f0));
    out.member = res.rank <= 3;
    out.cert.kind = out.member ? CertKind::Membership : CertKind::Refutation;
    out.cert.claim = out.member ? "on a trisecant plane" : "on no trisecant plane";
    out.cert.detail["lift"] = rationals_to_json(*f0);
    out.cert.detail["lift_rank"] = res.rank;
    out.cert.chain = {scert, sec.cert};
    if (out.member && !res.points.empty()) out.witness = res.points;
    const auto lift = *f0;
    out.cert.recheck = [pm, lift, q]() { return mat_vec(pm, lift, Rational()) == q; };
    return out;
  }

  const auto k = ker.at(0);
  const auto h = kernel_minors(*f0, k);
  const bool generic_rank3 = std::any_of(h.begin(), h.end(), [](const QPoly& p) { return !p.is_zero(); });
  const QPoly disc = generic_rank3 ? cubic_disc(h) : QPoly{};
  out.cert.detail["lift"] = rationals_to_json(*f0);
  out.cert.detail["lift_direction"] = rationals_to_json(k);

  if (!disc.is_zero()) {
    out.member = true;
    // prefer a lift whose apolar cubic splits over Q
    const std::vector<Rational> probes{0, 1, -1, 2, -2, Rational(1, 2), Rational(-1, 2), 3, -3};
    for (const auto& t1 : probes) {
      QPoly c;
      for (std::size_t j = 0; j < 4; ++j) c += h[j].times(pow(t1, static_cast<unsigned>(j)));
      if (c.is_zero()) continue;
      for (const auto& mu : rational_roots(c)) {
        auto hv = eval_all(h, mu);
        if (!binary_squarefree(hv)) continue;
        QPoly hp(hv);
        std::vector<std::vector<Rational>> params;
        if (hp.degree() == 2) params.push_back({Rational(0), Rational(1)});
        auto roots = rational_roots(hp);
        if (static_cast<int>(roots.size()) != hp.degree()) continue;
        for (const auto& r : roots) params.push_back({Rational(1), r});
        if (auto lam = span_coefficients(x, params, q)) {
          out.witness = params;
          out.cert = decomposition_cert(x, params, *lam, q, "rank 3 (trisecant)");
          out.cert.chain = {sec.cert};
          return out;
        }
      }
    }
    for (long i = 0; i < 200; ++i) {
      Rational mu(i % 2 ? (i + 1) / 2 : -(i / 2));
      auto hv = eval_all(h, mu);
      if (disc.eval(mu).is_zero() || !binary_squarefree(hv)) continue;
      const auto f = lift_at(*f0, k, mu);
      out.cert.kind = CertKind::Membership;
      out.cert.claim = "rank 3 (trisecant over an extension)";
      out.cert.detail["mu"] = mu.to_string();
      out.cert.detail["apolar_cubic"] = rationals_to_json(hv);
      out.cert.chain = {sec.cert};
      out.cert.recheck = [pm, f, hv, q]() {
        return mat_vec(pm, f, Rational()) == q && annihilates(f, hv) && binary_squarefree(hv);
      };
      return out;
    }
    throw std::logic_error("no good lift among 200 probes despite a nonzero discriminant");
  }

  // Generic lifts have no square-free apolar cubic; check the special ones.
  const QPoly g = generic_rank3 ? nonzero_gcd(h) : QPoly{};
  if (generic_rank3 && special_lift_has_squarefree(g, *f0, k)) {
    out.member = true;
    out.cert.kind = CertKind::Membership;
    out.cert.claim = "rank 3 (special lift over an extension)";
    out.cert.detail["special_lifts"] = upoly_to_json(g);
    out.cert.chain = {sec.cert};
    const auto f0v = *f0;
    out.cert.recheck = [g, f0v, k]() { return special_lift_has_squarefree(g, f0v, k); };
    return out;
  }
  out.member = false;
  out.cert.kind = CertKind::Refutation;
  out.cert.claim = "on no trisecant plane";
  out.cert.detail["generic_catalecticant_rank"] = generic_rank3 ? 3 : 2;
  out.cert.detail["discriminant"] = "identically zero";
  if (generic_rank3) out.cert.detail["special_lifts"] = upoly_to_json(g);
  out.cert.chain = {sec.cert};
  const auto f0v = *f0;
  out.cert.recheck = [pm, f0v, k, q]() {
    if (mat_vec(pm, f0v, Rational()) != q) return false;
    auto zero = mat_vec(pm, k, Rational());
    if (std::any_of(zero.begin(), zero.end(), [](const Rational& v) { return !v.is_zero(); })) return false;
    if (std::all_of(k.begin(), k.end(), [](const Rational& v) { return v.is_zero(); })) return false;
    auto hh = kernel_minors(f0v, k);
    bool r3 = std::any_of(hh.begin(), hh.end(), [](const QPoly& p) { return !p.is_zero(); });
    if (!r3) return true;  // rank <= 2 lifts: covered by the chained secant refutation
    return cubic_disc(hh).is_zero() && !special_lift_has_squarefree(nonzero_gcd(hh), f0v, k);
  };
  return out;
}

PointRank curve_point_rank(const RationalCurve& x, const std::vector<Rational>& q, const SolveOptions& opt) {
  const int n = x.ambient();
  if (n < 2 || n > 4) throw UnsupportedInstance("point rank implemented in P^2, P^3 and P^4");
  if (static_cast<int>(q.size()) != n + 1) throw InvalidInput("point has the wrong number of coordinates");
  PointRank out;
  if (on_curve(x, q)) {
    out.rank = 1;
    out.cert.kind = CertKind::Decomposition;
    out.cert.claim = "rank 1 (point of the curve)";
    auto pre = rational_preimages(x, q);
    if (!pre.empty()) out.cert.detail["parameter"] = rationals_to_json(pre[0]);
    out.cert.recheck = [x, q]() { return on_curve(x, q); };
    return out;
  }
  auto sec = secant_membership(x, q, opt);
  if (sec.member) {
    out.rank = 2;
    out.cert = sec.cert;
    return out;
  }
  const Json not_on = "not on the curve: pulled-back 2x2 minors have no common root";
  if (n <= 3) {
    out.rank = 3;
    out.cert.kind = CertKind::Refutation;
    out.cert.claim = "rank 3 (no secant; every point of P^3 has rank at most 3)";
    out.cert.detail["lower_bound"] = not_on;
    out.cert.chain = {sec.cert};
    out.cert.recheck = [x, q]() { return !on_curve(x, q); };
    return out;
  }
  auto tri = trisecant_membership(x, q, opt);
  out.rank = tri.member ? 3 : 4;
  out.cert.kind = tri.member ? tri.cert.kind : CertKind::Refutation;
  out.cert.claim = tri.member ? "rank 3" : "rank 4 (no secant, no trisecant; every point of P^4 has rank at most 4)";
  out.cert.detail["lower_bound"] = not_on;
  out.cert.chain = {tri.cert};
  out.cert.recheck = [x, q]() { return !on_curve(x, q); };
  return out;
}

}  // namespace xrank

#include "xrank/lab/families.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "xrank/core/algebra.hpp"

namespace xrank {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Rational small_rational(std::mt19937_64& rng, int span, int maxden) {
  long num = static_cast<long>(rng() % static_cast<unsigned>(2 * span + 1)) - span;
  long den = 1 + static_cast<long>(rng() % static_cast<unsigned>(maxden));
  return Rational(num) / Rational(den);
}

/// Rows phi(z) and the tangent direction at the parameter z (affine chart or infinity).
Mat<Rational> tangent_rows(const RationalCurve& x, const std::vector<Rational>& z) {
  if (!z[0].is_zero()) return taylor_vectors(x.affine(), z[1] / z[0], 1);
  return taylor_vectors(x.affine_at_infinity(), Rational(0), 1);
}

std::vector<UPoly<Rational>> derivative_rows(const RationalCurve& x, int k) {
  std::vector<UPoly<Rational>> out = x.affine();
  for (int i = 0; i < k; ++i)
    for (auto& p : out) p = p.derivative();
  return out;
}

UPoly<Rational> det_upoly(std::vector<std::vector<UPoly<Rational>>> m) {
  return bareiss_determinant(std::move(m), UPoly<Rational>::constant(Rational(1)));
}

Json params_to_json(const std::vector<std::vector<Rational>>& ps) {
  Json j = Json::array();
  for (const auto& p : ps) j.push_back(rationals_to_json(p));
  return j;
}

}  // namespace

RationalCurve ii0_curve(int d, const Rational& a2, const Rational& a3) {
  if (d < 4) throw InvalidInput("ii0_curve: degree must be at least 4");
  if (a2.is_zero() || a3.is_zero()) throw InvalidInput("ii0_curve: a2 * a3 must be nonzero");
  return RationalCurve::from_mpolys({MPoly::monomial(2, {d, 0}), MPoly::monomial(2, {d - 1, 1}),
                                     MPoly::monomial(2, {1, d - 1}, a2), MPoly::monomial(2, {0, d}, a3)});
}

VerificationReport verify_ii0(int d, const Rational& a2, const Rational& a3, int samples, std::uint64_t seed) {
  const auto t0 = Clock::now();
  VerificationReport rep;
  rep.claim = "ii0: rank 3 on the tangent line at p, deg(X cap T_pX) = d-1";
  rep.seeds = {seed};
  if (samples < 1) throw InvalidInput("verify_ii0: need at least one sample");
  const RationalCurve x = ii0_curve(d, a2, a3);
  const std::vector<Rational> p0{Rational(1), Rational(0)};
  bool ok = true;
  try {
    rep.data["embedded"] = is_embedded(x);
    ok = ok && rep.data["embedded"].get<bool>();
    auto prof = contact_profile(x, p0);
    rep.data["profile"] = prof.l;
    LinearSubspace tan = osculating_subspace(x, p0, 1);
    auto expected = LinearSubspace::from_equations(3, {{0, 0, 1, 0}, {0, 0, 0, 1}});
    rep.data["tangent_is_x2_x3"] = tan == expected;
    ok = ok && tan == expected;
    ContactDegree cd = subspace_contact_degree(x, tan);
    rep.data["contact_degree"] = cd.degree;
    bool support_p = cd.other_support.empty() && cd.rational_support.size() == 1 &&
                     normalize_point(cd.rational_support[0].first) == normalize_point(p0);
    rep.data["support_is_p"] = support_p;
    ok = ok && cd.degree == d - 1 && support_p;

    std::mt19937_64 rng(seed);
    std::vector<Rational> lambdas{Rational(0)};
    while (static_cast<int>(lambdas.size()) < samples) {
      Rational l = small_rational(rng, 6, 3);
      if (std::find(lambdas.begin(), lambdas.end(), l) == lambdas.end()) lambdas.push_back(l);
    }
    Json pts = Json::array();
    for (const auto& l : lambdas) {
      std::vector<Rational> q{l, Rational(1), Rational(0), Rational(0)};
      SolveOptions opt;
      opt.seed = seed;
      PointRank r = curve_point_rank(x, q, opt);
      Json e;
      e["point"] = rationals_to_json(q);
      e["rank"] = r.rank;
      pts.push_back(std::move(e));
      ok = ok && r.rank == 3;
      rep.certificates.push_back(std::move(r.cert));
    }
    rep.data["samples"] = std::move(pts);
    rep.status = ok ? ReportStatus::Verified : ReportStatus::Refuted;
  } catch (const Undecided& e) {
    rep.status = ReportStatus::Undecided;
    rep.limit = e.what();
  }
  rep.seconds = since(t0);
  return rep;
}

Ii1Record ii1_check(long d, long g) {
  if (d < 3) throw InvalidInput("ii1_check: d must be at least 3");
  if (g < 0) throw InvalidInput("ii1_check: g must be non-negative");
  Ii1Record r;
  r.odd_route = 23 * g < d * d - 3 * d - 15;
  r.even_route = d % 2 == 0 && 16 * g < 3 * d * d - 16 * d + 16;
  r.cusp_count = (d - 1) * (d - 2) / 2 - g;
  r.tono_threshold = Rational(21 * g + 17) / Rational(2);
  if (d % 2 == 0) r.hirzebruch_bound = d * (5 * d - 6) / 16;
  return r;
}

RationalCurve rational_normal_quartic() {
  std::vector<MPoly> c;
  for (int k = 0; k <= 4; ++k) c.push_back(MPoly::monomial(2, {4 - k, k}));
  return RationalCurve::from_mpolys(c);
}

UPoly<Rational> stall_polynomial(const RationalCurve& x) {
  if (x.ambient() != 3) throw InvalidInput("stall_polynomial: curve must lie in P^3");
  std::vector<std::vector<UPoly<Rational>>> m;
  for (int k = 0; k <= 3; ++k) m.push_back(derivative_rows(x, k));
  return det_upoly(std::move(m));
}

ParamDivisor tangents_meeting(const RationalCurve& x, const std::vector<Rational>& v0) {
  if (x.ambient() != 3) throw InvalidInput("tangents_meeting: curve must lie in P^3");
  Mat<Rational> fixed = tangent_rows(x, v0);
  std::vector<std::vector<UPoly<Rational>>> m{derivative_rows(x, 0), derivative_rows(x, 1)};
  for (const auto& row : fixed) {
    std::vector<UPoly<Rational>> r;
    for (const auto& a : row) r.push_back(UPoly<Rational>::constant(a));
    m.push_back(std::move(r));
  }
  UPoly<Rational> det = det_upoly(std::move(m));
  if (det.is_zero()) throw InvalidInput("tangents_meeting: every tangent meets the given one");
  ParamDivisor out = common_divisor({det}, 2 * x.degree() - 2);
  if (!v0[0].is_zero()) {
    const UPoly<Rational> lin = UPoly<Rational>::linear_root(v0[1] / v0[0]);
    while (out.affine.degree() > 0 && divmod(out.affine, lin).rem.is_zero()) out.affine = exact_quotient(out.affine, lin);
  } else {
    out.at_infinity = 0;
  }
  return out;
}

bool on_tangent_surface(const RationalCurve& x, const std::vector<Rational>& q) {
  if (static_cast<int>(q.size()) != x.ambient() + 1) throw InvalidInput("point has the wrong number of coordinates");
  auto a = derivative_rows(x, 0), b = derivative_rows(x, 1);
  // all maximal minors of [q; phi; phi'] as polynomials in t
  const std::size_t n = q.size();
  std::vector<UPoly<Rational>> minors;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        std::vector<std::vector<UPoly<Rational>>> m{
            {UPoly<Rational>::constant(q[i]), UPoly<Rational>::constant(q[j]), UPoly<Rational>::constant(q[k])},
            {a[i], a[j], a[k]},
            {b[i], b[j], b[k]}};
        minors.push_back(det_upoly(std::move(m)));
      }
  return common_divisor(minors, 2 * x.degree() - 2).degree() > 0;
}

VerificationReport piene_verify(std::uint64_t seed, PieneData* out) {
  const auto start = Clock::now();
  VerificationReport rep;
  rep.claim = "piene: the stall/ordinary tangent intersection has rank 3";
  const RationalCurve nu = rational_normal_quartic();
  std::mt19937_64 rng(seed * 7919 + 1);
  constexpr int kAttempts = 24;
  try {
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
      rep.seeds = {seed, static_cast<std::uint64_t>(attempt)};
      // a center on the osculating hyperplane at t0 gives a stall at t0
      const Rational t0 = small_rational(rng, 3, 2);
      auto v = taylor_vectors(nu.affine(), t0, 3);
      std::vector<Rational> c(5);
      for (int k = 0; k <= 3; ++k) {
        Rational r(static_cast<long>(1 + rng() % 5) * (rng() % 2 ? 1 : -1));
        for (int i = 0; i < 5; ++i) c[static_cast<std::size_t>(i)] += r * v[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
      }
      c = normalize_point(c);
      if (on_curve(nu, c)) continue;
      RationalCurve x = project(nu, {c});
      if (x.degree() != 4 || !is_embedded(x)) continue;
      UPoly<Rational> w = stall_polynomial(x);
      if (w.is_zero()) continue;
      std::vector<std::vector<Rational>> stalls;
      UPoly<Rational> rest = squarefree_part(w);
      for (const auto& r : rational_roots(rest)) {
        stalls.push_back({Rational(1), r});
        rest = exact_quotient(rest, UPoly<Rational>::linear_root(r));
      }
      // stall at infinity: degree drop of the wronskian
      if (contact_profile(x, {Rational(0), Rational(1)}) != ContactProfile{{0, 0, 0}}) stalls.push_back({Rational(0), Rational(1)});
      bool general = !stalls.empty();
      for (const auto& s : stalls)
        if (contact_profile(x, s) != ContactProfile{{0, 0, 1}}) general = false;
      if (!general) continue;
      std::vector<std::vector<Rational>> hits, points;
      bool usable = true;
      for (const auto& s : stalls) {
        ParamDivisor m = tangents_meeting(x, s);
        auto roots = rational_roots(m.affine);
        if (static_cast<int>(roots.size()) != m.affine.degree() || m.degree() == 0) {
          usable = false;
          break;
        }
        std::vector<std::vector<Rational>> us;
        for (const auto& r : roots) us.push_back({Rational(1), r});
        if (m.at_infinity > 0) us.push_back({Rational(0), Rational(1)});
        for (const auto& u : us) {
          Mat<Rational> a = tangent_rows(x, s), b = tangent_rows(x, u);
          // alpha a0 + beta a1 = gamma b0 + delta b1
          Mat<Rational> cols(4, std::vector<Rational>(4));
          for (int i = 0; i < 4; ++i) {
            const auto ii = static_cast<std::size_t>(i);
            cols[ii] = {a[0][ii], a[1][ii], -b[0][ii], -b[1][ii]};
          }
          auto ker = mat_kernel(cols, 4, Rational(0));
          if (ker.size() != 1) {
            usable = false;
            break;
          }
          std::vector<Rational> p(4);
          for (int i = 0; i < 4; ++i)
            p[static_cast<std::size_t>(i)] = ker[0][0] * a[0][static_cast<std::size_t>(i)] + ker[0][1] * a[1][static_cast<std::size_t>(i)];
          hits.push_back(u);
          points.push_back(normalize_point(p));
        }
      }
      if (!usable || points.empty()) continue;

      // a general center was found
      bool ok = true;
      SolveOptions opt;
      opt.seed = seed;
      Json jp = Json::array();
      for (const auto& p : points) {
        PointRank r = curve_point_rank(x, p, opt);
        Json e;
        e["point"] = rationals_to_json(p);
        e["rank"] = r.rank;
        RationalCurve plane = project(x, {p});
        SingularityReport sr = plane_singularities(plane, opt);
        int ord = 0, ram = 0;
        for (const auto& en : sr.entries) {
          if (en.type == "ordinary-cusp") ord += en.points;
          if (en.type == "ramphoid-cusp") ram += en.points;
        }
        e["plane_projection"] = {{"degree", plane.degree()},
                                 {"ordinary_cusps", ord},
                                 {"ramphoid_cusps", ram},
                                 {"kappa", sr.kappa},
                                 {"genus", sr.genus ? Json(*sr.genus) : Json(nullptr)}};
        jp.push_back(std::move(e));
        ok = ok && r.rank == 3 && plane.degree() == 4 && ord == 1 && ram == 1 && sr.genus == 0;
        rep.certificates.push_back(std::move(r.cert));
      }
      // five points off the tangent surface have rank 2
      Json off = Json::array();
      int found = 0;
      for (int tries = 0; found < 5 && tries < 200; ++tries) {
        std::vector<Rational> q(4);
        for (auto& e : q) e = Rational(static_cast<long>(rng() % 11) - 5);
        if (std::all_of(q.begin(), q.end(), [](const Rational& e) { return e.is_zero(); })) continue;
        q = normalize_point(q);
        if (on_curve(x, q) || on_tangent_surface(x, q)) continue;
        PointRank r = curve_point_rank(x, q, opt);
        Json e;
        e["point"] = rationals_to_json(q);
        e["rank"] = r.rank;
        off.push_back(std::move(e));
        ok = ok && r.rank == 2;
        rep.certificates.push_back(std::move(r.cert));
        ++found;
      }
      ok = ok && found == 5;

      Json st = Json::array();
      for (const auto& s : stalls) st.push_back(rationals_to_json(s));
      rep.data["center"] = rationals_to_json(c);
      rep.data["curve"] = Json::array();
      for (const auto& p : x.component_polys()) rep.data["curve"].push_back(p.to_string({"z0", "z1"}));
      rep.data["stalls"] = std::move(st);
      rep.data["other_stall_factor"] = rest.degree() > 0 ? Json(to_string(rest, "t")) : Json(nullptr);
      rep.data["tangent_hits"] = params_to_json(hits);
      rep.data["intersection_points"] = std::move(jp);
      rep.data["off_tangent_surface"] = std::move(off);
      rep.data["attempt"] = attempt;
      rep.status = ok ? ReportStatus::Verified : ReportStatus::Refuted;
      if (out) {
        out->center = c;
        out->curve = x;
        out->stalls = stalls;
        out->other_stalls.clear();
        if (rest.degree() > 0) out->other_stalls.push_back(rest);
        out->tangent_hits = hits;
        out->points = points;
      }
      rep.seconds = since(start);
      return rep;
    }
    rep.status = ReportStatus::Undecided;
    rep.limit = "no general center in " + std::to_string(kAttempts) + " attempts";
  } catch (const Undecided& e) {
    rep.status = ReportStatus::Undecided;
    rep.limit = e.what();
  }
  rep.seconds = since(start);
  return rep;
}

int join_dim_bound(int dim_w, int dim_x) {
  if (dim_w < 0 || dim_x < 0) throw InvalidInput("join_dim_bound: dimensions must be non-negative");
  return dim_w + dim_x + 1;
}

}  // namespace xrank

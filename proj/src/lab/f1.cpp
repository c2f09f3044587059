#include "xrank/lab/f1.hpp"

#include <chrono>
#include <random>

#include "xrank/core/algebra.hpp"
#include "xrank/curves/secant.hpp"

namespace xrank {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

/// Homogenization of p(1, t) to degree deg in (z0, z1) inside nvars variables.
MPoly homogenize(const UPoly<Rational>& p, int deg, int nvars) {
  std::vector<Term> terms;
  for (int k = 0; k <= p.degree(); ++k) {
    if (p[static_cast<std::size_t>(k)].is_zero()) continue;
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e[0] = deg - k;
    e[1] = k;
    terms.push_back({e, p[static_cast<std::size_t>(k)]});
  }
  return MPoly::from_terms(nvars, std::move(terms));
}

}  // namespace

long f1_intersection(const F1Class& c1, const F1Class& c2) { return -c1.a * c2.a + c1.a * c2.b + c1.b * c2.a; }

long f1_genus(const F1Class& c) { return 1 + (f1_intersection(c, c) + f1_intersection(c, kF1Canonical)) / 2; }

F1System f1_system_dimension(const F1Class& c, std::optional<int> e) {
  F1System out;
  if (c.b < 0) throw InvalidInput("f1_system_dimension: class is not effective in this representation");
  const int b = static_cast<int>(c.b);
  if (c.a == 0) {
    if (e) throw InvalidInput("f1_system_dimension: E is only supported for a = 1");
    for (int k = 0; k <= b; ++k) out.basis.push_back(MPoly::monomial(4, {b - k, k, 0, 0}));
  } else if (c.a == 1) {
    const int len = e.value_or(0);
    if (len < 0 || (len > 0 && len > b - 1)) throw InvalidInput("f1_system_dimension: length of E must lie in [0, b-1]");
    for (int k = 0; k <= b; ++k) out.basis.push_back(MPoly::monomial(4, {b - k, k, 1, 0}));
    // B restricted to C0 = {w0 = 0} must vanish to order e at o = (1:0)
    for (int k = len; k <= b - 1; ++k) out.basis.push_back(MPoly::monomial(4, {b - 1 - k, k, 0, 1}));
  } else {
    throw InvalidInput("f1_system_dimension: only classes with a in {0, 1} are supported");
  }
  out.dimension = static_cast<int>(out.basis.size()) - 1;
  return out;
}

MPoly F1Curve::equation() const {
  MPoly w0 = MPoly::var(4, 2), w1 = MPoly::var(4, 3);
  return homogenize(a, d - 1, 4) * w0 + homogenize(b, d - 2, 4) * w1;
}

RationalCurve f1_image(const F1Curve& y) {
  if (y.d < 3) throw InvalidInput("f1_image: d must be at least 3");
  if (y.a.is_zero() || y.b.is_zero() || y.a.degree() > y.d - 1 || y.b.degree() > y.d - 2)
    throw InvalidInput("f1_image: A and B must be nonzero of degrees d-1 and d-2");
  MPoly a = homogenize(y.a, y.d - 1, 2), b = homogenize(y.b, y.d - 2, 2);
  MPoly z0 = MPoly::var(2, 0), z1 = MPoly::var(2, 1);
  // a common factor, possibly z0 (both degrees drop)
  bool common = gcd(y.a, y.b).degree() > 0 || (y.a.degree() < y.d - 1 && y.b.degree() < y.d - 2);
  if (common) throw InvalidInput("f1_image: A and B share a factor, the curve is reducible");
  return RationalCurve::from_mpolys({z0 * z0 * b, z0 * z1 * b, z1 * z1 * b, -(z0 * a), -(z1 * a)});
}

VerificationReport f1_smoothness(const F1Curve& y, std::uint64_t seed) {
  const auto start = Clock::now();
  VerificationReport rep;
  rep.claim = "f1: {F = 0} is smooth";
  rep.seeds = {seed};
  const MPoly f = y.equation();
  // charts z_i = 1, w_j = 1 with affine coordinates (z_{1-i}, w_{1-j})
  Json charts = Json::array();
  bool smooth = true;
  try {
    for (int i = 0; i < 2 && smooth; ++i)
      for (int j = 0; j < 2 && smooth; ++j) {
        std::vector<MPoly> sub(4);
        sub[static_cast<std::size_t>(i)] = MPoly::constant(2, Rational(1));
        sub[static_cast<std::size_t>(1 - i)] = MPoly::var(2, 0);
        sub[static_cast<std::size_t>(2 + j)] = MPoly::constant(2, Rational(1));
        sub[static_cast<std::size_t>(3 - j)] = MPoly::var(2, 1);
        MPoly g = f.compose(sub);
        SolveOptions opt;
        opt.seed = seed;
        auto r = solve_bivariate({g, g.derivative(0), g.derivative(1)}, MPoly::constant(2, Rational(1)), opt);
        std::string name = std::string("z") + std::to_string(i) + "=w" + std::to_string(j) + "=1";
        charts.push_back({{"chart", name}, {"status", to_string(r.status)}});
        if (r.status == ZeroStatus::Undecided) throw Undecided("f1 smoothness: " + r.limit);
        if (r.status == ZeroStatus::ZeroExists) {
          smooth = false;
          continue;
        }
        RankCertificate cert;
        cert.kind = CertKind::Refutation;
        cert.claim = "no singular point on chart " + name;
        cert.detail = elimination_to_json(*r.cert);
        auto ec = *r.cert;
        cert.recheck = [ec]() { return validate_elimination(ec, Rational()); };
        rep.certificates.push_back(std::move(cert));
      }
    rep.data["charts"] = std::move(charts);
    rep.status = smooth ? ReportStatus::Verified : ReportStatus::Refuted;
  } catch (const Undecided& e) {
    rep.status = ReportStatus::Undecided;
    rep.limit = e.what();
  }
  rep.seconds = since(start);
  return rep;
}

F1Sample f1_sample_curve(int d, std::uint64_t seed) {
  if (d < 4) throw InvalidInput("f1_sample_curve: d must be at least 4");
  const auto start = Clock::now();
  std::mt19937_64 rng(seed * 104729 + 17);
  F1Sample out;
  out.curve.d = d;
  out.curve.b = UPoly<Rational>::monomial(Rational(1), d - 2);
  constexpr int kAttempts = 16;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<Rational> c(static_cast<std::size_t>(d));
    for (auto& x : c) x = Rational(static_cast<long>(rng() % 19) - 9);
    out.curve.a = UPoly<Rational>(c);
    std::optional<RationalCurve> img;
    try {
      img = f1_image(out.curve);
    } catch (const InvalidInput&) {
      continue;
    }
    if (img->ambient() != 4 || img->degree() != d) continue;
    VerificationReport sm = f1_smoothness(out.curve, seed);
    if (sm.status == ReportStatus::Undecided) continue;
    if (sm.status != ReportStatus::Verified) continue;
    out.image = img;
    out.report = std::move(sm);
    out.report.claim = "f1: sampled curve is smooth, of degree d and spans P^4";
    out.report.seeds = {seed, static_cast<std::uint64_t>(attempt)};
    out.report.data["d"] = d;
    out.report.data["A"] = upoly_to_json(out.curve.a);
    out.report.data["B"] = upoly_to_json(out.curve.b);
    out.report.data["equation"] = out.curve.equation().to_string({"z0", "z1", "w0", "w1"});
    out.report.data["image_degree"] = img->degree();
    out.report.data["spans_P4"] = img->ambient() == 4;
    out.report.data["attempt"] = attempt;
    out.report.seconds = since(start);
    return out;
  }
  out.report.claim = "f1: sampled curve is smooth, of degree d and spans P^4";
  out.report.status = ReportStatus::Undecided;
  out.report.limit = "no smooth sample in " + std::to_string(kAttempts) + " attempts";
  out.report.seeds = {seed};
  out.report.seconds = since(start);
  return out;
}

VerificationReport verify_claim2(int d, const std::vector<std::vector<Rational>>& samples, std::uint64_t seed) {
  const auto start = Clock::now();
  if (d < 5) throw InvalidInput("verify_claim2: d must be at least 5");
  for (const auto& q : samples) {
    if (q.size() != 5) throw InvalidInput("verify_claim2: points must have five coordinates");
    if (!q[0].is_zero() || !q[1].is_zero() || !q[2].is_zero()) throw InvalidInput("verify_claim2: point is not on C0");
    if (q[4].is_zero()) throw InvalidInput("verify_claim2: o is excluded (it lies on the curve)");
  }
  F1Sample s = f1_sample_curve(d, seed);
  VerificationReport rep;
  rep.claim = "claim2: rank 4 on C0 minus o";
  rep.seeds = s.report.seeds;
  rep.data["curve"] = s.report.data;
  if (s.report.status != ReportStatus::Verified) {
    rep.status = s.report.status;
    rep.limit = s.report.limit;
    rep.seconds = since(start);
    return rep;
  }
  rep.certificates = s.report.certificates;
  bool ok = true;
  Json pts = Json::array();
  try {
    for (const auto& q : samples) {
      SolveOptions opt;
      opt.seed = seed;
      PointRank r = curve_point_rank(*s.image, q, opt);
      pts.push_back({{"point", rationals_to_json(q)}, {"rank", r.rank}});
      ok = ok && r.rank == 4;
      rep.certificates.push_back(std::move(r.cert));
    }
    rep.status = ok ? ReportStatus::Verified : ReportStatus::Refuted;
  } catch (const Undecided& e) {
    rep.status = ReportStatus::Undecided;
    rep.limit = e.what();
  }
  rep.data["samples"] = std::move(pts);
  rep.seconds = since(start);
  return rep;
}

}  // namespace xrank

#include "xrank/apolarity/cubic.hpp"

#include <algorithm>
#include <random>

#include "xrank/core/bipoly.hpp"

#include "xrank/binary/sylvester.hpp"
#include "xrank/core/ext.hpp"
#include "xrank/core/linalg.hpp"

namespace xrank {

namespace {

using Vec = std::vector<Rational>;

void check_cubic(const SymForm& f) {
  if (f.nvars() != 3 || f.degree() != 3) throw InvalidInput("expected a ternary cubic");
}

MPoly var3(int i) { return MPoly::var(3, i); }

// Symmetric matrix of a quadric: q(x) = x^T M x.
Mat<Rational> conic_matrix(const MPoly& q) {
  Mat<Rational> m(3, Vec(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = q.derivative(i).derivative(j).eval({0, 0, 0}) / Rational(2);
  return m;
}

template <class K>
std::vector<K> cross(const std::vector<K>& a, const std::vector<K>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <class K>
K bilinear(const Mat<K>& m, const std::vector<K>& a, const std::vector<K>& b) {
  K acc = zero_like(a[0]);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) acc = acc + m[i][j] * a[i] * b[j];
  return acc;
}

template <class K>
bool all_zero(const std::vector<K>& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

// Adjugate of a 3x3 matrix; cyclic index order gives the cofactor signs.
template <class T>
Mat<T> adjugate3(const Mat<T>& m) {
  Mat<T> a = m;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      a[i][j] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    }
  return a;
}

Rational quad(const Mat<Rational>& m, const Vec& v) { return bilinear(m, v, v); }

std::vector<MPoly> gradient(const MPoly& q) { return {q.derivative(0), q.derivative(1), q.derivative(2)}; }

// 2x2 minors of the matrix whose rows are the gradients of the given forms.
std::vector<MPoly> gradient_minors(const std::vector<MPoly>& forms) {
  std::vector<std::vector<MPoly>> g;
  for (const auto& f : forms) g.push_back(gradient(f));
  std::vector<MPoly> out;
  for (std::size_t r0 = 0; r0 < g.size(); ++r0)
    for (std::size_t r1 = r0 + 1; r1 < g.size(); ++r1)
      for (int c0 = 0; c0 < 3; ++c0)
        for (int c1 = c0 + 1; c1 < 3; ++c1) {
          MPoly m = g[r0][static_cast<std::size_t>(c0)] * g[r1][static_cast<std::size_t>(c1)] -
                    g[r0][static_cast<std::size_t>(c1)] * g[r1][static_cast<std::size_t>(c0)];
          if (!m.is_zero()) out.push_back(m);
        }
  return out;
}

MPoly combine(const std::vector<MPoly>& basis, const Vec& c) {
  MPoly out(basis.at(0).nvars());
  for (std::size_t i = 0; i < basis.size(); ++i) out += c[i] * basis[i];
  return out;
}

std::optional<Vec> decomposition_coefficients(const MPoly& f, const std::vector<Vec>& pts, int d) {
  auto mons = monomials_of_degree(f.nvars(), d);
  Mat<Rational> m(mons.size(), Vec(pts.size()));
  for (std::size_t k = 0; k < pts.size(); ++k) {
    auto c = form_coefficients(linear_power(pts[k], d), d);
    for (std::size_t i = 0; i < mons.size(); ++i) m[i][k] = c[i];
  }
  return mat_solve(m, form_coefficients(f, d), pts.size(), Rational());
}

RankCertificate decomposition_cert(const MPoly& f, const std::vector<Vec>& pts, const Vec& lam, int rank_value) {
  RankCertificate c;
  c.kind = CertKind::Decomposition;
  c.claim = "rank " + std::to_string(rank_value);
  Json jp = Json::array();
  for (const auto& p : pts) jp.push_back(rationals_to_json(p));
  c.detail["points"] = jp;
  c.detail["coefficients"] = rationals_to_json(lam);
  const int d = f.total_degree();
  c.recheck = [f, pts, lam, d]() { return sum_of_powers(pts, lam, d) == f; };
  return c;
}

Json forms_to_json(const std::vector<MPoly>& forms) {
  Json j = Json::array();
  for (const auto& g : forms) j.push_back(g.to_string({"x", "y", "z"}));
  return j;
}

CubicRank binary_route(const SymForm& f, int cat_rank, std::uint64_t seed) {
  auto ker = kernel(catalecticant(f, 1)).basis;
  auto ells = kernel(QMatrix::from_rows(ker, 3)).basis;  // linear forms f depends on
  std::vector<Vec> rows = ells;
  for (int i = 0; i < 3 && static_cast<int>(rows.size()) < 3; ++i) {
    Vec e(3);
    e[static_cast<std::size_t>(i)] = Rational(1);
    auto trial = rows;
    trial.push_back(e);
    if (mat_rank(trial) == static_cast<int>(trial.size())) rows = std::move(trial);
  }
  // columns of M^-1 give x in terms of u = M x
  Mat<Rational> minv(3, Vec(3));
  for (int j = 0; j < 3; ++j) {
    Vec e(3);
    e[static_cast<std::size_t>(j)] = Rational(1);
    auto col = mat_solve(rows, e, 3, Rational());
    for (int i = 0; i < 3; ++i) minv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (*col)[static_cast<std::size_t>(i)];
  }
  std::vector<MPoly> images;
  for (int i = 0; i < 3; ++i)
    images.push_back(minv[static_cast<std::size_t>(i)][0] * MPoly::var(2, 0) + minv[static_cast<std::size_t>(i)][1] * MPoly::var(2, 1));
  MPoly g = f.body().compose(images);
  auto [res, bcert] = sylvester_rank(BinaryForm::from_mpoly(g), seed);
  CubicRank out;
  out.rank = res.rank;
  out.route = cat_rank == 1 ? "power" : "binary";
  if (!res.points.empty()) {
    std::vector<Vec> pts;
    for (const auto& t : res.points) {
      Vec p(3);
      for (int i = 0; i < 3; ++i) p[static_cast<std::size_t>(i)] = t[0] * rows[0][static_cast<std::size_t>(i)] + t[1] * rows[1][static_cast<std::size_t>(i)];
      pts.push_back(p);
    }
    out.cert = decomposition_cert(f.body(), pts, res.lambdas, res.rank);
  } else {
    out.cert.kind = bcert.kind;
    out.cert.claim = "rank " + std::to_string(res.rank);
    out.cert.detail["binary_form"] = g.to_string({"u", "v"});
    const MPoly fb = f.body();
    const MPoly gb = g;
    out.cert.recheck = [fb, gb, images]() { return fb.compose(images) == gb; };
  }
  out.cert.detail["catalecticant_rank"] = cat_rank;
  out.cert.detail["linear_forms"] = Json::array();
  for (std::size_t i = 0; i < 2; ++i) out.cert.detail["linear_forms"].push_back(rationals_to_json(rows[i]));
  out.cert.chain.push_back(bcert);
  return out;
}

std::optional<CubicRank> tangent_conic_route(const SymForm& f) {
  auto lq = linear_factor(f.body());
  if (!lq) return std::nullopt;
  const MPoly l = lq->first, q = lq->second;
  Mat<Rational> m = conic_matrix(q);
  if (mat_det(m, Rational()).is_zero()) return std::nullopt;
  Vec lv{l.coeff({1, 0, 0}), l.coeff({0, 1, 0}), l.coeff({0, 0, 1})};
  if (!quad(adjugate3(m), lv).is_zero()) return std::nullopt;
  CubicRank out;
  out.rank = 5;
  out.route = "tangent-conic";
  out.cert.kind = CertKind::Membership;
  out.cert.claim = "rank 5: a smooth conic times a tangent line";
  out.cert.detail["line"] = l.to_string({"x", "y", "z"});
  out.cert.detail["conic"] = q.to_string({"x", "y", "z"});
  const MPoly fb = f.body();
  out.cert.recheck = [fb, l, q, lv]() {
    Mat<Rational> mm = conic_matrix(q);
    return l * q == fb && !mat_det(mm, Rational()).is_zero() && quad(adjugate3(mm), lv).is_zero();
  };
  return out;
}

}  // namespace

MPoly hessian(const MPoly& f) {
  const int n = f.nvars();
  std::vector<std::vector<MPoly>> h(static_cast<std::size_t>(n), std::vector<MPoly>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = f.derivative(i).derivative(j);
  return bareiss_determinant(h, MPoly::constant(n, Rational(1)));
}

std::optional<std::pair<MPoly, MPoly>> linear_factor(const MPoly& f) {
  if (f.nvars() != 3 || f.is_zero() || !f.is_homogeneous()) throw InvalidInput("linear_factor expects a ternary form");
  const MPoly x = var3(0), y = var3(1), z = var3(2);
  auto try_line = [&](const MPoly& l) -> std::optional<std::pair<MPoly, MPoly>> {
    if (auto q = exact_divide(f, l)) return std::make_pair(l, *q);
    return std::nullopt;
  };
  MPoly f0 = f.compose({x, y, MPoly(3)});
  if (f0.is_zero()) return try_line(z);
  // linear factors a x + b y of f(x, y, 0)
  std::vector<std::pair<Rational, Rational>> ab;
  UPoly<Rational> c = to_upoly(f.compose({MPoly::var(1, 0), MPoly::constant(1, Rational(1)), MPoly(1)}), 0);
  for (const auto& r : rational_roots(c)) ab.emplace_back(Rational(1), -r);
  if (c.degree() < f.total_degree()) ab.emplace_back(Rational(0), Rational(1));
  for (const auto& [a, b] : ab) {
    // on z = 1 the line is x = -(b s + c)/a, y = s (or y = -c/b, x = s); solve for c
    const MPoly s = MPoly::var(2, 0), cv = MPoly::var(2, 1), one = MPoly::constant(2, Rational(1));
    std::vector<MPoly> img = a.is_zero() ? std::vector<MPoly>{s, (Rational(-1) / b) * cv, one}
                                         : std::vector<MPoly>{(Rational(-1) / a) * (b * s + cv), s, one};
    auto bp = to_bipoly(f.compose(img), 1, 0);  // outer s, inner c
    UPoly<Rational> g;
    for (const auto& coef : bp.coeffs()) g = gcd(g, coef);
    if (g.is_zero() || g.degree() == 0) continue;
    for (const auto& cz : rational_roots(g)) {
      MPoly l = a * x + b * y + cz * z;
      if (auto r = try_line(l)) return r;
    }
  }
  return std::nullopt;
}

CubicRank cubic_rank(const SymForm& f, std::uint64_t seed) {
  check_cubic(f);
  const int r1 = rank(catalecticant(f, 1));
  if (r1 <= 2) return binary_route(f, r1, seed);
  if (auto t = tangent_conic_route(f)) return *t;

  CubicRank out;
  auto net = apolar_basis(f, 2);
  ZeroDimScheme base;
  base.generators = net;
  const int codim3 = scheme_codim(base, 3);
  bool three_excluded = codim3 != 3;
  std::string why_not_three = "base scheme of (f^perp)_2 has length " + std::to_string(codim3) + " in degree 3";
  if (codim3 == 3) {
    auto forms = net;
    for (auto& m : gradient_minors(net)) forms.push_back(std::move(m));
    auto reduced = projective_plane_zeros(forms);
    if (reduced.witness.status == ZeroStatus::NoZero) {
      base.claimed_degree = 3;
      base.support_size = 3;
      out.rank = 3;
      out.route = "three-points";
      out.scheme = base;
      auto pts = projective_plane_zeros(net);
      std::optional<Vec> lam;
      if (pts.all_rational && pts.rational_points.size() == 3)
        lam = decomposition_coefficients(f.body(), pts.rational_points, 3);
      if (lam) {
        out.cert = decomposition_cert(f.body(), pts.rational_points, *lam, 3);
      } else {
        out.cert.kind = CertKind::SchemeMembership;
        out.cert.claim = "rank 3";
        out.cert.detail["scheme"] = forms_to_json(net);
        const SymForm ff = f;
        out.cert.recheck = [ff, base]() { return apolarity_membership(ff, base) && scheme_codim(base, 3) == 3; };
      }
      RankCertificate red;
      red.kind = CertKind::Refutation;
      red.claim = "the base scheme of (f^perp)_2 is reduced";
      red.detail["witness"] = to_json(reduced.witness);
      red.recheck = [reduced]() { return reduced.recheck_no_zero(); };
      out.cert.chain.push_back(std::move(red));
      out.cert.detail["catalecticant_rank"] = 3;
      return out;
    }
    if (reduced.witness.status == ZeroStatus::ZeroExists) {
      three_excluded = true;
      why_not_three = "base scheme of (f^perp)_2 is not reduced";
    }
  }

  std::mt19937_64 rng(seed * 0x2545f4914f6cdd1dULL + 7);
  for (int draw = 0; draw < 8; ++draw) {
    Vec c1(net.size()), c2(net.size());
    for (std::size_t i = 0; i < net.size(); ++i) {
      c1[i] = Rational(static_cast<long>(rng() % 11) - 5);
      c2[i] = Rational(static_cast<long>(rng() % 11) - 5);
    }
    MPoly q1 = combine(net, c1), q2 = combine(net, c2);
    if (q1.is_zero() || q2.is_zero()) continue;
    ZeroDimScheme z;
    z.generators = {q1, q2};
    if (scheme_codim(z, 3) != 4) continue;
    auto forms = z.generators;
    for (auto& m : gradient_minors(z.generators)) forms.push_back(std::move(m));
    auto tr = projective_plane_zeros(forms);
    if (tr.witness.status != ZeroStatus::NoZero) continue;
    z.claimed_degree = 4;
    z.support_size = 4;
    if (!three_excluded) {
      out.diagnostics = "rank <= 4 by two conics; rank 3 not excluded";
      break;
    }
    out.rank = 4;
    out.route = "two-conic";
    out.scheme = z;
    out.cert.kind = CertKind::SchemeMembership;
    out.cert.claim = "rank 4";
    out.cert.detail["conics"] = forms_to_json(z.generators);
    out.cert.detail["draw"] = draw;
    out.cert.detail["lower_bound"] = "Cat_(1,2) has rank 3 and " + why_not_three;
    const SymForm ff = f;
    const bool by_codim = codim3 != 3;
    out.cert.recheck = [ff, z, net, by_codim]() {
      if (!apolarity_membership(ff, z) || scheme_codim(z, 3) != 4) return false;
      if (rank(catalecticant(ff, 1)) != 3) return false;
      if (by_codim) {
        ZeroDimScheme b;
        b.generators = net;
        return scheme_codim(b, 3) != 3;
      }
      return true;
    };
    RankCertificate trc;
    trc.kind = CertKind::Refutation;
    trc.claim = "the two conics meet transversally";
    trc.detail["witness"] = to_json(tr.witness);
    trc.recheck = [tr]() { return tr.recheck_no_zero(); };
    out.cert.chain.push_back(std::move(trc));
    return out;
  }
  out.route = "undetermined";
  if (out.diagnostics.empty()) out.diagnostics = "no pair of apolar conics with 4 distinct common points in 8 draws";
  out.cert.kind = CertKind::Membership;
  out.cert.claim = "undetermined";
  out.cert.detail["diagnostics"] = out.diagnostics;
  return out;
}

namespace {

using K = Ext<Rational>;

template <class T>
T eval_at(const MPoly& p, const std::vector<T>& x) {
  T acc = zero_like(x[0]);
  for (const auto& t : p.terms()) {
    T m = from_rational(x[0], t.coeff);
    for (std::size_t i = 0; i < x.size(); ++i)
      for (int k = 0; k < t.exps[i]; ++k) m = m * x[i];
    acc = acc + m;
  }
  return acc;
}

Mat<K> lift(const Mat<Rational>& m, const ExtCtxPtr<Rational>& ctx) {
  Mat<K> out;
  for (const auto& r : m) {
    std::vector<K> row;
    for (const auto& x : r) row.push_back(K::from_base(ctx, x));
    out.push_back(std::move(row));
  }
  return out;
}

Mat<K> pencil_member(const std::vector<Mat<Rational>>& qs, const std::vector<K>& c) {
  Mat<K> m(3, std::vector<K>(3, zero_like(c[0])));
  for (std::size_t k = 0; k < qs.size(); ++k) {
    auto qk = lift(qs[k], c[0].ctx());
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m[i][j] = m[i][j] + c[k] * qk[i][j];
  }
  return m;
}

std::vector<K> mat_apply(const Mat<K>& m, const std::vector<K>& v) {
  std::vector<K> out;
  for (const auto& r : m) {
    K acc = zero_like(v[0]);
    for (std::size_t j = 0; j < v.size(); ++j) acc = acc + r[j] * v[j];
    out.push_back(acc);
  }
  return out;
}

std::vector<K> to_k(const std::vector<UPoly<Rational>>& v, const ExtCtxPtr<Rational>& ctx) {
  std::vector<K> out;
  for (const auto& x : v) out.push_back(K(ctx, x));
  return out;
}

std::vector<UPoly<Rational>> reps(const std::vector<K>& v) {
  std::vector<UPoly<Rational>> out;
  for (const auto& x : v) out.push_back(x.rep());
  return out;
}

// A0 = sum a0_i N_i is singular at p and B = sum b_i N_i passes through p. If the
// tangent line of B at p is a component of the line pair A0 then A0 and B meet
// with multiplicity >= 3 at p; a fourth transversal point q != p then forces
// multiplicity exactly 3 and no further points, since the total is 4.
bool pencil_shape_holds(const std::vector<Mat<Rational>>& qs, const std::vector<K>& p, const std::vector<K>& q,
                        const std::vector<K>& a0, const std::vector<K>& b) {
  Mat<K> a = pencil_member(qs, a0), bm = pencil_member(qs, b);
  if (!all_zero(mat_apply(a, p))) return false;
  if (!is_zero(bilinear(bm, p, p))) return false;
  auto w = mat_apply(bm, p);
  if (all_zero(w)) return false;
  auto u = cross(w, p);
  if (!is_zero(bilinear(a, u, u))) return false;
  if (mat_rank(a) != 2) return false;
  if (!is_zero(bilinear(a, q, q)) || !is_zero(bilinear(bm, q, q))) return false;
  if (all_zero(cross(p, q))) return false;
  return !all_zero(cross(mat_apply(a, q), mat_apply(bm, q)));
}

MPoly over_parameter(const std::vector<MPoly>& net, const std::vector<UPoly<Rational>>& c) {
  MPoly out(4);
  for (std::size_t i = 0; i < net.size(); ++i) out += net[i].with_nvars(4) * from_upoly(c[i], 4, 3);
  return out;
}

struct Candidate {
  std::vector<UPoly<Rational>> p, q, a0, b;
};

}  // namespace

DePaolis de_paolis_decompose(const SymForm& f, const SolveOptions& opt) {
  check_cubic(f);
  if (rank(catalecticant(f, 1)) != 3) throw UnsupportedInstance("cubic is not concise");
  MPoly h = hessian(f.body());
  if (h.is_zero()) throw UnsupportedInstance("Hessian vanishes identically");
  auto hs = projective_plane_zeros(gradient(h), opt);
  if (hs.witness.status == ZeroStatus::ZeroExists) throw UnsupportedInstance("Hessian curve is singular");
  if (hs.witness.status == ZeroStatus::Undecided) throw Undecided("Hessian smoothness: " + hs.witness.limit);
  auto net = apolar_basis(f, 2);
  if (net.size() != 3) throw UnsupportedInstance("(f^perp)_2 is not a net");
  auto bp = projective_plane_zeros(net, opt);
  if (bp.witness.status != ZeroStatus::NoZero) throw UnsupportedInstance("(f^perp)_2 has base points");
  std::vector<Mat<Rational>> qs;
  for (const auto& n : net) qs.push_back(conic_matrix(n));

  // Chart z = 1: p = (x, y, 1). J = det of the gradients of the net at p; F says
  // that the tangent of B at p lies on the singular member A0.
  const std::vector<MPoly> pt{MPoly::var(2, 0), MPoly::var(2, 1), MPoly::constant(2, Rational(1))};
  Mat<MPoly> g(3, std::vector<MPoly>(3, MPoly(2)));
  std::vector<MPoly> v;
  for (std::size_t i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) g[i][static_cast<std::size_t>(j)] = net[i].derivative(j).compose(pt);
    v.push_back(net[i].compose(pt));
  }
  MPoly jac = bareiss_determinant(g, MPoly::constant(2, Rational(1)));
  Mat<MPoly> adj = adjugate3(g);
  std::vector<MPoly> a0 = adj[0];
  std::vector<MPoly> b = cross(v, a0);
  auto member = [&](const std::vector<MPoly>& c) {
    Mat<MPoly> m(3, std::vector<MPoly>(3, MPoly(2)));
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m[i][j] += qs[k][i][j] * c[k];
    return m;
  };
  Mat<MPoly> am = member(a0), bmat = member(b);
  std::vector<MPoly> w(3, MPoly(2));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) w[i] += bmat[i][j] * pt[j];
  std::vector<MPoly> u = cross(w, pt);
  MPoly cond = bilinear(am, u, u);

  auto sol = solve_bivariate({jac, cond}, MPoly::constant(2, Rational(1)), opt);
  if (sol.status == ZeroStatus::Undecided) throw Undecided("flex elimination: " + sol.limit);
  auto zeros = sol.zeros;
  std::stable_sort(zeros.begin(), zeros.end(),
                   [](const auto& x, const auto& y) { return x.s_modulus.degree() < y.s_modulus.degree(); });
  const auto jb = to_bipoly(jac, 0, 1), cb = to_bipoly(cond, 0, 1);
  std::optional<std::pair<UPoly<Rational>, Candidate>> found;
  for (const auto& zb : zeros) {
    auto branches = d5_branches(zb.s_modulus, [&](ExtCtxPtr<Rational> ctx) -> std::optional<Candidate> {
      UPoly<K> tg = gcd(detail::eval_at_generator(jb, ctx), detail::eval_at_generator(cb, ctx));
      if (tg.degree() != 1) return std::nullopt;
      K s = K::generator(ctx);
      std::vector<K> p{s, -tg[0] / tg[1], one_like(s)};
      Mat<K> gk(3, std::vector<K>(3, zero_like(s)));
      std::vector<K> vk;
      for (std::size_t i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) gk[i][static_cast<std::size_t>(j)] = eval_at(net[i].derivative(j), p);
        vk.push_back(eval_at(net[i], p));
      }
      auto left = mat_kernel(transpose(gk), 3, s);
      if (left.size() != 1) return std::nullopt;
      std::vector<K> ak = left[0];
      std::vector<K> bk = cross(vk, ak);
      if (all_zero(bk)) return std::nullopt;
      Mat<K> a = pencil_member(qs, ak), bmk = pencil_member(qs, bk);
      auto wk = mat_apply(bmk, p);
      if (all_zero(wk)) return std::nullopt;
      auto uk = cross(wk, p);
      if (all_zero(uk) || !is_zero(bilinear(a, uk, uk))) return std::nullopt;
      // second line of A0 through p, then its other meeting point with B
      for (int e = 0; e < 3; ++e) {
        std::vector<K> ev(3, zero_like(s));
        ev[static_cast<std::size_t>(e)] = one_like(s);
        Mat<K> span{p, uk, ev};
        if (mat_rank(span) < 3) continue;
        K aue = bilinear(a, uk, ev);
        if (is_zero(aue)) return std::nullopt;
        std::vector<K> u2(3, zero_like(s));
        K aee = bilinear(a, ev, ev);
        for (std::size_t i = 0; i < 3; ++i) u2[i] = aee * uk[i] - (aue + aue) * ev[i];
        K bpu = bilinear(bmk, p, u2), buu = bilinear(bmk, u2, u2);
        std::vector<K> q(3, zero_like(s));
        for (std::size_t i = 0; i < 3; ++i) q[i] = buu * p[i] - (bpu + bpu) * u2[i];
        if (!pencil_shape_holds(qs, p, q, ak, bk)) return std::nullopt;
        return Candidate{reps(p), reps(q), reps(ak), reps(bk)};
      }
      return std::nullopt;
    });
    for (auto& br : branches)
      if (br.value && (!found || br.modulus.degree() < found->first.degree())) found = std::make_pair(br.modulus, *br.value);
    if (found && found->first.degree() <= zb.s_modulus.degree()) break;
  }
  if (!found) throw Undecided("no admissible triple point found in the chart z = 1");

  DePaolis out;
  out.modulus = found->first;
  out.triple_point = found->second.p;
  out.simple_point = found->second.q;
  out.singular_conic = found->second.a0;
  out.other_conic = found->second.b;
  out.net = net;
  out.scheme.nvars = 3;
  out.scheme.modulus = out.modulus;
  out.scheme.generators = {over_parameter(net, out.singular_conic), over_parameter(net, out.other_conic)};
  out.scheme.claimed_degree = 4;
  out.scheme.support_size = 2;

  auto upolys = [](const std::vector<UPoly<Rational>>& v) {
    Json j = Json::array();
    for (const auto& x : v) j.push_back(to_string(x, "a"));
    return j;
  };
  RankCertificate& c = out.cert;
  c.kind = CertKind::SchemeMembership;
  c.claim = "f lies in the span of Z(3,p) + Z(1,q)";
  c.detail["modulus"] = to_string(out.modulus, "a");
  c.detail["p"] = upolys(out.triple_point);
  c.detail["q"] = upolys(out.simple_point);
  c.detail["singular_member"] = upolys(out.singular_conic);
  c.detail["second_member"] = upolys(out.other_conic);
  c.detail["net"] = forms_to_json(net);
  const SymForm ff = f;
  const ZeroDimScheme z = out.scheme;
  const Candidate cand = found->second;
  const UPoly<Rational> mod = out.modulus;
  c.recheck = [ff, z, qs, cand, mod]() {
    if (!apolarity_membership(ff, z) || scheme_codim(z, 3) != 4) return false;
    auto checks = d5_branches(mod, [&](ExtCtxPtr<Rational> ctx) {
      return pencil_shape_holds(qs, to_k(cand.p, ctx), to_k(cand.q, ctx), to_k(cand.a0, ctx), to_k(cand.b, ctx));
    });
    return std::all_of(checks.begin(), checks.end(), [](const auto& br) { return br.value; });
  };
  RankCertificate smooth;
  smooth.kind = CertKind::Refutation;
  smooth.claim = "the Hessian curve is smooth";
  smooth.detail["witness"] = to_json(hs.witness);
  smooth.recheck = [hs]() { return hs.recheck_no_zero(); };
  c.chain.push_back(std::move(smooth));
  return out;
}

}  // namespace xrank

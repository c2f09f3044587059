#include "xrank/curves/curve.hpp"

#include <algorithm>

namespace xrank {

std::vector<Rational> normalize_point(std::vector<Rational> p) {
  mpz_class l = 1, g = 0;
  for (const auto& x : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
  for (auto& x : p) {
    x *= Rational(l);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.num().get_mpz_t());
  }
  if (g == 0) throw InvalidInput("zero vector is not a projective point");
  int sign = 0;
  for (const auto& x : p)
    if (!x.is_zero()) {
      sign = x.num() > 0 ? 1 : -1;
      break;
    }
  for (auto& x : p) x = x / Rational(mpz_class(g * sign));
  return p;
}

ParamDivisor common_divisor(const std::vector<UPoly<Rational>>& forms, int d) {
  ParamDivisor out;
  out.at_infinity = d;
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    out.affine = gcd(out.affine, f);
    out.at_infinity = std::min(out.at_infinity, d - f.degree());
  }
  if (out.affine.is_zero()) out.at_infinity = 0;
  return out;
}

RationalCurve::RationalCurve(std::vector<BinaryForm> components) : comp_(std::move(components)) {
  if (comp_.size() < 2) throw InvalidInput("a curve needs at least two components");
  const int d = comp_[0].degree();
  if (d < 1) throw InvalidInput("curve degree must be positive");
  for (const auto& c : comp_)
    if (c.degree() != d) throw InvalidInput("curve components must share one degree");
  for (const auto& c : comp_) {
    aff_.emplace_back(c.plain());
    coef_.push_back(c.plain());
  }
  if (mat_rank(coef_) != static_cast<int>(comp_.size())) throw InvalidInput("curve is degenerate (components linearly dependent)");
  if (common_divisor(aff_, d).degree() > 0) throw InvalidInput("curve components have a common factor");
}

RationalCurve RationalCurve::from_mpolys(const std::vector<MPoly>& components) {
  std::vector<BinaryForm> c;
  for (const auto& p : components) c.push_back(BinaryForm::from_mpoly(p));
  return RationalCurve(std::move(c));
}

std::vector<MPoly> RationalCurve::component_polys() const {
  std::vector<MPoly> out;
  for (const auto& c : comp_) out.push_back(c.to_mpoly());
  return out;
}

std::vector<UPoly<Rational>> RationalCurve::affine_at_infinity() const {
  std::vector<UPoly<Rational>> out;
  for (const auto& row : coef_) out.emplace_back(std::vector<Rational>(row.rbegin(), row.rend()));
  return out;
}

std::vector<Rational> RationalCurve::point(const std::vector<Rational>& z) const {
  if (z.size() != 2) throw InvalidInput("parameter must have two coordinates");
  const int d = degree();
  std::vector<Rational> out;
  for (const auto& row : coef_) {
    Rational acc;
    for (int k = 0; k <= d; ++k)
      acc += row[static_cast<std::size_t>(k)] * pow(z[0], static_cast<unsigned>(d - k)) * pow(z[1], static_cast<unsigned>(k));
    out.push_back(acc);
  }
  return out;
}

RationalCurve RationalCurve::shifted(const Rational& k) const {
  const std::vector<MPoly> sub{MPoly::var(2, 0) + k * MPoly::var(2, 1), MPoly::var(2, 1)};
  std::vector<MPoly> out;
  for (const auto& p : component_polys()) out.push_back(p.compose(sub));
  return from_mpolys(out);
}

namespace {

std::vector<std::vector<Rational>> rref_rows(const Mat<Rational>& m) { return row_reduce(m).rref; }

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void check_points(int n, const std::vector<std::vector<Rational>>& pts) {
  for (const auto& p : pts)
    if (static_cast<int>(p.size()) != n + 1) throw InvalidInput("point has the wrong number of coordinates");
}

UPoly<Rational> pullback(const std::vector<UPoly<Rational>>& chart, const std::vector<Rational>& e) {
  UPoly<Rational> acc;
  for (std::size_t i = 0; i < chart.size(); ++i) acc += chart[i].times(e[i]);
  return acc;
}

}  // namespace

LinearSubspace LinearSubspace::from_points(int ambient, const std::vector<std::vector<Rational>>& points) {
  check_points(ambient, points);
  LinearSubspace s;
  s.n_ = ambient;
  s.basis_ = rref_rows(points);
  s.eqs_ = rref_rows(mat_kernel(s.basis_.empty() ? Mat<Rational>{std::vector<Rational>(static_cast<std::size_t>(ambient) + 1)} : s.basis_,
                                static_cast<std::size_t>(ambient) + 1, Rational()));
  return s;
}

LinearSubspace LinearSubspace::from_equations(int ambient, const std::vector<std::vector<Rational>>& equations) {
  check_points(ambient, equations);
  LinearSubspace s;
  s.n_ = ambient;
  s.eqs_ = rref_rows(equations);
  s.basis_ = rref_rows(mat_kernel(s.eqs_.empty() ? Mat<Rational>{std::vector<Rational>(static_cast<std::size_t>(ambient) + 1)} : s.eqs_,
                                  static_cast<std::size_t>(ambient) + 1, Rational()));
  return s;
}

bool LinearSubspace::contains(const std::vector<Rational>& p) const {
  if (static_cast<int>(p.size()) != n_ + 1) throw InvalidInput("point has the wrong number of coordinates");
  return std::all_of(eqs_.begin(), eqs_.end(), [&](const auto& e) { return dot(e, p).is_zero(); });
}

bool LinearSubspace::operator==(const LinearSubspace& o) const { return n_ == o.n_ && basis_ == o.basis_; }

ContactProfile contact_profile(const RationalCurve& x, const std::vector<Rational>& t0) {
  if (t0.size() != 2 || (t0[0].is_zero() && t0[1].is_zero())) throw InvalidInput("parameter must be a point of P^1");
  if (!t0[0].is_zero()) return contact_profile_at(x, t0[1] / t0[0]);
  return profile_from_jumps(jump_orders(taylor_vectors(x.affine_at_infinity(), Rational(0), x.degree()), x.ambient()));
}

namespace {

Mat<Rational> taylor_at(const RationalCurve& x, const std::vector<Rational>& t0) {
  if (t0.size() != 2 || (t0[0].is_zero() && t0[1].is_zero())) throw InvalidInput("parameter must be a point of P^1");
  if (!t0[0].is_zero()) return taylor_vectors(x.affine(), t0[1] / t0[0], x.degree());
  return taylor_vectors(x.affine_at_infinity(), Rational(0), x.degree());
}

}  // namespace

LinearSubspace osculating_subspace(const RationalCurve& x, const std::vector<Rational>& t0, int k) {
  if (k < 1 || k > x.ambient() - 1) throw InvalidInput("osculating order out of range");
  auto v = taylor_at(x, t0);
  auto j = jump_orders(v, x.ambient());
  std::vector<std::vector<Rational>> pts;
  for (int i = 0; i <= k; ++i) pts.push_back(v[static_cast<std::size_t>(j[static_cast<std::size_t>(i)])]);
  return LinearSubspace::from_points(x.ambient(), pts);
}

ContactDegree subspace_contact_degree(const RationalCurve& x, const LinearSubspace& l) {
  if (l.ambient() != x.ambient()) throw InvalidInput("subspace and curve live in different spaces");
  std::vector<UPoly<Rational>> pulled;
  bool any = false;
  for (const auto& e : l.equations()) {
    pulled.push_back(pullback(x.affine(), e));
    any = any || !pulled.back().is_zero();
  }
  if (!any) throw InvalidInput("subspace contains the curve");
  ParamDivisor g = common_divisor(pulled, x.degree());
  ContactDegree out;
  out.degree = g.degree();
  UPoly<Rational> rest = g.affine;
  for (const auto& r : rational_roots(g.affine)) {
    int m = 0;
    const auto lin = UPoly<Rational>::linear_root(r);
    while (rest.degree() > 0 && divides(lin, rest)) {
      rest = exact_quotient(rest, lin);
      ++m;
    }
    out.rational_support.push_back({{Rational(1), r}, m});
  }
  if (g.at_infinity > 0) out.rational_support.push_back({{Rational(0), Rational(1)}, g.at_infinity});
  auto parts = squarefree_decomposition(rest);
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (parts[i].degree() > 0) out.other_support.push_back({parts[i], static_cast<int>(i) + 1});
  return out;
}

RationalCurve project(const RationalCurve& x, const std::vector<std::vector<Rational>>& center) {
  const int n = x.ambient();
  check_points(n, center);
  const int c = mat_rank(center);
  if (c < 1 || c > 2 || c >= n) throw InvalidInput("projection center must be a point or a line");
  auto forms = mat_kernel(center, static_cast<std::size_t>(n) + 1, Rational());
  std::vector<UPoly<Rational>> img;
  for (const auto& e : forms) img.push_back(pullback(x.affine(), e));
  const int d = x.degree();
  ParamDivisor g = common_divisor(img, d);
  if (c == 2 && g.degree() > 0) throw InvalidInput("projection center meets the curve");
  const int nd = d - g.degree();
  if (nd < 1) throw InvalidInput("projection collapses the curve");
  std::vector<BinaryForm> comps;
  for (const auto& p : img) {
    auto q = g.affine.degree() > 0 ? exact_quotient(p, g.affine) : p;
    std::vector<Rational> plain(static_cast<std::size_t>(nd) + 1);
    for (int k = 0; k <= q.degree(); ++k) plain[static_cast<std::size_t>(k)] = q[static_cast<std::size_t>(k)];
    comps.push_back(BinaryForm::from_plain(plain));
  }
  return RationalCurve(std::move(comps));
}

namespace {

std::vector<UPoly<Rational>> point_minors(const RationalCurve& x, const std::vector<Rational>& q) {
  if (static_cast<int>(q.size()) != x.ambient() + 1) throw InvalidInput("point has the wrong number of coordinates");
  if (std::all_of(q.begin(), q.end(), [](const Rational& a) { return a.is_zero(); })) throw InvalidInput("zero vector is not a projective point");
  std::vector<UPoly<Rational>> m;
  const auto& a = x.affine();
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = i + 1; j < q.size(); ++j) m.push_back(a[j].times(q[i]) - a[i].times(q[j]));
  return m;
}

}  // namespace

std::vector<std::vector<Rational>> rational_preimages(const RationalCurve& x, const std::vector<Rational>& q) {
  ParamDivisor g = common_divisor(point_minors(x, q), x.degree());
  std::vector<std::vector<Rational>> out;
  for (const auto& r : rational_roots(g.affine)) out.push_back({Rational(1), r});
  if (g.at_infinity > 0) out.push_back({Rational(0), Rational(1)});
  return out;
}

bool on_curve(const RationalCurve& x, const std::vector<Rational>& q) {
  return common_divisor(point_minors(x, q), x.degree()).degree() > 0;
}

bool is_embedded(const RationalCurve& x, const SolveOptions& opt) {
  const auto& a = x.affine();
  const std::size_t m = a.size();
  // immersion: phi and phi' independent everywhere
  std::vector<UPoly<Rational>> w;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) w.push_back(a[i] * a[j].derivative() - a[j] * a[i].derivative());
  UPoly<Rational> g;
  for (const auto& p : w) g = gcd(g, p);
  if (g.is_zero() || g.degree() > 0) return false;
  auto vinf = taylor_vectors(x.affine_at_infinity(), Rational(0), 1);
  if (mat_rank(vinf) < 2) return false;
  // injectivity on the affine chart
  std::vector<MPoly> minors;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      minors.push_back(from_upoly(a[i], 2, 0) * from_upoly(a[j], 2, 1) - from_upoly(a[j], 2, 0) * from_upoly(a[i], 2, 1));
  auto r = solve_bivariate(minors, MPoly::var(2, 0) - MPoly::var(2, 1), opt);
  if (r.status == ZeroStatus::Undecided) throw Undecided("embedding check: " + r.limit);
  if (r.status == ZeroStatus::ZeroExists) return false;
  // and against the point at infinity
  return common_divisor(point_minors(x, x.point({Rational(0), Rational(1)})), x.degree()).affine.degree() <= 0;
}

}  // namespace xrank

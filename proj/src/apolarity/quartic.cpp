#include "xrank/apolarity/quartic.hpp"

#include <algorithm>

#include "xrank/core/linalg.hpp"

namespace xrank {

namespace {

constexpr int kTop = 4;

using Ideal = std::vector<MPoly>;

MPoly linear(const std::vector<Rational>& c) {
  if (c.size() != 3) throw InvalidInput("a line needs three coefficients");
  MPoly l(3);
  for (int i = 0; i < 3; ++i) l += c[static_cast<std::size_t>(i)] * MPoly::var(3, i);
  if (l.is_zero()) throw InvalidInput("zero line");
  return l;
}

void check_point(const std::vector<Rational>& p) {
  if (p.size() != 3) throw InvalidInput("a point needs three coordinates");
  if (std::all_of(p.begin(), p.end(), [](const Rational& x) { return x.is_zero(); }))
    throw InvalidInput("zero point");
}

bool same_point(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  return mat_rank(Mat<Rational>{a, b}) < 2;
}

// m_p^k plus the given forms.
Ideal jet(const std::vector<Rational>& p, int k, Ideal extra = {}) {
  for (auto& g : fat_point_forms(p, k, k)) extra.push_back(std::move(g));
  return extra;
}

std::vector<Rational> gradient_at(const MPoly& q, const std::vector<Rational>& p) {
  return {q.derivative(0).eval(p), q.derivative(1).eval(p), q.derivative(2).eval(p)};
}

ZeroDimScheme intersect(const std::vector<Ideal>& comps, int degree, int support) {
  std::vector<std::vector<std::vector<Rational>>> pieces;
  for (int k = 1; k <= kTop; ++k) {
    int dim = static_cast<int>(monomials_of_degree(3, k).size());
    std::vector<std::vector<Rational>> acc;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      auto piece = ideal_piece(comps[i], 3, k);
      if (piece.empty()) {
        acc.clear();
        break;
      }
      acc = i == 0 ? piece : intersect_spaces(acc, piece, dim);
      if (acc.empty()) break;
    }
    pieces.push_back(std::move(acc));
  }
  ZeroDimScheme z;
  z.nvars = 3;
  z.generators = generators_from_pieces(pieces, 3);
  z.claimed_degree = degree;
  z.support_size = support;
  return z;
}

void need(bool ok, const char* what) {
  if (!ok) throw InvalidInput(std::string("quartic scheme parameters: ") + what);
}

}  // namespace

std::string to_string(QuarticCase c) {
  switch (c) {
    case QuarticCase::I: return "I";
    case QuarticCase::IIa: return "IIa";
    case QuarticCase::IIb: return "IIb";
    case QuarticCase::IIIa: return "IIIa";
    case QuarticCase::IIIb: return "IIIb";
    case QuarticCase::IIIc: return "IIIc";
  }
  return "?";
}

const std::vector<QuarticCase>& all_quartic_cases() {
  static const std::vector<QuarticCase> all{QuarticCase::I,    QuarticCase::IIa,  QuarticCase::IIb,
                                            QuarticCase::IIIa, QuarticCase::IIIb, QuarticCase::IIIc};
  return all;
}

QuarticCase parse_quartic_case(const std::string& s) {
  for (auto c : all_quartic_cases())
    if (to_string(c) == s) return c;
  throw InvalidInput("unknown quartic case '" + s + "'");
}

int quartic_case_degree(QuarticCase c) {
  switch (c) {
    case QuarticCase::I: return 3;
    case QuarticCase::IIa:
    case QuarticCase::IIb: return 4;
    default: return 5;
  }
}

QuarticParams default_quartic_params(QuarticCase c) {
  using V = std::vector<Rational>;
  const V e0{1, 0, 0}, e1{0, 1, 0}, e2{0, 0, 1};
  const MPoly x = MPoly::var(3, 0), y = MPoly::var(3, 1), z = MPoly::var(3, 2);
  QuarticParams p;
  switch (c) {
    case QuarticCase::I:
      p.points = {e0};
      p.conic = x * z - y * y;
      break;
    case QuarticCase::IIa:
      p.points = {e0, e1};
      p.lines = {e1, e0};  // y through (1:0:0), x through (0:1:0)
      break;
    case QuarticCase::IIb:
      p.points = {e0, e1, e2};
      p.lines = {e1};
      break;
    case QuarticCase::IIIa:
      p.points = {e0, e1};
      p.lines = {e1, e0};
      break;
    case QuarticCase::IIIb:
      p.points = {e0, V{1, 0, 1}};
      p.lines = {e1};
      p.conic = x * y - z * z;
      break;
    case QuarticCase::IIIc:
      p.points = {V{1, 0, 1}, V{-1, 0, 1}, e2, e1};
      p.lines = {e1};
      break;
  }
  return p;
}

ZeroDimScheme quartic_scheme(QuarticCase c) { return quartic_scheme(c, default_quartic_params(c)); }

ZeroDimScheme quartic_scheme(QuarticCase c, const QuarticParams& prm) {
  const auto& pts = prm.points;
  const auto& lines = prm.lines;
  for (const auto& p : pts) check_point(p);
  auto distinct = [&](std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) need(!same_point(pts[i], pts[j]), "points must be distinct");
  };
  ZeroDimScheme z;
  switch (c) {
    case QuarticCase::I: {
      need(pts.size() == 1 && prm.conic.has_value(), "case I needs a conic and one point");
      const MPoly& q = *prm.conic;
      need(q.nvars() == 3 && q.is_homogeneous() && q.total_degree() == 2, "conic must be a ternary quadric");
      need(q.eval(pts[0]).is_zero(), "the point must lie on the conic");
      Mat<Rational> h(3, std::vector<Rational>(3));
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = q.derivative(i).derivative(j).eval({0, 0, 0});
      need(!mat_det(h, Rational()).is_zero(), "the conic must be smooth");
      z = intersect({jet(pts[0], 3, {q})}, 3, 1);
      break;
    }
    case QuarticCase::IIa: {
      need(pts.size() == 2 && lines.size() == 2, "case IIa needs two points and two lines");
      distinct(2);
      MPoly l1 = linear(lines[0]), l2 = linear(lines[1]);
      need(l1.eval(pts[0]).is_zero() && l2.eval(pts[1]).is_zero(), "each line must pass through its point");
      z = intersect({jet(pts[0], 2, {l1}), jet(pts[1], 2, {l2})}, 4, 2);
      break;
    }
    case QuarticCase::IIb: {
      need(pts.size() == 3 && lines.size() == 1, "case IIb needs three points and one line");
      distinct(3);
      MPoly l1 = linear(lines[0]);
      need(l1.eval(pts[0]).is_zero(), "the line must pass through the first point");
      z = intersect({jet(pts[0], 2, {l1}), jet(pts[1], 1), jet(pts[2], 1)}, 4, 3);
      break;
    }
    case QuarticCase::IIIa: {
      need(pts.size() == 2 && lines.size() == 2, "case IIIa needs two points and two lines");
      distinct(2);
      MPoly l1 = linear(lines[0]), l2 = linear(lines[1]);
      need(l1.eval(pts[0]).is_zero() && l2.eval(pts[1]).is_zero(), "each line must pass through its point");
      z = intersect({jet(pts[0], 3, {l1}), jet(pts[1], 2, {l2})}, 5, 2);
      break;
    }
    case QuarticCase::IIIb: {
      need(pts.size() == 2 && lines.size() == 1 && prm.conic.has_value(), "case IIIb needs two points, a line and a conic");
      distinct(2);
      MPoly l = linear(lines[0]);
      const MPoly& q = *prm.conic;
      need(q.nvars() == 3 && q.is_homogeneous() && q.total_degree() == 2, "conic must be a ternary quadric");
      need(l.eval(pts[0]).is_zero() && l.eval(pts[1]).is_zero(), "both points must lie on the line");
      need(q.eval(pts[0]).is_zero(), "the conic must pass through the first point");
      auto g = gradient_at(q, pts[0]);
      bool singular = std::all_of(g.begin(), g.end(), [](const Rational& v) { return v.is_zero(); });
      need(singular || same_point(g, lines[0]), "the conic must be tangent to the line or singular at the point");
      need(!exact_divide(q, l).has_value(), "the conic must not contain the line");
      z = intersect({{q, l * l}, jet(pts[1], 1)}, 5, 2);
      break;
    }
    case QuarticCase::IIIc: {
      need(pts.size() == 4 && lines.size() == 1, "case IIIc needs three points, a vertex and one line");
      distinct(4);
      MPoly l = linear(lines[0]);
      for (int i = 0; i < 3; ++i) need(l.eval(pts[static_cast<std::size_t>(i)]).is_zero(), "the points must lie on the line");
      need(!l.eval(pts[3]).is_zero(), "the vertex must lie off the line");
      auto through = [&](const std::vector<Rational>& a) {
        const auto& v = pts[3];
        return linear({a[1] * v[2] - a[2] * v[1], a[2] * v[0] - a[0] * v[2], a[0] * v[1] - a[1] * v[0]});
      };
      z = intersect({jet(pts[0], 2, {through(pts[0])}), jet(pts[1], 2, {through(pts[1])}), jet(pts[2], 1)}, 5, 3);
      break;
    }
  }
  if (scheme_codim(z, kTop) != z.claimed_degree)
    throw InvalidInput("parameters give a scheme of degree " + std::to_string(scheme_codim(z, kTop)) + ", expected " +
                       std::to_string(z.claimed_degree));
  return z;
}

DimensionLedger quartic_case_table() {
  auto row = [](std::string label, std::vector<std::pair<std::string, int>> s) {
    LedgerRow r{std::move(label), std::move(s), 0};
    for (const auto& [_, v] : r.summands) r.total += v;
    return r;
  };
  DimensionLedger l;
  l.rows = {
      row("I", {{"conic C", 5}, {"point p on C", 1}, {"span", 2}}),
      row("IIa", {{"points p, l", 4}, {"line through each point", 2}, {"span", 3}}),
      row("IIb", {{"points p, l, q", 6}, {"line through p", 1}, {"span", 3}}),
      row("IIIa", {{"two lines", 4}, {"point on each line", 2}, {"span", 4}}),
      row("IIIb", {{"line", 2}, {"points p, l on it", 2}, {"reducible conic with vertex p", 2}, {"span", 4}}),
      row("IIIc", {{"line", 2}, {"points p, l, q on it", 3}, {"span", 4}}),
  };
  l.alternatives = {row("IIIb", {{"smooth conic through p up to the pencil fixing Z(4,p)", 5}, {"point l on the tangent line", 1}, {"span", 4}})};
  for (const auto& r : l.rows) l.bound = std::max(l.bound, r.total);
  l.join_bound = l.bound + l.surface_dim + 1;
  return l;
}

}  // namespace xrank

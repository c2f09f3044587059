#include "xrank/apolarity/symform.hpp"

#include <algorithm>

#include "xrank/core/rational.hpp"

namespace xrank {

SymForm::SymForm(MPoly body) : body_(std::move(body)) {
  if (body_.is_zero()) throw InvalidInput("form must be nonzero");
  if (!body_.is_homogeneous()) throw InvalidInput("form must be homogeneous");
  d_ = body_.total_degree();
}

MPoly apply_operator(const MPoly& g, const MPoly& f) {
  const int n = f.nvars();
  if (g.nvars() != n) throw InvalidInput("operator and form have different variable counts");
  std::vector<Term> out;
  for (const auto& gt : g.terms()) {
    for (const auto& ft : f.terms()) {
      Rational c = gt.coeff * ft.coeff;
      Exponents e(static_cast<std::size_t>(n));
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        int a = gt.exps[static_cast<std::size_t>(i)], b = ft.exps[static_cast<std::size_t>(i)];
        if (a > b) {
          ok = false;
          break;
        }
        for (int k = 0; k < a; ++k) c *= Rational(b - k);
        e[static_cast<std::size_t>(i)] = b - a;
      }
      if (ok) out.push_back({std::move(e), c});
    }
  }
  return MPoly::from_terms(n, std::move(out));
}

std::vector<Rational> form_coefficients(const MPoly& p, int k) {
  auto mons = monomials_of_degree(p.nvars(), k);
  std::vector<Rational> c;
  c.reserve(mons.size());
  for (const auto& m : mons) c.push_back(p.coeff(m));
  return c;
}

MPoly form_from_coefficients(const std::vector<Rational>& c, int nvars, int k) {
  auto mons = monomials_of_degree(nvars, k);
  std::vector<Term> t;
  for (std::size_t i = 0; i < mons.size(); ++i) t.push_back({mons[i], c[i]});
  return MPoly::from_terms(nvars, std::move(t));
}

QMatrix catalecticant(const SymForm& f, int a) {
  if (a < 0 || a > f.degree()) throw InvalidInput("catalecticant degree out of range");
  const int n = f.nvars();
  auto cols = monomials_of_degree(n, a);
  auto rows = monomials_of_degree(n, f.degree() - a);
  QMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    auto img = form_coefficients(apply_operator(MPoly::monomial(n, cols[j]), f.body()), f.degree() - a);
    for (std::size_t i = 0; i < rows.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(j)) = img[i];
  }
  return m;
}

std::vector<MPoly> apolar_basis(const SymForm& f, int k) {
  if (k < 0 || k > f.degree()) throw InvalidInput("apolar degree out of range");
  std::vector<MPoly> out;
  for (const auto& v : kernel(catalecticant(f, k)).basis) out.push_back(form_from_coefficients(v, f.nvars(), k));
  return out;
}

int border_rank_lb(const SymForm& f) {
  int best = 0;
  // rank Cat_a = rank Cat_(d-a), so half the range suffices
  for (int a = 0; a <= f.degree() / 2; ++a) best = std::max(best, rank(catalecticant(f, a)));
  return best;
}

MPoly linear_power(const std::vector<Rational>& p, int d) {
  const int n = static_cast<int>(p.size());
  MPoly l(n);
  for (int i = 0; i < n; ++i) l += p[static_cast<std::size_t>(i)] * MPoly::var(n, i);
  return pow(l, static_cast<unsigned>(d));
}

MPoly sum_of_powers(const std::vector<std::vector<Rational>>& points, const std::vector<Rational>& lambdas, int d) {
  if (points.empty() || points.size() != lambdas.size()) throw InvalidInput("points and coefficients differ in length");
  MPoly f(static_cast<int>(points[0].size()));
  for (std::size_t k = 0; k < points.size(); ++k) f += lambdas[k] * linear_power(points[k], d);
  return f;
}

}  // namespace xrank

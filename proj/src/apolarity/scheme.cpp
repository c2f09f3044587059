#include "xrank/apolarity/scheme.hpp"

#include <map>

#include "xrank/core/ext.hpp"
#include "xrank/core/linalg.hpp"
#include "xrank/core/qmatrix.hpp"

namespace xrank {

namespace {

using Coeffs = std::map<Exponents, UPoly<Rational>>;

// Splits a generator with a trailing parameter variable into x-monomial -> polynomial in a.
Coeffs split_parameter(const MPoly& g, int n) {
  Coeffs out;
  for (const auto& t : g.terms()) {
    Exponents e(t.exps.begin(), t.exps.begin() + n);
    int j = t.exps[static_cast<std::size_t>(n)];
    out[e] += UPoly<Rational>::monomial(t.coeff, j);
  }
  return out;
}

MPoly x_part(const MPoly& g, int n, int j) {
  std::vector<Term> t;
  for (const auto& term : g.terms())
    if (term.exps[static_cast<std::size_t>(n)] == j) t.push_back({Exponents(term.exps.begin(), term.exps.begin() + n), term.coeff});
  return MPoly::from_terms(n, std::move(t));
}

int form_degree(const MPoly& g, int n) {
  int d = -1;
  for (const auto& t : g.terms()) {
    int s = 0;
    for (int i = 0; i < n; ++i) s += t.exps[static_cast<std::size_t>(i)];
    if (d >= 0 && s != d) throw InvalidInput("scheme generator is not homogeneous");
    d = s;
  }
  return d;
}

}  // namespace

std::vector<std::vector<Rational>> ideal_piece(const std::vector<MPoly>& gens, int nvars, int k) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    int dg = g.total_degree();
    if (dg > k) continue;
    for (const auto& m : monomials_of_degree(nvars, k - dg))
      rows.push_back(form_coefficients(MPoly::monomial(nvars, m) * g, k));
  }
  return rows;
}

int scheme_codim(const ZeroDimScheme& z, int k) {
  const int n = z.nvars;
  const auto mons = monomials_of_degree(n, k);
  if (!z.modulus) {
    auto rows = ideal_piece(z.generators, n, k);
    if (rows.empty()) return static_cast<int>(mons.size());
    return static_cast<int>(mons.size()) - rank(QMatrix::from_rows(rows, static_cast<int>(mons.size())));
  }
  std::vector<Coeffs> row_maps;
  for (const auto& g : z.generators) {
    if (g.is_zero()) continue;
    int dg = form_degree(g, n);
    if (dg > k) continue;
    for (const auto& m : monomials_of_degree(n, k - dg)) {
      Exponents me = m;
      me.push_back(0);
      row_maps.push_back(split_parameter(MPoly::monomial(n + 1, me) * g, n));
    }
  }
  if (row_maps.empty()) return static_cast<int>(mons.size());
  auto branches = d5_branches(*z.modulus, [&](ExtCtxPtr<Rational> ctx) {
    using K = Ext<Rational>;
    Mat<K> m;
    for (const auto& rm : row_maps) {
      std::vector<K> row;
      for (const auto& mon : mons) {
        auto it = rm.find(mon);
        row.push_back(it == rm.end() ? K::from_base(ctx, Rational()) : K(ctx, it->second));
      }
      m.push_back(std::move(row));
    }
    return mat_rank(m);
  });
  int r = branches.front().value;
  for (const auto& b : branches)
    if (b.value != r) throw UnsupportedInstance("scheme degree differs between conjugate branches");
  return static_cast<int>(mons.size()) - r;
}

bool degree_invariant_holds(const ZeroDimScheme& z, int k) {
  return z.support_size <= z.claimed_degree && scheme_codim(z, k) == z.claimed_degree;
}

bool apolarity_membership(const SymForm& f, const ZeroDimScheme& z) {
  const int n = z.nvars;
  if (f.nvars() != n) throw InvalidInput("form and scheme live in different spaces");
  for (const auto& g : z.generators) {
    if (g.is_zero()) continue;
    int dg = z.modulus ? form_degree(g, n) : g.total_degree();
    if (dg > f.degree()) throw UnsupportedInstance("scheme generator of degree " + std::to_string(dg) +
                                                   " exceeds the form degree " + std::to_string(f.degree()));
    if (!z.modulus) {
      if (!apply_operator(g, f.body()).is_zero()) return false;
      continue;
    }
    // g = sum_j a^j g_j(x); collect g_j o f per monomial as a polynomial in a
    std::map<Exponents, UPoly<Rational>> acc;
    int top = g.degree_in(n);
    for (int j = 0; j <= top; ++j) {
      MPoly r = apply_operator(x_part(g, n, j), f.body());
      for (const auto& t : r.terms()) acc[t.exps] += UPoly<Rational>::monomial(t.coeff, j);
    }
    for (const auto& [e, c] : acc)
      if (!(c % *z.modulus).is_zero()) return false;
  }
  return true;
}

std::vector<MPoly> fat_point_forms(const std::vector<Rational>& p, int m, int k) {
  const int n = static_cast<int>(p.size());
  auto mons = monomials_of_degree(n, k);
  std::vector<std::vector<Rational>> conds;
  if (m > 0) {
    // all derivatives of order m-1 vanish at p (Euler then kills the lower orders)
    for (const auto& op : monomials_of_degree(n, m - 1)) {
      std::vector<Rational> row;
      for (const auto& mon : mons) {
        MPoly d = apply_operator(MPoly::monomial(n, op), MPoly::monomial(n, mon));
        row.push_back(m - 1 > k ? Rational() : d.eval(p));
      }
      conds.push_back(std::move(row));
    }
  }
  std::vector<MPoly> out;
  if (conds.empty()) {
    for (const auto& mon : mons) out.push_back(MPoly::monomial(n, mon));
    return out;
  }
  for (const auto& v : kernel(QMatrix::from_rows(conds, static_cast<int>(mons.size()))).basis)
    out.push_back(form_from_coefficients(v, n, k));
  return out;
}

ZeroDimScheme reduced_points(const std::vector<std::vector<Rational>>& points, int k) {
  if (points.empty()) throw InvalidInput("empty point set");
  const int n = static_cast<int>(points[0].size());
  auto mons = monomials_of_degree(n, k);
  std::vector<std::vector<Rational>> ev;
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != n) throw InvalidInput("points of different dimensions");
    std::vector<Rational> row;
    for (const auto& mon : mons) row.push_back(MPoly::monomial(n, mon).eval(p));
    ev.push_back(std::move(row));
  }
  ZeroDimScheme z;
  z.nvars = n;
  for (const auto& v : kernel(QMatrix::from_rows(ev, static_cast<int>(mons.size()))).basis)
    z.generators.push_back(form_from_coefficients(v, n, k));
  z.claimed_degree = static_cast<int>(points.size());
  z.support_size = static_cast<int>(points.size());
  return z;
}

std::vector<std::vector<Rational>> intersect_spaces(const std::vector<std::vector<Rational>>& a,
                                                    const std::vector<std::vector<Rational>>& b, int dim) {
  // A cap B = (A^perp + B^perp)^perp for the standard dot product
  auto perp = [dim](const std::vector<std::vector<Rational>>& s) {
    if (s.empty()) {
      std::vector<std::vector<Rational>> all;
      for (int i = 0; i < dim; ++i) {
        std::vector<Rational> e(static_cast<std::size_t>(dim));
        e[static_cast<std::size_t>(i)] = Rational(1);
        all.push_back(e);
      }
      return all;
    }
    return kernel(QMatrix::from_rows(s, dim)).basis;
  };
  auto pa = perp(a), pb = perp(b);
  pa.insert(pa.end(), pb.begin(), pb.end());
  return perp(pa);
}

std::vector<MPoly> generators_from_pieces(const std::vector<std::vector<std::vector<Rational>>>& pieces, int nvars) {
  std::vector<MPoly> gens;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    int k = static_cast<int>(i) + 1;
    int dim = static_cast<int>(monomials_of_degree(nvars, k).size());
    auto have = ideal_piece(gens, nvars, k);
    int r = have.empty() ? 0 : rank(QMatrix::from_rows(have, dim));
    for (const auto& v : pieces[i]) {
      auto trial = have;
      trial.push_back(v);
      int r2 = rank(QMatrix::from_rows(trial, dim));
      if (r2 > r) {
        have = std::move(trial);
        r = r2;
        gens.push_back(form_from_coefficients(v, nvars, k));
      }
    }
  }
  return gens;
}

}  // namespace xrank

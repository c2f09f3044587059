#include "xrank/core/algebra.hpp"

#include <algorithm>
#include <set>

namespace xrank {

MPoly exact_div(const MPoly& a, const MPoly& b) {
  auto q = exact_divide(a, b);
  if (!q) throw std::logic_error("exact_div: polynomial does not divide");
  return *q;
}

namespace {

// Prime factorization by trial division; an unfactored remainder is kept as a
// single factor, which only makes the divisor list incomplete, never wrong.
std::vector<mpz_class> factor_candidates(mpz_class n) {
  std::vector<mpz_class> primes;
  if (n < 0) n = -n;
  for (unsigned long p = 2; p < 20000 && n > 1; ++p) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      primes.emplace_back(p);
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

std::vector<mpz_class> divisors(const mpz_class& n, std::size_t cap) {
  mpz_class m = abs(n);
  std::vector<mpz_class> divs{1};
  for (const auto& p : factor_candidates(m)) {
    std::vector<mpz_class> next;
    mpz_class pk = 1;
    mpz_class rest = m;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
      pk *= p;
      for (const auto& d : divs) next.push_back(d * pk);
    }
    divs.insert(divs.end(), next.begin(), next.end());
    if (divs.size() > cap) return divs;
  }
  return divs;
}

}  // namespace

std::vector<Rational> rational_roots(const UPoly<Rational>& p) {
  std::vector<Rational> roots;
  if (p.degree() <= 0) return roots;
  // integer coefficients
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  std::vector<mpz_class> z;
  for (const auto& c : p.coeffs()) z.push_back(c.num() * (l / c.den()));
  std::size_t low = 0;
  while (z[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  const mpz_class& a0 = z[low];
  const mpz_class& an = z.back();
  if (p.degree() - static_cast<int>(low) == 0) return roots;
  auto num = divisors(a0, 3000);
  auto den = divisors(an, 3000);
  // For a root n/q of an integer polynomial f: (q - n) | f(1) and (q + n) | f(-1).
  mpz_class f1 = 0, fm1 = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    f1 += z[i];
    fm1 += (i % 2 == 0) ? z[i] : mpz_class(-z[i]);
  }
  auto passes = [](const mpz_class& value, const mpz_class& d) {
    if (value == 0) return true;
    if (d == 0) return false;
    return mpz_divisible_p(value.get_mpz_t(), d.get_mpz_t()) != 0;
  };
  std::set<Rational> found;
  for (const auto& q : den)
    for (const auto& n : num) {
      for (int sgn : {1, -1}) {
        mpz_class sn = n * sgn;
        if (!passes(f1, mpz_class(q - sn)) || !passes(fm1, mpz_class(q + sn))) continue;
        Rational r(sn, q);
        if (found.count(r)) continue;
        if (p.eval(r).is_zero()) found.insert(r);
      }
    }
  roots.insert(roots.end(), found.begin(), found.end());
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::pair<MPoly, bool> squarefree_part(const MPoly& p) {
  if (p.is_zero()) throw InvalidInput("squarefree_part of the zero polynomial");
  int v = -1;
  for (const auto& t : p.terms())
    for (std::size_t k = 0; k < t.exps.size(); ++k)
      if (t.exps[k] != 0) {
        if (v >= 0 && v != static_cast<int>(k)) throw InvalidInput("squarefree_part expects a univariate polynomial");
        v = static_cast<int>(k);
      }
  if (v < 0) return {MPoly::constant(p.nvars(), Rational(1)), true};
  UPoly<Rational> u = to_upoly(p, v);
  UPoly<Rational> g = gcd(u, u.derivative());
  UPoly<Rational> sf = make_monic(exact_quotient(u, g));
  return {from_upoly(sf, p.nvars(), v), g.degree() == 0};
}

namespace {

UPoly<MPoly> as_upoly_in(const MPoly& p, int var) {
  int d = p.degree_in(var);
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(std::max(d, 0) + 1));
  for (const auto& t : p.terms()) {
    Term u = t;
    int e = u.exps[static_cast<std::size_t>(var)];
    u.exps[static_cast<std::size_t>(var)] = 0;
    buckets[static_cast<std::size_t>(e)].push_back(std::move(u));
  }
  std::vector<MPoly> coeffs;
  for (auto& b : buckets) coeffs.push_back(MPoly::from_terms(p.nvars(), std::move(b)));
  return UPoly<MPoly>(std::move(coeffs));
}

}  // namespace

MPoly resultant(const MPoly& p, const MPoly& q, int var) {
  if (p.nvars() != q.nvars()) throw InvalidInput("resultant: variable counts differ");
  if (var < 0 || var >= p.nvars()) throw InvalidInput("resultant: variable index out of range");
  if (p.is_zero() || q.is_zero()) throw InvalidInput("resultant: zero polynomial");
  if (p.degree_in(var) <= 0 || q.degree_in(var) <= 0) throw InvalidInput("resultant: degree 0 in the elimination variable");
  UPoly<MPoly> a = as_upoly_in(p, var), b = as_upoly_in(q, var);
  MPoly one = MPoly::constant(p.nvars(), Rational(1));
  if (std::max(a.degree(), b.degree()) <= 6) return sylvester_resultant(a, b, one);
  return subresultant_resultant(a, b, one);
}

BiSolve<Rational> solve_bivariate(const std::vector<MPoly>& polys, const MPoly& excluded, const SolveOptions& opt) {
  if (polys.empty()) throw InvalidInput("system_has_zero_off: empty system");
  std::vector<BiPoly<Rational>> bp;
  for (const auto& p : polys) {
    if (p.nvars() != 2) throw InvalidInput("system_has_zero_off expects polynomials in two variables");
    bp.push_back(to_bipoly(p, 0, 1));
  }
  if (excluded.nvars() != 2) throw InvalidInput("excluded polynomial must be bivariate");
  return system_has_zero_off(bp, to_bipoly(excluded, 0, 1), Rational(), opt);
}

SystemWitness to_witness(ZeroStatus status, const std::string& description, const std::string& limit) {
  SystemWitness w;
  w.status = status;
  w.description = description;
  w.limit = limit;
  if (status == ZeroStatus::ZeroExists && w.description.empty()) w.description = "common zero exists";
  if (status == ZeroStatus::Undecided && w.limit.empty()) w.limit = "unspecified limit";
  return w;
}

SystemWitness system_has_zero_off(const std::vector<MPoly>& polys, const MPoly& excluded, const SolveOptions& opt) {
  auto r = solve_bivariate(polys, excluded, opt);
  return to_witness(r.status, r.description, r.limit);
}

namespace {

MPoly chart_affine(const MPoly& p) {
  return p.compose({MPoly::var(2, 0), MPoly::var(2, 1), MPoly::constant(2, Rational(1))});
}

UPoly<Rational> chart_line(const MPoly& p) {
  return to_upoly(p.compose({MPoly::var(1, 0), MPoly::constant(1, Rational(1)), MPoly(1)}), 0);
}

Rational chart_point(const MPoly& p) { return p.eval({Rational(1), Rational(0), Rational(0)}); }

UPoly<Rational> line_gcd(const std::vector<MPoly>& forms) {
  UPoly<Rational> g;
  for (const auto& f : forms) g = gcd(g, chart_line(f));
  return g;
}

bool point_is_zero(const std::vector<MPoly>& forms) {
  for (const auto& f : forms)
    if (!chart_point(f).is_zero()) return false;
  return true;
}

}  // namespace

bool PlaneZeros::recheck_no_zero() const {
  if (witness.status != ZeroStatus::NoZero || !affine_cert) return false;
  std::vector<BiPoly<Rational>> bp;
  for (const auto& f : forms) bp.push_back(to_bipoly(chart_affine(f), 0, 1));
  const auto& polys = affine_cert->polys;
  if (polys.size() != bp.size()) return false;
  for (std::size_t i = 0; i < bp.size(); ++i) {
    auto expect = affine_cert->swapped ? bi_swap(bp[i], Rational()) : bp[i];
    if (!same_value(expect, polys[i])) return false;
  }
  if (!validate_elimination(*affine_cert, Rational())) return false;
  UPoly<Rational> g = line_gcd(forms);
  if (g.is_zero() || g.degree() > 0) return false;
  return !point_is_zero(forms);
}

PlaneZeros projective_plane_zeros(const std::vector<MPoly>& forms, const SolveOptions& opt) {
  if (forms.empty()) throw InvalidInput("projective_plane_zeros: empty system");
  for (const auto& f : forms)
    if (f.nvars() != 3 || !f.is_homogeneous()) throw InvalidInput("projective_plane_zeros expects ternary forms");
  PlaneZeros out;
  out.forms = forms;
  std::vector<MPoly> aff;
  for (const auto& f : forms) aff.push_back(chart_affine(f));
  auto r = solve_bivariate(aff, MPoly::constant(2, Rational(1)), opt);
  bool finite = !r.component.has_value();
  bool rational = finite;
  for (const auto& z : r.zeros) {
    std::optional<UPoly<Rational>> tq;
    if (z.s_modulus.degree() == 1) detail::to_rational_if_possible(z.t_factor, tq);
    if (!tq || tq->is_zero()) {
      rational = false;
      if (z.t_factor.is_zero()) finite = false;
      continue;
    }
    Rational s = -z.s_modulus[0] / z.s_modulus.lc();
    auto roots = rational_roots(*tq);
    if (static_cast<int>(roots.size()) != squarefree_part(*tq).degree()) rational = false;
    for (const auto& t : roots) out.rational_points.push_back({s, t, Rational(1)});
  }
  UPoly<Rational> g = line_gcd(forms);
  if (g.is_zero()) {
    finite = false;
  } else if (g.degree() > 0) {
    auto roots = rational_roots(g);
    if (static_cast<int>(roots.size()) != squarefree_part(g).degree()) rational = false;
    for (const auto& x : roots) out.rational_points.push_back({x, Rational(1), Rational(0)});
  }
  bool at_point = point_is_zero(forms);
  if (at_point) out.rational_points.push_back({Rational(1), Rational(0), Rational(0)});

  bool any = r.status == ZeroStatus::ZeroExists || (!g.is_zero() && g.degree() > 0) || g.is_zero() || at_point;
  if (any) {
    std::string d = r.status == ZeroStatus::ZeroExists ? "affine chart: " + r.description
                    : at_point                          ? "zero at (1:0:0)"
                                                        : "zero on the line z = 0";
    out.witness = to_witness(ZeroStatus::ZeroExists, d, "");
  } else if (r.status == ZeroStatus::Undecided) {
    out.witness = to_witness(ZeroStatus::Undecided, "", r.limit);
  } else {
    out.witness = to_witness(ZeroStatus::NoZero, "affine chart: " + r.description + "; no zero at infinity", "");
    out.affine_cert = r.cert;
  }
  out.all_rational = finite && rational && r.status != ZeroStatus::Undecided;
  return out;
}

}  // namespace xrank

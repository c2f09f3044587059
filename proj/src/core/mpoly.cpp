#include "xrank/core/mpoly.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace xrank {

bool grevlex_greater(const Exponents& a, const Exponents& b) {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

namespace {

struct GrevlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const { return grevlex_greater(b, a); }
};

void check_exps(int nvars, const Exponents& e) {
  if (static_cast<int>(e.size()) != nvars) throw InvalidInput("exponent vector length does not match variable count");
  for (int x : e)
    if (x < 0) throw InvalidInput("negative exponent");
}

}  // namespace

MPoly MPoly::from_terms(int nvars, std::vector<Term> terms) {
  std::map<Exponents, Rational, GrevlexLess> acc;
  for (auto& t : terms) {
    check_exps(nvars, t.exps);
    acc[t.exps] += t.coeff;
  }
  MPoly p(nvars);
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (!it->second.is_zero()) p.terms_.push_back({it->first, it->second});
  return p;
}

MPoly MPoly::constant(int nvars, const Rational& c) {
  MPoly p(nvars);
  if (!c.is_zero()) p.terms_.push_back({Exponents(static_cast<std::size_t>(nvars), 0), c});
  return p;
}

MPoly MPoly::var(int nvars, int i) {
  Exponents e(static_cast<std::size_t>(nvars), 0);
  e.at(static_cast<std::size_t>(i)) = 1;
  return monomial(nvars, e);
}

MPoly MPoly::monomial(int nvars, Exponents exps, const Rational& c) {
  check_exps(nvars, exps);
  MPoly p(nvars);
  if (!c.is_zero()) p.terms_.push_back({std::move(exps), c});
  return p;
}

int MPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.front().exps;
  return std::accumulate(e.begin(), e.end(), 0);
}

int MPoly::degree_in(int v) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.exps[static_cast<std::size_t>(v)]);
  return d;
}

bool MPoly::is_homogeneous() const {
  int d = total_degree();
  for (const auto& t : terms_)
    if (std::accumulate(t.exps.begin(), t.exps.end(), 0) != d) return false;
  return true;
}

Rational MPoly::coeff(const Exponents& e) const {
  for (const auto& t : terms_)
    if (t.exps == e) return t.coeff;
  return Rational();
}

namespace {

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grevlex_greater(a[i].exps, b[j].exps))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grevlex_greater(b[j].exps, a[i].exps)) {
      out.push_back({b[j].exps, subtract ? -b[j].coeff : b[j].coeff});
      ++j;
    } else {
      Rational c = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!c.is_zero()) out.push_back({a[i].exps, c});
      ++i;
      ++j;
    }
  }
  return out;
}

void check_same(const MPoly& a, const MPoly& b) {
  if (a.nvars() != b.nvars()) throw InvalidInput("polynomials live in rings with different variable counts");
}

}  // namespace

MPoly& MPoly::operator+=(const MPoly& o) {
  check_same(*this, o);
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  check_same(*this, o);
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

MPoly operator-(const MPoly& a) {
  MPoly r = a;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  check_same(a, b);
  std::map<Exponents, Rational, GrevlexLess> acc;
  Exponents e(static_cast<std::size_t>(a.nvars_));
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = x.exps[k] + y.exps[k];
      acc[e] += x.coeff * y.coeff;
    }
  MPoly p(a.nvars_);
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (!it->second.is_zero()) p.terms_.push_back({it->first, it->second});
  return p;
}

MPoly operator*(const Rational& k, const MPoly& a) {
  MPoly r(a.nvars_);
  if (k.is_zero()) return r;
  r.terms_ = a.terms_;
  for (auto& t : r.terms_) t.coeff *= k;
  return r;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].exps != b.terms_[i].exps || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

Rational MPoly::eval(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != nvars_) throw InvalidInput("evaluation point has wrong length");
  Rational acc;
  for (const auto& t : terms_) {
    Rational m = t.coeff;
    for (std::size_t k = 0; k < x.size(); ++k)
      if (t.exps[k]) m *= pow(x[k], static_cast<unsigned>(t.exps[k]));
    acc += m;
  }
  return acc;
}

MPoly MPoly::derivative(int v) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    int e = t.exps[static_cast<std::size_t>(v)];
    if (e == 0) continue;
    Term n = t;
    n.exps[static_cast<std::size_t>(v)] = e - 1;
    n.coeff *= Rational(e);
    out.push_back(std::move(n));
  }
  return from_terms(nvars_, std::move(out));
}

MPoly MPoly::compose(const std::vector<MPoly>& images) const {
  if (static_cast<int>(images.size()) != nvars_) throw InvalidInput("compose: wrong number of images");
  int m = images.empty() ? 0 : images[0].nvars();
  MPoly acc(m);
  for (const auto& t : terms_) {
    MPoly mono = MPoly::constant(m, t.coeff);
    for (std::size_t k = 0; k < t.exps.size(); ++k)
      if (t.exps[k]) mono = mono * pow(images[k], static_cast<unsigned>(t.exps[k]));
    acc += mono;
  }
  return acc;
}

MPoly MPoly::with_nvars(int n) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    Exponents e(static_cast<std::size_t>(n), 0);
    for (std::size_t k = 0; k < t.exps.size(); ++k) {
      if (static_cast<int>(k) < n)
        e[k] = t.exps[k];
      else if (t.exps[k] != 0)
        throw InvalidInput("with_nvars would drop a used variable");
    }
    out.push_back({e, t.coeff});
  }
  return from_terms(n, std::move(out));
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + t.coeff.to_string() + ")";
    for (std::size_t k = 0; k < t.exps.size(); ++k) {
      if (!t.exps[k]) continue;
      out += "*" + (k < names.size() ? names[k] : "x" + std::to_string(k));
      if (t.exps[k] > 1) out += "^" + std::to_string(t.exps[k]);
    }
  }
  return out;
}

MPoly pow(const MPoly& p, unsigned e) {
  MPoly result = MPoly::constant(p.nvars(), Rational(1)), base = p;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

std::optional<MPoly> exact_divide(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw std::domain_error("exact_divide by zero polynomial");
  MPoly rem = a, quot(a.nvars());
  const Term& lb = b.leading();
  while (!rem.is_zero()) {
    const Term& lr = rem.leading();
    Exponents e(lr.exps.size());
    for (std::size_t k = 0; k < e.size(); ++k) {
      e[k] = lr.exps[k] - lb.exps[k];
      if (e[k] < 0) return std::nullopt;
    }
    MPoly q = MPoly::monomial(a.nvars(), e, lr.coeff / lb.coeff);
    quot += q;
    rem -= q * b;
  }
  return quot;
}

std::vector<Exponents> monomials_of_degree(int n, int d) {
  std::vector<Exponents> out;
  Exponents e(static_cast<std::size_t>(n), 0);
  // recursive fill of all compositions of d into n parts
  auto rec = [&](auto&& self, int k, int left) -> void {
    if (k == n - 1) {
      e[static_cast<std::size_t>(k)] = left;
      out.push_back(e);
      return;
    }
    for (int x = left; x >= 0; --x) {
      e[static_cast<std::size_t>(k)] = x;
      self(self, k + 1, left - x);
    }
  };
  if (n == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), [](const Exponents& x, const Exponents& y) { return grevlex_greater(x, y); });
  return out;
}

UPoly<Rational> to_upoly(const MPoly& p, int v) {
  std::vector<Rational> c(static_cast<std::size_t>(std::max(p.degree_in(v), -1) + 1));
  for (const auto& t : p.terms()) {
    for (std::size_t k = 0; k < t.exps.size(); ++k)
      if (static_cast<int>(k) != v && t.exps[k] != 0) throw InvalidInput("polynomial is not univariate in the given variable");
    c[static_cast<std::size_t>(t.exps[static_cast<std::size_t>(v)])] += t.coeff;
  }
  return UPoly<Rational>(std::move(c));
}

MPoly from_upoly(const UPoly<Rational>& p, int nvars, int v) {
  std::vector<Term> terms;
  for (int i = 0; i <= p.degree(); ++i) {
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(v)] = i;
    terms.push_back({e, p[static_cast<std::size_t>(i)]});
  }
  return MPoly::from_terms(nvars, std::move(terms));
}

UPoly<UPoly<Rational>> to_bipoly(const MPoly& p, int s_var, int t_var) {
  int dt = std::max(p.degree_in(t_var), -1), ds = std::max(p.degree_in(s_var), -1);
  std::vector<std::vector<Rational>> table(static_cast<std::size_t>(dt + 1),
                                           std::vector<Rational>(static_cast<std::size_t>(ds + 1)));
  for (const auto& t : p.terms()) {
    for (std::size_t k = 0; k < t.exps.size(); ++k)
      if (static_cast<int>(k) != s_var && static_cast<int>(k) != t_var && t.exps[k] != 0)
        throw InvalidInput("polynomial is not bivariate in the given variables");
    table[static_cast<std::size_t>(t.exps[static_cast<std::size_t>(t_var)])]
         [static_cast<std::size_t>(t.exps[static_cast<std::size_t>(s_var)])] += t.coeff;
  }
  std::vector<UPoly<Rational>> rows;
  for (auto& r : table) rows.push_back(UPoly<Rational>(std::move(r)));
  return UPoly<UPoly<Rational>>(std::move(rows));
}

MPoly from_bipoly(const UPoly<UPoly<Rational>>& p, int nvars, int s_var, int t_var) {
  std::vector<Term> terms;
  for (int i = 0; i <= p.degree(); ++i) {
    const auto& c = p[static_cast<std::size_t>(i)];
    for (int j = 0; j <= c.degree(); ++j) {
      Exponents e(static_cast<std::size_t>(nvars), 0);
      e[static_cast<std::size_t>(t_var)] = i;
      e[static_cast<std::size_t>(s_var)] = j;
      terms.push_back({e, c[static_cast<std::size_t>(j)]});
    }
  }
  return MPoly::from_terms(nvars, std::move(terms));
}

}  // namespace xrank

#pragma once

// Decides whether a system of bivariate polynomials has a common affine zero
// (over the algebraic closure) at which an excluded polynomial does not vanish.
//
// Outline: split off the common factor g of the system; if g has a component
// not contained in {excluded = 0} the answer is yes. Otherwise eliminate t from
// two random combinations, giving R(s). For every root a of R (handled by
// dynamic evaluation over the square-free factors of R), the zeros above s = a
// are the roots of gcd_i P_i(a, t) with the excluded part removed.
//
// Refutations are recorded as an EliminationCert that can be re-checked with
// multiplications and exact divisions only.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

#include "xrank/core/bipoly.hpp"
#include "xrank/core/ext.hpp"

namespace xrank {

/// Rational roots of a polynomial over Q (implemented in algebra.cpp).
std::vector<Rational> rational_roots(const UPoly<Rational>& p);

enum class ZeroStatus { ZeroExists, NoZero, Undecided };

inline const char* to_string(ZeroStatus s) {
  switch (s) {
    case ZeroStatus::ZeroExists: return "zero-exists";
    case ZeroStatus::NoZero: return "no-zero";
    case ZeroStatus::Undecided: return "undecided";
  }
  return "?";
}

struct SolveOptions {
  int ext_limit = 24;           // largest extension degree attempted
  std::uint64_t seed = 0;       // drives the random combinations
  bool swap_order = false;      // eliminate s instead of t
  int cofactor_limit = 16;      // Sylvester size up to which resultant cofactors are stored
};

template <class F>
struct BranchCert {
  UPoly<F> modulus;
  ExtCtxPtr<F> ctx;
  UPoly<Ext<F>> gcd;                   // sum_i bezout[i] * reduced_i(a, t); monic or zero
  std::vector<UPoly<Ext<F>>> bezout;
  int excluded_power = 0;              // gcd divides excluded(a, t)^excluded_power; -1 if excluded(a, t) == 0
  bool zero = false;
};

/// A further resultant of two combinations, used to strip extraneous factors.
template <class F>
struct ExtraResultant {
  std::vector<F> comb_a, comb_b;
  BiPoly<F> cof_a, cof_b;
  UPoly<F> value;
};

template <class F>
struct EliminationCert {
  std::vector<BiPoly<F>> polys;        // after the optional swap
  BiPoly<F> excluded;
  bool swapped = false;
  BiPoly<F> common;                    // polys[i] = common * reduced[i]
  int common_power = 0;                // common divides excluded^common_power
  std::vector<BiPoly<F>> reduced;
  std::vector<F> comb_a, comb_b;
  UPoly<F> eliminant;                  // R(s), every zero of `reduced` has R(s) = 0
  bool has_cofactors = false;
  BiPoly<F> cof_a, cof_b;              // cof_a * A + cof_b * B = R (first_eliminant when extras exist)
  UPoly<F> first_eliminant;
  std::vector<ExtraResultant<F>> extra; // R = gcd of first_eliminant and all extra values
  std::vector<BranchCert<F>> branches; // moduli multiply to the square-free part of R
};

/// A family of zeros: s runs over the roots of s_modulus; for each such s the
/// t-values are the roots of t_factor (with coefficients in F[s]/(s_modulus)).
template <class F>
struct ZeroBranch {
  UPoly<F> s_modulus;
  ExtCtxPtr<F> ctx;
  UPoly<Ext<F>> t_factor;  // zero polynomial means every t
};

template <class F>
struct BiSolve {
  ZeroStatus status = ZeroStatus::Undecided;
  std::string description;
  std::string limit;                      // set when undecided
  std::optional<BiPoly<F>> component;     // common curve component off the excluded locus
  std::vector<ZeroBranch<F>> zeros;       // finite zero families
  std::optional<EliminationCert<F>> cert; // present for no-zero
  std::optional<std::pair<Rational, Rational>> rational_witness;  // (s, t) in the caller's order
};

namespace detail {

inline std::uint64_t next_small(std::mt19937_64& rng) { return rng() % 19; }

template <class F>
F small_scalar(std::mt19937_64& rng, const F& like) {
  long v = static_cast<long>(next_small(rng)) - 9;
  if (v == 0) v = 10;
  return from_rational(like, Rational(v));
}

/// det(m) together with column 0 of adj(m), over an integral domain.
template <class R>
std::pair<R, std::vector<R>> det_and_adj_col0(const std::vector<std::vector<R>>& m, const R& one) {
  const std::size_t n = m.size();
  R det = bareiss_determinant(m, one);
  std::vector<R> col;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::vector<R>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<R> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) row.push_back(m[i][j]);
      minor.push_back(std::move(row));
    }
    R c = n == 1 ? one : bareiss_determinant(std::move(minor), one);
    col.push_back(k % 2 == 0 ? c : -c);
  }
  return {det, col};
}

}  // namespace detail

/// R(s) with cofactors U, V such that U*A + V*B = R, deg_t A, deg_t B > 0.
template <class F>
void eliminant_with_cofactors(const BiPoly<F>& a, const BiPoly<F>& b, const F& like, EliminationCert<F>& cert,
                              int cofactor_limit) {
  const UPoly<F> one = UPoly<F>::constant(one_like(like));
  int m = a.degree(), n = b.degree();
  int size = m + n;
  if (size > cofactor_limit) {
    cert.eliminant = subresultant_resultant(a, b, one);
    cert.has_cofactors = false;
    return;
  }
  std::vector<std::vector<UPoly<F>>> mat(static_cast<std::size_t>(size),
                                         std::vector<UPoly<F>>(static_cast<std::size_t>(size)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) mat[static_cast<std::size_t>(i + k)][static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(k)];
  for (int j = 0; j < m; ++j)
    for (int k = 0; k <= n; ++k)
      mat[static_cast<std::size_t>(j + k)][static_cast<std::size_t>(n + j)] = b[static_cast<std::size_t>(k)];
  auto [det, col] = detail::det_and_adj_col0(mat, one);
  std::vector<UPoly<F>> u(col.begin(), col.begin() + n), v(col.begin() + n, col.end());
  cert.cof_a = BiPoly<F>(std::move(u));
  cert.cof_b = BiPoly<F>(std::move(v));
  cert.eliminant = det;
  cert.has_cofactors = true;
}

namespace detail {

template <class F>
UPoly<Ext<F>> eval_at_generator(const BiPoly<F>& p, const ExtCtxPtr<F>& ctx) {
  Ext<F> alpha = Ext<F>::generator(ctx);
  return bi_eval_s(p, alpha, [&](const F& x) { return Ext<F>::from_base(ctx, x); });
}

template <class F>
BranchCert<F> solve_branch(const std::vector<BiPoly<F>>& reduced, const BiPoly<F>& excluded, const ExtCtxPtr<F>& ctx) {
  using K = Ext<F>;
  BranchCert<F> bc;
  bc.ctx = ctx;
  bc.modulus = ctx->modulus;
  const K one = one_like(K::generator(ctx));
  UPoly<K> g;
  std::vector<UPoly<K>> coef;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    UPoly<K> pi = eval_at_generator(reduced[i], ctx);
    if (g.is_zero()) {
      coef.assign(reduced.size(), UPoly<K>{});
      if (!pi.is_zero()) {
        K k = inv(pi.lc());
        g = pi.times(k);
        coef[i] = UPoly<K>::constant(k);
      }
      continue;
    }
    if (pi.is_zero() || g.degree() == 0) continue;
    auto x = xgcd(g, pi, one);
    for (auto& c : coef) c = c * x.u;
    coef[i] = x.v;
    g = x.g;
  }
  if (coef.empty()) coef.assign(reduced.size(), UPoly<K>{});
  bc.gcd = g;
  bc.bezout = coef;
  UPoly<K> e = eval_at_generator(excluded, ctx);
  bool e_zero = true;
  for (const auto& c : e.coeffs())
    if (!is_zero(c)) e_zero = false;
  if (e_zero) {
    bc.excluded_power = -1;
    bc.zero = false;
    return bc;
  }
  if (g.is_zero()) {
    bc.zero = true;
    return bc;
  }
  UPoly<K> h = g;
  int power = 0;
  while (h.degree() > 0) {
    UPoly<K> c = gcd(h, e);
    if (c.degree() <= 0) break;
    h = exact_quotient(h, c);
    ++power;
  }
  bc.excluded_power = power;
  bc.zero = h.degree() > 0;
  return bc;
}

template <class F>
void to_rational_if_possible(const UPoly<Ext<F>>& p, std::optional<UPoly<F>>& out) {
  std::vector<F> c;
  for (const auto& x : p.coeffs()) {
    if (x.rep().degree() > 0) return;
    c.push_back(x.rep().is_zero() ? zero_like(x.ctx()->modulus.lc()) : x.rep()[0]);
  }
  out = UPoly<F>(std::move(c));
}

}  // namespace detail

/// The decision procedure. polys and excluded are in (s, t); see file comment.
template <class F>
BiSolve<F> system_has_zero_off(std::vector<BiPoly<F>> polys, BiPoly<F> excluded, const F& like,
                               const SolveOptions& opt = {}) {
  if (polys.empty()) throw InvalidInput("system_has_zero_off: empty system");
  if (excluded.is_zero()) throw InvalidInput("system_has_zero_off: excluded polynomial is zero");
  BiSolve<F> out;
  EliminationCert<F> cert;
  cert.swapped = opt.swap_order;
  if (opt.swap_order) {
    for (auto& p : polys) p = bi_swap(p, like);
    excluded = bi_swap(excluded, like);
  }
  std::vector<BiPoly<F>> nz;
  for (auto& p : polys)
    if (!p.is_zero()) nz.push_back(p);
  cert.polys = polys;
  cert.excluded = excluded;
  const BiPoly<F> one_b = BiPoly<F>::constant(UPoly<F>::constant(one_like(like)));
  if (nz.empty()) {
    out.status = ZeroStatus::ZeroExists;
    out.component = one_b.times(UPoly<F>{});
    out.description = "all polynomials vanish identically";
    return out;
  }

  // Common factor.
  BiPoly<F> g = nz[0];
  for (std::size_t i = 1; i < nz.size(); ++i) g = bi_gcd(g, nz[i]);
  g = bi_normalize(g);
  if (!bi_is_constant(g)) {
    BiPoly<F> h = g;
    int power = 0;
    while (!bi_is_constant(h)) {
      BiPoly<F> c = bi_gcd(h, excluded);
      if (bi_is_constant(c)) break;
      h = exact_div(h, c);
      ++power;
    }
    if (!bi_is_constant(h)) {
      out.status = ZeroStatus::ZeroExists;
      out.component = h;
      out.description = "common curve component " + to_string(h, "t");
      return out;
    }
    cert.common = g;
    cert.common_power = power;
  } else {
    cert.common = one_b;
    cert.common_power = 0;
    g = one_b;
  }
  for (const auto& p : polys) cert.reduced.push_back(p.is_zero() ? p : exact_div(p, g));

  std::vector<BiPoly<F>> red;
  for (const auto& p : cert.reduced)
    if (!p.is_zero()) red.push_back(p);
  for (const auto& p : red) {
    if (bi_is_constant(p)) {
      out.status = ZeroStatus::NoZero;
      out.description = "a cofactor is a nonzero constant";
      cert.comb_a.assign(cert.reduced.size(), zero_like(like));
      cert.comb_b = cert.comb_a;
      for (std::size_t i = 0; i < cert.reduced.size(); ++i)
        if (same_value(cert.reduced[i], p)) {
          cert.comb_a[i] = one_like(like);
          break;
        }
      cert.eliminant = UPoly<F>::constant(p.lc().lc());
      cert.has_cofactors = true;
      cert.cof_a = one_b;
      cert.cof_b = BiPoly<F>{};
      out.cert = std::move(cert);
      return out;
    }
  }

  // Two combinations with trivial gcd.
  std::mt19937_64 rng(opt.seed * 0x9e3779b97f4a7c15ULL + 12345);
  BiPoly<F> a, b;
  bool ok = false;
  for (int attempt = 0; attempt < 12 && !ok; ++attempt) {
    cert.comb_a.assign(cert.reduced.size(), zero_like(like));
    cert.comb_b = cert.comb_a;
    if (red.size() == 1) break;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < cert.reduced.size(); ++i)
      if (!cert.reduced[i].is_zero()) idx.push_back(i);
    if (red.size() == 2 && attempt == 0) {
      cert.comb_a[idx[0]] = one_like(like);
      cert.comb_b[idx[1]] = one_like(like);
    } else {
      for (std::size_t i : idx) {
        cert.comb_a[i] = detail::small_scalar(rng, like);
        cert.comb_b[i] = detail::small_scalar(rng, like);
      }
    }
    a = BiPoly<F>{};
    b = BiPoly<F>{};
    for (std::size_t i : idx) {
      a += cert.reduced[i].times(UPoly<F>::constant(cert.comb_a[i]));
      b += cert.reduced[i].times(UPoly<F>::constant(cert.comb_b[i]));
    }
    if (a.is_zero() || b.is_zero()) continue;
    ok = bi_is_constant(bi_gcd(a, b));
  }
  if (!ok) {
    if (red.size() == 1) {
      // unreachable: a single polynomial is its own common factor
      out.status = ZeroStatus::Undecided;
      out.limit = "single-polynomial system after factor removal";
      return out;
    }
    out.status = ZeroStatus::Undecided;
    out.limit = "no coprime combination found in 12 draws";
    return out;
  }

  if (a.degree() == 0) {
    cert.eliminant = a.lc();
    cert.has_cofactors = true;
    cert.cof_a = one_b;
    cert.cof_b = BiPoly<F>{};
  } else if (b.degree() == 0) {
    cert.eliminant = b.lc();
    cert.has_cofactors = true;
    cert.cof_a = BiPoly<F>{};
    cert.cof_b = one_b;
  } else {
    eliminant_with_cofactors(a, b, like, cert, opt.cofactor_limit);
  }
  if (cert.eliminant.is_zero()) throw std::logic_error("system_has_zero_off: eliminant vanished for coprime pair");
  if (cert.has_cofactors && cert.eliminant.degree() > 0 && red.size() > 2) {
    // Extraneous factors of one resultant rarely survive a gcd with another.
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < cert.reduced.size(); ++i)
      if (!cert.reduced[i].is_zero()) idx.push_back(i);
    UPoly<F> cur = cert.eliminant;
    std::vector<ExtraResultant<F>> extra;
    int stale = 0;
    for (int round = 0; round < 6 && stale < 2 && cur.degree() > 0; ++round) {
      ExtraResultant<F> er;
      er.comb_a.assign(cert.reduced.size(), zero_like(like));
      er.comb_b = er.comb_a;
      BiPoly<F> c, e;
      for (std::size_t i : idx) {
        er.comb_a[i] = detail::small_scalar(rng, like);
        er.comb_b[i] = detail::small_scalar(rng, like);
        c += cert.reduced[i].times(UPoly<F>::constant(er.comb_a[i]));
        e += cert.reduced[i].times(UPoly<F>::constant(er.comb_b[i]));
      }
      if (c.degree() <= 0 || e.degree() <= 0 || !bi_is_constant(bi_gcd(c, e))) {
        ++stale;
        continue;
      }
      EliminationCert<F> tmp;
      eliminant_with_cofactors(c, e, like, tmp, opt.cofactor_limit);
      if (!tmp.has_cofactors || tmp.eliminant.is_zero()) {
        ++stale;
        continue;
      }
      UPoly<F> g2 = gcd(cur, tmp.eliminant);
      if (g2.degree() >= cur.degree()) {
        ++stale;
        continue;
      }
      er.cof_a = std::move(tmp.cof_a);
      er.cof_b = std::move(tmp.cof_b);
      er.value = std::move(tmp.eliminant);
      extra.push_back(std::move(er));
      cur = g2;
      stale = 0;
    }
    if (!extra.empty()) {
      cert.first_eliminant = cert.eliminant;
      cert.extra = std::move(extra);
      cert.eliminant = cur;
    }
  }
  if (cert.eliminant.degree() == 0) {
    out.status = ZeroStatus::NoZero;
    out.description = "eliminant is a nonzero constant";
    out.cert = std::move(cert);
    return out;
  }

  // Square-free factors; over Q split off rational roots as linear factors.
  std::vector<UPoly<F>> factors;
  for (const auto& f : squarefree_decomposition(cert.eliminant)) {
    if (f.degree() <= 0) continue;
    if constexpr (std::is_same_v<F, Rational>) {
      UPoly<F> rest = f;
      for (const auto& r : rational_roots(f)) {
        UPoly<F> lin = UPoly<F>::linear_root(r);
        factors.push_back(lin);
        rest = exact_quotient(rest, lin);
      }
      if (rest.degree() > 0) factors.push_back(make_monic(rest));
    } else {
      factors.push_back(make_monic(f));
    }
  }

  bool any_zero = false, any_undecided = false;
  std::string zero_desc;
  for (const auto& f : factors) {
    if (f.degree() > opt.ext_limit) {
      any_undecided = true;
      out.limit = "eliminant factor of degree " + std::to_string(f.degree()) + " exceeds extension limit " +
                  std::to_string(opt.ext_limit);
      continue;
    }
    auto branches = d5_branches(f, [&](ExtCtxPtr<F> ctx) { return detail::solve_branch(cert.reduced, excluded, ctx); });
    for (auto& br : branches) {
      if (br.value.zero) {
        any_zero = true;
        out.zeros.push_back({br.modulus, br.value.ctx, br.value.gcd});
        if (zero_desc.empty()) {
          zero_desc = "s: root of " + to_string(br.modulus, "s") + "; t: root of " + to_string(br.value.gcd, "t");
          if constexpr (std::is_same_v<F, Rational>) {
            if (br.modulus.degree() == 1) {
              Rational s = -br.modulus[0];
              std::optional<UPoly<F>> gq;
              detail::to_rational_if_possible(br.value.gcd, gq);
              if (gq && !gq->is_zero()) {
                for (const auto& t : rational_roots(*gq)) {
                  Rational e = bi_eval(excluded, s, t);
                  if (e.is_zero()) continue;
                  if (opt.swap_order)
                    out.rational_witness = std::make_pair(t, s);
                  else
                    out.rational_witness = std::make_pair(s, t);
                  break;
                }
              }
            }
          }
        }
      }
      cert.branches.push_back(std::move(br.value));
    }
  }
  if (any_zero) {
    out.status = ZeroStatus::ZeroExists;
    out.description = zero_desc;
    if (out.rational_witness)
      out.description = "witness (s,t)=(" + out.rational_witness->first.to_string() + "," +
                        out.rational_witness->second.to_string() + ")";
    return out;
  }
  if (any_undecided) {
    out.status = ZeroStatus::Undecided;
    out.description = "undecided: " + out.limit;
    return out;
  }
  out.status = ZeroStatus::NoZero;
  out.description = "eliminant " + to_string(cert.eliminant, "s") + " with " + std::to_string(cert.branches.size()) +
                    " refuted branch(es)";
  out.cert = std::move(cert);
  return out;
}

/// Re-checks a no-zero certificate using multiplication and exact division only.
template <class F>
bool validate_elimination(const EliminationCert<F>& c, const F& like) {
  try {
    const UPoly<F> one = UPoly<F>::constant(one_like(like));
    if (c.reduced.size() != c.polys.size()) return false;
    for (std::size_t i = 0; i < c.polys.size(); ++i)
      if (!same_value(c.polys[i], c.common * c.reduced[i])) return false;
    if (!bi_is_constant(c.common)) {
      BiPoly<F> ep = pow(c.excluded, static_cast<unsigned>(c.common_power), BiPoly<F>::constant(one));
      (void)exact_div(ep, c.common);
    }
    for (const auto& r : c.reduced)
      if (!r.is_zero() && bi_is_constant(r)) return true;
    if (!c.has_cofactors) return false;
    BiPoly<F> a, b;
    for (std::size_t i = 0; i < c.reduced.size(); ++i) {
      a += c.reduced[i].times(UPoly<F>::constant(c.comb_a[i]));
      b += c.reduced[i].times(UPoly<F>::constant(c.comb_b[i]));
    }
    const UPoly<F>& first = c.extra.empty() ? c.eliminant : c.first_eliminant;
    if (!same_value(c.cof_a * a + c.cof_b * b, BiPoly<F>::constant(first))) return false;
    if (c.eliminant.is_zero()) return false;
    if (!c.extra.empty()) {
      UPoly<F> g = first;
      for (const auto& er : c.extra) {
        BiPoly<F> ea, eb;
        for (std::size_t i = 0; i < c.reduced.size(); ++i) {
          ea += c.reduced[i].times(UPoly<F>::constant(er.comb_a[i]));
          eb += c.reduced[i].times(UPoly<F>::constant(er.comb_b[i]));
        }
        if (er.value.is_zero()) return false;
        if (!same_value(er.cof_a * ea + er.cof_b * eb, BiPoly<F>::constant(er.value))) return false;
        g = gcd(g, er.value);
      }
      if (!same_value(make_monic(g), make_monic(c.eliminant))) return false;
    }
    if (c.eliminant.degree() == 0) return true;
    UPoly<F> prod = one;
    for (const auto& br : c.branches) prod = prod * br.modulus;
    if (!same_value(make_monic(prod), squarefree_part(c.eliminant))) return false;
    for (const auto& br : c.branches) {
      if (br.zero) return false;
      using K = Ext<F>;
      UPoly<K> sum;
      for (std::size_t i = 0; i < c.reduced.size(); ++i)
        sum += br.bezout[i] * detail::eval_at_generator(c.reduced[i], br.ctx);
      if (!same_value(sum, br.gcd)) return false;
      UPoly<K> e = detail::eval_at_generator(c.excluded, br.ctx);
      if (br.excluded_power < 0) {
        if (!e.is_zero()) return false;
        continue;
      }
      if (br.gcd.is_zero()) return false;
      if (br.gcd.degree() == 0) continue;
      if (!same_value(br.gcd.lc(), one_like(br.gcd.lc()))) return false;
      UPoly<K> ep = pow(e, static_cast<unsigned>(br.excluded_power), UPoly<K>::constant(one_like(br.gcd.lc())));
      if (!divmod(ep, br.gcd).rem.is_zero()) return false;
    }
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace xrank

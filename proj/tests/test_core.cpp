#include <gtest/gtest.h>

#include <random>

#include "xrank/core/algebra.hpp"
#include "xrank/core/ext.hpp"

using namespace xrank;

namespace {

MPoly var2(int i) { return MPoly::var(2, i); }
MPoly c2(long v) { return MPoly::constant(2, Rational(v)); }
MPoly x1(int nvars = 1) { return MPoly::var(nvars, 0); }

Rational small(std::mt19937_64& rng, int span = 7) {
  return Rational(static_cast<long>(rng() % (2 * span + 1)) - span);
}

UPoly<Rational> upoly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return UPoly<Rational>(v);
}

}  // namespace

TEST(Rational, CanonicalParse) {
  EXPECT_EQ(Rational::parse("3/4").to_string(), "3/4");
  EXPECT_EQ(Rational::parse("-5").to_string(), "-5/1");
  EXPECT_EQ(Rational::parse("0/1"), Rational(0));
  EXPECT_THROW(Rational::parse("3/6"), InvalidInput);
  EXPECT_THROW(Rational::parse("1/-2"), InvalidInput);
  EXPECT_THROW(Rational::parse("1/0"), InvalidInput);
  EXPECT_THROW(Rational::parse("0/5"), InvalidInput);
  EXPECT_THROW(Rational::parse("007"), InvalidInput);
  EXPECT_THROW(Rational::parse("1.5"), InvalidInput);
}

TEST(MPoly, GrevlexOrder) {
  // x0^2 > x0x1 > x1^2 > x0x2 > x1x2 > x2^2 for three variables
  auto mons = monomials_of_degree(3, 2);
  std::vector<Exponents> expect{{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {1, 0, 1}, {0, 1, 1}, {0, 0, 2}};
  EXPECT_EQ(mons, expect);
  MPoly p = MPoly::from_terms(3, {{{0, 0, 2}, 1}, {{2, 0, 0}, 3}, {{0, 0, 2}, -1}});
  ASSERT_EQ(p.terms().size(), 1u);
  EXPECT_EQ(p.terms()[0].coeff, Rational(3));
}

TEST(MPoly, ExactDivision) {
  MPoly s = var2(0), t = var2(1);
  MPoly a = (s + t) * (s - c2(2) * t);
  auto q = exact_divide(a, s + t);
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, s - c2(2) * t);
  EXPECT_FALSE(exact_divide(a, s + c2(1)));
}

TEST(SquarefreePart, SpecExamples) {
  MPoly x = x1();
  auto one = MPoly::constant(1, Rational(1));
  auto [a, fa] = squarefree_part(x * x);
  EXPECT_EQ(a, x);
  EXPECT_FALSE(fa);
  auto [b, fb] = squarefree_part(x * x + one);
  EXPECT_EQ(b, x * x + one);
  EXPECT_TRUE(fb);
  auto [c, fc] = squarefree_part(x * x * x - x * x);
  EXPECT_EQ(c, x * x - x);
  EXPECT_FALSE(fc);
  EXPECT_THROW(squarefree_part(MPoly(1)), InvalidInput);
}

TEST(SquarefreePart, Properties) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    UPoly<Rational> p = upoly({1});
    int factors = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < factors; ++i) {
      UPoly<Rational> f({small(rng), small(rng), Rational(1)});
      p = p * pow(f, 1 + static_cast<unsigned>(rng() % 3), upoly({1}));
    }
    MPoly mp = from_upoly(p, 1, 0);
    auto [sf, flag] = squarefree_part(mp);
    UPoly<Rational> u = to_upoly(sf, 0);
    EXPECT_TRUE(divides(u, p));
    EXPECT_EQ(gcd(u, u.derivative()).degree(), 0);
    EXPECT_EQ(flag, gcd(p, p.derivative()).degree() == 0);
  }
}

TEST(Resultant, SpecExamples) {
  // variables: x = 0, a = 1, b = 2
  MPoly x = MPoly::var(3, 0), a = MPoly::var(3, 1), b = MPoly::var(3, 2);
  MPoly r = resultant(x - a, x - b, 0);
  EXPECT_TRUE(r == a - b || r == b - a);
  MPoly y = x1();
  auto one = MPoly::constant(1, Rational(1)), two = MPoly::constant(1, Rational(2));
  MPoly r2 = resultant(y * y - two, y - one, 0);
  EXPECT_TRUE(r2 == one || r2 == -one);
  EXPECT_TRUE(resultant(y * y - one, y * y - one, 0).is_zero());
  EXPECT_THROW(resultant(one, y, 0), InvalidInput);
}

TEST(Resultant, EvaluationIdentityProperty) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    int deg = 1 + static_cast<int>(rng() % 9);  // crosses the determinant / subresultant switch
    std::vector<Rational> c;
    for (int i = 0; i <= deg; ++i) c.push_back(small(rng));
    if (c.back().is_zero()) c.back() = Rational(1);
    UPoly<Rational> p(c);
    Rational at = small(rng, 5);
    MPoly mp = from_upoly(p, 1, 0);
    MPoly lin = x1() - MPoly::constant(1, at);
    MPoly r = resultant(mp, lin, 0);
    Rational pv = p.eval(at);
    Rational rv = r.is_zero() ? Rational(0) : r.terms()[0].coeff;
    EXPECT_TRUE(rv == pv || rv == -pv) << "trial " << trial;
  }
}

TEST(Resultant, SylvesterMatchesSubresultant) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    auto rnd = [&](int d) {
      std::vector<UPoly<Rational>> rows;
      for (int i = 0; i <= d; ++i) rows.push_back(UPoly<Rational>({small(rng, 3), small(rng, 3), small(rng, 3)}));
      if (rows.back().is_zero()) rows.back() = upoly({1});
      return BiPoly<Rational>(rows);
    };
    auto a = rnd(1 + static_cast<int>(rng() % 5)), b = rnd(1 + static_cast<int>(rng() % 5));
    auto one = UPoly<Rational>::constant(Rational(1));
    auto r1 = sylvester_resultant(a, b, one);
    auto r2 = subresultant_resultant(a, b, one);
    EXPECT_EQ(r1, r2) << "trial " << trial;
  }
}

TEST(Kernel, SpecExamples) {
  auto k1 = kernel(QMatrix::identity(2));
  EXPECT_EQ(k1.rank, 2);
  EXPECT_TRUE(k1.basis.empty());
  auto k2 = kernel(QMatrix(2, 3));
  EXPECT_EQ(k2.rank, 0);
  EXPECT_EQ(k2.basis.size(), 3u);
  auto k3 = kernel(QMatrix::from_rows({{1, 2}, {2, 4}}));
  EXPECT_EQ(k3.rank, 1);
  ASSERT_EQ(k3.basis.size(), 1u);
  // (2,-1) up to scale
  EXPECT_EQ(k3.basis[0][0] * Rational(-1), k3.basis[0][1] * Rational(2));
}

TEST(Kernel, Properties) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    int r = 1 + static_cast<int>(rng() % 5), c = 1 + static_cast<int>(rng() % 6);
    QMatrix m(r, c);
    // low-rank products sometimes
    bool lowrank = rng() % 2;
    if (lowrank) {
      int k = 1 + static_cast<int>(rng() % 2);
      QMatrix a(r, k), b(k, c);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < k; ++j) a.at(i, j) = Rational(small(rng).num(), 1 + rng() % 3);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < c; ++j) b.at(i, j) = small(rng);
      m = a * b;
    } else {
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = Rational(small(rng).num(), 1 + rng() % 4);
    }
    auto k = kernel(m);
    EXPECT_EQ(k.rank + static_cast<int>(k.basis.size()), c);
    for (const auto& v : k.basis)
      for (const auto& x : m.apply(v)) EXPECT_TRUE(x.is_zero());
    EXPECT_EQ(k.rank, rank(m.transposed()));
    // independent oracle: generic Gauss-Jordan
    EXPECT_EQ(k.rank, mat_rank(m.to_rows()));
  }
}

TEST(Ext, InverseAndSplit) {
  // Q[x]/(x^2 - 2) is a field: (1 + a)^-1 = -1 + a
  auto ctx = make_ext_ctx(upoly({-2, 0, 1}));
  auto a = Ext<Rational>::generator(ctx);
  auto one = one_like(a);
  auto v = inv(one + a);
  EXPECT_TRUE(same_value(v * (one + a), one));
  // Q[x]/(x^2 - 1) splits on x - 1
  auto split_ctx = make_ext_ctx(upoly({-1, 0, 1}));
  auto b = Ext<Rational>::generator(split_ctx);
  EXPECT_THROW((void)inv(b - one_like(b)), Split<Rational>);
  auto branches = d5_branches(upoly({-1, 0, 1}), [](ExtCtxPtr<Rational> c) {
    auto x = Ext<Rational>::generator(c);
    auto y = x - one_like(x);
    return is_zero(y) ? std::string("zero") : describe(inv(y));
  });
  ASSERT_EQ(branches.size(), 2u);
  EXPECT_EQ(branches[0].modulus, upoly({-1, 1}));
  EXPECT_EQ(branches[0].value, "zero");
  EXPECT_EQ(branches[1].modulus, upoly({1, 1}));
  EXPECT_EQ(branches[1].value, "(-1/2)");
}

TEST(Ext, TowerArithmetic) {
  // K = Q(sqrt 2), L = K(sqrt(1 + sqrt 2))
  auto k = make_ext_ctx(upoly({-2, 0, 1}));
  auto r2 = Ext<Rational>::generator(k);
  auto one = one_like(r2);
  UPoly<Ext<Rational>> m({-(one + r2), zero_like(r2), one});
  auto l = make_ext_ctx(m);
  auto w = Ext<Ext<Rational>>::generator(l);
  auto w2 = w * w;
  EXPECT_TRUE(same_value(w2, Ext<Ext<Rational>>::from_base(l, one + r2)));
  auto wi = inv(w);
  EXPECT_TRUE(same_value(w * wi, one_like(w)));
}

TEST(SystemHasZeroOff, SpecExamples) {
  MPoly s = var2(0), t = var2(1);
  auto r1 = system_has_zero_off({s - t}, s - t);
  EXPECT_EQ(r1.status, ZeroStatus::NoZero);
  auto r2 = solve_bivariate({s + t, s - t + c2(2)}, s - t);
  EXPECT_EQ(r2.status, ZeroStatus::ZeroExists);
  ASSERT_TRUE(r2.rational_witness);
  EXPECT_EQ(r2.rational_witness->first, Rational(-1));
  EXPECT_EQ(r2.rational_witness->second, Rational(1));
  auto r3 = system_has_zero_off({s * s + t * t}, s * t);
  EXPECT_EQ(r3.status, ZeroStatus::ZeroExists);
  EXPECT_FALSE(r3.description.empty());
  EXPECT_THROW(system_has_zero_off({}, s), InvalidInput);
}

TEST(SystemHasZeroOff, FinitePointsAndRefutation) {
  MPoly s = var2(0), t = var2(1);
  // zeros at (s,t) = (±sqrt2, 1); excluded vanishes exactly there
  MPoly p1 = s * s - c2(2), p2 = t - c2(1);
  auto r = solve_bivariate({p1, p2}, p1 + t - c2(1));
  EXPECT_EQ(r.status, ZeroStatus::NoZero);
  ASSERT_TRUE(r.cert);
  EXPECT_TRUE(validate_elimination(*r.cert, Rational()));
  auto z = solve_bivariate({p1, p2}, s + t);
  EXPECT_EQ(z.status, ZeroStatus::ZeroExists);
  auto lim = SolveOptions{};
  lim.ext_limit = 1;
  auto u = solve_bivariate({p1, p2}, s + t, lim);
  EXPECT_EQ(u.status, ZeroStatus::Undecided);
  EXPECT_FALSE(u.limit.empty());
}

// Oracle: systems whose zero set is a known grid of rational points.
TEST(SystemHasZeroOff, AgreesWithRootByRootCheck) {
  std::mt19937_64 rng(2024);
  MPoly s = var2(0), t = var2(1);
  for (int trial = 0; trial < 100; ++trial) {
    int na = 1 + static_cast<int>(rng() % 3), nb = 1 + static_cast<int>(rng() % 3);
    std::vector<Rational> as, bs;
    while (static_cast<int>(as.size()) < na) {
      Rational v = small(rng, 5);
      if (std::find(as.begin(), as.end(), v) == as.end()) as.push_back(v);
    }
    while (static_cast<int>(bs.size()) < nb) {
      Rational v = small(rng, 5);
      if (std::find(bs.begin(), bs.end(), v) == bs.end()) bs.push_back(v);
    }
    MPoly p1 = c2(1), p2 = c2(1);
    for (const auto& a : as) p1 = p1 * (s - MPoly::constant(2, a));
    for (const auto& b : bs) p2 = p2 * (t - MPoly::constant(2, b));
    MPoly p3 = (s + c2(static_cast<long>(rng() % 3))) * p1 + (t - c2(1)) * p2;
    // excluded: a product of some vertical and horizontal lines plus a random line
    MPoly ex = c2(1);
    std::vector<bool> skip_a(as.size()), skip_b(bs.size());
    for (std::size_t i = 0; i < as.size(); ++i)
      if (rng() % 2) {
        skip_a[i] = true;
        ex = ex * (s - MPoly::constant(2, as[i]));
      }
    for (std::size_t j = 0; j < bs.size(); ++j)
      if (rng() % 2) {
        skip_b[j] = true;
        ex = ex * (t - MPoly::constant(2, bs[j]));
      }
    Rational la = small(rng, 3), lb = small(rng, 3), lc = small(rng, 3);
    MPoly line = MPoly::constant(2, la) * s + MPoly::constant(2, lb) * t + MPoly::constant(2, lc);
    if (line.is_zero()) line = c2(1);
    ex = ex * line;
    // oracle: substitute every grid point
    bool expect = false;
    for (std::size_t i = 0; i < as.size(); ++i)
      for (std::size_t j = 0; j < bs.size(); ++j)
        if (!ex.eval({as[i], bs[j]}).is_zero()) expect = true;
    SolveOptions opt;
    opt.seed = static_cast<std::uint64_t>(trial);
    auto r = solve_bivariate({p1, p2, p3}, ex, opt);
    ASSERT_NE(r.status, ZeroStatus::Undecided);
    EXPECT_EQ(r.status == ZeroStatus::ZeroExists, expect) << "trial " << trial;
    if (r.status == ZeroStatus::NoZero) {
      ASSERT_TRUE(r.cert);
      EXPECT_TRUE(validate_elimination(*r.cert, Rational()));
    } else {
      ASSERT_TRUE(r.rational_witness);
      auto [ws, wt] = *r.rational_witness;
      EXPECT_TRUE(p1.eval({ws, wt}).is_zero());
      EXPECT_TRUE(p2.eval({ws, wt}).is_zero());
      EXPECT_FALSE(ex.eval({ws, wt}).is_zero());
    }
    opt.swap_order = true;
    auto r2 = solve_bivariate({p1, p2, p3}, ex, opt);
    EXPECT_EQ(r2.status, r.status) << "dual order, trial " << trial;
  }
}

TEST(SystemHasZeroOff, CertificateTamperingIsDetected) {
  MPoly s = var2(0), t = var2(1);
  MPoly p1 = s * s - c2(2), p2 = t - c2(1);
  auto r = solve_bivariate({p1, p2}, p1 + t - c2(1));
  ASSERT_TRUE(r.cert);
  auto bad = *r.cert;
  bad.eliminant = bad.eliminant * UPoly<Rational>({Rational(1), Rational(1)});
  EXPECT_FALSE(validate_elimination(bad, Rational()));
  auto bad2 = *r.cert;
  bad2.branches.pop_back();
  EXPECT_FALSE(validate_elimination(bad2, Rational()));
}

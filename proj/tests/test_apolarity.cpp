#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "span_oracles.hpp"
#include "xrank/apolarity/cubic.hpp"
#include "xrank/apolarity/quartic.hpp"
#include "xrank/binary/sylvester.hpp"

using namespace xrank;
using fixture::xyz;

namespace {

MPoly bvar(int i) { return MPoly::var(2, i); }

std::vector<std::vector<Rational>> rows_of(const QMatrix& m) { return m.to_rows(); }

std::vector<std::vector<Rational>> transpose_rows(const QMatrix& m) { return m.transposed().to_rows(); }

std::vector<Rational> random_point(std::mt19937_64& rng, int n) {
  std::vector<Rational> p;
  for (int i = 0; i < n; ++i) p.push_back(Rational(static_cast<long>(rng() % 9) - 4));
  if (std::all_of(p.begin(), p.end(), [](const Rational& x) { return x.is_zero(); })) p[0] = Rational(1);
  return p;
}

// Sum of lambda_k * (p_k . x)^d by multinomial expansion.
MPoly expand_powers(const std::vector<std::vector<Rational>>& pts, const std::vector<Rational>& lam, int d) {
  const int n = static_cast<int>(pts[0].size());
  std::vector<Term> t;
  for (const auto& m : monomials_of_degree(n, d)) {
    Rational c;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      Rational v = lam[k] * oracle::multinomial(m);
      for (int i = 0; i < n; ++i) v *= pow(pts[k][static_cast<std::size_t>(i)], static_cast<unsigned>(m[static_cast<std::size_t>(i)]));
      c += v;
    }
    t.push_back({m, c});
  }
  return MPoly::from_terms(n, std::move(t));
}

}  // namespace

TEST(Catalecticant, SpecExamples) {
  MPoly x0 = bvar(0), x1 = bvar(1);
  EXPECT_EQ(rank(catalecticant(SymForm(x0 * x0 * x0), 1)), 1);
  // x0^3 + x1^3: d/dx0 -> 3 x0^2, d/dx1 -> 3 x1^2 against (x0^2, x0 x1, x1^2)
  auto c = catalecticant(SymForm(x0 * x0 * x0 + x1 * x1 * x1), 1);
  std::vector<std::vector<Rational>> expect{{3, 0}, {0, 0}, {0, 3}};
  EXPECT_EQ(rows_of(c), expect);
  EXPECT_EQ(rank(c), 2);
  auto quartic = SymForm(fixture::random_form(3, 4, 2024));
  EXPECT_EQ(rank(catalecticant(quartic, 2)), 6);
  EXPECT_EQ(oracle::gauss_rank(rows_of(catalecticant(quartic, 2))), 6);
  EXPECT_THROW(catalecticant(quartic, 5), InvalidInput);
}

TEST(Catalecticant, TransposeRankProperty) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 2 + static_cast<int>(rng() % 2);
    int d = 2 + static_cast<int>(rng() % 4);
    // low-rank forms make the property non-trivial
    int r = 1 + static_cast<int>(rng() % 4);
    std::vector<std::vector<Rational>> pts;
    std::vector<Rational> lam;
    for (int k = 0; k < r; ++k) {
      pts.push_back(random_point(rng, n));
      lam.push_back(Rational(static_cast<long>(1 + rng() % 5)));
    }
    MPoly body = sum_of_powers(pts, lam, d);
    if (body.is_zero()) continue;
    SymForm f(body);
    for (int a = 0; a <= d; ++a) {
      auto m = catalecticant(f, a);
      int ra = rank(m);
      EXPECT_EQ(ra, rank(catalecticant(f, d - a))) << "trial " << trial << " a " << a;
      EXPECT_EQ(ra, oracle::gauss_rank(transpose_rows(m))) << "trial " << trial;
    }
  }
}

TEST(ApolarBasis, SpecExamples) {
  MPoly x = xyz(0), y = xyz(1), z = xyz(2);
  auto b1 = apolar_basis(SymForm(x * x * x * x), 1);
  ASSERT_EQ(b1.size(), 2u);
  for (const auto& g : b1) EXPECT_TRUE(g.coeff({1, 0, 0}).is_zero());
  EXPECT_EQ(apolar_basis(SymForm(fixture::random_form(3, 3, 7)), 2).size(), 3u);
  auto b2 = apolar_basis(SymForm(bvar(0) * bvar(0) * bvar(1)), 2);
  ASSERT_EQ(b2.size(), 1u);
  EXPECT_EQ(b2[0], bvar(1) * bvar(1));
  for (const auto& g : b2) EXPECT_TRUE(apply_operator(g, bvar(0) * bvar(0) * bvar(1)).is_zero());
  (void)y;
  (void)z;
}

TEST(BorderRank, SpecExamples) {
  MPoly x = xyz(0), y = xyz(1), z = xyz(2);
  EXPECT_EQ(border_rank_lb(SymForm(pow(x, 5))), 1);
  EXPECT_EQ(border_rank_lb(SymForm(x * x * y + y * y * z)), 3);
  EXPECT_EQ(border_rank_lb(SymForm(fixture::random_form(3, 4, 2024))), 6);
}

TEST(ApolarityMembership, SpecExamples) {
  MPoly x = xyz(0), y = xyz(1), z = xyz(2);
  SymForm fermat(x * x * x + y * y * y + z * z * z);
  auto coord = reduced_points({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 2);
  EXPECT_TRUE(apolarity_membership(fermat, coord));
  EXPECT_TRUE(degree_invariant_holds(coord, 3));
  auto e0 = reduced_points({{1, 0, 0}}, 1);
  EXPECT_TRUE(apolarity_membership(SymForm(pow(x, 4)), e0));
  EXPECT_FALSE(apolarity_membership(SymForm(pow(y, 4)), e0));
  ZeroDimScheme high;
  high.generators = {pow(y, 4)};
  EXPECT_THROW(apolarity_membership(fermat, high), UnsupportedInstance);
}

TEST(ApolarityMembership, RoundTripProperty) {
  std::mt19937_64 rng(77);
  int checked = 0;
  for (int trial = 0; trial < 150; ++trial) {
    int n = 2 + static_cast<int>(rng() % 2);
    int r = 1 + static_cast<int>(rng() % 5);
    int d = n == 2 ? std::max(r, 2) + static_cast<int>(rng() % 2) : 3 + static_cast<int>(rng() % 2);
    std::vector<std::vector<Rational>> pts;
    while (static_cast<int>(pts.size()) < r) {
      auto p = random_point(rng, n);
      bool dup = false;
      for (const auto& q : pts) dup = dup || oracle::gauss_rank({p, q}) < 2;
      if (!dup) pts.push_back(p);
    }
    std::vector<Rational> lam;
    for (int k = 0; k < r; ++k) lam.push_back(Rational(static_cast<long>(1 + rng() % 7) * (rng() % 2 ? 1 : -1)));
    MPoly body = sum_of_powers(pts, lam, d);
    EXPECT_EQ(body, expand_powers(pts, lam, d));
    if (body.is_zero()) continue;
    SymForm f(body);
    auto z = reduced_points(pts, d);
    EXPECT_TRUE(apolarity_membership(f, z)) << "trial " << trial;
    EXPECT_LE(border_rank_lb(f), r) << "trial " << trial;
    if (n == 2) {
      EXPECT_LE(sylvester_rank(BinaryForm::from_mpoly(body)).first.rank, r) << "trial " << trial;
    }
    ++checked;
  }
  EXPECT_GE(checked, 100);
}

TEST(CubicRank, NormalFormHasRankFive) {
  MPoly x = xyz(0), y = xyz(1), z = xyz(2);
  auto r = cubic_rank(SymForm(y * (x * x + y * z)));
  ASSERT_TRUE(r.rank.has_value());
  EXPECT_EQ(*r.rank, 5);
  EXPECT_EQ(r.route, "tangent-conic");
  EXPECT_TRUE(r.cert.validate());
  // a non-tangent line times a smooth conic is not on this route
  auto s = cubic_rank(SymForm(x * (x * x + y * z)));
  EXPECT_NE(s.route, "tangent-conic");
}

TEST(CubicRank, FermatHasRankThree) {
  MPoly x = xyz(0), y = xyz(1), z = xyz(2);
  MPoly f = x * x * x + y * y * y + z * z * z;
  auto r = cubic_rank(SymForm(f));
  ASSERT_TRUE(r.rank.has_value());
  EXPECT_EQ(*r.rank, 3);
  EXPECT_EQ(r.cert.kind, CertKind::Decomposition);
  EXPECT_TRUE(r.cert.validate());
  // direct span check against the coordinate points
  std::vector<std::vector<Rational>> pts;
  for (const auto& p : r.cert.detail["points"]) {
    std::vector<Rational> v;
    for (const auto& c : p) v.push_back(Rational::parse(c.get<std::string>()));
    pts.push_back(v);
  }
  std::vector<Rational> lam;
  for (const auto& c : r.cert.detail["coefficients"]) lam.push_back(Rational::parse(c.get<std::string>()));
  EXPECT_EQ(expand_powers(pts, lam, 3), f);
}

TEST(CubicRank, SeededCubicsHaveRankFour) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    MPoly f = fixture::random_form(3, 3, seed);
    auto r = cubic_rank(SymForm(f));
    ASSERT_TRUE(r.rank.has_value()) << "seed " << seed << ": " << r.diagnostics;
    EXPECT_EQ(*r.rank, 4) << "seed " << seed;
    EXPECT_EQ(r.route, "two-conic");
    ASSERT_TRUE(r.scheme.has_value());
    EXPECT_TRUE(apolarity_membership(SymForm(f), *r.scheme));
    EXPECT_TRUE(r.cert.validate());
    auto span = oracle::two_conic_span(f, r.scheme->generators[0], r.scheme->generators[1]);
    ASSERT_TRUE(span.has_value()) << "seed " << seed;
    EXPECT_TRUE(*span) << "seed " << seed;
    // and a different cubic is not in that span
    auto other = oracle::two_conic_span(f + xyz(0) * xyz(0) * xyz(0), r.scheme->generators[0], r.scheme->generators[1]);
    ASSERT_TRUE(other.has_value());
    EXPECT_EQ(*other, apolarity_membership(SymForm(f + xyz(0) * xyz(0) * xyz(0)), *r.scheme));
  }
}

TEST(CubicRank, FormsInTwoVariables) {
  MPoly x = xyz(0), y = xyz(1), z = xyz(2);
  auto one = cubic_rank(SymForm(pow(x + y + z, 3)));
  EXPECT_EQ(one.rank, 1);
  EXPECT_EQ(one.route, "power");
  auto two = cubic_rank(SymForm(pow(x + y, 3) + pow(x - z, 3)));
  EXPECT_EQ(two.rank, 2);
  EXPECT_TRUE(two.cert.validate());
  auto three = cubic_rank(SymForm(x * x * y));
  EXPECT_EQ(three.rank, 3);
  EXPECT_TRUE(three.cert.validate());
  EXPECT_THROW(cubic_rank(SymForm(x * x)), InvalidInput);
  EXPECT_THROW(cubic_rank(SymForm(pow(bvar(0), 3))), InvalidInput);
}

TEST(LinearFactor, FindsRationalLines) {
  MPoly x = xyz(0), y = xyz(1), z = xyz(2);
  auto lq = linear_factor((x + Rational(2) * y - z) * (x * x + y * z));
  ASSERT_TRUE(lq.has_value());
  EXPECT_EQ(lq->first * lq->second, (x + Rational(2) * y - z) * (x * x + y * z));
  EXPECT_FALSE(linear_factor(x * x * x + y * y * y + z * z * z).has_value());
  EXPECT_TRUE(linear_factor(z * (x * x + y * y)).has_value());
}

TEST(DePaolis, FermatHessianIsDegenerate) {
  MPoly x = xyz(0), y = xyz(1), z = xyz(2);
  EXPECT_THROW(de_paolis_decompose(SymForm(x * x * x + y * y * y + z * z * z)), UnsupportedInstance);
}

TEST(DePaolis, SeededCubics) {
  for (std::uint64_t seed : {101, 102}) {
    MPoly f = fixture::random_form(3, 3, seed);
    auto dp = de_paolis_decompose(SymForm(f));
    EXPECT_EQ(dp.scheme.claimed_degree, 4);
    EXPECT_EQ(dp.scheme.support_size, 2);
    EXPECT_TRUE(degree_invariant_holds(dp.scheme, 3));
    EXPECT_TRUE(apolarity_membership(SymForm(f), dp.scheme));
    EXPECT_TRUE(dp.cert.validate());
    EXPECT_TRUE(oracle::de_paolis_jet_span(f, dp)) << "seed " << seed;
    EXPECT_FALSE(oracle::de_paolis_jet_span(f + pow(xyz(1), 3), dp)) << "seed " << seed;
  }
}

TEST(QuarticScheme, DegreesAtCheckDegree) {
  for (auto c : all_quartic_cases()) {
    auto z = quartic_scheme(c);
    EXPECT_EQ(z.claimed_degree, quartic_case_degree(c)) << to_string(c);
    EXPECT_TRUE(degree_invariant_holds(z, 4)) << to_string(c);
    for (const auto& g : z.generators) EXPECT_LE(g.total_degree(), 4);
  }
  EXPECT_EQ(quartic_case_degree(QuarticCase::I), 3);
  EXPECT_EQ(quartic_case_degree(QuarticCase::IIb), 4);
  EXPECT_EQ(quartic_case_degree(QuarticCase::IIIc), 5);
}

TEST(QuarticScheme, DoubleLineCaseMatchesIdeal) {
  MPoly x = xyz(0), y = xyz(1), z = xyz(2);
  // (x, y) cap (x^2 - z^2, y^2), degree-4 parts compared as subspaces
  auto z3 = quartic_scheme(QuarticCase::IIIc);
  auto a = ideal_piece({x, y}, 3, 4), b = ideal_piece({x * x - z * z, y * y}, 3, 4);
  auto expect = intersect_spaces(a, b, 15);
  auto got = ideal_piece(z3.generators, 3, 4);
  EXPECT_EQ(oracle::gauss_rank(expect), oracle::gauss_rank(got));
  auto both = expect;
  both.insert(both.end(), got.begin(), got.end());
  EXPECT_EQ(oracle::gauss_rank(both), oracle::gauss_rank(expect));
  // the double line y^2 lies in the ideal, the reduced line does not
  EXPECT_EQ(scheme_codim({3, {y * y}, std::nullopt, 0, 0}, 4) >= scheme_codim(z3, 4), true);
  EXPECT_EQ(oracle::gauss_rank([&] { auto s = got; s.push_back(form_coefficients(y * y * x * x, 4)); return s; }()),
            oracle::gauss_rank(got));
  EXPECT_GT(oracle::gauss_rank([&] { auto s = got; s.push_back(form_coefficients(y * x * x * x, 4)); return s; }()),
            oracle::gauss_rank(got));
}

TEST(QuarticScheme, CurvilinearOnConicAndTwoJets) {
  MPoly x = xyz(0), y = xyz(1), z = xyz(2);
  QuarticParams p;
  p.conic = x * z - y * y;
  p.points = {{1, 0, 0}};
  auto z1 = quartic_scheme(QuarticCase::I, p);
  EXPECT_EQ(scheme_codim(z1, 4), 3);
  EXPECT_EQ(z1.support_size, 1);
  // the conic is a generator; forms vanishing to order 3 at the point lie in the ideal
  auto piece = ideal_piece(z1.generators, 3, 2);
  EXPECT_EQ(oracle::gauss_rank(piece), 1);
  for (const auto& g : fat_point_forms({1, 0, 0}, 3, 4)) {
    auto s = ideal_piece(z1.generators, 3, 4);
    int r0 = oracle::gauss_rank(s);
    s.push_back(form_coefficients(g, 4));
    EXPECT_EQ(oracle::gauss_rank(s), r0);
  }
  QuarticParams two;
  two.points = {{1, 0, 0}, {0, 0, 1}};
  two.lines = {{0, 1, 0}, {1, 0, 0}};
  EXPECT_EQ(scheme_codim(quartic_scheme(QuarticCase::IIa, two), 4), 4);
}

TEST(QuarticScheme, RejectsBadParameters) {
  MPoly x = xyz(0), y = xyz(1), z = xyz(2);
  QuarticParams p;
  p.conic = x * z - y * y;
  p.points = {{0, 1, 0}};
  EXPECT_THROW(quartic_scheme(QuarticCase::I, p), InvalidInput);
  p.conic = x * x;
  p.points = {{0, 1, 0}};
  EXPECT_THROW(quartic_scheme(QuarticCase::I, p), InvalidInput);
  QuarticParams two;
  two.points = {{1, 0, 0}, {0, 1, 0}};
  two.lines = {{1, 0, 0}, {1, 0, 0}};
  EXPECT_THROW(quartic_scheme(QuarticCase::IIa, two), InvalidInput);
  EXPECT_THROW(parse_quartic_case("IV"), InvalidInput);
}

TEST(QuarticLedger, TotalsAndBounds) {
  auto l = quartic_case_table();
  std::vector<std::pair<std::string, int>> expect{{"I", 8}, {"IIa", 9}, {"IIb", 10}, {"IIIa", 10}, {"IIIb", 10}, {"IIIc", 9}};
  ASSERT_EQ(l.rows.size(), expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i) {
    EXPECT_EQ(l.rows[i].label, expect[i].first);
    EXPECT_EQ(l.rows[i].total, expect[i].second);
    int sum = 0;
    for (const auto& s : l.rows[i].summands) sum += s.second;
    EXPECT_EQ(sum, l.rows[i].total);
  }
  std::vector<int> case_one;
  for (const auto& s : l.rows[0].summands) case_one.push_back(s.second);
  EXPECT_EQ(case_one, (std::vector<int>{5, 1, 2}));
  std::vector<int> case_last;
  for (const auto& s : l.rows[5].summands) case_last.push_back(s.second);
  EXPECT_EQ(case_last, (std::vector<int>{2, 3, 4}));
  EXPECT_EQ(l.bound, 10);
  EXPECT_EQ(l.join_bound, 13);
  EXPECT_EQ(l.ambient_dim, 14);
  EXPECT_TRUE(l.join_is_proper());
  for (const auto& a : l.alternatives) EXPECT_LE(a.total, l.bound);
}

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "xrank/lab/f1.hpp"
#include "xrank/lab/families.hpp"

using namespace xrank;

TEST(Ii1Check, TruthTable) {
  auto r41 = ii1_check(4, 1);
  EXPECT_FALSE(r41.odd_route);
  EXPECT_FALSE(r41.even_route);
  EXPECT_TRUE(ii1_check(6, 1).even_route);
  EXPECT_TRUE(ii1_check(8, 1).even_route);
  EXPECT_TRUE(ii1_check(9, 1).odd_route);
  EXPECT_FALSE(ii1_check(9, 1).even_route);  // d odd
  auto r50 = ii1_check(5, 0);
  EXPECT_FALSE(r50.odd_route);
  EXPECT_FALSE(r50.even_route);
  EXPECT_EQ(ii1_check(4, 1).hirzebruch_bound, std::optional<long>(3));
  EXPECT_FALSE(ii1_check(5, 1).hirzebruch_bound.has_value());
  EXPECT_EQ(ii1_check(6, 2).cusp_count, 8);
  EXPECT_EQ(ii1_check(6, 2).tono_threshold, Rational(59, 2));
  EXPECT_THROW(ii1_check(2, 0), InvalidInput);
  EXPECT_THROW(ii1_check(5, -1), InvalidInput);
}

TEST(Ii1Check, MatchesFormulasOnGrid) {
  for (long d = 3; d <= 40; ++d)
    for (long g = 0; g <= 40; ++g) {
      auto r = ii1_check(d, g);
      EXPECT_EQ(r.odd_route, 23 * g < d * d - 3 * d - 15) << d << " " << g;
      EXPECT_EQ(r.even_route, d % 2 == 0 && 16 * g < 3 * d * d - 16 * d + 16) << d << " " << g;
      EXPECT_EQ(r.cusp_count, (d - 1) * (d - 2) / 2 - g);
      if (d % 2 == 0) {
        EXPECT_EQ(*r.hirzebruch_bound, d * (5 * d - 6) / 16);
      }
    }
}

TEST(F1Numbers, IntersectionGenusAndSystems) {
  const int d = 5;
  const F1Class y{1, d - 1}, h{1, 2}, c0{1, 0}, f{0, 1};
  EXPECT_EQ(f1_intersection(y, h), 5);
  EXPECT_EQ(f1_intersection(y, c0), 3);
  EXPECT_EQ(f1_intersection(f, y), 1);
  EXPECT_EQ(f1_intersection(f, f), 0);
  EXPECT_EQ(f1_intersection(c0, c0), -1);
  EXPECT_EQ(f1_genus(F1Class{1, 4}), 0);
  EXPECT_EQ(f1_genus(F1Class{1, 2}), 0);
  EXPECT_EQ(f1_genus(F1Class{0, 1}), 0);
  EXPECT_EQ(f1_system_dimension(y).dimension, 8);
  EXPECT_EQ(f1_system_dimension(y, 3).dimension, 5);
  for (int b = 0; b <= 6; ++b) EXPECT_EQ(f1_system_dimension(F1Class{0, b}).dimension, b);
  EXPECT_THROW(f1_system_dimension(F1Class{2, 3}), InvalidInput);
  EXPECT_THROW(f1_system_dimension(F1Class{0, 3}, 1), InvalidInput);
}

TEST(F1Numbers, FormProperties) {
  // bilinear, symmetric; sections of the ruling are rational; E drops the dimension by its length
  for (long a1 = -3; a1 <= 3; ++a1)
    for (long b1 = -3; b1 <= 3; ++b1)
      for (long a2 = -3; a2 <= 3; ++a2)
        for (long b2 = -3; b2 <= 3; ++b2) {
          F1Class u{a1, b1}, v{a2, b2};
          EXPECT_EQ(f1_intersection(u, v), f1_intersection(v, u));
          EXPECT_EQ(f1_intersection(F1Class{a1 + a2, b1 + b2}, kF1Canonical),
                    f1_intersection(u, kF1Canonical) + f1_intersection(v, kF1Canonical));
        }
  for (long b = 0; b <= 20; ++b) EXPECT_EQ(f1_genus(F1Class{1, b}), 0) << b;
  for (int dd = 3; dd <= 12; ++dd) {
    const F1Class y{1, dd - 1};
    EXPECT_EQ(f1_system_dimension(y).dimension, 2 * dd - 2);
    for (int e = 0; e <= dd - 2; ++e) EXPECT_EQ(f1_system_dimension(y, e).dimension, 2 * dd - 2 - e) << dd << " " << e;
  }
}

TEST(F1Curves, ImageAndRejections) {
  F1Curve bad;
  bad.d = 5;
  bad.a = UPoly<Rational>::monomial(Rational(1), 4);
  bad.b = UPoly<Rational>::monomial(Rational(1), 3);
  EXPECT_THROW(f1_image(bad), InvalidInput);

  auto s4 = f1_sample_curve(4, 0);
  ASSERT_EQ(s4.report.status, ReportStatus::Verified);
  ASSERT_TRUE(s4.image);
  EXPECT_EQ(s4.image->ambient(), 4);
  EXPECT_EQ(s4.image->degree(), 4);
  EXPECT_EQ(oracle::gauss_rank(s4.image->coefficient_matrix()), 5);
  EXPECT_TRUE(s4.report.revalidate());

  // the image lies on the scroll: rank of [[x0, x1, x3], [x1, x2, x4]] is at most 1
  auto s5 = f1_sample_curve(5, 0);
  ASSERT_TRUE(s5.image);
  for (long t = -3; t <= 3; ++t) {
    auto p = s5.image->point({Rational(1), Rational(t)});
    EXPECT_EQ(p[0] * p[2] - p[1] * p[1], Rational(0));
    EXPECT_EQ(p[0] * p[4] - p[1] * p[3], Rational(0));
    EXPECT_EQ(p[1] * p[4] - p[2] * p[3], Rational(0));
  }
  EXPECT_THROW(f1_sample_curve(3, 0), InvalidInput);
  EXPECT_THROW(verify_claim2(5, {{0, 0, 0, 1, 0}}), InvalidInput);
  EXPECT_THROW(verify_claim2(5, {{1, 0, 0, 0, 1}}), InvalidInput);
}

TEST(JoinBound, Values) {
  EXPECT_EQ(join_dim_bound(11, 1), 13);
  EXPECT_EQ(join_dim_bound(7, 1), 9);
  EXPECT_EQ(join_dim_bound(0, 1), 2);
}

TEST(Reports, JsonIsReproducibleAndRevalidates) {
  auto a = f1_smoothness(f1_sample_curve(5, 1).curve, 3);
  auto b = f1_smoothness(f1_sample_curve(5, 1).curve, 3);
  EXPECT_EQ(a.to_json().dump(), b.to_json().dump());
  EXPECT_EQ(a.status, ReportStatus::Verified);
  EXPECT_EQ(a.certificates.size(), 4u);
  EXPECT_TRUE(a.revalidate());
  EXPECT_EQ(exit_code(ReportStatus::Verified), 0);
  EXPECT_EQ(exit_code(ReportStatus::Refuted), 1);
  EXPECT_EQ(exit_code(ReportStatus::Undecided), 3);

  VerificationReport empty;
  empty.status = ReportStatus::Verified;
  EXPECT_FALSE(empty.revalidate());
}

TEST(Families, Ii0Rejections) {
  EXPECT_THROW(ii0_curve(3, 1, 1), InvalidInput);
  EXPECT_THROW(ii0_curve(5, 0, 1), InvalidInput);
  EXPECT_THROW(ii0_curve(5, 1, 0), InvalidInput);
  EXPECT_EQ(join_dim_bound(1, 1), 3);
}

TEST(Families, Ii0ReportRevalidates) {
  auto rep = verify_ii0(5, Rational(1), Rational(2), 1, 4);
  EXPECT_EQ(rep.status, ReportStatus::Verified);
  EXPECT_TRUE(rep.revalidate());
}

TEST(Families, StallsOfTheNormalQuartic) {
  auto nu = rational_normal_quartic();
  EXPECT_EQ(nu.ambient(), 4);
  EXPECT_EQ(nu.degree(), 4);
  PieneData pd;
  auto rep = piene_verify(0, &pd);
  ASSERT_EQ(rep.status, ReportStatus::Verified);
  EXPECT_TRUE(rep.revalidate());
  ASSERT_TRUE(pd.curve);
  // each reported stall has profile (0, 0, 1) and each point lies on its stall tangent and on an ordinary tangent
  for (const auto& s : pd.stalls) EXPECT_EQ(contact_profile(*pd.curve, s).l, (std::vector<int>{0, 0, 1}));
  for (const auto& p : pd.points) EXPECT_TRUE(on_tangent_surface(*pd.curve, p));
  auto sp = stall_polynomial(*pd.curve);
  for (const auto& s : pd.stalls) {
    if (!s[0].is_zero()) {
      EXPECT_TRUE(sp.eval(s[1] / s[0]).is_zero());
    }
  }
  // a point of the curve is on its own tangent surface; the reported center is not on the curve
  EXPECT_TRUE(on_tangent_surface(*pd.curve, pd.curve->point({Rational(1), Rational(5)})));
  EXPECT_FALSE(on_curve(nu, pd.center));
}

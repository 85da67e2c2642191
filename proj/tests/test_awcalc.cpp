#include <gtest/gtest.h>

#include <random>

#include "aw/awcalc.hpp"
#include "aw/sympoly.hpp"
#include "support.hpp"

namespace {

using aw::IdentityKind;
using aw::Rational;
using aw::XPoly;

TEST(Dq, MatchesDifferenceQuotientOracle) {
  std::mt19937_64 rng(3);
  const auto ctx = aw::QContext<Rational>::from_u(Rational(2, 3));
  const double s = ctx.sqrt_q().get_d();
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = awtest::random_poly(rng, 1 + trial % 7);
    const auto df = aw::dq(ctx, f);
    const auto sf = aw::sq(ctx, f);
    for (double theta : {0.3, 1.1, 2.9}) {
      const double x = std::cos(theta);
      EXPECT_NEAR(std::abs(awtest::dq_oracle(f, s, theta) - awtest::eval_complex(df, x)), 0.0, 1e-8);
      EXPECT_NEAR(std::abs(awtest::sq_oracle(f, s, theta) - awtest::eval_complex(sf, x)), 0.0, 1e-8);
    }
  }
}

TEST(Dq, LowersDegreeWithGammaLeadingRatio) {
  const auto ctx = aw::QContext<Rational>::from_u(Rational(1, 2));
  for (int n = 1; n <= 8; ++n) {
    const auto r = aw::apply_Dq(ctx, XPoly<Rational>::monomial(static_cast<std::size_t>(n)));
    EXPECT_EQ(r.output.degree(), n - 1);
    EXPECT_EQ(r.input_degree, n);
    ASSERT_TRUE(r.leading_ratio.has_value());
    EXPECT_EQ(*r.leading_ratio, ctx.gamma_n(n));
  }
}

TEST(Dq, AnnihilatesConstants) {
  const auto ctx = aw::QContext<Rational>::from_u(Rational(1, 2));
  EXPECT_TRUE(aw::dq(ctx, XPoly<Rational>::constant(5)).is_zero());
  EXPECT_EQ(aw::sq(ctx, XPoly<Rational>::constant(5)), XPoly<Rational>::constant(5));
}

TEST(Sq, PreservesDegreeWithAlphaLeadingRatio) {
  const auto ctx = aw::QContext<Rational>::from_u(Rational(1, 2));
  for (int n = 1; n <= 6; ++n) {
    const auto s = aw::sq(ctx, XPoly<Rational>::monomial(static_cast<std::size_t>(n)));
    EXPECT_EQ(s.degree(), n);
    EXPECT_EQ(s.leading(), ctx.alpha_n(n));
  }
}

TEST(Tnu, ShiftsTheArgument) {
  const auto ctx = aw::QContext<Rational>::from_u(Rational(1, 2));
  const auto t = aw::apply_Tnu(ctx, XPoly<Rational>::x(), 1);
  // x -> (s z + 1/(s z))/2 with s = 1/4
  EXPECT_EQ(t.coeff(1), Rational(1, 8));
  EXPECT_EQ(t.coeff(-1), Rational(2));
  EXPECT_THROW(aw::apply_Tnu(ctx, XPoly<Rational>::x(), 2), aw::UsageError);
}

TEST(Identities, ProductAndCompositionRulesOnRandomPairs) {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> deg(0, 6);
  for (int trial = 0; trial < 20; ++trial) {
    const auto ctx = aw::QContext<Rational>::from_u(awtest::random_unit(rng, 9));
    const auto f = awtest::random_poly(rng, deg(rng));
    const auto g = awtest::random_poly(rng, deg(rng));
    for (auto kind : {IdentityKind::ProductD, IdentityKind::ProductS, IdentityKind::ComposeDS,
                      IdentityKind::ComposeSS}) {
      EXPECT_TRUE(aw::verify_identity(ctx, kind, f, std::optional<XPoly<Rational>>(g)).is_zero())
          << aw::identity_name(kind) << " trial " << trial;
    }
  }
}

TEST(Identities, MissingSecondFactorIsUsageError) {
  const auto ctx = aw::QContext<Rational>::from_u(Rational(1, 2));
  EXPECT_THROW(aw::verify_identity(ctx, IdentityKind::ProductD, XPoly<Rational>::x(), std::optional<XPoly<Rational>>()),
               aw::UsageError);
}

TEST(Identities, FloatBackendResidualIsSmall) {
  std::mt19937_64 rng(5);
  const auto ctx = aw::QContext<double>::from_u(0.5);
  const auto f = awtest::random_poly(rng, 5).map<double>([](const Rational& v) { return v.get_d(); });
  const auto g = awtest::random_poly(rng, 4).map<double>([](const Rational& v) { return v.get_d(); });
  for (auto kind : {IdentityKind::ProductD, IdentityKind::ProductS, IdentityKind::ComposeDS,
                    IdentityKind::ComposeSS}) {
    EXPECT_LT(aw::verify_identity(ctx, kind, f, std::optional<XPoly<double>>(g)).max_abs_coeff(), 1e-8);
  }
}

}  // namespace

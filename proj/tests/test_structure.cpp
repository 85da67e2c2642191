#include <gtest/gtest.h>

#include <random>

#include "aw/awcalc.hpp"
#include "aw/structure.hpp"
#include "aw/zeros.hpp"
#include "support.hpp"

namespace {

using aw::AWParams;
using aw::QContext;
using aw::Rational;
using aw::Slot;
using aw::XPoly;

AWParams<Rational> base_params() {
  return {Rational(1, 2), Rational(1, 3), Rational(1, 5), Rational(1, 7), QContext<Rational>::from_u(Rational(1, 2))};
}

std::vector<AWParams<Rational>> param_sets() {
  std::mt19937_64 rng(1234);
  std::vector<AWParams<Rational>> out{base_params()};
  out.push_back({Rational(-2, 3), Rational(3, 4), Rational(1, 6), Rational(5, 9), QContext<Rational>::from_u(Rational(3, 5))});
  out.push_back(awtest::random_admissible_u(rng));
  return out;
}

TEST(DDE, ExactResidualVanishes) {
  for (const auto& p : param_sets()) {
    for (int n = 0; n <= 8; ++n) EXPECT_TRUE(aw::verify_dde(p, n).is_zero()) << n;
  }
}

TEST(DDE, DegreeOneSolution) {
  // The n = 1 equation reads psi * 1 + lambda_1 P_1 = 0.
  const auto p = base_params();
  const auto dd = aw::dde_data(p);
  EXPECT_EQ(aw::aw_monic(p, 1), dd.psi / (-dd.lambda(1)));
}

TEST(DDE, LambdaZeroAtDegreeZero) { EXPECT_EQ(aw::dde_data(base_params()).lambda(0), 0); }

TEST(Pi, FactoredFormAgrees) {
  for (const auto& p : param_sets()) {
    const auto pi = aw::pi_poly(p);
    EXPECT_TRUE(pi.factored_check);
    EXPECT_EQ(pi.pi.degree(), 4);
  }
}

TEST(Contiguous, AllFourSlots) {
  for (const auto& p : param_sets()) {
    for (int n = 0; n <= 5; ++n) {
      for (auto slot : {Slot::A, Slot::B, Slot::C, Slot::D}) {
        EXPECT_TRUE(aw::verify_contiguous(p, n, slot).is_zero()) << "n=" << n << " slot=" << static_cast<int>(slot);
      }
    }
  }
}

TEST(Contiguous, WrongCoefficientIsDetected) {
  const auto p = base_params();
  const auto shifted = p.with(p.a * p.q(), p.b, p.c, p.d);
  const XPoly<Rational> lhs = XPoly<Rational>::linear((p.a + 1 / p.a) / 2) * aw::aw_monic(shifted, 3);
  const Rational k = aw::contiguous_k(p, 3, Slot::A) + Rational(1, 1000);
  EXPECT_FALSE((lhs - aw::aw_monic(p, 4) - aw::aw_monic(p, 3) * k).is_zero());
}

TEST(Structure, ExactResidualVanishes) {
  for (const auto& p : param_sets()) {
    for (int n = 2; n <= 8; ++n) EXPECT_TRUE(aw::verify_structure_relation(p, n).is_zero()) << n;
  }
}

TEST(Structure, TopCoefficient) {
  const auto p = base_params();
  for (int n = 2; n <= 6; ++n) {
    EXPECT_EQ(aw::structure_coefficients(p, n)[2], 16 * p.abcd() * p.ctx.gamma_n(n) * p.ctx.gamma_n(n - 1));
  }
}

TEST(Structure, SmallDegreeRejected) {
  EXPECT_THROW(aw::structure_coefficients(base_params(), 1), aw::UsageError);
}

TEST(Band, ProfileMatchesStructureCoefficients) {
  const auto p = base_params();
  const auto family = aw::aw_monic_family(p, 11);
  const auto pi = aw::pi_poly(p).pi;
  for (int n = 0; n <= 8; ++n) {
    const auto profile = aw::band_profile(p.ctx, std::span<const XPoly<Rational>>(family.data(), n + 3), pi, n);
    for (int k = 0; k < n - 2; ++k) EXPECT_EQ(profile[static_cast<std::size_t>(k)], 0) << n << " " << k;
    if (n >= 2) {
      const auto sc = aw::structure_coefficients(p, n);
      for (int j = -2; j <= 2; ++j) EXPECT_EQ(profile[static_cast<std::size_t>(n + j)], sc[j]);
    }
  }
}

TEST(Band, PerturbedFamilyLeavesTheBand) {
  const auto p = base_params();
  auto rec = aw::extract_recurrence(p, 10);
  rec.b_seq.at(2) += Rational(1, 10);  // b_3
  rec.provenance = aw::Provenance::Perturbed;
  const auto family = aw::family_from_recurrence(rec, 11);
  const auto pi = aw::pi_poly(p).pi;
  bool violated = false;
  for (int n = 0; n <= 8; ++n) {
    const auto profile = aw::band_profile(p.ctx, std::span<const XPoly<Rational>>(family.data(), n + 3), pi, n);
    for (int k = 0; k < n - 2; ++k) violated = violated || profile[static_cast<std::size_t>(k)] != 0;
  }
  EXPECT_TRUE(violated);
}

TEST(Band, RejectsShortFamily) {
  const auto p = base_params();
  const auto family = aw::aw_monic_family(p, 3);
  EXPECT_THROW(aw::band_profile(p.ctx, std::span<const XPoly<Rational>>(family), aw::pi_poly(p).pi, 2),
               aw::UsageError);
}

TEST(Expansion, FiveTermBandAndTopCoefficient) {
  for (const auto& p : param_sets()) {
    for (int n = 4; n <= 8; ++n) {
      const auto e = aw::expand_in_d2_basis(p, n);
      for (int k = 2; k < n - 2; ++k) EXPECT_EQ(e.at(k), 0);
      EXPECT_EQ(e.band[4], 1 / (p.ctx.gamma_n(n + 2) * p.ctx.gamma_n(n + 1)));
    }
  }
}

TEST(Expansion, ReassemblesPn) {
  const auto p = base_params();
  const int n = 6;
  const auto e = aw::expand_in_d2_basis(p, n);
  XPoly<Rational> sum;
  for (int k = n - 2; k <= n + 2; ++k) sum += aw::dq2(p.ctx, aw::aw_monic(p, k)) * e.at(k);
  EXPECT_EQ(sum, aw::aw_monic(p, n));
}

TEST(Shift, DqLowersDegreeAndShiftsParameters) {
  const auto p = base_params();
  const auto shifted = p.scaled(p.ctx.sqrt_q());
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(aw::dq(p.ctx, aw::aw_monic(p, n)), aw::aw_monic(shifted, n - 1) * p.ctx.gamma_n(n));
  }
}

TEST(Koornwinder, ReducedIdentityHolds) {
  for (const auto& p : param_sets()) {
    for (int n = 0; n <= 6; ++n) EXPECT_TRUE(aw::verify_koornwinder_reduced(p, n).is_zero()) << n;
  }
}

TEST(Koornwinder, OperatorIsSymmetricUnderParameterPermutation) {
  const auto p = base_params();
  const auto swapped = p.with(p.d, p.c, p.b, p.a);
  const auto f = aw::aw_monic(p, 3);
  EXPECT_EQ(aw::koornwinder_L(p, f), aw::koornwinder_L(swapped, f));
}

TEST(TwoTerm, QuadraticMatchesClosedForm) {
  for (const auto& p : param_sets()) {
    for (int n = 2; n <= 6; ++n) {
      const auto t = aw::reduce_structure_relation(p, n);
      const auto g = aw::g2_coefficients(p, n);
      EXPECT_EQ(t.quadratic * *g.scale, XPoly<Rational>({g.c0, g.c1, g.c2})) << n;
    }
  }
}

TEST(TwoTerm, LinearPartIsMultipleOfPsi) {
  const auto p = base_params();
  const Rational q = p.q(), s = p.ctx.sqrt_q();
  const auto psi = aw::dde_data(p).psi;
  for (int n = 2; n <= 6; ++n) {
    const Rational qn = aw::ipow(q, n);
    const Rational factor = (1 - q) * (p.abcd() * qn * qn - q) / (4 * p.a * s * (qn - q) * (qn - 1) * p.b * p.c * p.d);
    EXPECT_EQ(aw::reduce_structure_relation(p, n).linear, psi * factor) << n;
  }
}

// The series loses about |log10 q| digits per degree, so the double check
// uses a base close to 1.
TEST(FloatBackends, ResidualsAreSmall) {
  auto wide = base_params();
  wide.ctx = aw::QContext<aw::Rational>::from_u(aw::Rational(9, 10));
  const auto p = awtest::convert<double>(wide);
  for (int n = 2; n <= 6; ++n) {
    EXPECT_LT(aw::verify_structure_relation(p, n).max_abs_coeff(), 1e-6);
    EXPECT_LT(aw::verify_dde(p, n).max_abs_coeff(), 1e-6);
  }
  aw::PrecisionScope scope(256);
  const auto big = awtest::convert<aw::BigFloat>(base_params());
  for (int n = 2; n <= 6; ++n) {
    EXPECT_LT(aw::verify_structure_relation(big, n).max_abs_coeff(), aw::BigFloat("1e-30"));
  }
}

}  // namespace

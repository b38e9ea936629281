#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>

#include <cliffym/cliffym.hpp>

#include "test_support.hpp"

using namespace cliffym;
using cliffym::testing::brute_product;

namespace {

Multivector e(Signature sig, const std::string& name) { return Multivector::blade(sig, parse_blade(name, sig.n())); }

}  // namespace

TEST(Signature, RejectsOutOfRangeDimensions) {
  EXPECT_THROW(Signature(0, 0), DomainError);
  EXPECT_THROW(Signature(-1, 3), DomainError);
  EXPECT_THROW(Signature(6, 5), DomainError);
  EXPECT_NO_THROW(Signature(5, 5));
  const Signature s(2, 3);
  EXPECT_EQ(s.n(), 5);
  EXPECT_EQ(s.blade_count(), 32u);
  EXPECT_EQ(s.metric(2), 1);
  EXPECT_EQ(s.metric(3), -1);
  EXPECT_EQ(s.negative_mask(), 0b11100u);
}

TEST(Signature, MaxDimensionFromEnvironment) {
  ::setenv("CLIFFORD_YM_NMAX", "4", 1);
  EXPECT_EQ(max_dimension(), 4);
  EXPECT_THROW(Signature(3, 2), DomainError);
  ::setenv("CLIFFORD_YM_NMAX", "garbage", 1);
  EXPECT_EQ(max_dimension(), 10);
  ::unsetenv("CLIFFORD_YM_NMAX");
}

TEST(Blades, ParseAndName) {
  EXPECT_EQ(parse_blade("e", 3), 0u);
  EXPECT_EQ(parse_blade("e13", 3), 0b101u);
  EXPECT_EQ(parse_blade("e1_10", 10), (1u << 0) | (1u << 9));
  EXPECT_THROW(parse_blade("e21", 3), DomainError);
  EXPECT_THROW(parse_blade("e4", 3), DomainError);
  EXPECT_THROW(parse_blade("x1", 3), DomainError);
  EXPECT_EQ(blade_name(0b101u, 3), "e13");
}

TEST(GeometricProduct, GeneratorRelations) {
  const Signature sig(1, 1);
  const auto e1 = e(sig, "e1"), e2 = e(sig, "e2");
  EXPECT_EQ(e1 * e1, Multivector::scalar(sig, 1.0));
  EXPECT_EQ(e2 * e2, Multivector::scalar(sig, -1.0));
  EXPECT_EQ(e1 * e2, e(sig, "e12"));
  EXPECT_EQ(e2 * e1, -e(sig, "e12"));
  EXPECT_EQ(e1 * e2 + e2 * e1, Multivector(sig));
}

TEST(GeometricProduct, PseudoscalarSquares) {
  // (e12)^2 = -1 in Cl(2,0), +1 in Cl(1,1).
  EXPECT_EQ(e(Signature(2, 0), "e12") * e(Signature(2, 0), "e12"), Multivector::scalar(Signature(2, 0), -1.0));
  EXPECT_EQ(e(Signature(1, 1), "e12") * e(Signature(1, 1), "e12"), Multivector::scalar(Signature(1, 1), 1.0));
  // (e123)^2 = -1 in Cl(3,0).
  EXPECT_EQ(e(Signature(3, 0), "e123") * e(Signature(3, 0), "e123"), Multivector::scalar(Signature(3, 0), -1.0));
}

TEST(GeometricProduct, MatchesBruteForceOnAllBladePairs) {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{3, 0}, {1, 2}, {2, 2}, {0, 5}, {3, 3}}) {
    const Signature sig(p, q);
    for (unsigned a = 0; a < sig.blade_count(); ++a)
      for (unsigned b = 0; b < sig.blade_count(); ++b) {
        const auto [s, m] = cliffym::testing::brute_blade_product(a, b, sig);
        EXPECT_EQ(blade_sign(a, b, sig.negative_mask()), s) << sig.to_string() << " " << a << " " << b;
        EXPECT_EQ(m, a ^ b);
      }
  }
}

TEST(GeometricProduct, MatchesBruteForceOnRandomElements) {
  Rng rng(11);
  for (int n = 1; n <= 6; ++n) {
    const Signature sig((n + 1) / 2, n / 2);
    for (int i = 0; i < 5; ++i) {
      const auto u = random_multivector(sig, rng), v = random_multivector(sig, rng);
      EXPECT_LT((u * v - brute_product(u, v)).max_norm(), 1e-13);
    }
  }
}

TEST(GeometricProduct, SignatureMismatchThrows) {
  EXPECT_THROW(e(Signature(2, 0), "e1") * e(Signature(1, 1), "e1"), SignatureMismatch);
  EXPECT_THROW(e(Signature(2, 0), "e1") + e(Signature(3, 0), "e1"), SignatureMismatch);
}

TEST(Commutator, OfGeneratorsIsTwiceTheBivector) {
  const Signature sig(2, 0);
  const auto e1 = e(sig, "e1"), e2 = e(sig, "e2");
  const Multivector expected = 2.0 * e(sig, "e12");
  EXPECT_EQ(commutator(e1, e2), expected);
  EXPECT_EQ(brute_product(e1, e2) - brute_product(e2, e1), expected);
}

TEST(GradeProjection, PartitionsTheElement) {
  Rng rng(3);
  const Signature sig(2, 3);
  const auto u = random_multivector(sig, rng);
  Multivector sum(sig);
  for (int k = 0; k <= sig.n(); ++k) {
    const auto pk = grade_project(u, k);
    EXPECT_EQ(grade_project(pk, k), pk);
    sum += pk;
  }
  EXPECT_EQ(sum, u);
  EXPECT_THROW(grade_project(u, 6), DomainError);
  EXPECT_THROW(grade_project(u, -1), DomainError);
}

TEST(Trace, ScalarPartAndCyclicity) {
  Rng rng(5);
  const Signature sig(3, 1);
  EXPECT_EQ(trace(Multivector::scalar(sig, 1.0)), Complex(1.0));
  EXPECT_EQ(trace(e(sig, "e12")), Complex(0.0));
  const auto u = random_multivector(sig, rng), v = random_multivector(sig, rng);
  EXPECT_LT(std::abs(trace(u * v) - trace(v * u)), 1e-13);
  EXPECT_LT(std::abs(trace(commutator(u, v))), 1e-13);
}

TEST(Reversion, SignsAndAntiautomorphism) {
  const Signature sig(3, 0);
  EXPECT_EQ(reversion(e(sig, "e12")), -e(sig, "e12"));
  EXPECT_EQ(reversion(e(sig, "e123")), -e(sig, "e123"));
  EXPECT_EQ(reversion(e(sig, "e1")), e(sig, "e1"));
  Rng rng(8);
  const auto u = random_multivector(sig, rng), v = random_multivector(sig, rng);
  EXPECT_LT((reversion(u * v) - reversion(v) * reversion(u)).max_norm(), 1e-13);
  EXPECT_EQ(reversion(reversion(u)), u);
}

TEST(Center, EvenAndOddDimensions) {
  Rng rng(9);
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 0}, {2, 1}, {1, 3}, {3, 2}}) {
    const Signature sig(p, q);
    const auto u = random_multivector(sig, rng), v = random_multivector(sig, rng);
    const auto z = center_project(u);
    // The center commutes with everything; the complement has no center part.
    EXPECT_LT(commutator(z, v).max_norm(), 1e-13) << sig.to_string();
    EXPECT_EQ(center_project(circ_project(u)).max_norm(), 0.0);
    EXPECT_EQ(z + circ_project(u), u);
    const unsigned top = static_cast<unsigned>(sig.blade_count() - 1);
    EXPECT_EQ(z[top] != Complex{}, sig.n() % 2 == 1);
  }
}

TEST(Center, PseudoscalarOfEvenDimensionIsNotCentral) {
  const Signature sig(2, 0);
  EXPECT_GT(commutator(e(sig, "e12"), e(sig, "e1")).max_norm(), 1.0);
  EXPECT_EQ(center_project(e(sig, "e12")).max_norm(), 0.0);
}

TEST(RequireReal, RejectsImaginaryParts) {
  const Signature sig(2, 0);
  EXPECT_NO_THROW(require_real(e(sig, "e12")));
  EXPECT_THROW(require_real(Multivector::scalar(sig, Complex(0, 1))), DomainError);
}

TEST(Exponential, BivectorRotation) {
  const Signature sig(2, 0);
  for (double t : {0.0, 0.3, 1.0, 2.5, -4.0}) {
    const auto r = exponential(t * e(sig, "e12"));
    Multivector expected = Multivector::scalar(sig, std::cos(t)) + std::sin(t) * e(sig, "e12");
    EXPECT_LT((r - expected).max_norm(), 1e-14) << t;
  }
}

TEST(Exponential, HyperbolicForSquareOne) {
  const Signature sig(1, 1);
  const double t = 0.7;
  const auto r = exponential(t * e(sig, "e1"));
  EXPECT_LT(std::abs(r[0] - std::cosh(t)), 1e-14);
  EXPECT_LT(std::abs(r[1] - std::sinh(t)), 1e-14);
}

TEST(Exponential, ProductOfInversesAndErrors) {
  Rng rng(4);
  const Signature sig(2, 2);
  const auto a = random_multivector(sig, rng) * 0.5;
  EXPECT_LT((exponential(a) * exponential(-a) - Multivector::scalar(sig, 1.0)).max_norm(), 1e-13);
  EXPECT_THROW(exponential(a, 1e-15, 3), ConvergenceError);
  EXPECT_THROW(exponential(a, 0.0), DomainError);
  try {
    exponential(a * 10.0, 1e-15, 5);
  } catch (const ConvergenceError& err) {
    EXPECT_GT(err.last_term_norm(), 1e-15);
  }
}

TEST(Inverse, TwoSidedAndSingular) {
  Rng rng(12);
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 0}, {1, 2}, {2, 2}, {3, 2}}) {
    const Signature sig(p, q);
    const auto u = random_multivector(sig, rng);
    const auto v = inverse(u);
    EXPECT_LT((u * v - Multivector::scalar(sig, 1.0)).max_norm(), 1e-10) << sig.to_string();
    EXPECT_LT((v * u - Multivector::scalar(sig, 1.0)).max_norm(), 1e-10) << sig.to_string();
  }
  // (1 + e1)(1 - e1) = 0 when e1^2 = 1.
  const Signature sig(1, 0);
  EXPECT_THROW(inverse(Multivector::scalar(sig, 1.0) + e(sig, "e1")), SingularError);
  EXPECT_THROW(inverse(Multivector(Signature(2, 1))), SingularError);
}

TEST(MultivectorJson, RoundTrip) {
  Rng rng(21);
  const Signature sig(1, 2);
  const auto u = random_multivector(sig, rng);
  const Json j = multivector_json(u);
  EXPECT_EQ(j.at("p"), 1);
  EXPECT_EQ(j.at("q"), 2);
  EXPECT_EQ(j.at("coeffs").size(), 8u);
  EXPECT_EQ(parse_multivector(Json::parse(j.dump())), u);
  Json bad = j;
  bad["coeffs"].erase(0);
  EXPECT_THROW(parse_multivector(bad), ConfigError);
}

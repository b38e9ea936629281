#include <gtest/gtest.h>

#include <cliffym/cliffym.hpp>

#include "test_support.hpp"

using namespace cliffym;

namespace {

Rational R(const std::string& s) { return rational_from_string(s); }

// Random element supported on grade k only.
Multivector random_graded(Signature sig, int k, Rng& rng) { return grade_project(random_multivector(sig, rng), k); }

}  // namespace

TEST(Eigenvalues, ClosedForm) {
  const std::vector<long long> n4{4, -2, 0, 2, -4};
  for (int k = 0; k <= 4; ++k) EXPECT_EQ(contraction_eigenvalue(4, k), n4[k]);
  const std::vector<long long> n3{3, -1, -1, 3};
  for (int k = 0; k <= 3; ++k) EXPECT_EQ(contraction_eigenvalue(3, k), n3[k]);
  // Odd n: lambda_k = lambda_{n-k}.
  for (int n = 1; n <= 9; n += 2)
    for (int k = 0; k <= n; ++k) EXPECT_EQ(contraction_eigenvalue(n, k), contraction_eigenvalue(n, n - k));
}

TEST(Contraction, ActsByEigenvalueOnEachGrade) {
  Rng rng(17);
  for (int n = 1; n <= 6; ++n) {
    const Signature sig(n - n / 3, n / 3);
    for (int k = 0; k <= n; ++k) {
      const auto u = random_graded(sig, k, rng);
      const auto f = contract(u);
      EXPECT_LT((f - u * static_cast<double>(contraction_eigenvalue(n, k))).max_norm(), 1e-12) << n << " " << k;
    }
  }
}

TEST(Contraction, GeneratorSumsAndPowers) {
  const Signature sig(1, 2);
  const auto up = generators(sig);
  const auto down = lower_generators(sig);
  ASSERT_EQ(up.size(), 3u);
  EXPECT_EQ(down[1], -up[1]);
  // e^a e_a = n e.
  Multivector s(sig);
  for (int a = 0; a < 3; ++a) s += up[a] * down[a];
  EXPECT_EQ(s, Multivector::scalar(sig, 3.0));
  Rng rng(2);
  const auto u = random_multivector(sig, rng);
  EXPECT_LT((contract_power(u, 2) - contract(contract(u))).max_norm(), 1e-13);
  EXPECT_EQ(contract_power(u, 0), u);
}

TEST(Tables, EvenDimensionTwo) {
  const auto t = build_table(2);
  EXPECT_TRUE(t.even());
  const IntegerMatrix a{{1, 1, 1}, {2, 0, -2}, {4, 0, 4}};
  EXPECT_EQ(t.A(), a);
  const RationalMatrix b{{R("0"), R("1/4"), R("1/8")}, {R("1"), R("0"), R("-1/4")}, {R("0"), R("-1/4"), R("1/8")}};
  EXPECT_EQ(t.B(), b);
  EXPECT_EQ(t.r(), (std::vector<Rational>{R("1/2"), R("-1/16"), R("-3/32")}));
  EXPECT_THROW(t.D(), DomainError);
  EXPECT_THROW(t.s(), DomainError);
}

TEST(Tables, EvenDimensionFour) {
  const auto t = build_table(4);
  EXPECT_EQ(t.B()[2], (std::vector<Rational>{R("1"), R("0"), R("-5/16"), R("0"), R("1/64")}));
  EXPECT_EQ(t.r(), (std::vector<Rational>{R("1/4"), R("67/576"), R("73/2304"), R("-19/2304"), R("-25/9216")}));
  EXPECT_FALSE(t.mus[0].has_value());
  EXPECT_EQ(*t.mus[1], R("1/6"));
  EXPECT_EQ(*t.mus[2], R("1/4"));
  EXPECT_EQ(*t.mus[3], R("1/2"));
  EXPECT_EQ(*t.mus[4], R("1/8"));
}

TEST(Tables, OddDimensionThree) {
  const auto t = build_table(3);
  EXPECT_FALSE(t.even());
  EXPECT_EQ(t.projection_count(), 2);
  const IntegerMatrix d{{1, 1}, {3, -1}};
  EXPECT_EQ(t.D(), d);
  const RationalMatrix g{{R("1/4"), R("1/4")}, {R("3/4"), R("-1/4")}};
  EXPECT_EQ(t.G(), g);
  EXPECT_EQ(t.s(), (std::vector<Rational>{R("3/16"), R("-1/16")}));
  EXPECT_FALSE(t.mus[3].has_value());
  EXPECT_THROW(t.A(), DomainError);
}

TEST(Tables, InverseIsExactForAllDimensions) {
  for (int n = 1; n <= 10; ++n) {
    const auto t = build_table(n);
    EXPECT_EQ(multiply(to_rational(t.vandermonde), t.inverse), identity_matrix(t.vandermonde.size())) << n;
    EXPECT_EQ(multiply(t.inverse, to_rational(t.vandermonde)), identity_matrix(t.vandermonde.size())) << n;
  }
}

TEST(Tables, DimensionOutOfRange) {
  EXPECT_THROW(build_table(0), DomainError);
  EXPECT_THROW(build_table(11), DomainError);
}

TEST(Tables, FullVandermondeForOddDimensionIsSingular) {
  for (int n = 1; n <= 9; n += 2) {
    std::vector<long long> nodes;
    for (int k = 0; k <= n; ++k) nodes.push_back(contraction_eigenvalue(n, k));
    EXPECT_THROW(invert_exact(vandermonde_matrix(nodes)), SingularError) << n;
  }
}

TEST(ExactInverse, MatchesHandComputedCase) {
  const IntegerMatrix a{{2, 1}, {7, 4}};
  const RationalMatrix expected{{R("4"), R("-1")}, {R("-7"), R("2")}};
  EXPECT_EQ(invert_exact(a), expected);
  // Needs a row swap.
  const IntegerMatrix b{{0, 1}, {1, 0}};
  EXPECT_EQ(invert_exact(b), to_rational(b));
}

TEST(Projection, ContractionsReproduceGradeProjection) {
  Rng rng(31);
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 0}, {1, 1}, {3, 1}, {2, 2}, {4, 2}}) {
    const Signature sig(p, q);
    const auto t = build_table(sig.n());
    const auto u = random_multivector(sig, rng);
    for (int k = 0; k <= sig.n(); ++k)
      EXPECT_LT((project_via_contractions(u, k, t) - grade_project(u, k)).max_norm(), 1e-11) << sig.to_string() << k;
    EXPECT_THROW(project_via_contractions(u, sig.n() + 1, t), DomainError);
  }
}

TEST(Projection, OddDimensionGivesGradePairs) {
  Rng rng(32);
  for (auto [p, q] : std::vector<std::pair<int, int>>{{3, 0}, {2, 1}, {3, 2}, {1, 4}}) {
    const Signature sig(p, q);
    const int n = sig.n();
    const auto t = build_table(n);
    const auto u = random_multivector(sig, rng);
    for (int k = 0; k <= (n - 1) / 2; ++k) {
      const auto expected = grade_project(u, k) + grade_project(u, n - k);
      EXPECT_LT((project_via_contractions(u, k, t) - expected).max_norm(), 1e-11) << sig.to_string() << k;
    }
    EXPECT_THROW(project_via_contractions(u, (n + 1) / 2, t), DomainError);
  }
}

TEST(Spectrum, PairingIdentityInIntegers) {
  // -2 - lambda_m = lambda_{m + (-1)^{m+1}}, hence (2 + n + lambda_m) / (n - lambda_{m'}) = 1.
  for (int n = 2; n <= 10; n += 2)
    for (int m = 1; m <= n; ++m) {
      const int partner = m + (m % 2 == 1 ? 1 : -1);
      if (partner > n) continue;
      EXPECT_EQ(-2 - contraction_eigenvalue(n, m), contraction_eigenvalue(n, partner)) << n << " " << m;
      EXPECT_EQ(Rational(2 + n + contraction_eigenvalue(n, m)) / Rational(n - contraction_eigenvalue(n, partner)), Rational(1));
    }
}

TEST(Golden, FreshTablesMatch) { EXPECT_TRUE(golden_check().empty()); }

TEST(Golden, PerturbedEigenvaluesAreDetected) {
  const auto shifted = golden_check([](int n, int k) { return contraction_eigenvalue(n, k) + (k == 1 ? 1 : 0); });
  EXPECT_FALSE(shifted.empty());
  const auto flipped = golden_check([](int n, int k) { return static_cast<long long>(n - 2 * k); });
  EXPECT_FALSE(flipped.empty());
}

TEST(TableJson, ExactRationalsAndLayout) {
  const Json j = table_json(build_table(4));
  EXPECT_EQ(j.at("parity"), "even");
  EXPECT_EQ(j.at("lambdas"), Json::array({4, -2, 0, 2, -4}));
  const Json& row = j.at("B").at(2);
  EXPECT_EQ(parse_rational(row.at(2)), R("-5/16"));
  EXPECT_EQ(row.at(2).at("num"), "-5");
  EXPECT_EQ(row.at(2).at("den"), "16");
  EXPECT_TRUE(j.at("mu").at(0).is_null());
  EXPECT_EQ(parse_rational(j.at("r").at(1)), R("67/576"));
  EXPECT_TRUE(j.contains("indexing"));

  const Json odd = table_json(build_table(3));
  EXPECT_EQ(odd.at("D").at(1), Json::array({"3", "-1"}));
  EXPECT_TRUE(odd.contains("G"));
  EXPECT_TRUE(odd.contains("s"));
  EXPECT_FALSE(odd.contains("A"));
}

#include <gtest/gtest.h>

#include "affwt/delta.hpp"
#include "affwt/error.hpp"

using namespace affwt;

namespace {

const CartanDatum A1{AffineType(Family::A, 1)};
const CartanDatum A2{AffineType(Family::A, 2)};
const CartanDatum A4{AffineType(Family::A, 4)};
const CartanDatum B3{AffineType(Family::B, 3)};
const CartanDatum B4{AffineType(Family::B, 4)};

Monomial M(const char* text) { return Monomial::parse(text); }

Monomial word(const CartanDatum& d, const char* w) {
  return apply_word(d, CrystalVariant::ModifiedInfinity, Monomial(), parse_word(w)).value();
}

const Monomial kMinusDelta = Monomial::parse("Y(0,0)^-1 Y(0,1) Y(1,1) Y(1,2)^-1");
const Monomial kSecondA1 = Monomial::parse("Y(0,0)^-1 Y(0,1)^2 Y(0,2)^-1");
const Monomial kA4 = Monomial::parse("Y(0,0)^-3 Y(0,1)^-1 Y(1,0)^2 Y(1,1)^-1 Y(2,0) Y(2,3) Y(3,3)^-1 Y(4,1)^2");
const Monomial kB3 = Monomial::parse("Y(0,3)^-1 Y(1,3)^-1 Y(2,2) Y(3,0)^-1 Y(3,1)");

}  // namespace

TEST(A1, Recursion) {
  EXPECT_TRUE(a1_recursion(A1, Monomial()).empty());
  EXPECT_EQ(a1_recursion(A1, kMinusDelta), (ATable{{0, 0, -1}, {1, 1, -1}}));
  auto t = a1_recursion(A1, kSecondA1);
  EXPECT_EQ(t.get(0, 0), -1);
  EXPECT_EQ(t.get(0, 1), -1);
  EXPECT_EQ(t.get(0, 2), 0);
  EXPECT_EQ(expand_a_product(A1, t), kSecondA1);
}

TEST(A1, ClosedForm) {
  EXPECT_EQ(a1_closed(kSecondA1, 0, 0), -1);
  EXPECT_EQ(a1_closed(kSecondA1, 0, 1), -1);
  EXPECT_EQ(a1_closed(kSecondA1, 0, 2), 0);
}

TEST(A1, ColumnSum) {
  EXPECT_EQ(d_a1(M("Y(0,0)^-3 Y(0,1)^-2 Y(0,2)^-1 Y(1,1)^5 Y(1,2)")), -4);
  EXPECT_EQ(d_a1(kSecondA1), -2);
  EXPECT_EQ(d_a1(Monomial()), 0);
  EXPECT_EQ(delta_coefficient(A1, word(A1, "0,1,0,0,0")), -4);
  EXPECT_EQ(delta_coefficient(A1, word(A1, "0,0,0,1,0")), -4);
}

TEST(A1, RejectsNonMembers) {
  EXPECT_THROW(a1_recursion(A1, M("Y(0,0)")), NotInCrystalError);
  EXPECT_THROW(delta_coefficient(A1, M("Y(1,2)^-1")), NotInCrystalError);
}

TEST(CyclicDifferences, Examples) {
  std::vector<Int> zero{0, 0, 0};
  EXPECT_EQ(solve_cyclic_differences(zero), zero);
  std::vector<Int> c2{0, 0, 0, -1, 1};
  EXPECT_EQ(solve_cyclic_differences(c2), (std::vector<Int>{0, 0, 0, -1, 0}));
  std::vector<Int> c0{-3, 2, 1, 0, 0};
  auto p = solve_cyclic_differences(c0);
  const Int shift = *std::max_element(p.begin(), p.end());
  for (auto& x : p) x -= shift;
  EXPECT_EQ(p, (std::vector<Int>{-3, -1, 0, 0, 0}));
  std::vector<Int> bad{1, 0, 0};
  EXPECT_THROW(solve_cyclic_differences(bad), InconsistentSystemError);
}

TEST(ColumnDifferences, A4Example) {
  EXPECT_EQ(column_differences(A4, kA4, 2), (std::vector<Int>{0, 0, 0, -1, 1}));
  EXPECT_EQ(column_differences(A4, kA4, 0), (std::vector<Int>{-3, 2, 1, 0, 0}));
}

TEST(AnAlgorithm, Examples) {
  EXPECT_EQ(an_algorithm(A2, M("Y(0,0)^-1 Y(1,1)^-1 Y(2,0) Y(2,1)")), (ATable{{0, 0, -1}, {1, 0, -1}}));
  EXPECT_EQ(an_algorithm(A4, kA4), (ATable{{0, 0, -3}, {1, 0, -1}, {4, 1, -1}, {3, 2, -1}}));
  EXPECT_TRUE(an_algorithm(A2, Monomial()).empty());
  EXPECT_EQ(delta_coefficient(A4, kA4), -3);
  EXPECT_EQ(delta_coefficient(A2, word(A2, "1,0")), -1);
  EXPECT_THROW(an_algorithm(A2, M("Y(0,1)")), NotInCrystalError);
}

TEST(BnRecursion, FirstColumns) {
  const auto y = M("Y(0,0)^2 Y(1,0)^3 Y(2,0)^5 Y(3,0)^7");
  auto t = bn_columns(B3, y, 1);
  EXPECT_EQ(t.get(0, 0), 2);
  EXPECT_EQ(t.get(1, 0), 3);
  EXPECT_EQ(t.get(2, 0), 2 + 3 + 5);
  EXPECT_EQ(t.get(3, 0), 7 + 2 * (2 + 3 + 5));
  const auto z = M("Y(0,0)^2 Y(1,0)^3 Y(2,0)^5 Y(3,0)^7 Y(4,0)^11");
  auto u = bn_columns(B4, z, 1);
  EXPECT_EQ(u.get(3, 0), 2 + 3 + 5 + 7);
  EXPECT_EQ(u.get(4, 0), 2 * (2 + 3 + 5 + 7) + 11);
}

TEST(BnRecursion, B3Example) {
  EXPECT_TRUE(bn_recursion(B3, Monomial()).empty());
  auto t = bn_recursion(B3, kB3);
  EXPECT_EQ(expand_a_product(B3, t), kB3);
  EXPECT_EQ(t.row_sum(0), -1);
  EXPECT_EQ(b3_closed(kB3, 0, 0), 0);
  EXPECT_EQ(b3_closed(kB3, 0, 1), 0);
  EXPECT_EQ(b3_closed(kB3, 0, 2), -1);
  for (int i = 0; i <= 3; ++i)
    for (int k = 0; k <= 5; ++k) EXPECT_EQ(t.get(i, k), b3_closed(kB3, i, k)) << i << ',' << k;
  EXPECT_EQ(d_b3(kB3), -1);
  EXPECT_EQ(d_b3(Monomial()), 0);
  EXPECT_EQ(d_b3(word(B3, "3,2,1")), 0);
  EXPECT_EQ(delta_coefficient(B3, kB3), -1);
  EXPECT_THROW(bn_recursion(B3, M("Y(0,0)")), NotInCrystalError);
}

TEST(Weights, Affine) {
  EXPECT_EQ(wt_affine(A1, kMinusDelta), WeightVector({0, 0}, -1));
  EXPECT_EQ(wt_affine(B3, kB3), WeightVector({-1, -1, 1, 0}, -1));
  EXPECT_EQ(format_weight(wt_affine(B3, kB3)), "-Λ0 - Λ1 + Λ2 - δ");
  EXPECT_EQ(wt_affine(A4, Monomial()), WeightVector(5));
}

TEST(Weights, Lambda) {
  const DominantWeight lam({0, 2, 0});
  EXPECT_EQ(wt_lambda(A2, M("Y(1,0)^2"), lam), WeightVector({0, 2, 0}, 0));
  const auto m = apply_word(A2, CrystalVariant::HighestWeight, M("Y(1,0)^2"), parse_word("2,0,1")).value();
  EXPECT_EQ(wt_lambda(A2, m, lam), WeightVector({0, 2, 0}, -1));
  EXPECT_EQ(an_algorithm(A2, embed_lambda(m, lam)), (ATable{{0, 1, -1}, {1, 0, -1}, {2, 2, -1}}));
  EXPECT_THROW(wt_lambda(A2, m, DominantWeight({0, 2})), ParseError);
}

TEST(Dispatch, Errors) {
  EXPECT_THROW(a1_recursion(A2, Monomial()), UnsupportedTypeError);
  EXPECT_THROW(an_algorithm(A1, Monomial()), UnsupportedTypeError);
  EXPECT_THROW(bn_recursion(A2, Monomial()), UnsupportedTypeError);
  EXPECT_THROW(b3_closed(M("Y(4,0)"), 0, 0), IndexError);
  EXPECT_THROW(delta_coefficient(A2, M("Y(3,0)")), IndexError);
}

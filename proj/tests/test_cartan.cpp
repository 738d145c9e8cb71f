#include <gtest/gtest.h>

#include "affwt/cartan.hpp"
#include "affwt/error.hpp"

using namespace affwt;

namespace {

std::vector<std::vector<int>> matrix(const CartanDatum& d) {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < static_cast<int>(d.num_nodes()); ++i) {
    out.emplace_back();
    for (int j = 0; j < static_cast<int>(d.num_nodes()); ++j) out.back().push_back(d.cartan(i, j));
  }
  return out;
}

}  // namespace

TEST(AffineType, ParsesNames) {
  EXPECT_EQ(AffineType::parse("A1"), AffineType(Family::A, 1));
  EXPECT_EQ(AffineType::parse("b3"), AffineType(Family::B, 3));
  EXPECT_EQ(AffineType(Family::B, 4).name(), "B4");
  EXPECT_EQ(AffineType(Family::A, 2).num_nodes(), 3u);
}

TEST(AffineType, RejectsBadRanks) {
  EXPECT_THROW(AffineType(Family::A, 0), UnsupportedTypeError);
  EXPECT_THROW(AffineType(Family::B, 2), UnsupportedTypeError);
  EXPECT_THROW(AffineType::parse("C3"), UnsupportedTypeError);
  EXPECT_THROW(AffineType::parse("A"), ParseError);
}

TEST(CartanDatum, A1) {
  CartanDatum d(AffineType(Family::A, 1));
  EXPECT_EQ(matrix(d), (std::vector<std::vector<int>>{{2, -2}, {-2, 2}}));
  EXPECT_EQ(d.orientation(0, 1), 0);
  EXPECT_EQ(d.orientation(1, 0), 1);
}

TEST(CartanDatum, A2) {
  CartanDatum d(AffineType(Family::A, 2));
  EXPECT_EQ(matrix(d), (std::vector<std::vector<int>>{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}));
  EXPECT_EQ(d.orientation(0, 1), 1);
  EXPECT_EQ(d.orientation(2, 1), 0);
  EXPECT_EQ(d.orientation(0, 2), 0);
  EXPECT_EQ(d.orientation(2, 0), 1);
}

TEST(CartanDatum, B3) {
  CartanDatum d(AffineType(Family::B, 3));
  EXPECT_EQ(matrix(d), (std::vector<std::vector<int>>{{2, 0, -1, 0}, {0, 2, -1, 0}, {-1, -1, 2, -1}, {0, 0, -2, 2}}));
}

TEST(CartanDatum, OrientationIsComplementary) {
  for (auto t : {AffineType(Family::A, 1), AffineType(Family::A, 4), AffineType(Family::B, 5)}) {
    CartanDatum d(t);
    for (int i = 0; i < static_cast<int>(d.num_nodes()); ++i)
      for (int j = 0; j < static_cast<int>(d.num_nodes()); ++j)
        if (i != j) EXPECT_EQ(d.orientation(i, j) + d.orientation(j, i), 1) << t.name() << ' ' << i << ' ' << j;
  }
}

TEST(CartanDatum, IndexChecks) {
  CartanDatum d(AffineType(Family::A, 2));
  EXPECT_THROW(d.check_index(3), IndexError);
  EXPECT_THROW(d.cartan(-1, 0), IndexError);
  EXPECT_TRUE(d.valid_index(2));
}

TEST(SimpleRoot, Examples) {
  EXPECT_EQ(simple_root(CartanDatum(AffineType(Family::A, 1)), 0), WeightVector({2, -2}, 1));
  EXPECT_EQ(simple_root(CartanDatum(AffineType(Family::A, 2)), 1), WeightVector({-1, 2, -1}, 0));
  EXPECT_EQ(simple_root(CartanDatum(AffineType(Family::B, 3)), 3), WeightVector({0, 0, -1, 2}, 0));
  EXPECT_THROW(simple_root(CartanDatum(AffineType(Family::A, 1)), 2), IndexError);
}

TEST(DeltaInRoots, SumsToDelta) {
  EXPECT_EQ(delta_in_roots(CartanDatum(AffineType(Family::A, 2))), (std::vector<Int>{1, 1, 1}));
  EXPECT_EQ(delta_in_roots(CartanDatum(AffineType(Family::B, 3))), (std::vector<Int>{1, 1, 2, 2}));
  for (auto t : {AffineType(Family::A, 1), AffineType(Family::A, 3), AffineType(Family::B, 3), AffineType(Family::B, 6)}) {
    CartanDatum d(t);
    const auto coeffs = delta_in_roots(d);
    WeightVector sum(d.num_nodes());
    for (int i = 0; i < static_cast<int>(d.num_nodes()); ++i) sum += coeffs[static_cast<std::size_t>(i)] * simple_root(d, i);
    EXPECT_EQ(sum, WeightVector(std::vector<Int>(d.num_nodes(), 0), 1)) << t.name();
  }
}

TEST(WeightVector, Format) {
  EXPECT_EQ(format_weight(WeightVector({-1, -1, 1, 0}, -1)), "-Λ0 - Λ1 + Λ2 - δ");
  EXPECT_EQ(format_weight(WeightVector({0, 2, 0}, -1)), "2Λ1 - δ");
  EXPECT_EQ(format_weight(WeightVector({0, 0}, 0)), "0");
  EXPECT_EQ(format_weight(WeightVector({0, 0}, -3)), "-3δ");
  EXPECT_EQ(WeightVector({1, 2}, 3).pairing(1), 2);
}

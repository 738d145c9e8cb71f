#include <gtest/gtest.h>

#include <map>

#include "affwt/delta.hpp"
#include "affwt/oracle.hpp"

using namespace affwt;

namespace {

const CartanDatum A1{AffineType(Family::A, 1)};
const CartanDatum A2{AffineType(Family::A, 2)};
constexpr auto Inf = CrystalVariant::ModifiedInfinity;

std::map<Monomial, std::pair<Int, WeightVector>> summary(const CrystalGraph& g) {
  std::map<Monomial, std::pair<Int, WeightVector>> out;
  for (const auto& n : g.nodes()) out.emplace(n.monomial, std::make_pair(n.zero_count, n.wt));
  return out;
}

}  // namespace

TEST(Bfs, DepthZero) {
  auto g = bfs_expand(A1, Inf, Monomial(), 0);
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g.node(0).zero_count, 0);
  EXPECT_TRUE(g.edges().empty());
}

TEST(Bfs, ContainsMinusDeltaNode) {
  auto g = bfs_expand(A1, Inf, Monomial(), 2);
  const int id = g.find(Monomial::parse("Y(0,0)^-1 Y(0,1) Y(1,1) Y(1,2)^-1"));
  ASSERT_GE(id, 0);
  EXPECT_EQ(g.node(id).zero_count, 1);
  EXPECT_EQ(g.word(id), (std::vector<int>{1, 0}));
  EXPECT_EQ(g.node(id).wt, WeightVector({0, 0}, -1));
}

TEST(Bfs, ExpandA1DepthOne) {
  auto g = bfs_expand(A1, Inf, Monomial(), 1);
  EXPECT_EQ(g.size(), 3u);
  EXPECT_EQ(g.edges().size(), 2u);
}

TEST(Bfs, OrderAndThreadIndependence) {
  for (const auto* d : {&A1, &A2}) {
    const int depth = d == &A1 ? 8 : 5;
    auto ref = bfs_expand(*d, Inf, Monomial(), depth);
    auto rev = bfs_expand(*d, Inf, Monomial(), depth, {true, 1});
    auto par = bfs_expand(*d, Inf, Monomial(), depth, {false, 4});
    EXPECT_EQ(ref.level_sizes(), rev.level_sizes());
    EXPECT_EQ(summary(ref), summary(rev));
    EXPECT_EQ(summary(ref), summary(par));
    EXPECT_EQ(ref.edges().size(), rev.edges().size());
  }
}

TEST(Bfs, WeightsStepBySimpleRoots) {
  auto g = bfs_expand(A2, Inf, Monomial(), 4);
  for (const auto& e : g.edges()) {
    EXPECT_EQ(g.node(e.to).wt, g.node(e.from).wt - simple_root(A2, e.label));
    EXPECT_EQ(g.node(e.to).zero_count, g.node(e.from).zero_count + (e.label == 0 ? 1 : 0));
  }
}

TEST(VerifyD, SmallBalls) {
  for (auto t : {AffineType(Family::A, 1), AffineType(Family::A, 3), AffineType(Family::B, 3), AffineType(Family::B, 5)}) {
    auto r = verify_D(CartanDatum(t), 4);
    EXPECT_TRUE(r.ok()) << r.table();
    EXPECT_GT(r.checks, 0u);
  }
}

TEST(VerifyD, ReportJson) {
  auto j = verify_D(A1, 3).to_json();
  for (const char* key : {"type", "depth", "nodes", "edges", "mismatches"}) EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["type"], "A1");
  EXPECT_TRUE(j["mismatches"].is_array());
}

TEST(Axioms, HighestWeightBall) {
  const DominantWeight lam({0, 2, 0});
  auto g = bfs_expand(A2, CrystalVariant::HighestWeight, h_lambda(lam), 5);
  Report r;
  check_axioms(A2, CrystalVariant::HighestWeight, g, r, lam);
  Report classical;
  check_axioms(A2, CrystalVariant::HighestWeight, g, classical);
  EXPECT_TRUE(classical.ok()) << classical.table();
  EXPECT_TRUE(r.ok()) << r.table();
  for (const auto& n : g.nodes()) {
    EXPECT_EQ(wt_lambda(A2, n.monomial, lam).dcoef, -n.zero_count) << n.monomial.to_string();
    EXPECT_EQ(wt_lambda(A2, n.monomial, lam), wt_affine(A2, embed_lambda(n.monomial, lam)) + lam.weight());
  }
}

TEST(WallIso, A2ContainsExamplePair) {
  auto r = verify_wall_iso(2, 2);
  EXPECT_TRUE(r.ok()) << r.table();
  EXPECT_EQ(r.nodes, bfs_expand(A2, Inf, Monomial(), 2).size());
}

TEST(WallIso, A3) {
  auto r = verify_wall_iso(3, 4);
  EXPECT_TRUE(r.ok()) << r.table();
}

// Recorded behavior for n = 1: psi leaves M(inf) already at f0 f1 (empty).
TEST(WallIso, A1PsiLeavesTheCrystal) {
  auto r = verify_wall_iso(1, 2);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.mismatches.front().subject, "[0,2]");
}

TEST(B4, Sequences) {
  auto s = b4_coefficients(21);
  EXPECT_EQ(s.a, (std::vector<Int>{1, 0, 1, 1, 2, 1, 3, 2, 3, 3, 4, 3, 5, 4, 5, 5, 6, 5, 7, 6, 7}));
  EXPECT_EQ(s.b, (std::vector<Int>{0, 1, 0, 2, 1, 2, 2, 3, 2, 4, 3, 4, 4, 5, 4, 6, 5, 6, 6, 7, 6}));
  EXPECT_EQ(b4_coefficients(1).a, std::vector<Int>{1});
  EXPECT_EQ(b4_coefficients(1).b, std::vector<Int>{0});
  EXPECT_TRUE(verify_b4seq(40).ok());
}

#include <gtest/gtest.h>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/graphviz.hpp>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(AFFWT_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (auto n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, WeightA1) {
  auto r = run("weight --type A1 --word 0,1,0,0,0");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "D          -4")) << r.out;
  r = run("weight --type A1 --word 0,0,0,1,0");
  EXPECT_TRUE(contains(r.out, "Y(0,0)^-3 Y(0,1)^-2 Y(0,2)^-1 Y(1,1)^5 Y(1,2)")) << r.out;
  EXPECT_TRUE(contains(r.out, "D          -4"));
  r = run("weight --type A1 --word 0,1,1,0");
  EXPECT_TRUE(contains(r.out, "D          -2")) << r.out;
  r = run("weight --type A1 --monomial \"Y(0,0)^-1 Y(0,1) Y(1,1) Y(1,2)^-1\"");
  EXPECT_TRUE(contains(r.out, "weight     -δ")) << r.out;
}

TEST(Cli, WeightB3) {
  auto r = run("weight --type B3 --word 0,1,2,3");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "-Λ0 - Λ1 + Λ2 - δ")) << r.out;
}

TEST(Cli, WeightLambda) {
  auto r = run("weight --type A2 --lambda 0,2,0 --word 2,0,1");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "weight     2Λ1 - δ")) << r.out;
  EXPECT_EQ(run("weight --type A2 --lambda 0,2,0 --word 1,0,2").code, 3);
}

TEST(Cli, MonomialRoundTrip) {
  auto first = run("weight --type A4 --word 0,1,3,0,4,0 --json");
  auto j = first.out.substr(first.out.find("\"monomial\""));
  const auto start = j.find(": \"") + 3;
  const auto printed = j.substr(start, j.find('"', start) - start);
  auto second = run("weight --type A4 --monomial \"" + printed + "\" --json");
  EXPECT_EQ(first.out, second.out);
}

TEST(Cli, Convert) {
  auto r = run("convert --type A4 --monomial \"Y(0,0)^-3 Y(0,1)^-1 Y(1,0)^2 Y(1,1)^-1 Y(2,0) Y(2,3) Y(3,3)^-1 Y(4,1)^2\"");
  EXPECT_EQ(r.out, "a(0,0) = -3\na(1,0) = -1\na(4,1) = -1\na(3,2) = -1\n");
  EXPECT_EQ(run("convert --type A2 --word 1,0 --to wall").out, "1,1\n");
  EXPECT_EQ(run("convert --type A3 --monomial 1").out, "(empty)\n");
  EXPECT_EQ(run("convert --type A1 --word 1,0 --to wall").code, 4);
}

TEST(Cli, Apply) {
  EXPECT_EQ(run("apply --type A1 --ops 1,0").out, "Y(0,0)^-1 Y(0,1) Y(1,1) Y(1,2)^-1\n");
  EXPECT_EQ(run("apply --type A1 --word 1,0 --op e --ops 0,1").out, "1\n");
  EXPECT_EQ(run("apply --type A1 --op e --ops 0").out, "0\n");
}

TEST(Cli, Wall) {
  auto r = run("wall -n 2 --rows 2,2,2,1,1 --reduce");
  EXPECT_TRUE(contains(r.out, "rows     1,1")) << r.out;
  EXPECT_TRUE(contains(r.out, "psi      Y(0,0)^-1 Y(1,1)^-1 Y(2,0) Y(2,1)")) << r.out;
  r = run("wall -n 2 --word 1,0");
  EXPECT_TRUE(contains(r.out, "rows     1,1")) << r.out;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("weight --type A1 --monomial \"Y(0,0\"").code, 2);
  EXPECT_EQ(run("weight --type A1 --word 0,5").code, 2);
  EXPECT_EQ(run("weight --type A1 --monomial \"Y(0,0)\"").code, 3);
  EXPECT_EQ(run("weight --type C3 --word 0").code, 4);
  EXPECT_EQ(run("weight --type B2 --word 0").code, 4);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("expand --type A1 --depth 11").code, 2);
  EXPECT_EQ(run("expand --type A1 --depth 11 --force --format json").code, 0);
  EXPECT_EQ(run("verify --suite walls --type A1 --depth 2").code, 1);
}

TEST(Cli, ExpandDotRoundTrip) {
  auto r = run("expand --type A2 --depth 3");
  ASSERT_EQ(r.code, 0);

  struct Vertex {
    std::string label, weight, D;
  };
  struct Edge {
    std::string label;
  };
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::directedS, Vertex, Edge>;
  Graph g;
  boost::dynamic_properties dp(boost::ignore_other_properties);
  dp.property("node_id", boost::get(&Vertex::label, g));
  dp.property("weight", boost::get(&Vertex::weight, g));
  dp.property("D", boost::get(&Vertex::D, g));
  dp.property("label", boost::get(&Edge::label, g));
  std::istringstream in(r.out);
  ASSERT_TRUE(boost::read_graphviz(in, g, dp, "node_id"));

  auto json = run("expand --type A2 --depth 3 --format json").out;
  std::size_t node_lines = 0, edge_lines = 0;
  std::istringstream lines(r.out);
  for (std::string line; std::getline(lines, line);) {
    if (contains(line, "->")) ++edge_lines;
    else if (contains(line, "weight=")) ++node_lines;
  }
  EXPECT_EQ(boost::num_vertices(g), node_lines);
  EXPECT_EQ(boost::num_edges(g), edge_lines);
  EXPECT_TRUE(contains(json, "\"word\": \"1,0\""));

  bool found = false;
  for (auto v : boost::make_iterator_range(boost::vertices(g))) found = found || g[v].D == "-1";
  EXPECT_TRUE(found);
  std::size_t labelled = 0;
  for (auto e : boost::make_iterator_range(boost::edges(g))) labelled += g[e].label.size() == 1;
  EXPECT_EQ(labelled, boost::num_edges(g));
}

TEST(Cli, ExpandA1DepthOne) {
  auto r = run("expand --type A1 --depth 1");
  std::size_t nodes = 0, edges = 0;
  std::istringstream in(r.out);
  for (std::string line; std::getline(in, line);) {
    if (contains(line, "->")) ++edges;
    else if (contains(line, "[label=")) ++nodes;
  }
  EXPECT_EQ(nodes, 3u);
  EXPECT_EQ(edges, 2u);
}

TEST(Cli, VerifyAll) {
  auto r = run("verify");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(run("verify --suite walls --type A2 --depth 6").code, 0);
}

TEST(Cli, B4Seq) {
  auto r = run("b4seq --json");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "\"a\":[1,0,1,1,2,1,3,2,3,3,4,3,5,4,5,5,6,5,7,6,7]")) << r.out;
  EXPECT_TRUE(contains(r.out, "\"b\":[0,1,0,2,1,2,2,3,2,4,3,4,4,5,4,6,5,6,6,7,6]")) << r.out;
}

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "affwt/cartan.hpp"
#include "affwt/monomial.hpp"

namespace affwt {

/// Crystal graph of the ball of radius `depth` around a start monomial.
class CrystalGraph {
 public:
  struct Node {
    Monomial monomial;
    int id = 0;
    int depth = 0;
    Int zero_count = 0;  // number of 0-arrows on the discovery path
    WeightVector wt;     // weight tracked along the discovery path
    int parent = -1;
    int label = -1;      // arrow parent -> this
  };

  struct Edge {
    int from;
    int label;
    int to;
  };

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t size() const { return nodes_.size(); }
  int depth() const { return depth_; }

  /// Node id of m, or -1.
  int find(const Monomial& m) const;
  const Node& node(int id) const { return nodes_.at(static_cast<std::size_t>(id)); }

  /// Discovery word (b1, ..., bl) with node = f_{b1} ... f_{bl} start.
  std::vector<int> word(int id) const;

  /// Nodes per depth 0..depth().
  std::vector<std::size_t> level_sizes() const;

 private:
  friend class GraphBuilder;

  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::unordered_map<Monomial, int, MonomialHash> index_;
  int depth_ = 0;
};

struct BfsOptions {
  bool reverse_order = false;  // try f_n first instead of f_0
  unsigned jobs = 1;           // worker threads per level
};

/// Breadth-first expansion by the f-operators. The weight of `start` is its
/// classical weight (0 for the identity, lambda for H_lambda). Revisited
/// nodes have their zero_count and weight re-derived and compared; a
/// disagreement throws PathInconsistencyError.
CrystalGraph bfs_expand(const CartanDatum& datum, CrystalVariant variant, const Monomial& start, int depth,
                        const BfsOptions& options = {});

struct Mismatch {
  std::string check;
  std::string subject;  // monomial or wall
  std::string word;
  std::string detail;
};

struct Report {
  std::string suite;
  std::string type;
  int depth = 0;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t checks = 0;
  Int max_abs_d = 0;
  double seconds = 0.0;
  std::vector<Mismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
  void fail(std::string check, std::string subject, std::string word, std::string detail);

  std::string table() const;
  nlohmann::json to_json() const;
};

/// D(M) = -zero_count on every node of the ball of M(inf), plus the
/// type-specific formula agreements, reconstruction and the crystal axioms.
Report verify_D(const CartanDatum& datum, int depth, const BfsOptions& options = {});

/// Crystal axioms on every node of an already expanded graph: phi = eps +
/// <h, wt>, e f = id, f e = id, wt(f M) = wt(M) - alpha. For a ball of
/// M(lambda) pass lambda; without it only the classical part of the weight
/// of arrows leaving the ball is compared.
void check_axioms(const CartanDatum& datum, CrystalVariant variant, const CrystalGraph& graph, Report& report,
                  const std::optional<DominantWeight>& lambda = std::nullopt);

/// Compares the reduced proper wall crystal of type A_n^(1) with M(inf)
/// through psi on the balls of radius `depth`.
Report verify_wall_iso(int n, int depth, const BfsOptions& options = {});

struct B4Sequences {
  std::vector<Int> a;
  std::vector<Int> b;
};

/// First `count` terms (k = 0 .. count-1) of the B4 coefficient sequences.
B4Sequences b4_coefficients(int count);

/// Checks b4_coefficients against the B4 recursion: a_k and b_k are the
/// coefficients of y_{0,0} and y_{1,0} in a_{0,k}.
Report verify_b4seq(int count);

}  // namespace affwt

#include "affwt/oracle.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <thread>

#include "affwt/delta.hpp"
#include "affwt/error.hpp"
#include "affwt/youngwall.hpp"

namespace affwt {

int CrystalGraph::find(const Monomial& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> CrystalGraph::word(int id) const {
  std::vector<int> w;
  for (int cur = id; cur >= 0 && node(cur).parent >= 0; cur = node(cur).parent) w.push_back(node(cur).label);
  return w;
}

std::vector<std::size_t> CrystalGraph::level_sizes() const {
  std::vector<std::size_t> sizes(static_cast<std::size_t>(depth_) + 1, 0);
  for (const auto& n : nodes_) ++sizes[static_cast<std::size_t>(n.depth)];
  return sizes;
}

class GraphBuilder {
 public:
  GraphBuilder(const CartanDatum& datum, CrystalVariant variant, const BfsOptions& options)
      : datum_(datum), variant_(variant), options_(options) {
    for (int i = 0; i < static_cast<int>(datum.num_nodes()); ++i) {
      labels_.push_back(i);
      roots_.push_back(simple_root(datum, i));
    }
    if (options.reverse_order) std::reverse(labels_.begin(), labels_.end());
  }

  CrystalGraph run(const Monomial& start, int depth) {
    if (depth < 0) throw IndexError("depth must be nonnegative");
    CrystalGraph g;
    g.depth_ = depth;
    g.nodes_.push_back({start, 0, 0, 0, wt_classical(datum_, start), -1, -1});
    g.index_.emplace(start, 0);
    std::vector<int> frontier{0};
    for (int d = 0; d < depth && !frontier.empty(); ++d) {
      auto children = expand(g, frontier);
      std::vector<int> next;
      for (std::size_t f = 0; f < frontier.size(); ++f) {
        for (std::size_t l = 0; l < labels_.size(); ++l) {
          auto& child = children[f][l];
          if (!child) continue;
          merge(g, frontier[f], labels_[l], std::move(*child), next);
        }
      }
      frontier = std::move(next);
    }
    return g;
  }

 private:
  using Children = std::vector<std::vector<std::optional<Monomial>>>;

  Children expand(const CrystalGraph& g, const std::vector<int>& frontier) const {
    Children out(frontier.size());
    auto work = [&](std::size_t begin, std::size_t end) {
      for (std::size_t f = begin; f < end; ++f) {
        const auto& m = g.node(frontier[f]).monomial;
        out[f].reserve(labels_.size());
        for (int i : labels_) out[f].push_back(apply_f(datum_, variant_, m, i));
      }
    };
    const std::size_t jobs = std::max<std::size_t>(1, options_.jobs);
    if (jobs == 1 || frontier.size() < 2 * jobs) {
      work(0, frontier.size());
      return out;
    }
    {
      std::vector<std::jthread> pool;
      const std::size_t chunk = (frontier.size() + jobs - 1) / jobs;
      for (std::size_t begin = 0; begin < frontier.size(); begin += chunk) {
        pool.emplace_back(work, begin, std::min(frontier.size(), begin + chunk));
      }
    }
    return out;
  }

  void merge(CrystalGraph& g, int from, int i, Monomial child, std::vector<int>& next) const {
    const auto& parent = g.node(from);
    const Int zc = parent.zero_count + (i == 0 ? 1 : 0);
    WeightVector wt = parent.wt - roots_[static_cast<std::size_t>(i)];
    auto [it, inserted] = g.index_.try_emplace(child, static_cast<int>(g.nodes_.size()));
    const int to = it->second;
    if (inserted) {
      g.nodes_.push_back({std::move(child), to, parent.depth + 1, zc, std::move(wt), from, i});
      next.push_back(to);
    } else {
      const auto& known = g.node(to);
      if (known.zero_count != zc || known.wt != wt) {
        auto path = g.word(from);
        path.insert(path.begin(), i);
        std::ostringstream msg;
        msg << "node " << known.monomial.to_string() << ": word " << format_word(g.word(to)) << " gives zero_count "
            << known.zero_count << ", wt " << known.wt << "; word " << format_word(path) << " gives zero_count " << zc
            << ", wt " << wt;
        throw PathInconsistencyError(msg.str());
      }
    }
    g.edges_.push_back({from, i, to});
  }

  const CartanDatum& datum_;
  CrystalVariant variant_;
  BfsOptions options_;
  std::vector<int> labels_;
  std::vector<WeightVector> roots_;
};

CrystalGraph bfs_expand(const CartanDatum& datum, CrystalVariant variant, const Monomial& start, int depth,
                        const BfsOptions& options) {
  return GraphBuilder(datum, variant, options).run(start, depth);
}

void Report::fail(std::string check, std::string subject, std::string word, std::string detail) {
  mismatches.push_back({std::move(check), std::move(subject), std::move(word), std::move(detail)});
}

std::string Report::table() const {
  std::ostringstream out;
  out << std::left << std::setw(8) << "suite" << std::setw(6) << "type" << std::setw(7) << "depth" << std::setw(9)
      << "nodes" << std::setw(9) << "edges" << std::setw(10) << "checks" << std::setw(8) << "max|D|" << std::setw(12)
      << "mismatches"
      << "seconds\n";
  out << std::setw(8) << suite << std::setw(6) << type << std::setw(7) << depth << std::setw(9) << nodes
      << std::setw(9) << edges << std::setw(10) << checks << std::setw(8) << max_abs_d << std::setw(12)
      << mismatches.size() << std::fixed << std::setprecision(3) << seconds << '\n';
  constexpr std::size_t shown = 20;
  for (std::size_t k = 0; k < mismatches.size() && k < shown; ++k) {
    const auto& m = mismatches[k];
    out << "  [" << m.check << "] " << m.subject;
    if (!m.word.empty()) out << " (word " << m.word << ")";
    out << ": " << m.detail << '\n';
  }
  if (mismatches.size() > shown) out << "  ... " << mismatches.size() - shown << " more\n";
  return out.str();
}

nlohmann::json Report::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& m : mismatches) {
    list.push_back({{"check", m.check}, {"subject", m.subject}, {"word", m.word}, {"detail", m.detail}});
  }
  return {{"suite", suite}, {"type", type},           {"depth", depth},    {"nodes", nodes},
          {"edges", edges}, {"checks", checks},       {"max_abs_d", max_abs_d},
          {"seconds", seconds}, {"mismatches", list}};
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }


void check_a1(const CartanDatum& datum, const Monomial& m, const std::string& word, Report& r) {
  auto table = a1_recursion(datum, m);
  for (int i = 0; i <= 1; ++i) {
    for (int k = 0; k <= m.max_level() + 1; ++k) {
      ++r.checks;
      if (table.get(i, k) != a1_closed(m, i, k)) {
        r.fail("a1-closed", m.to_string(), word,
               "a(" + std::to_string(i) + "," + std::to_string(k) + ") recursion " + std::to_string(table.get(i, k)) +
                   ", closed form " + std::to_string(a1_closed(m, i, k)));
      }
    }
  }
  ++r.checks;
  if (d_a1(m) != table.row_sum(0)) {
    r.fail("a1-sum", m.to_string(), word,
           "sum formula " + std::to_string(d_a1(m)) + ", table row sum " + std::to_string(table.row_sum(0)));
  }
}

void check_an(const CartanDatum& datum, const Monomial& m, const std::string& word, Report& r) {
  auto table = an_algorithm(datum, m);
  const int n = datum.rank();
  for (int k = 0; k <= table.max_column(); ++k) {
    bool contact = false;
    for (int i = 0; i <= n; ++i) {
      const Int bound = std::min<Int>(0, table.get((i + n) % (n + 1), k + 1));
      ++r.checks;
      if (table.get(i, k) > bound) {
        r.fail("an-shape", m.to_string(), word,
               "a(" + std::to_string(i) + "," + std::to_string(k) + ") = " + std::to_string(table.get(i, k)) +
                   " exceeds " + std::to_string(bound));
      }
      contact = contact || table.get(i, k) == bound;
    }
    ++r.checks;
    if (!contact) r.fail("an-shape", m.to_string(), word, "column " + std::to_string(k) + " is not maximal");
  }
}

void check_b3(const CartanDatum& datum, const Monomial& m, Int d, const std::string& word, Report& r) {
  auto table = bn_recursion(datum, m);
  for (int i = 0; i <= 3; ++i) {
    for (int k = 0; k <= table.max_column() + 1; ++k) {
      ++r.checks;
      if (table.get(i, k) != b3_closed(m, i, k)) {
        r.fail("b3-closed", m.to_string(), word,
               "a(" + std::to_string(i) + "," + std::to_string(k) + ") recursion " + std::to_string(table.get(i, k)) +
                   ", closed form " + std::to_string(b3_closed(m, i, k)));
      }
    }
  }
  ++r.checks;
  if (d_b3(m) != d) r.fail("b3-sum", m.to_string(), word, "d_b3 " + std::to_string(d_b3(m)) + ", D " + std::to_string(d));
}

}  // namespace

void check_axioms(const CartanDatum& datum, CrystalVariant variant, const CrystalGraph& graph, Report& report,
                  const std::optional<DominantWeight>& lambda) {
  const bool exact = variant == CrystalVariant::ModifiedInfinity || lambda.has_value();
  auto weight_of = [&](const Monomial& m) {
    if (variant == CrystalVariant::ModifiedInfinity) return wt_affine(datum, m);
    return lambda ? wt_lambda(datum, m, *lambda) : wt_classical(datum, m);
  };
  const int nodes = static_cast<int>(datum.num_nodes());
  for (const auto& node : graph.nodes()) {
    const auto& m = node.monomial;
    const auto word = format_word(graph.word(node.id));
    for (int i = 0; i < nodes; ++i) {
      const auto tag = "i=" + std::to_string(i) + ": ";
      report.checks += 3;
      if (phi(m, i) != eps(m, i, variant) + node.wt.pairing(static_cast<std::size_t>(i))) {
        report.fail("axiom-phi", m.to_string(), word,
                    tag + "phi " + std::to_string(phi(m, i)) + " != eps " + std::to_string(eps(m, i, variant)) +
                        " + <h,wt> " + std::to_string(node.wt.pairing(static_cast<std::size_t>(i))));
      }
      if (auto f = apply_f(datum, variant, m, i)) {
        auto back = apply_e(datum, variant, *f, i);
        if (!back || *back != m) report.fail("axiom-ef", m.to_string(), word, tag + "e f != id");
        auto expected = node.wt - simple_root(datum, i);
        const int target = graph.find(*f);
        auto actual = target >= 0 ? graph.node(target).wt : weight_of(*f);
        if (target < 0 && !exact) actual.dcoef = expected.dcoef = 0;
        if (actual != expected) {
          report.fail("axiom-wt", m.to_string(), word,
                      tag + "wt(f M) = " + format_weight(actual) + ", expected " + format_weight(expected));
        }
      }
      if (auto e = apply_e(datum, variant, m, i)) {
        auto back = apply_f(datum, variant, *e, i);
        if (!back || *back != m) report.fail("axiom-fe", m.to_string(), word, tag + "f e != id");
      }
    }
  }
}

Report verify_D(const CartanDatum& datum, int depth, const BfsOptions& options) {
  const auto t0 = Clock::now();
  Report r;
  r.suite = "delta";
  r.type = datum.type().name();
  r.depth = depth;
  CrystalGraph graph;
  try {
    graph = bfs_expand(datum, CrystalVariant::ModifiedInfinity, Monomial(), depth, options);
  } catch (const PathInconsistencyError& e) {
    r.fail("path", "", "", e.what());
    r.seconds = since(t0);
    return r;
  }
  r.nodes = graph.size();
  r.edges = graph.edges().size();
  const auto& type = datum.type();
  for (const auto& node : graph.nodes()) {
    const auto& m = node.monomial;
    const auto word = format_word(graph.word(node.id));
    try {
      const Int d = delta_coefficient(datum, m);
      r.max_abs_d = std::max(r.max_abs_d, d < 0 ? -d : d);
      r.checks += 3;
      if (d != -node.zero_count) {
        r.fail("delta", m.to_string(), word, "D = " + std::to_string(d) + ", 0-arrows " + std::to_string(node.zero_count));
      }
      if (wt_affine(datum, m) != node.wt) {
        r.fail("weight", m.to_string(), word,
               "wt_affine " + format_weight(wt_affine(datum, m)) + ", path " + format_weight(node.wt));
      }
      if (expand_a_product(datum, a_table(datum, m)) != m) r.fail("reconstruct", m.to_string(), word, "A-table product differs");
      if (type.family() == Family::A && type.rank() == 1) {
        check_a1(datum, m, word, r);
      } else if (type.family() == Family::A) {
        check_an(datum, m, word, r);
      } else if (type.rank() == 3) {
        check_b3(datum, m, d, word, r);
      }
    } catch (const Error& e) {
      r.fail("exception", m.to_string(), word, e.what());
    }
  }
  check_axioms(datum, CrystalVariant::ModifiedInfinity, graph, r);
  r.seconds = since(t0);
  return r;
}

namespace {

struct WallNode {
  YoungWall wall;
  int parent;
  int label;
};

std::string wall_word(const std::vector<WallNode>& nodes, int id) {
  std::vector<int> w;
  for (int cur = id; nodes[static_cast<std::size_t>(cur)].parent >= 0; cur = nodes[static_cast<std::size_t>(cur)].parent) {
    w.push_back(nodes[static_cast<std::size_t>(cur)].label);
  }
  return format_word(w);
}

std::string show(const YoungWall& w) { return "[" + w.to_string() + "]"; }

}  // namespace

Report verify_wall_iso(int n, int depth, const BfsOptions& options) {
  const auto t0 = Clock::now();
  CartanDatum datum(AffineType(Family::A, n));
  Report r;
  r.suite = "walls";
  r.type = datum.type().name();
  r.depth = depth;

  std::vector<WallNode> walls{{YoungWall(), -1, -1}};
  std::unordered_map<YoungWall, int, YoungWallHash> index{{YoungWall(), 0}};
  struct WallEdge {
    int from, label, to;
  };
  std::vector<WallEdge> edges;
  std::vector<int> frontier{0};
  for (int d = 0; d < depth; ++d) {
    std::vector<int> next;
    for (int from : frontier) {
      for (int i = 0; i <= n; ++i) {
        const YoungWall w = walls[static_cast<std::size_t>(from)].wall;
        const auto word = wall_word(walls, from);
        YoungWall child;
        try {
          child = apply_f(w, n, i);
        } catch (const InvariantError& e) {
          r.fail("proper", show(w), word, e.what());
          continue;
        }
        ++r.checks;
        auto back = apply_e(child, n, i);
        if (!back || *back != w) r.fail("wall-ef", show(w), word, "e_" + std::to_string(i) + " f_" + std::to_string(i) + " != id");
        if (!is_reduced(child, n)) {
          auto reduced = reduce(child, n);
          r.fail("reduced", show(w), word,
                 "f_" + std::to_string(i) + " gives non-reduced " + show(child) + ", reduces to " + show(reduced));
          if (psi(reduced, n) != psi(child, n)) r.fail("psi-reduce", show(child), word, "psi changes under reduction");
          child = reduced;
        }
        auto [it, inserted] = index.try_emplace(child, static_cast<int>(walls.size()));
        if (inserted) {
          walls.push_back({child, from, i});
          next.push_back(it->second);
        }
        edges.push_back({from, i, it->second});
      }
    }
    frontier = std::move(next);
  }

  const auto graph = bfs_expand(datum, CrystalVariant::ModifiedInfinity, Monomial(), depth, options);
  r.nodes = walls.size();
  r.edges = edges.size();

  std::vector<int> image(graph.size(), -1);
  std::vector<Monomial> psis;
  psis.reserve(walls.size());
  for (std::size_t id = 0; id < walls.size(); ++id) {
    const auto& w = walls[id].wall;
    const auto word = wall_word(walls, static_cast<int>(id));
    psis.push_back(psi(w, n));
    const auto& p = psis.back();
    r.checks += 2;
    const int target = graph.find(p);
    if (target < 0) {
      r.fail("bijection", show(w), word, "psi = " + p.to_string() + " is not in the monomial ball");
    } else if (image[static_cast<std::size_t>(target)] >= 0) {
      r.fail("bijection", show(w), word,
             "psi collides with " + show(walls[static_cast<std::size_t>(image[static_cast<std::size_t>(target)])].wall));
    } else {
      image[static_cast<std::size_t>(target)] = static_cast<int>(id);
    }
    r.max_abs_d = std::max(r.max_abs_d, -wall_weight(w, n).dcoef);
    try {
      const auto expected = wt_affine(datum, p);
      if (wall_weight(w, n) != expected) {
        r.fail("weight", show(w), word,
               "wall_weight " + format_weight(wall_weight(w, n)) + ", wt_affine(psi) " + format_weight(expected));
      }
    } catch (const NotInCrystalError& e) {
      r.fail("weight", show(w), word, "psi = " + p.to_string() + ": " + e.what());
    }
    for (int i = 0; i <= n; ++i) {
      r.checks += 2;
      const auto sig = signature(w, n, i);
      if (!sig.well_formed()) r.fail("signature", show(w), word, "i=" + std::to_string(i) + " not minuses-then-pluses");
      if (wall_eps(w, n, i) != eps(p, i, CrystalVariant::ModifiedInfinity)) {
        r.fail("eps", show(w), word,
               "i=" + std::to_string(i) + ": wall " + std::to_string(wall_eps(w, n, i)) + ", psi " +
                   std::to_string(eps(p, i, CrystalVariant::ModifiedInfinity)));
      }
    }
  }
  ++r.checks;
  if (walls.size() != graph.size()) {
    r.fail("bijection", "", "",
           std::to_string(walls.size()) + " walls vs " + std::to_string(graph.size()) + " monomials");
  }
  for (const auto& e : edges) {
    ++r.checks;
    const auto& from = psis[static_cast<std::size_t>(e.from)];
    auto f = apply_f(datum, CrystalVariant::ModifiedInfinity, from, e.label);
    if (!f || *f != psis[static_cast<std::size_t>(e.to)]) {
      r.fail("intertwine", show(walls[static_cast<std::size_t>(e.from)].wall), wall_word(walls, e.from),
             "psi(f_" + std::to_string(e.label) + " W) = " + psis[static_cast<std::size_t>(e.to)].to_string() +
                 ", f_" + std::to_string(e.label) + " psi(W) = " + (f ? f->to_string() : "0"));
    }
  }
  r.seconds = since(t0);
  return r;
}

B4Sequences b4_coefficients(int count) {
  if (count < 1) throw IndexError("count must be positive");
  using V = std::array<Int, 5>;
  auto lin = [](const V& x, Int sx, const V& y, Int sy) {
    V out{};
    for (std::size_t j = 0; j < 5; ++j) out[j] = checked_add(checked_mul(sx, x[j]), checked_mul(sy, y[j]));
    return out;
  };
  V a{1, 0, 0, 0, 0};
  V b{0, 1, 0, 0, 0};
  V c{1, 1, 1, 0, 0};
  V d{1, 1, 1, 1, 0};
  V e{2, 2, 2, 2, 1};
  B4Sequences out;
  out.a.push_back(a[0]);
  out.b.push_back(a[1]);
  for (int k = 1; k < count; ++k) {
    a = lin(c, 1, a, -1);
    b = lin(c, 1, b, -1);
    c = lin(lin(a, 1, b, 1), 1, lin(c, -1, d, 1), 1);
    d = lin(c, 1, lin(e, 1, d, -1), 1);
    e = lin(d, 2, e, -1);
    out.a.push_back(a[0]);
    out.b.push_back(a[1]);
  }
  return out;
}

Report verify_b4seq(int count) {
  const auto t0 = Clock::now();
  CartanDatum datum(AffineType(Family::B, 4));
  Report r;
  r.suite = "b4seq";
  r.type = datum.type().name();
  r.depth = count;
  const auto seq = b4_coefficients(count);
  const auto from_y0 = bn_columns(datum, Monomial::var(0, 0), count);
  const auto from_y1 = bn_columns(datum, Monomial::var(1, 0), count);
  for (int k = 0; k < count; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    r.checks += 2;
    if (seq.a[kk] != from_y0.get(0, k)) {
      r.fail("b4-a", "a_" + std::to_string(k), "",
             "sequence " + std::to_string(seq.a[kk]) + ", recursion " + std::to_string(from_y0.get(0, k)));
    }
    if (seq.b[kk] != from_y1.get(0, k)) {
      r.fail("b4-b", "b_" + std::to_string(k), "",
             "sequence " + std::to_string(seq.b[kk]) + ", recursion " + std::to_string(from_y1.get(0, k)));
    }
  }
  r.seconds = since(t0);
  return r;
}

}  // namespace affwt

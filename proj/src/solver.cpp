#include "aec/solver.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "aec/bounds.hpp"

namespace aec {
namespace {

using Clock = std::chrono::steady_clock;

// Edges ordered by BFS from `start`: each edge appears when its first
// endpoint is dequeued, so new edges always touch the colored subgraph.
std::vector<EdgeId> bfs_edge_order(const Graph& g, Vertex start) {
  std::vector<EdgeId> order;
  order.reserve(g.num_edges());
  std::vector<bool> edge_seen(g.num_edges(), false);
  std::vector<bool> vertex_seen(g.num_vertices(), false);
  std::queue<Vertex> queue;
  auto push = [&](Vertex v) {
    vertex_seen[v] = true;
    queue.push(v);
  };
  if (g.num_vertices() > 0) push(start);
  for (Vertex next = 0; next <= g.num_vertices(); ++next) {
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop();
      for (auto [w, e] : g.neighbors(u)) {
        if (!edge_seen[e]) {
          edge_seen[e] = true;
          order.push_back(e);
        }
        if (!vertex_seen[w]) push(w);
      }
    }
    if (next < g.num_vertices() && !vertex_seen[next]) push(next);
  }
  return order;
}

class Backtracker {
 public:
  Backtracker(const Graph& g, int k, const SearchConfig& cfg)
      : g_(g), k_(k), cfg_(cfg), color_(g.num_edges(), kUncolored),
        at_(static_cast<size_t>(g.num_vertices()) * std::max(k, 1), -1) {}

  SolveResult run() {
    auto started = Clock::now();
    if (cfg_.time_limit) deadline_ = started + *cfg_.time_limit;

    SolveResult result;
    if (k_ < g_.max_degree()) {
      // No proper coloring exists at all; exhausted without search.
      result.status = SolveStatus::Exhausted;
      result.elapsed = elapsed_since(started);
      return result;
    }

    Vertex start = 0;
    int num_used = 0;
    if (cfg_.fix_star_at_max_degree_vertex && g_.num_edges() > 0) {
      // Smallest vertex of maximum degree; its star gets colors 0..deg-1.
      int delta = g_.max_degree();
      for (Vertex v = 0; v < g_.num_vertices(); ++v)
        if (g_.degree(v) == delta) {
          start = v;
          break;
        }
      Color c = 0;
      for (auto [w, e] : g_.neighbors(start)) assign(e, c++);
      num_used = g_.degree(start);
    }

    order_.clear();
    for (EdgeId e : cfg_.edge_order == SearchConfig::EdgeOrder::Bfs
                        ? bfs_edge_order(g_, start)
                        : input_order())
      if (color_[e] == kUncolored) order_.push_back(e);

    int outcome = search(0, num_used);
    result.nodes_explored = nodes_;
    result.elapsed = elapsed_since(started);
    if (outcome == kAborted) {
      result.status = SolveStatus::Timeout;
    } else if (outcome == kFound) {
      result.status = SolveStatus::Found;
      EdgeColoring witness(k_, g_.num_edges());
      witness.colors = color_;
      if (verify_acyclic(g_, witness).status != VerdictStatus::Acyclic)
        throw std::logic_error("solver produced an invalid witness");
      result.witness = std::move(witness);
    } else {
      result.status = SolveStatus::Exhausted;
    }
    return result;
  }

 private:
  static constexpr int kNoSolution = 0, kFound = 1, kAborted = 2;

  std::vector<EdgeId> input_order() const {
    std::vector<EdgeId> order(g_.num_edges());
    for (EdgeId e = 0; e < g_.num_edges(); ++e) order[e] = e;
    return order;
  }

  std::chrono::milliseconds elapsed_since(Clock::time_point t0) const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                                 t0);
  }

  int& at(Vertex v, Color c) { return at_[static_cast<size_t>(v) * k_ + c]; }

  void assign(EdgeId e, Color c) {
    color_[e] = c;
    auto [u, v] = g_.edge(e);
    at(u, c) = v;
    at(v, c) = u;
  }

  void unassign(EdgeId e, Color c) {
    color_[e] = kUncolored;
    auto [u, v] = g_.edge(e);
    at(u, c) = -1;
    at(v, c) = -1;
  }

  // Would coloring (u,v) with c close a bichromatic cycle? For each other
  // color c2 present at both endpoints, follow the unique alternating walk
  // from v; a cycle closes iff it reaches u on a c2 step. The colored
  // subgraph is acyclic, so each walk is a simple path.
  bool closes_cycle(Vertex u, Vertex v, Color c) {
    for (Color c2 = 0; c2 < k_; ++c2) {
      if (c2 == c || at(u, c2) == -1 || at(v, c2) == -1) continue;
      Vertex cur = v;
      Color expect = c2;
      while (true) {
        Vertex w = at(cur, expect);
        if (w == -1) break;
        if (w == u) {
          if (expect == c2) return true;
          break;  // arrival on a c step cannot happen under properness
        }
        cur = w;
        expect = expect == c ? c2 : c;
      }
    }
    return false;
  }

  bool limits_hit() {
    if (cfg_.node_limit && nodes_ > *cfg_.node_limit) return true;
    if (deadline_ && (nodes_ & 1023) == 0 && Clock::now() > *deadline_)
      return true;
    return false;
  }

  int search(size_t pos, int num_used) {
    if (pos == order_.size()) return kFound;
    ++nodes_;
    if (limits_hit()) return kAborted;
    EdgeId e = order_[pos];
    auto [u, v] = g_.edge(e);
    Color cmax = cfg_.first_unused_color_rule ? std::min(k_ - 1, num_used)
                                              : k_ - 1;
    for (Color c = 0; c <= cmax; ++c) {
      if (at(u, c) != -1 || at(v, c) != -1) continue;
      if (closes_cycle(u, v, c)) continue;
      assign(e, c);
      int r = search(pos + 1, std::max(num_used, c + 1));
      if (r == kFound) return r;  // keep the assignment for the witness
      unassign(e, c);
      if (r == kAborted) return r;
    }
    return kNoSolution;
  }

  const Graph& g_;
  int k_;
  SearchConfig cfg_;
  std::vector<EdgeId> order_;
  std::vector<Color> color_;
  std::vector<int> at_;  // at_[v*k + c] = neighbor across the c-edge, or -1
  std::int64_t nodes_ = 0;
  std::optional<Clock::time_point> deadline_;
};

}  // namespace

SolveResult exists_acyclic_coloring(const Graph& g, int k,
                                    const SearchConfig& cfg) {
  if (k < 0) throw std::invalid_argument("palette size must be >= 0");
  if (g.num_edges() == 0) {
    SolveResult r;
    r.status = SolveStatus::Found;
    r.witness = EdgeColoring(k, 0);
    return r;
  }
  if (k == 0) {
    SolveResult r;
    r.status = SolveStatus::Exhausted;
    return r;
  }
  return Backtracker(g, k, cfg).run();
}

IndexResult acyclic_chromatic_index(const Graph& g, const SearchConfig& cfg) {
  IndexResult result;
  if (g.num_edges() == 0) {
    result.witness = EdgeColoring(0, 0);
    return result;
  }
  int lower = g.max_degree();
  auto d = g.regular_degree();
  if (d && *d >= 1 && g.num_vertices() % 2 == 0)
    lower = std::max(lower, counting_lower_bound(*d, g.num_vertices() / 2).bound);
  result.lo = lower;
  // One color per edge is always acyclic, so the loop terminates by |E|.
  for (int k = lower; k <= g.num_edges(); ++k) {
    SolveResult step = exists_acyclic_coloring(g, k, cfg);
    result.nodes_explored += step.nodes_explored;
    result.trace.emplace_back(k, step.status);
    if (step.status == SolveStatus::Found) {
      result.status = SolveStatus::Found;
      result.value = k;
      result.hi = k;
      result.witness = std::move(step.witness);
      return result;
    }
    if (step.status == SolveStatus::Timeout) {
      result.status = SolveStatus::Timeout;
      result.hi = -1;
      return result;
    }
    result.lo = k + 1;  // exhausted: certified lower-bound step
  }
  throw std::logic_error("acyclic_chromatic_index: search ran past |E| colors");
}

SolveResult brute_force_oracle(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("palette size must be >= 0");
  const int e = g.num_edges();
  double total = 1;
  for (int i = 0; i < e; ++i) total *= k;
  if (total > 1e8)
    throw std::invalid_argument("brute_force_oracle: k^|E| exceeds 10^8");

  auto started = Clock::now();
  SolveResult result;
  if (e == 0) {
    result.status = SolveStatus::Found;
    result.witness = EdgeColoring(k, 0);
    return result;
  }
  if (k == 0) {
    result.status = SolveStatus::Exhausted;
    return result;
  }
  EdgeColoring c(k, e);
  std::fill(c.colors.begin(), c.colors.end(), 0);
  while (true) {
    ++result.nodes_explored;
    if (verify_acyclic(g, c).status == VerdictStatus::Acyclic) {
      result.status = SolveStatus::Found;
      result.witness = c;
      break;
    }
    // odometer increment
    int pos = e - 1;
    while (pos >= 0 && c.colors[pos] == k - 1) c.colors[pos--] = 0;
    if (pos < 0) {
      result.status = SolveStatus::Exhausted;
      break;
    }
    ++c.colors[pos];
  }
  result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      Clock::now() - started);
  return result;
}

}  // namespace aec

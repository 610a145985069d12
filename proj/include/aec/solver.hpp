#ifndef AEC_SOLVER_HPP
#define AEC_SOLVER_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "aec/coloring.hpp"
#include "aec/graph.hpp"

namespace aec {

enum class SolveStatus { Found, Exhausted, Timeout };

struct SolveResult {
  SolveStatus status = SolveStatus::Exhausted;
  std::optional<EdgeColoring> witness;  // present iff status == Found
  std::int64_t nodes_explored = 0;
  std::chrono::milliseconds elapsed{0};
};

struct SearchConfig {
  enum class EdgeOrder { Bfs, Input };
  EdgeOrder edge_order = EdgeOrder::Bfs;

  /// A color index may be used only once all smaller indices appear
  /// somewhere. Breaks palette-permutation symmetry; preserves completeness.
  bool first_unused_color_rule = true;

  /// Pre-colors the edges at one max-degree vertex with 0..deg-1. Sound for
  /// deciding existence (colorings are closed under palette permutation);
  /// off by default.
  bool fix_star_at_max_degree_vertex = false;

  std::optional<std::int64_t> node_limit;
  std::optional<std::chrono::milliseconds> time_limit;
};

/// Backtracking decision procedure: does g admit an acyclic edge coloring
/// with k colors? "Exhausted" is a completed-search claim; limits yield
/// Timeout, never a wrong answer. Every Found witness is re-verified before
/// returning.
SolveResult exists_acyclic_coloring(const Graph& g, int k,
                                    const SearchConfig& cfg = {});

struct IndexResult {
  SolveStatus status = SolveStatus::Found;
  int value = 0;                        // a'(g) when status == Found
  std::optional<EdgeColoring> witness;
  int lo = 0;          // best certified lower bound
  int hi = -1;         // -1 = no upper bound known (timeout)
  std::vector<std::pair<int, SolveStatus>> trace;  // per-k outcomes
  std::int64_t nodes_explored = 0;
};

/// Computes a'(g) by iterating k upward from max(max degree, counting lower
/// bound). Each exhausted k is a certified lower-bound step; a timeout
/// returns the bracket found so far.
IndexResult acyclic_chromatic_index(const Graph& g, const SearchConfig& cfg = {});

/// Independent validation oracle: enumerates every one of the k^|E| total
/// assignments and filters by verify_acyclic. Rejects instances with
/// k^|E| > 10^8.
SolveResult brute_force_oracle(const Graph& g, int k);

}  // namespace aec

#endif

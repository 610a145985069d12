#ifndef AEC_COLORING_HPP
#define AEC_COLORING_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aec/graph.hpp"

namespace aec {

using Color = int;
constexpr Color kUncolored = -1;

/// Per-edge color assignment, possibly partial. Colors are indices into a
/// palette of size `palette_size`. Verification operations require totality;
/// the solver works on partial colorings directly.
struct EdgeColoring {
  int palette_size = 0;
  std::vector<Color> colors;  // indexed by EdgeId, kUncolored when unassigned

  EdgeColoring() = default;
  EdgeColoring(int k, int num_edges)
      : palette_size(k), colors(num_edges, kUncolored) {}

  bool is_total() const {
    for (Color c : colors)
      if (c == kUncolored) return false;
    return true;
  }

  bool operator==(const EdgeColoring&) const = default;
};

enum class VerdictStatus { Acyclic, Improper, BichromaticCycle };

struct BichromaticCycleWitness {
  std::vector<Vertex> vertices;  // cycle vertex sequence, closing edge implied
  Color color_a = kUncolored;
  Color color_b = kUncolored;
};

struct Verdict {
  VerdictStatus status = VerdictStatus::Acyclic;
  // Improper: two adjacent edges with the same color.
  std::pair<EdgeId, EdgeId> improper_pair{-1, -1};
  std::optional<BichromaticCycleWitness> cycle;
};

/// One component of the union of two color classes.
struct PairComponent {
  bool is_cycle = false;
  std::vector<Vertex> vertices;
};

struct ClassStructure {
  Color color_a = kUncolored;
  Color color_b = kUncolored;
  std::vector<PairComponent> components;
};

/// Returns a violating adjacent edge pair, or nullopt when c is proper.
/// Requires c total on g.
std::optional<std::pair<EdgeId, EdgeId>> find_proper_violation(
    const Graph& g, const EdgeColoring& c);

inline bool is_proper(const Graph& g, const EdgeColoring& c) {
  return !find_proper_violation(g, c).has_value();
}

/// Requires c total and proper. Returns nullopt iff every two-color union is
/// a linear forest. The witness cycle starts at its smallest vertex and runs
/// toward the smaller-indexed neighbor.
std::optional<BichromaticCycleWitness> find_bichromatic_cycle(
    const Graph& g, const EdgeColoring& c);

/// Requires c total.
Verdict verify_acyclic(const Graph& g, const EdgeColoring& c);

/// Edge count per color; requires c total. Sizes sum to |E|.
std::vector<int> class_sizes(const EdgeColoring& c);

/// Components of the union of classes color_a and color_b. Requires c total,
/// proper, and acyclic, so every component is a path.
ClassStructure pair_structure(const Graph& g, const EdgeColoring& c,
                              Color color_a, Color color_b);

/// Per-vertex sorted list of colors absent at that vertex. Requires c total
/// and proper; then |missing(v)| = palette_size - degree(v).
std::vector<std::vector<Color>> missing_colors(const Graph& g,
                                               const EdgeColoring& c);

/// Coloring text format: first line "V E K", then E lines "u v c" in the
/// graph's edge order with 0 <= c < K.
EdgeColoring parse_coloring(const std::string& text, const Graph& g);
std::string serialize_coloring(const Graph& g, const EdgeColoring& c);

}  // namespace aec

#endif

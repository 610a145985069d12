#ifndef AEC_CONSTRUCTIONS_HPP
#define AEC_CONSTRUCTIONS_HPP

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "aec/coloring.hpp"
#include "aec/graph.hpp"
#include "aec/permutation.hpp"

namespace aec {

/// Side convention for bipartite graphs built here: side A is vertices
/// 0..n-1, side B is vertices n..2n-1.
struct BipartiteLabeling {
  int n = 0;
  bool in_side_a(Vertex v) const { return v < n; }
  Vertex a(int i) const { return i; }
  Vertex b(int j) const { return n + j; }
};

Graph complete_graph(int n);
std::pair<Graph, BipartiteLabeling> complete_bipartite(int n);
Graph cycle_graph(int n);  // n >= 3

/// Complete graph on v vertices (v even, >= 4) minus the perfect matching
/// {2i, 2i+1}; it is (v-2)-regular.
Graph cocktail_party_graph(int v);

/// Vertex i adjacent to i +- o mod v for each offset o in 1..floor(v/2).
Graph circulant_graph(int v, const std::set<int>& offsets);

enum class GadgetKind { CompleteGraph, CocktailParty };

struct SpliceSpec {
  int d = 0;
  int n = 0;
  GadgetKind gadget = GadgetKind::CompleteGraph;
  int gadget_order = 0;  // d+1 (d odd) or d+2 (d even)
  // Edges in the spliced graph's vertex numbering: gadget occupies
  // 0..gadget_order-1, the regular filler graph the rest.
  std::pair<Vertex, Vertex> removed_gadget_edge;
  std::pair<Vertex, Vertex> removed_filler_edge;
  std::pair<Vertex, Vertex> new_edge_1;
  std::pair<Vertex, Vertex> new_edge_2;
};

/// Builds a connected d-regular graph on n vertices that needs d+2 colors:
/// a gadget (K_{d+1} for odd d, cocktail-party graph on d+2 vertices for
/// even d) and a d-regular circulant are each cut at one edge and cross
/// connected. Requires d >= 5, n >= 2d+3, dn even, plus feasibility of the
/// filler: n - n' >= d+1 and d(n - n') even.
std::pair<Graph, SpliceSpec> theorem2_splice(int d, int n);

/// The p matchings j -> (j+i) mod p of K_{p,p}, p an odd prime. They
/// partition the edges and every pairwise union is a Hamiltonian cycle.
PerfectMatchingSet cyclic_p1f(int p);

struct P1fCheck {
  bool ok = false;
  std::string reason;
  std::pair<int, int> failing_pair{-1, -1};  // matching indices, when not ok
};

/// True iff the matchings are pairwise disjoint, there are exactly n of
/// them, and every pairwise union is a Hamiltonian cycle.
P1fCheck is_perfect_1factorization(const PerfectMatchingSet& ms);

/// Deletes the drop_a highest A-vertices and drop_b highest B-vertices of
/// K_{m,m} and colors each surviving edge by its matching index. Requires a
/// perfect 1-factorization and drop_b >= 1 (with no deletion every color
/// pair is a Hamiltonian cycle, so the coloring is not acyclic). The result
/// is verified acyclic before returning.
std::pair<Graph, EdgeColoring> p1f_restrict(const PerfectMatchingSet& ms,
                                            int drop_a, int drop_b);

struct ExtensionResult {
  Graph graph;  // K_{n+1,n+1}
  BipartiteLabeling labeling;
  EdgeColoring coloring;  // proper (n+1)-coloring
  Color alpha = kUncolored;  // the size-n class of the input
  Color beta = kUncolored;   // missing color shared by the chosen (a1, b1)
  Color gamma = kUncolored;  // color of the edge (a1, b1)
};

/// Extends an acyclic (n+1)-coloring of K_{n,n} with class sizes
/// (n, n-1, ..., n-1) to a proper (n+1)-coloring of K_{n+1,n+1}: the new
/// A-vertex's edge to u gets the color missing at u, symmetrically for the
/// new B-vertex, and the new-new edge gets the size-n color. The classes
/// alpha, beta, gamma become perfect matchings with pairwise Hamiltonian
/// unions, which is impossible for odd n; the op therefore only accepts
/// input that can exist for even n.
ExtensionResult extend_to_bipartite_plus_one(const Graph& g,
                                             const BipartiteLabeling& lab,
                                             const EdgeColoring& c);

/// Reads a color class of a bipartite coloring as a permutation, when the
/// class is a perfect matching; nullopt otherwise.
std::optional<Permutation> matching_permutation(const Graph& g,
                                                const BipartiteLabeling& lab,
                                                const EdgeColoring& c,
                                                Color color);

/// Materializes a matching permutation as a graph on 2n vertices using the
/// side convention above.
Graph matching_graph(const Permutation& pi);

}  // namespace aec

#endif

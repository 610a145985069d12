#include "aec/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace aec {
namespace {

void add_sorted_edges(Graph& g, std::vector<std::pair<Vertex, Vertex>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  for (auto [u, v] : pairs) g.add_edge(u, v);
}

bool is_odd_prime(int p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int q = 3; static_cast<long>(q) * q <= p; q += 2)
    if (p % q == 0) return false;
  return true;
}

}  // namespace

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete_graph: n >= 1");
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

std::pair<Graph, BipartiteLabeling> complete_bipartite(int n) {
  if (n < 1) throw std::invalid_argument("complete_bipartite: n >= 1");
  Graph g(2 * n);
  for (Vertex a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.add_edge(a, n + b);
  return {std::move(g), BipartiteLabeling{n}};
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: n >= 3");
  Graph g(n);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 0; i < n; ++i)
    pairs.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
  add_sorted_edges(g, std::move(pairs));
  return g;
}

Graph cocktail_party_graph(int v) {
  if (v < 4 || v % 2 != 0)
    throw std::invalid_argument("cocktail_party_graph: v even, v >= 4");
  Graph g(v);
  for (Vertex u = 0; u < v; ++u)
    for (Vertex w = u + 1; w < v; ++w) {
      if (u / 2 == w / 2) continue;  // matched partner, omitted
      g.add_edge(u, w);
    }
  return g;
}

Graph circulant_graph(int v, const std::set<int>& offsets) {
  if (v < 3) throw std::invalid_argument("circulant_graph: v >= 3");
  for (int o : offsets)
    if (o < 1 || o > v / 2)
      throw std::invalid_argument("circulant_graph: offsets must lie in 1..v/2");
  std::set<std::pair<Vertex, Vertex>> pairs;
  for (int o : offsets)
    for (Vertex i = 0; i < v; ++i) {
      Vertex j = (i + o) % v;
      pairs.emplace(std::min(i, j), std::max(i, j));
    }
  Graph g(v);
  for (auto [u, w] : pairs) g.add_edge(u, w);
  return g;
}

std::pair<Graph, SpliceSpec> theorem2_splice(int d, int n) {
  if (d < 5) throw std::invalid_argument("theorem2_splice: requires d >= 5");
  if (n < 2 * d + 3)
    throw std::invalid_argument("theorem2_splice: requires n >= 2d+3");
  if (static_cast<long>(d) * n % 2 != 0)
    throw std::invalid_argument(
        "theorem2_splice: parity: d*n is odd, no d-regular graph on n "
        "vertices exists");

  SpliceSpec spec;
  spec.d = d;
  spec.n = n;
  spec.gadget = d % 2 ? GadgetKind::CompleteGraph : GadgetKind::CocktailParty;
  spec.gadget_order = d % 2 ? d + 1 : d + 2;
  int filler_order = n - spec.gadget_order;
  if (filler_order < d + 1)
    throw std::invalid_argument(
        "theorem2_splice: filler would have " + std::to_string(filler_order) +
        " vertices, fewer than d+1");
  if (static_cast<long>(d) * filler_order % 2 != 0)
    throw std::invalid_argument(
        "theorem2_splice: parity: d*" + std::to_string(filler_order) +
        " is odd, no d-regular filler on that many vertices exists");

  Graph gadget = spec.gadget == GadgetKind::CompleteGraph
                     ? complete_graph(spec.gadget_order)
                     : cocktail_party_graph(spec.gadget_order);

  std::set<int> offsets;
  for (int o = 1; o <= d / 2; ++o) offsets.insert(o);
  if (d % 2) offsets.insert(filler_order / 2);  // d odd forces even filler
  Graph filler = circulant_graph(filler_order, offsets);
  if (filler.regular_degree() != d)
    throw std::logic_error("theorem2_splice: filler is not d-regular");

  auto gadget_cut = *std::min_element(gadget.edges().begin(), gadget.edges().end());
  auto filler_cut = *std::min_element(filler.edges().begin(), filler.edges().end());

  int base = spec.gadget_order;
  Graph g(n);
  for (auto e : gadget.edges())
    if (e != gadget_cut) g.add_edge(e.first, e.second);
  for (auto e : filler.edges())
    if (e != filler_cut) g.add_edge(base + e.first, base + e.second);
  // smallest gadget end to smallest filler end
  g.add_edge(gadget_cut.first, base + filler_cut.first);
  g.add_edge(gadget_cut.second, base + filler_cut.second);

  spec.removed_gadget_edge = gadget_cut;
  spec.removed_filler_edge = {base + filler_cut.first, base + filler_cut.second};
  spec.new_edge_1 = {gadget_cut.first, base + filler_cut.first};
  spec.new_edge_2 = {gadget_cut.second, base + filler_cut.second};
  return {std::move(g), spec};
}

PerfectMatchingSet cyclic_p1f(int p) {
  if (!is_odd_prime(p))
    throw std::invalid_argument("cyclic_p1f: " + std::to_string(p) +
                                " is not an odd prime");
  PerfectMatchingSet ms;
  ms.n = p;
  for (int i = 0; i < p; ++i) ms.matchings.push_back(Permutation::shift(p, i));
  return ms;
}

P1fCheck is_perfect_1factorization(const PerfectMatchingSet& ms) {
  P1fCheck check;
  if (static_cast<int>(ms.matchings.size()) != ms.n) {
    check.reason = "expected " + std::to_string(ms.n) + " matchings, got " +
                   std::to_string(ms.matchings.size());
    return check;
  }
  for (const auto& m : ms.matchings)
    if (m.size() != ms.n) {
      check.reason = "matching size does not match side size";
      return check;
    }
  if (auto overlap = ms.find_overlap()) {
    check.failing_pair = *overlap;
    check.reason = "matchings " + std::to_string(overlap->first) + " and " +
                   std::to_string(overlap->second) + " share an edge";
    return check;
  }
  for (int i = 0; i < ms.n; ++i)
    for (int j = i + 1; j < ms.n; ++j)
      if (!union_is_hamiltonian(ms.matchings[i], ms.matchings[j])) {
        check.failing_pair = {i, j};
        check.reason = "union of matchings " + std::to_string(i) + " and " +
                       std::to_string(j) + " is not a Hamiltonian cycle";
        return check;
      }
  check.ok = true;
  return check;
}

std::pair<Graph, EdgeColoring> p1f_restrict(const PerfectMatchingSet& ms,
                                            int drop_a, int drop_b) {
  auto check = is_perfect_1factorization(ms);
  if (!check.ok)
    throw std::invalid_argument("p1f_restrict: not a perfect 1-factorization: " +
                                check.reason);
  int m = ms.n;
  if (drop_b < 1)
    throw std::invalid_argument(
        "p1f_restrict: drop_b >= 1 required; the full P1F coloring of "
        "K_{m,m} has every color pair Hamiltonian, hence is not acyclic");
  if (drop_a < 0 || drop_a >= m || drop_b >= m)
    throw std::invalid_argument("p1f_restrict: drops must lie in range");

  int na = m - drop_a, nb = m - drop_b;
  Graph g(na + nb);
  EdgeColoring c(m, na * nb);
  for (Vertex a = 0; a < na; ++a)
    for (int b = 0; b < nb; ++b) g.add_edge(a, na + b);
  for (int i = 0; i < m; ++i)
    for (int a = 0; a < na; ++a) {
      int b = ms.matchings[i][a];
      if (b < nb) c.colors[a * nb + b] = i;
    }
  if (verify_acyclic(g, c).status != VerdictStatus::Acyclic)
    throw std::logic_error("p1f_restrict: restricted coloring is not acyclic");
  return {std::move(g), std::move(c)};
}

std::optional<Permutation> matching_permutation(const Graph& g,
                                                const BipartiteLabeling& lab,
                                                const EdgeColoring& c,
                                                Color color) {
  int class_size = 0;
  for (Color col : c.colors)
    if (col == color) ++class_size;
  if (class_size != lab.n) return std::nullopt;
  std::vector<int> images(lab.n, -1);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (c.colors[e] != color) continue;
    auto [u, v] = g.edge(e);
    if (lab.in_side_a(v)) std::swap(u, v);
    if (!lab.in_side_a(u) || lab.in_side_a(v)) return std::nullopt;
    if (images[u] != -1) return std::nullopt;
    images[u] = v - lab.n;
  }
  for (int i : images)
    if (i == -1) return std::nullopt;
  return Permutation(std::move(images));
}

Graph matching_graph(const Permutation& pi) {
  int n = pi.size();
  Graph g(2 * n);
  for (int a = 0; a < n; ++a) g.add_edge(a, n + pi[a]);
  return g;
}

ExtensionResult extend_to_bipartite_plus_one(const Graph& g,
                                             const BipartiteLabeling& lab,
                                             const EdgeColoring& c) {
  int n = lab.n;
  if (g.num_vertices() != 2 * n || g.num_edges() != n * n)
    throw std::invalid_argument("extend: graph is not K_{n,n}");
  if (c.palette_size != n + 1)
    throw std::invalid_argument("extend: palette must have n+1 colors");
  if (verify_acyclic(g, c).status != VerdictStatus::Acyclic)
    throw std::invalid_argument("extend: coloring is not acyclic");

  auto sizes = class_sizes(c);
  Color alpha = kUncolored;
  for (Color col = 0; col <= n; ++col) {
    if (sizes[col] == n) {
      if (alpha != kUncolored)
        throw std::invalid_argument("extend: two classes of size n");
      alpha = col;
    } else if (sizes[col] != n - 1) {
      throw std::invalid_argument(
          "extend: class sizes must be (n, n-1, ..., n-1)");
    }
  }
  if (alpha == kUncolored)
    throw std::invalid_argument("extend: no class of size n");

  // Degree n against palette n+1: exactly one color missing per vertex.
  auto missing = missing_colors(g, c);
  std::vector<Color> miss(2 * n);
  for (Vertex v = 0; v < 2 * n; ++v) {
    if (missing[v].size() != 1)
      throw std::logic_error("extend: vertex missing-color count is not 1");
    miss[v] = missing[v][0];
  }

  // Smallest a1; b1 is the unique B-vertex missing the same color.
  Vertex a1 = 0;
  Color beta = miss[a1];
  Vertex b1 = -1;
  for (int j = 0; j < n; ++j)
    if (miss[lab.b(j)] == beta) b1 = lab.b(j);
  if (b1 == -1) throw std::logic_error("extend: no B-vertex missing beta");
  Color gamma = c.colors[*g.find_edge(a1, b1)];
  if (gamma == alpha)
    throw std::logic_error("extend: edge (a1,b1) carries the alpha color");

  auto [big, big_lab] = complete_bipartite(n + 1);
  ExtensionResult result;
  result.labeling = big_lab;
  result.alpha = alpha;
  result.beta = beta;
  result.gamma = gamma;
  result.coloring = EdgeColoring(n + 1, big.num_edges());
  for (EdgeId e = 0; e < big.num_edges(); ++e) {
    int i = e / (n + 1);      // A index
    int j = e % (n + 1);      // B index
    Color col;
    if (i < n && j < n)
      col = c.colors[*g.find_edge(i, lab.b(j))];
    else if (i == n && j < n)
      col = miss[lab.b(j)];
    else if (i < n && j == n)
      col = miss[i];
    else
      col = alpha;
    result.coloring.colors[e] = col;
  }
  result.graph = std::move(big);
  if (find_proper_violation(result.graph, result.coloring))
    throw std::logic_error("extend: extended coloring is not proper");
  return result;
}

}  // namespace aec

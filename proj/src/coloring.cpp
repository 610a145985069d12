#include "aec/coloring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace aec {
namespace {

void require_total(const EdgeColoring& c, const Graph& g, const char* who) {
  if (static_cast<int>(c.colors.size()) != g.num_edges())
    throw std::invalid_argument(std::string(who) + ": coloring size mismatch");
  if (!c.is_total())
    throw std::invalid_argument(std::string(who) + ": partial coloring");
  for (Color col : c.colors)
    if (col < 0 || col >= c.palette_size)
      throw std::invalid_argument(std::string(who) + ": color out of palette");
}

// Incidence of the subgraph formed by two color classes. Under a proper
// coloring every vertex has at most two incident edges here.
std::vector<std::vector<std::pair<Vertex, EdgeId>>> union_incidence(
    const Graph& g, const EdgeColoring& c, Color a, Color b) {
  std::vector<std::vector<std::pair<Vertex, EdgeId>>> inc(g.num_vertices());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (c.colors[e] != a && c.colors[e] != b) continue;
    auto [u, v] = g.edge(e);
    inc[u].emplace_back(v, e);
    inc[v].emplace_back(u, e);
  }
  return inc;
}

// Walks the path/cycle component through `start`, which must be an endpoint
// for paths. Marks vertices visited and returns the vertex sequence.
std::vector<Vertex> walk_component(
    const std::vector<std::vector<std::pair<Vertex, EdgeId>>>& inc,
    std::vector<bool>& visited, Vertex start, Vertex first_step) {
  std::vector<Vertex> seq{start};
  visited[start] = true;
  Vertex prev = start;
  Vertex cur = first_step;
  while (cur != start && !visited[cur]) {
    seq.push_back(cur);
    visited[cur] = true;
    Vertex next = -1;
    for (auto [w, e] : inc[cur])
      if (w != prev) next = w;
    if (next == -1) break;
    prev = cur;
    cur = next;
  }
  return seq;
}

}  // namespace

std::optional<std::pair<EdgeId, EdgeId>> find_proper_violation(
    const Graph& g, const EdgeColoring& c) {
  require_total(c, g, "find_proper_violation");
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    std::vector<EdgeId> seen(c.palette_size, -1);
    for (auto [w, e] : g.neighbors(v)) {
      Color col = c.colors[e];
      if (seen[col] != -1) return std::make_pair(seen[col], e);
      seen[col] = e;
    }
  }
  return std::nullopt;
}

std::optional<BichromaticCycleWitness> find_bichromatic_cycle(
    const Graph& g, const EdgeColoring& c) {
  if (find_proper_violation(g, c))
    throw std::invalid_argument("find_bichromatic_cycle: coloring not proper");
  for (Color a = 0; a < c.palette_size; ++a) {
    for (Color b = a + 1; b < c.palette_size; ++b) {
      auto inc = union_incidence(g, c, a, b);
      std::vector<bool> visited(g.num_vertices(), false);
      // Consume path components first so any vertex left with two union
      // edges lies on a cycle.
      for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (!visited[v] && inc[v].size() == 1)
          walk_component(inc, visited, v, inc[v][0].first);
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (visited[v] || inc[v].size() != 2) continue;
        Vertex toward = std::min(inc[v][0].first, inc[v][1].first);
        BichromaticCycleWitness w;
        w.vertices = walk_component(inc, visited, v, toward);
        w.color_a = a;
        w.color_b = b;
        return w;
      }
    }
  }
  return std::nullopt;
}

Verdict verify_acyclic(const Graph& g, const EdgeColoring& c) {
  require_total(c, g, "verify_acyclic");
  Verdict verdict;
  if (auto pair = find_proper_violation(g, c)) {
    verdict.status = VerdictStatus::Improper;
    verdict.improper_pair = *pair;
    return verdict;
  }
  if (auto cycle = find_bichromatic_cycle(g, c)) {
    verdict.status = VerdictStatus::BichromaticCycle;
    verdict.cycle = std::move(cycle);
    return verdict;
  }
  verdict.status = VerdictStatus::Acyclic;
  return verdict;
}

std::vector<int> class_sizes(const EdgeColoring& c) {
  std::vector<int> counts(c.palette_size, 0);
  for (Color col : c.colors) {
    if (col < 0 || col >= c.palette_size)
      throw std::invalid_argument("class_sizes: partial or invalid coloring");
    ++counts[col];
  }
  return counts;
}

ClassStructure pair_structure(const Graph& g, const EdgeColoring& c,
                              Color color_a, Color color_b) {
  if (color_a == color_b)
    throw std::invalid_argument("pair_structure: colors must differ");
  if (verify_acyclic(g, c).status != VerdictStatus::Acyclic)
    throw std::invalid_argument("pair_structure: coloring not acyclic");
  ClassStructure s;
  s.color_a = color_a;
  s.color_b = color_b;
  auto inc = union_incidence(g, c, color_a, color_b);
  std::vector<bool> visited(g.num_vertices(), false);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (visited[v] || inc[v].size() != 1) continue;
    PairComponent comp;
    comp.is_cycle = false;
    comp.vertices = walk_component(inc, visited, v, inc[v][0].first);
    s.components.push_back(std::move(comp));
  }
  return s;
}

std::vector<std::vector<Color>> missing_colors(const Graph& g,
                                               const EdgeColoring& c) {
  if (find_proper_violation(g, c))
    throw std::invalid_argument("missing_colors: coloring not proper");
  std::vector<std::vector<Color>> missing(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    std::vector<bool> present(c.palette_size, false);
    for (auto [w, e] : g.neighbors(v)) present[c.colors[e]] = true;
    for (Color col = 0; col < c.palette_size; ++col)
      if (!present[col]) missing[v].push_back(col);
  }
  return missing;
}

EdgeColoring parse_coloring(const std::string& text, const Graph& g) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  EdgeColoring c;
  int next_edge = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    long a;
    if (!(fields >> a)) continue;
    if (!header_seen) {
      long e, k;
      if (!(fields >> e >> k)) throw ParseError(line_no, "expected V E K");
      if (a != g.num_vertices() || e != g.num_edges())
        throw ParseError(line_no, "header does not match graph");
      if (k < 0) throw ParseError(line_no, "negative palette size");
      c = EdgeColoring(static_cast<int>(k), g.num_edges());
      header_seen = true;
      continue;
    }
    long b, col;
    if (!(fields >> b >> col)) throw ParseError(line_no, "expected u v c");
    if (next_edge >= g.num_edges())
      throw ParseError(line_no, "more colored edges than graph edges");
    auto [u, v] = g.edge(next_edge);
    if (a != u || b != v)
      throw ParseError(line_no, "edge does not match graph edge order");
    if (col < 0 || col >= c.palette_size)
      throw ParseError(line_no, "color out of palette");
    c.colors[next_edge] = static_cast<Color>(col);
    ++next_edge;
  }
  if (!header_seen) throw ParseError(line_no, "missing header line");
  if (next_edge != g.num_edges())
    throw ParseError(line_no, "missing colored edges");
  return c;
}

std::string serialize_coloring(const Graph& g, const EdgeColoring& c) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << ' ' << c.palette_size
      << '\n';
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.edge(e);
    out << u << ' ' << v << ' ' << c.colors[e] << '\n';
  }
  return out.str();
}

}  // namespace aec

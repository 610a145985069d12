#include "aec/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace aec {

Graph::Graph(int num_vertices) : num_vertices_(num_vertices) {
  if (num_vertices < 0) throw std::invalid_argument("negative vertex count");
  adjacency_.resize(num_vertices);
}

EdgeId Graph::add_edge(Vertex u, Vertex v) {
  if (u == v)
    throw GraphError(GraphErrorKind::SelfLoop,
                     "self-loop at vertex " + std::to_string(u));
  if (u < 0 || v < 0 || u >= num_vertices_ || v >= num_vertices_)
    throw GraphError(GraphErrorKind::VertexOutOfRange,
                     "edge endpoint out of range: " + std::to_string(u) + " " +
                         std::to_string(v));
  if (find_edge(u, v))
    throw GraphError(GraphErrorKind::DuplicateEdge,
                     "duplicate edge " + std::to_string(u) + " " +
                         std::to_string(v));
  if (u > v) std::swap(u, v);
  EdgeId id = static_cast<EdgeId>(edges_.size());
  edges_.emplace_back(u, v);
  adjacency_[u].emplace_back(v, id);
  adjacency_[v].emplace_back(u, id);
  return id;
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& adj : adjacency_) d = std::max(d, static_cast<int>(adj.size()));
  return d;
}

std::vector<int> Graph::degree_profile() const {
  std::vector<int> degrees;
  degrees.reserve(num_vertices_);
  for (const auto& adj : adjacency_) degrees.push_back(static_cast<int>(adj.size()));
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

std::optional<int> Graph::regular_degree() const {
  if (num_vertices_ == 0) return 0;
  int d = degree(0);
  for (Vertex v = 1; v < num_vertices_; ++v)
    if (degree(v) != d) return std::nullopt;
  return d;
}

bool Graph::is_connected() const {
  if (num_vertices_ <= 1) return true;
  std::vector<bool> seen(num_vertices_, false);
  std::queue<Vertex> queue;
  queue.push(0);
  seen[0] = true;
  int reached = 1;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop();
    for (auto [w, e] : adjacency_[u]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        queue.push(w);
      }
    }
  }
  return reached == num_vertices_;
}

std::optional<EdgeId> Graph::find_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= num_vertices_ || v >= num_vertices_)
    return std::nullopt;
  if (degree(u) > degree(v)) std::swap(u, v);
  for (auto [w, e] : adjacency_[u])
    if (w == v) return e;
  return std::nullopt;
}

std::pair<Graph, std::vector<int>> delete_vertices(const Graph& g,
                                                   const std::vector<Vertex>& vs) {
  std::vector<bool> deleted(g.num_vertices(), false);
  for (Vertex v : vs) {
    if (v < 0 || v >= g.num_vertices())
      throw GraphError(GraphErrorKind::VertexOutOfRange,
                       "delete_vertices: vertex " + std::to_string(v));
    deleted[v] = true;
  }
  std::vector<int> old_to_new(g.num_vertices(), -1);
  int next = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (!deleted[v]) old_to_new[v] = next++;
  Graph h(next);
  for (const auto& [u, v] : g.edges())
    if (!deleted[u] && !deleted[v]) h.add_edge(old_to_new[u], old_to_new[v]);
  return {std::move(h), std::move(old_to_new)};
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int expected_edges = -1;
  Graph g;
  int seen_edges = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    long a, b;
    if (!(fields >> a)) continue;  // blank or comment line
    if (!(fields >> b)) throw ParseError(line_no, "expected two integers");
    std::string extra;
    if (fields >> extra) throw ParseError(line_no, "trailing tokens");
    if (expected_edges < 0) {
      if (a < 0 || b < 0) throw ParseError(line_no, "negative header value");
      g = Graph(static_cast<int>(a));
      expected_edges = static_cast<int>(b);
      continue;
    }
    if (seen_edges >= expected_edges)
      throw ParseError(line_no, "more edges than declared");
    if (a < 0 || b >= g.num_vertices() || a >= g.num_vertices())
      throw ParseError(line_no, "vertex out of range");
    if (a >= b) throw ParseError(line_no, "expected u < v");
    try {
      g.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
    } catch (const GraphError& err) {
      throw ParseError(line_no, err.what());
    }
    ++seen_edges;
  }
  if (expected_edges < 0) throw ParseError(line_no, "missing header line");
  if (seen_edges != expected_edges)
    throw ParseError(line_no, "declared " + std::to_string(expected_edges) +
                                  " edges, found " + std::to_string(seen_edges));
  return g;
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace aec

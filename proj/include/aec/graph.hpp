#ifndef AEC_GRAPH_HPP
#define AEC_GRAPH_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace aec {

using Vertex = int;
using EdgeId = int;

enum class GraphErrorKind {
  SelfLoop,
  VertexOutOfRange,
  DuplicateEdge,
};

class GraphError : public std::invalid_argument {
 public:
  GraphError(GraphErrorKind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}
  GraphErrorKind kind() const { return kind_; }

 private:
  GraphErrorKind kind_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Simple undirected graph. Vertices are dense 0-based integers; edges are
/// identified by their 0-based insertion index, which never changes.
/// Adjacency lists store (neighbor, edge id) so a coloring keyed by EdgeId
/// can be looked up in O(1) while walking around a vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int num_vertices);

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  /// Appends the edge {u,v}; returns its EdgeId (= previous edge count).
  EdgeId add_edge(Vertex u, Vertex v);

  const std::pair<Vertex, Vertex>& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

  /// (neighbor, edge id) pairs in edge-insertion order.
  const std::vector<std::pair<Vertex, EdgeId>>& neighbors(Vertex v) const {
    return adjacency_[v];
  }

  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  int max_degree() const;
  std::vector<int> degree_profile() const;  // sorted ascending

  /// The common degree d if every vertex has degree d, otherwise nullopt.
  std::optional<int> regular_degree() const;

  /// Empty and single-vertex graphs count as connected.
  bool is_connected() const;

  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;

  bool operator==(const Graph& other) const {
    return num_vertices_ == other.num_vertices_ && edges_ == other.edges_;
  }

 private:
  int num_vertices_ = 0;
  std::vector<std::pair<Vertex, Vertex>> edges_;  // stored with u < v
  std::vector<std::vector<std::pair<Vertex, EdgeId>>> adjacency_;
};

/// Induced subgraph on the vertices not in `vs`. Survivors are re-indexed in
/// increasing original order; the returned map sends old index to new index,
/// or -1 for deleted vertices.
std::pair<Graph, std::vector<int>> delete_vertices(const Graph& g,
                                                   const std::vector<Vertex>& vs);

/// Edge-list text format: first line "V E", then E lines "u v" with
/// 0 <= u < v < V. '#' starts a comment line. Round-trips exactly.
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

}  // namespace aec

#endif

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <tuple>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gbs/arith.hpp"

namespace gbs {

/// Which way an edge is traversed. The negative orientation e^-1 is implicit:
/// it swaps endpoints and swaps the two labels.
enum class Orientation : std::uint8_t { Positive, Negative };

inline Orientation reverse(Orientation o) {
  return o == Orientation::Positive ? Orientation::Negative : Orientation::Positive;
}

/// An edge end addressed by id: the end sitting at the source of the oriented edge.
struct OrientedEdge {
  std::string edge;
  Orientation orientation = Orientation::Positive;

  bool operator==(const OrientedEdge&) const = default;
};

struct RawEdge {
  std::string id;
  std::string from;
  std::string to;
  BigInt a;      // label at `from`
  BigInt omega;  // label at `to`
};

/// Unvalidated graph description, as read from a file.
struct RawGraph {
  std::vector<std::string> vertices;
  std::vector<RawEdge> edges;
};

enum class ViolationKind : std::uint8_t {
  EmptyGraph,
  DuplicateVertex,
  DuplicateEdge,
  DanglingEndpoint,
  ZeroLabel,
  Disconnected,
};

std::string_view violation_name(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string subject;  // offending vertex or edge id
  std::string detail;
};

class InvalidGraph : public std::runtime_error {
 public:
  explicit InvalidGraph(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

struct Edge {
  std::string id;
  std::size_t from = 0;
  std::size_t to = 0;
  BigInt a;      // A(e)
  BigInt omega;  // Omega(e)

  bool is_loop() const { return from == to; }
  bool operator==(const Edge&) const = default;
};

/// A GBS graph: connected directed multigraph with nonzero labels at both edge ends.
/// Only positive edges are stored; iteration order is declaration order.
class Graph {
 public:
  /// Throws InvalidGraph listing every violation found.
  static Graph validate(const RawGraph& raw);
  static std::vector<Violation> violations(const RawGraph& raw);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::optional<std::size_t> find_vertex(std::string_view id) const;
  std::optional<std::size_t> find_edge(std::string_view id) const;
  std::size_t vertex_index(std::string_view id) const;
  std::size_t edge_index(std::string_view id) const;

  std::size_t source(std::size_t e, Orientation o) const;
  std::size_t target(std::size_t e, Orientation o) const;
  /// A of the oriented edge (label at its source).
  const BigInt& label_at_source(std::size_t e, Orientation o) const;
  /// Omega of the oriented edge (label at its target).
  const BigInt& label_at_target(std::size_t e, Orientation o) const;

  /// Loops count twice.
  std::size_t degree(std::size_t v) const;

  RawGraph raw() const;

  bool operator==(const Graph&) const = default;

 private:
  friend struct GraphEditor;
  Graph() = default;

  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
};

/// An edge end (index form): the end at the source of edge `edge` taken with `orientation`.
struct EdgeEnd {
  std::size_t edge;
  Orientation orientation;
};

/// All edge ends at vertex v in declaration order; a loop contributes both ends.
std::vector<EdgeEnd> ends_at(const Graph& g, std::size_t v);

bool is_reduced(const Graph& g);

/// First Betti number E - V + 1.
std::size_t betti_number(const Graph& g);

/// Breadth-first spanning tree from vertex 0 scanning edges in declaration order.
struct SpanningTree {
  std::vector<std::optional<EdgeEnd>> parent;  // oriented edge from parent to child
  std::vector<std::size_t> order;              // BFS visiting order
  std::vector<bool> tree_edge;                 // indexed by edge
};
SpanningTree bfs_spanning_tree(const Graph& g);

/// Negate both labels of one edge.
Graph flip_edge(const Graph& g, std::string_view edge);
/// Negate every label at one vertex (both ends of a loop there).
Graph flip_vertex(const Graph& g, std::string_view vertex);

/// Deterministic sign normalization by edge and vertex flips: tree edges of the BFS
/// tree become positive, remaining edges get a positive A-label where possible.
Graph sign_normalize(const Graph& g);

struct Plateau {
  BigInt prime;
  std::vector<std::string> vertices;
  std::vector<std::string> edges;
};

/// Checks the plateau biconditional for every oriented edge starting in P.
bool is_plateau(const Graph& g, const Plateau& p);

std::optional<Plateau> find_proper_plateau(const Graph& g);

/// Multiset of edges with orientation normalized away; equal iff the graphs agree
/// up to edge identifiers and edge orientation (vertex ids are compared).
bool same_up_to_edge_ids(const Graph& a, const Graph& b);

/// Edge records in a form independent of edge ids and orientation.
struct UndirectedEdgeKey {
  std::string u;
  std::string v;
  BigInt at_u;
  BigInt at_v;
  bool operator==(const UndirectedEdgeKey&) const = default;
  bool operator<(const UndirectedEdgeKey& o) const {
    return std::tie(u, v, at_u, at_v) < std::tie(o.u, o.v, o.at_u, o.at_v);
  }
};
std::vector<UndirectedEdgeKey> edge_keys(const Graph& g);

/// Multiset of |label| over all edge ends.
std::vector<BigInt> absolute_label_multiset(const Graph& g);

/// Graph from explicit pieces; validates.
Graph make_graph(std::vector<std::string> vertices, std::vector<RawEdge> edges);

/// Single-vertex bouquet with loops (a_i, omega_i) named e1, e2, ...
Graph bouquet(const std::vector<std::pair<BigInt, BigInt>>& loops, std::string vertex = "v");

}  // namespace gbs

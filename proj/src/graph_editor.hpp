#pragma once

#include <string>
#include <vector>

#include "gbs/graph.hpp"

namespace gbs {

// Mutable access for the move engine and constructors inside the library. Callers
// are responsible for keeping the graph connected with nonzero labels.
struct GraphEditor {
  static Graph make(std::vector<std::string> vertices, std::vector<Edge> edges) {
    Graph g;
    g.vertices_ = std::move(vertices);
    g.edges_ = std::move(edges);
    return g;
  }
  static std::vector<std::string>& vertices(Graph& g) { return g.vertices_; }
  static std::vector<Edge>& edges(Graph& g) { return g.edges_; }

  static BigInt& label_at_source(Graph& g, std::size_t e, Orientation o) {
    return o == Orientation::Positive ? g.edges_[e].a : g.edges_[e].omega;
  }
  static std::size_t& source(Graph& g, std::size_t e, Orientation o) {
    return o == Orientation::Positive ? g.edges_[e].from : g.edges_[e].to;
  }

  /// Removes vertex v; no edge may still reference it.
  static void erase_vertex(Graph& g, std::size_t v) {
    g.vertices_.erase(g.vertices_.begin() + static_cast<std::ptrdiff_t>(v));
    for (auto& e : g.edges_) {
      if (e.from > v) --e.from;
      if (e.to > v) --e.to;
    }
  }
  static void erase_edge(Graph& g, std::size_t e) {
    g.edges_.erase(g.edges_.begin() + static_cast<std::ptrdiff_t>(e));
  }

  static std::string fresh_vertex_id(const Graph& g, std::string hint) {
    while (g.find_vertex(hint)) hint += "'";
    return hint;
  }
  static std::string fresh_edge_id(const Graph& g, std::string hint) {
    while (g.find_edge(hint)) hint += "'";
    return hint;
  }
};

}  // namespace gbs

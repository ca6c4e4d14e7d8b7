#include "gbs/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "graph_editor.hpp"

namespace gbs {

std::string_view violation_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::EmptyGraph: return "empty graph";
    case ViolationKind::DuplicateVertex: return "duplicate vertex";
    case ViolationKind::DuplicateEdge: return "duplicate edge";
    case ViolationKind::DanglingEndpoint: return "dangling endpoint";
    case ViolationKind::ZeroLabel: return "zero label";
    case ViolationKind::Disconnected: return "disconnected";
  }
  return "unknown";
}

namespace {

std::string summarize(const std::vector<Violation>& violations) {
  std::string msg = "invalid graph:";
  for (const auto& v : violations) {
    msg += " [";
    msg += violation_name(v.kind);
    if (!v.subject.empty()) msg += " '" + v.subject + "'";
    if (!v.detail.empty()) msg += ": " + v.detail;
    msg += "]";
  }
  return msg;
}

}  // namespace

InvalidGraph::InvalidGraph(std::vector<Violation> violations)
    : std::runtime_error(summarize(violations)), violations_(std::move(violations)) {}

std::vector<Violation> Graph::violations(const RawGraph& raw) {
  std::vector<Violation> out;
  if (raw.vertices.empty()) {
    out.push_back({ViolationKind::EmptyGraph, "", "a graph needs at least one vertex"});
    return out;
  }
  std::set<std::string> seen_vertices;
  for (const auto& v : raw.vertices) {
    if (!seen_vertices.insert(v).second) out.push_back({ViolationKind::DuplicateVertex, v, ""});
  }
  std::set<std::string> seen_edges;
  for (const auto& e : raw.edges) {
    if (!seen_edges.insert(e.id).second) out.push_back({ViolationKind::DuplicateEdge, e.id, ""});
  }

  auto index_of = [&](const std::string& id) -> std::optional<std::size_t> {
    auto it = std::find(raw.vertices.begin(), raw.vertices.end(), id);
    if (it == raw.vertices.end()) return std::nullopt;
    return static_cast<std::size_t>(it - raw.vertices.begin());
  };

  std::vector<std::size_t> parent(raw.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  for (const auto& e : raw.edges) {
    if (e.a == 0) out.push_back({ViolationKind::ZeroLabel, e.id, "label at '" + e.from + "' is 0"});
    if (e.omega == 0) out.push_back({ViolationKind::ZeroLabel, e.id, "label at '" + e.to + "' is 0"});
    auto u = index_of(e.from);
    auto w = index_of(e.to);
    if (!u) out.push_back({ViolationKind::DanglingEndpoint, e.id, "unknown vertex '" + e.from + "'"});
    if (!w) out.push_back({ViolationKind::DanglingEndpoint, e.id, "unknown vertex '" + e.to + "'"});
    if (u && w) parent[find(*u)] = find(*w);
  }

  std::set<std::size_t> components;
  for (std::size_t v = 0; v < raw.vertices.size(); ++v) components.insert(find(v));
  if (components.size() > 1) {
    out.push_back({ViolationKind::Disconnected, "",
                   std::to_string(components.size()) + " connected components"});
  }
  return out;
}

Graph Graph::validate(const RawGraph& raw) {
  auto found = violations(raw);
  if (!found.empty()) throw InvalidGraph(std::move(found));
  Graph g;
  g.vertices_ = raw.vertices;
  g.edges_.reserve(raw.edges.size());
  for (const auto& e : raw.edges) {
    g.edges_.push_back({e.id, *g.find_vertex(e.from), *g.find_vertex(e.to), e.a, e.omega});
  }
  return g;
}

std::optional<std::size_t> Graph::find_vertex(std::string_view id) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::size_t> Graph::find_edge(std::string_view id) const {
  auto it = std::find_if(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.id == id; });
  if (it == edges_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::size_t Graph::vertex_index(std::string_view id) const {
  auto v = find_vertex(id);
  if (!v) throw std::out_of_range("no vertex '" + std::string(id) + "'");
  return *v;
}

std::size_t Graph::edge_index(std::string_view id) const {
  auto e = find_edge(id);
  if (!e) throw std::out_of_range("no edge '" + std::string(id) + "'");
  return *e;
}

std::size_t Graph::source(std::size_t e, Orientation o) const {
  return o == Orientation::Positive ? edges_[e].from : edges_[e].to;
}

std::size_t Graph::target(std::size_t e, Orientation o) const {
  return o == Orientation::Positive ? edges_[e].to : edges_[e].from;
}

const BigInt& Graph::label_at_source(std::size_t e, Orientation o) const {
  return o == Orientation::Positive ? edges_[e].a : edges_[e].omega;
}

const BigInt& Graph::label_at_target(std::size_t e, Orientation o) const {
  return o == Orientation::Positive ? edges_[e].omega : edges_[e].a;
}

std::size_t Graph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (const auto& e : edges_) {
    if (e.from == v) ++d;
    if (e.to == v) ++d;
  }
  return d;
}

RawGraph Graph::raw() const {
  RawGraph raw;
  raw.vertices = vertices_;
  for (const auto& e : edges_) raw.edges.push_back({e.id, vertices_[e.from], vertices_[e.to], e.a, e.omega});
  return raw;
}

std::vector<EdgeEnd> ends_at(const Graph& g, std::size_t v) {
  std::vector<EdgeEnd> ends;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (g.edges()[e].from == v) ends.push_back({e, Orientation::Positive});
    if (g.edges()[e].to == v) ends.push_back({e, Orientation::Negative});
  }
  return ends;
}

bool is_reduced(const Graph& g) {
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    if (abs(e.a) == 1 || abs(e.omega) == 1) return false;
  }
  return true;
}

std::size_t betti_number(const Graph& g) { return g.edge_count() + 1 - g.vertex_count(); }

SpanningTree bfs_spanning_tree(const Graph& g) {
  SpanningTree tree;
  tree.parent.assign(g.vertex_count(), std::nullopt);
  tree.tree_edge.assign(g.edge_count(), false);
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    tree.order.push_back(u);
    for (const auto& end : ends_at(g, u)) {
      std::size_t w = g.target(end.edge, end.orientation);
      if (seen[w]) continue;
      seen[w] = true;
      tree.parent[w] = end;
      tree.tree_edge[end.edge] = true;
      queue.push_back(w);
    }
  }
  return tree;
}

Graph flip_edge(const Graph& g, std::string_view edge) {
  Graph out = g;
  auto& e = GraphEditor::edges(out)[g.edge_index(edge)];
  e.a = -e.a;
  e.omega = -e.omega;
  return out;
}

Graph flip_vertex(const Graph& g, std::string_view vertex) {
  Graph out = g;
  const std::size_t v = g.vertex_index(vertex);
  for (auto& e : GraphEditor::edges(out)) {
    if (e.from == v) e.a = -e.a;
    if (e.to == v) e.omega = -e.omega;
  }
  return out;
}

Graph sign_normalize(const Graph& g) {
  Graph out = g;
  auto& edges = GraphEditor::edges(out);
  auto negate_edge = [&](std::size_t e) {
    edges[e].a = -edges[e].a;
    edges[e].omega = -edges[e].omega;
  };
  auto negate_vertex = [&](std::size_t v) {
    for (auto& e : edges) {
      if (e.from == v) e.a = -e.a;
      if (e.to == v) e.omega = -e.omega;
    }
  };

  const auto tree = bfs_spanning_tree(g);
  for (std::size_t v : tree.order) {
    if (!tree.parent[v]) continue;
    const auto [e, o] = *tree.parent[v];
    if (out.label_at_source(e, o) < 0) negate_edge(e);
    if (out.label_at_target(e, o) < 0) negate_vertex(v);
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (tree.tree_edge[e] || edges[e].is_loop()) continue;
    if (edges[e].a < 0) negate_edge(e);
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (edges[e].is_loop() && edges[e].a < 0) negate_edge(e);
  }
  return out;
}

namespace {

struct Closure {
  std::vector<bool> vertices;
  std::vector<bool> edges;
};

Closure plateau_closure(const Graph& g, const BigInt& prime, std::size_t seed) {
  Closure c{std::vector<bool>(g.vertex_count(), false), std::vector<bool>(g.edge_count(), false)};
  std::deque<std::size_t> queue{seed};
  c.vertices[seed] = true;
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (const auto& end : ends_at(g, x)) {
      if (divides(prime, g.label_at_source(end.edge, end.orientation))) continue;
      c.edges[end.edge] = true;
      const std::size_t w = g.target(end.edge, end.orientation);
      if (!c.vertices[w]) {
        c.vertices[w] = true;
        queue.push_back(w);
      }
    }
  }
  return c;
}

bool closure_consistent(const Graph& g, const BigInt& prime, const Closure& c) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!c.vertices[v]) continue;
    for (const auto& end : ends_at(g, v)) {
      const bool divisible = divides(prime, g.label_at_source(end.edge, end.orientation));
      if (divisible == c.edges[end.edge]) return false;
    }
  }
  return true;
}

}  // namespace

bool is_plateau(const Graph& g, const Plateau& p) {
  if (p.vertices.empty() || p.prime < 2) return false;
  Closure c{std::vector<bool>(g.vertex_count(), false), std::vector<bool>(g.edge_count(), false)};
  for (const auto& v : p.vertices) c.vertices[g.vertex_index(v)] = true;
  for (const auto& e : p.edges) {
    const std::size_t idx = g.edge_index(e);
    if (!c.vertices[g.edges()[idx].from] || !c.vertices[g.edges()[idx].to]) return false;
    c.edges[idx] = true;
  }
  // connectivity of P through its own edges
  std::vector<bool> reached(g.vertex_count(), false);
  std::deque<std::size_t> queue{g.vertex_index(p.vertices.front())};
  reached[queue.front()] = true;
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (const auto& end : ends_at(g, x)) {
      if (!c.edges[end.edge]) continue;
      const std::size_t w = g.target(end.edge, end.orientation);
      if (!reached[w]) {
        reached[w] = true;
        queue.push_back(w);
      }
    }
  }
  if (reached != c.vertices) return false;
  return closure_consistent(g, p.prime, c);
}

std::optional<Plateau> find_proper_plateau(const Graph& g) {
  std::set<BigInt> primes;
  for (const auto& e : g.edges()) {
    for (const auto& p : prime_divisors(e.a)) primes.insert(p);
    for (const auto& p : prime_divisors(e.omega)) primes.insert(p);
  }
  for (const auto& prime : primes) {
    for (std::size_t seed = 0; seed < g.vertex_count(); ++seed) {
      const Closure c = plateau_closure(g, prime, seed);
      if (!closure_consistent(g, prime, c)) continue;
      const auto nv = std::count(c.vertices.begin(), c.vertices.end(), true);
      const auto ne = std::count(c.edges.begin(), c.edges.end(), true);
      if (static_cast<std::size_t>(nv) == g.vertex_count() && static_cast<std::size_t>(ne) == g.edge_count()) {
        continue;
      }
      Plateau p{prime, {}, {}};
      for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (c.vertices[v]) p.vertices.push_back(g.vertices()[v]);
      }
      for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (c.edges[e]) p.edges.push_back(g.edges()[e].id);
      }
      return p;
    }
  }
  return std::nullopt;
}

std::vector<UndirectedEdgeKey> edge_keys(const Graph& g) {
  std::vector<UndirectedEdgeKey> keys;
  keys.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    UndirectedEdgeKey forward{g.vertices()[e.from], g.vertices()[e.to], e.a, e.omega};
    UndirectedEdgeKey backward{g.vertices()[e.to], g.vertices()[e.from], e.omega, e.a};
    keys.push_back(std::min(forward, backward));
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

bool same_up_to_edge_ids(const Graph& a, const Graph& b) {
  auto va = a.vertices();
  auto vb = b.vertices();
  std::sort(va.begin(), va.end());
  std::sort(vb.begin(), vb.end());
  return va == vb && edge_keys(a) == edge_keys(b);
}

std::vector<BigInt> absolute_label_multiset(const Graph& g) {
  std::vector<BigInt> labels;
  for (const auto& e : g.edges()) {
    labels.push_back(abs(e.a));
    labels.push_back(abs(e.omega));
  }
  std::sort(labels.begin(), labels.end());
  return labels;
}

Graph make_graph(std::vector<std::string> vertices, std::vector<RawEdge> edges) {
  return Graph::validate(RawGraph{std::move(vertices), std::move(edges)});
}

Graph bouquet(const std::vector<std::pair<BigInt, BigInt>>& loops, std::string vertex) {
  std::vector<RawEdge> edges;
  for (std::size_t i = 0; i < loops.size(); ++i) {
    edges.push_back({"e" + std::to_string(i + 1), vertex, vertex, loops[i].first, loops[i].second});
  }
  return make_graph({vertex}, std::move(edges));
}

}  // namespace gbs

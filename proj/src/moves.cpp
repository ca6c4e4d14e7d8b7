#include "gbs/moves.hpp"

#include <algorithm>
#include <random>

#include "graph_editor.hpp"

namespace gbs {

namespace {

using E = GraphEditor;

std::size_t edge_of(const Graph& g, const std::string& id) {
  auto e = g.find_edge(id);
  if (!e) throw IllegalMove("no edge '" + id + "'");
  return *e;
}

std::size_t vertex_of(const Graph& g, const std::string& id) {
  auto v = g.find_vertex(id);
  if (!v) throw IllegalMove("no vertex '" + id + "'");
  return *v;
}

void slide_once(Graph& g, std::size_t moved, Orientation mo, std::size_t over, Orientation oo) {
  BigInt& label = E::label_at_source(g, moved, mo);
  const BigInt& a = g.label_at_source(over, oo);
  if (!divides(a, label)) {
    throw IllegalMove("slide: A of the edge slid over (" + to_string(a) + ") does not divide the moved label (" +
                      to_string(label) + ")");
  }
  label = label / a * g.label_at_target(over, oo);
  E::source(g, moved, mo) = g.target(over, oo);
}

Graph apply_collapse(const Graph& g, const Collapse& mv) {
  const std::size_t e = edge_of(g, mv.edge.edge);
  const Orientation o = mv.edge.orientation;
  if (g.edges()[e].is_loop()) throw IllegalMove("collapse: edge '" + mv.edge.edge + "' is a loop");
  if (abs(g.label_at_target(e, o)) != 1) {
    throw IllegalMove("collapse: label at the collapsed vertex is " + to_string(g.label_at_target(e, o)) +
                      ", not +-1");
  }
  const std::size_t s = g.source(e, o);
  const std::size_t t = g.target(e, o);
  const BigInt factor = g.label_at_source(e, o) * g.label_at_target(e, o);
  Graph out = g;
  E::erase_edge(out, e);
  for (auto& edge : E::edges(out)) {
    if (edge.from == t) {
      edge.a *= factor;
      edge.from = s;
    }
    if (edge.to == t) {
      edge.omega *= factor;
      edge.to = s;
    }
  }
  E::erase_vertex(out, t);
  return out;
}

Graph apply_expansion(const Graph& g, const Expansion& mv) {
  const std::size_t u = vertex_of(g, mv.vertex);
  if (mv.factor == 0) throw IllegalMove("expansion: factor must be nonzero");
  Graph out = g;
  const std::string vid = mv.new_vertex.empty()
                              ? E::fresh_vertex_id(g, mv.vertex + "_" + to_string(mv.factor))
                              : mv.new_vertex;
  const std::string eid = mv.new_edge.empty()
                              ? E::fresh_edge_id(g, "x_" + mv.vertex + "_" + to_string(mv.factor))
                              : mv.new_edge;
  if (g.find_vertex(vid)) throw IllegalMove("expansion: vertex '" + vid + "' already exists");
  if (g.find_edge(eid)) throw IllegalMove("expansion: edge '" + eid + "' already exists");
  const std::size_t w = g.vertex_count();
  E::vertices(out).push_back(vid);
  std::vector<std::pair<std::size_t, Orientation>> seen;
  for (const auto& end : mv.ends) {
    const std::size_t e = edge_of(g, end.edge);
    const Orientation o = end.orientation;
    if (std::find(seen.begin(), seen.end(), std::pair{e, o}) != seen.end()) {
      throw IllegalMove("expansion: edge end listed twice");
    }
    seen.emplace_back(e, o);
    if (g.source(e, o) != u) throw IllegalMove("expansion: end of '" + end.edge + "' is not at '" + mv.vertex + "'");
    BigInt& label = E::label_at_source(out, e, o);
    if (!divides(mv.factor, label)) {
      throw IllegalMove("expansion: factor " + to_string(mv.factor) + " does not divide label " + to_string(label));
    }
    label /= mv.factor;
    E::source(out, e, o) = w;
  }
  E::edges(out).push_back({eid, u, w, mv.factor, 1});
  return out;
}

Graph apply_slide_loop(const Graph& g, const SlideOverLoop& mv) {
  const std::size_t e = edge_of(g, mv.moved.edge);
  const std::size_t f = edge_of(g, mv.loop);
  if (e == f) throw IllegalMove("slide: an edge cannot slide over itself");
  if (!g.edges()[f].is_loop()) throw IllegalMove("slide: '" + mv.loop + "' is not a loop");
  if (g.source(e, mv.moved.orientation) != g.edges()[f].from) {
    throw IllegalMove("slide: moved end is not at the vertex of loop '" + mv.loop + "'");
  }
  Graph out = g;
  const Orientation over = mv.count > 0 ? Orientation::Positive : Orientation::Negative;
  const std::uint64_t times = mv.count >= 0 ? static_cast<std::uint64_t>(mv.count)
                                            : static_cast<std::uint64_t>(-(mv.count + 1)) + 1;
  for (std::uint64_t i = 0; i < times; ++i) slide_once(out, e, mv.moved.orientation, f, over);
  return out;
}

Graph apply_slide_edge(const Graph& g, const SlideOverEdge& mv) {
  const std::size_t e = edge_of(g, mv.moved.edge);
  const std::size_t f = edge_of(g, mv.over.edge);
  if (e == f) throw IllegalMove("slide: an edge cannot slide over itself");
  if (g.edges()[f].is_loop()) throw IllegalMove("slide: '" + mv.over.edge + "' is a loop");
  if (g.source(e, mv.moved.orientation) != g.source(f, mv.over.orientation)) {
    throw IllegalMove("slide: moved end does not start where '" + mv.over.edge + "' starts");
  }
  Graph out = g;
  slide_once(out, e, mv.moved.orientation, f, mv.over.orientation);
  return out;
}

// Orientation of the loop whose source label is 1, if any.
std::optional<Orientation> unit_side(const Graph& g, std::size_t loop) {
  if (g.edges()[loop].a == 1) return Orientation::Positive;
  if (g.edges()[loop].omega == 1) return Orientation::Negative;
  return std::nullopt;
}

Graph apply_induction(const Graph& g, const Induction& mv) {
  const std::size_t f = edge_of(g, mv.loop);
  if (!g.edges()[f].is_loop()) throw IllegalMove("induction: '" + mv.loop + "' is not a loop");
  const auto side = unit_side(g, f);
  if (!side) throw IllegalMove("induction: loop '" + mv.loop + "' has no label equal to 1");
  if (mv.ell == 0) throw IllegalMove("induction: factor must be nonzero");
  const BigInt& big = g.label_at_target(f, *side);
  if (!divides(mv.ell, big)) {
    throw IllegalMove("induction: " + to_string(mv.ell) + " does not divide loop label " + to_string(big));
  }
  const std::size_t v = g.edges()[f].from;
  Graph out = g;
  for (const auto& end : ends_at(g, v)) {
    if (end.edge == f) continue;
    BigInt& label = E::label_at_source(out, end.edge, end.orientation);
    if (mv.inverse) {
      if (!divides(mv.ell, label)) {
        throw IllegalMove("induction: " + to_string(mv.ell) + " does not divide label " + to_string(label));
      }
      label /= mv.ell;
    } else {
      label *= mv.ell;
    }
  }
  return out;
}

Graph apply_amove(const Graph& g, const AMove& mv) {
  const std::size_t f = edge_of(g, mv.loop.edge);
  const Orientation o = mv.loop.orientation;
  if (!g.edges()[f].is_loop()) throw IllegalMove("A-move: '" + mv.loop.edge + "' is not a loop");
  if (mv.ell == 0) throw IllegalMove("A-move: factor must be nonzero");
  const BigInt k = g.label_at_source(f, o);
  const BigInt omega = g.label_at_target(f, o);
  if (!divides(k * mv.ell, omega)) {
    throw IllegalMove("A-move: k*ell = " + to_string(BigInt(k * mv.ell)) + " does not divide " + to_string(omega));
  }
  const BigInt rest = omega / k;
  if (abs(rest) <= 1) throw IllegalMove("A-move: the new loop would not be strictly ascending");
  const std::size_t w = g.edges()[f].from;
  const std::string vid = mv.new_vertex.empty() ? E::fresh_vertex_id(g, "u_" + mv.loop.edge) : mv.new_vertex;
  const std::string eid = mv.new_edge.empty() ? E::fresh_edge_id(g, "E_" + mv.loop.edge) : mv.new_edge;
  if (g.find_vertex(vid)) throw IllegalMove("A-move: vertex '" + vid + "' already exists");
  if (g.find_edge(eid)) throw IllegalMove("A-move: edge '" + eid + "' already exists");
  Graph out = g;
  const std::size_t u = g.vertex_count();
  E::vertices(out).push_back(vid);
  auto& loop = E::edges(out)[f];
  loop.from = loop.to = u;
  E::label_at_source(out, f, o) = 1;
  E::label_at_source(out, f, reverse(o)) = rest;
  E::edges(out).push_back({eid, u, w, mv.ell, k});
  return out;
}

Graph apply_ainverse(const Graph& g, const AInverse& mv) {
  const std::size_t e = edge_of(g, mv.edge.edge);
  const Orientation o = mv.edge.orientation;
  if (g.edges()[e].is_loop()) throw IllegalMove("A-inverse: '" + mv.edge.edge + "' is a loop");
  const std::size_t u = g.source(e, o);
  const std::size_t w = g.target(e, o);
  if (g.degree(u) != 3) throw IllegalMove("A-inverse: source vertex does not have degree 3");
  std::optional<std::size_t> loop;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (i != e && g.edges()[i].from == u && g.edges()[i].to == u) loop = i;
  }
  if (!loop) throw IllegalMove("A-inverse: no loop at the source vertex");
  const auto side = unit_side(g, *loop);
  if (!side || abs(g.label_at_target(*loop, *side)) <= 1) {
    throw IllegalMove("A-inverse: the loop at the source vertex is not strictly ascending");
  }
  const BigInt big = g.label_at_target(*loop, *side);
  const BigInt& ell = g.label_at_source(e, o);
  if (!divides(ell, big)) {
    throw IllegalMove("A-inverse: " + to_string(ell) + " does not divide loop label " + to_string(big));
  }
  const BigInt k = g.label_at_target(e, o);
  Graph out = g;
  auto& f = E::edges(out)[*loop];
  f.from = f.to = w;
  E::label_at_source(out, *loop, *side) = k;
  E::label_at_source(out, *loop, reverse(*side)) = k * big;
  E::erase_edge(out, e);
  E::erase_vertex(out, u);
  return out;
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

std::string move_name(const Move& mv) {
  return std::visit(overloaded{
                        [](const Collapse&) { return "collapse"; },
                        [](const Expansion&) { return "expansion"; },
                        [](const SlideOverLoop&) { return "slide-loop"; },
                        [](const SlideOverEdge&) { return "slide-edge"; },
                        [](const Induction&) { return "induction"; },
                        [](const AMove&) { return "a-move"; },
                        [](const AInverse&) { return "a-inverse"; },
                    },
                    mv);
}

Graph apply(const Graph& g, const Move& mv) {
  return std::visit(overloaded{
                        [&](const Collapse& m) { return apply_collapse(g, m); },
                        [&](const Expansion& m) { return apply_expansion(g, m); },
                        [&](const SlideOverLoop& m) { return apply_slide_loop(g, m); },
                        [&](const SlideOverEdge& m) { return apply_slide_edge(g, m); },
                        [&](const Induction& m) { return apply_induction(g, m); },
                        [&](const AMove& m) { return apply_amove(g, m); },
                        [&](const AInverse& m) { return apply_ainverse(g, m); },
                    },
                    mv);
}

Graph apply_all(const Graph& g, const std::vector<Move>& moves) {
  Graph out = g;
  for (const auto& mv : moves) out = gbs::apply(out, mv);
  return out;
}

std::vector<Move> legal_moves(const Graph& g) {
  std::vector<Move> moves;
  const auto& edges = g.edges();
  constexpr Orientation kBoth[] = {Orientation::Positive, Orientation::Negative};

  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (edges[e].is_loop()) continue;
    for (Orientation o : kBoth) {
      if (abs(g.label_at_target(e, o)) == 1) moves.push_back(Collapse{{edges[e].id, o}});
    }
  }

  for (std::size_t e = 0; e < edges.size(); ++e) {
    for (Orientation o : kBoth) {
      const std::size_t v = g.source(e, o);
      const BigInt& label = g.label_at_source(e, o);
      for (std::size_t f = 0; f < edges.size(); ++f) {
        if (f == e) continue;
        if (edges[f].is_loop()) {
          if (edges[f].from != v) continue;
          if (divides(edges[f].a, label)) moves.push_back(SlideOverLoop{{edges[e].id, o}, edges[f].id, 1});
          if (divides(edges[f].omega, label)) moves.push_back(SlideOverLoop{{edges[e].id, o}, edges[f].id, -1});
        } else {
          for (Orientation p : kBoth) {
            if (g.source(f, p) == v && divides(g.label_at_source(f, p), label)) {
              moves.push_back(SlideOverEdge{{edges[e].id, o}, {edges[f].id, p}});
            }
          }
        }
      }
    }
  }

  for (std::size_t f = 0; f < edges.size(); ++f) {
    if (!edges[f].is_loop()) continue;
    const auto side = unit_side(g, f);
    if (!side) continue;
    const BigInt& big = g.label_at_target(f, *side);
    if (abs(big) <= 1) continue;
    std::vector<BigInt> others;
    for (const auto& end : ends_at(g, edges[f].from)) {
      if (end.edge != f) others.push_back(g.label_at_source(end.edge, end.orientation));
    }
    if (others.empty()) continue;
    for (const auto& ell : prime_divisors(big)) {
      moves.push_back(Induction{edges[f].id, ell, false});
      if (std::all_of(others.begin(), others.end(), [&](const BigInt& x) { return divides(ell, x); })) {
        moves.push_back(Induction{edges[f].id, ell, true});
      }
    }
  }

  for (std::size_t f = 0; f < edges.size(); ++f) {
    if (!edges[f].is_loop()) continue;
    for (Orientation o : kBoth) {
      const BigInt& k = g.label_at_source(f, o);
      const BigInt& omega = g.label_at_target(f, o);
      if (!divides(k, omega)) continue;
      const BigInt rest = omega / k;
      if (abs(rest) <= 1) continue;
      for (const auto& ell : prime_divisors(rest)) moves.push_back(AMove{{edges[f].id, o}, ell, "", ""});
    }
  }

  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (edges[e].is_loop()) continue;
    for (Orientation o : kBoth) {
      const std::size_t u = g.source(e, o);
      if (g.degree(u) != 3) continue;
      for (std::size_t f = 0; f < edges.size(); ++f) {
        if (f == e || !edges[f].is_loop() || edges[f].from != u) continue;
        const auto side = unit_side(g, f);
        if (!side) continue;
        const BigInt& big = g.label_at_target(f, *side);
        if (abs(big) > 1 && divides(g.label_at_source(e, o), big)) moves.push_back(AInverse{{edges[e].id, o}});
      }
    }
  }
  return moves;
}

Deformation random_deform(const Graph& g, std::size_t steps, std::uint64_t seed, bool keep_reduced) {
  if (keep_reduced && !is_reduced(g)) throw std::invalid_argument("random_deform: start graph is not reduced");
  std::mt19937_64 rng(seed);
  Deformation out{g, {}};
  for (std::size_t step = 0; step < steps; ++step) {
    auto moves = legal_moves(out.graph);
    std::vector<std::pair<Move, Graph>> candidates;
    candidates.reserve(moves.size());
    for (auto& mv : moves) {
      Graph next = gbs::apply(out.graph, mv);
      if (keep_reduced && !is_reduced(next)) continue;
      candidates.emplace_back(std::move(mv), std::move(next));
    }
    if (candidates.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    auto& chosen = candidates[pick(rng)];
    out.log.push_back(std::move(chosen.first));
    out.graph = std::move(chosen.second);
  }
  return out;
}

Graph induction_by_elementary_moves(const Graph& g, const Induction& mv) {
  if (mv.inverse) throw std::invalid_argument("induction_by_elementary_moves: forward direction only");
  const std::size_t f = edge_of(g, mv.loop);
  if (!g.edges()[f].is_loop()) throw IllegalMove("induction: '" + mv.loop + "' is not a loop");
  const auto side = unit_side(g, f);
  if (!side) throw IllegalMove("induction: loop '" + mv.loop + "' has no label equal to 1");
  const BigInt& big = g.label_at_target(f, *side);
  if (mv.ell == 0 || !divides(mv.ell, big)) throw IllegalMove("induction: factor does not divide the loop label");
  const std::string v = g.vertices()[g.edges()[f].from];
  const std::string w = E::fresh_vertex_id(g, v + "_ind");
  const std::string x = E::fresh_edge_id(g, mv.loop + "_ind");
  Graph expanded = gbs::apply(g, Expansion{v, big / mv.ell, {{mv.loop, reverse(*side)}}, w, x});
  Graph collapsed = gbs::apply(expanded, Collapse{{mv.loop, reverse(*side)}});
  E::vertices(collapsed)[collapsed.vertex_index(w)] = v;
  return collapsed;
}

}  // namespace gbs

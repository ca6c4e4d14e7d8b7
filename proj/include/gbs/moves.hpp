#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "gbs/graph.hpp"

namespace gbs {

/// Contract the non-loop oriented edge `edge`: its target (whose label must be +-1)
/// merges into its source, and the other labels at the target are multiplied by
/// A(edge) * Omega(edge).
struct Collapse {
  OrientedEdge edge;
  bool operator==(const Collapse&) const = default;
};

/// Split `vertex`: the listed edge ends (each named by the oriented edge starting
/// there) move to a new vertex with their labels divided by `factor`, joined to
/// `vertex` by a new edge labelled (factor, 1). Empty ids are derived.
struct Expansion {
  std::string vertex;
  BigInt factor;
  std::vector<OrientedEdge> ends;
  std::string new_vertex;
  std::string new_edge;
  bool operator==(const Expansion&) const = default;
};

/// Slide the end at the source of `moved` over loop `loop`, |count| times, over the
/// loop itself for count > 0 and over its inverse for count < 0.
struct SlideOverLoop {
  OrientedEdge moved;
  std::string loop;
  std::int64_t count = 1;
  bool operator==(const SlideOverLoop&) const = default;
};

/// Slide the end at the source of `moved` along the non-loop oriented edge `over`.
struct SlideOverEdge {
  OrientedEdge moved;
  OrientedEdge over;
  bool operator==(const SlideOverEdge&) const = default;
};

/// Loop labelled (1, L) with ell | L: every other label at its vertex is multiplied
/// by ell (or divided, for the inverse direction).
struct Induction {
  std::string loop;
  BigInt ell;
  bool inverse = false;
  bool operator==(const Induction&) const = default;
};

/// Oriented loop with labels (k, k*ell*m) becomes a new vertex carrying the loop
/// (1, ell*m), joined to the old vertex by an edge labelled (ell, k).
struct AMove {
  OrientedEdge loop;
  BigInt ell;
  std::string new_vertex;
  std::string new_edge;
  bool operator==(const AMove&) const = default;
};

/// Inverse of AMove: `edge` starts at a degree-3 vertex carrying a strictly
/// ascending loop; the loop is transported to the far end of `edge`.
struct AInverse {
  OrientedEdge edge;
  bool operator==(const AInverse&) const = default;
};

using Move = std::variant<Collapse, Expansion, SlideOverLoop, SlideOverEdge, Induction, AMove, AInverse>;

class IllegalMove : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string move_name(const Move& mv);

/// Throws IllegalMove naming the violated precondition.
Graph apply(const Graph& g, const Move& mv);

/// Applies moves in order.
Graph apply_all(const Graph& g, const std::vector<Move>& moves);

/// Collapses, +-1 slides, inductions and A-moves with prime factors, and inverse
/// A-moves, in a fixed order. Expansions are not enumerated.
std::vector<Move> legal_moves(const Graph& g);

struct Deformation {
  Graph graph;
  std::vector<Move> log;
};

/// `steps` moves chosen uniformly among the legal ones (among those keeping the graph
/// reduced when `keep_reduced`); stops early when nothing applies.
Deformation random_deform(const Graph& g, std::size_t steps, std::uint64_t seed, bool keep_reduced);

/// Induction realised as an expansion followed by a collapse.
Graph induction_by_elementary_moves(const Graph& g, const Induction& mv);

}  // namespace gbs

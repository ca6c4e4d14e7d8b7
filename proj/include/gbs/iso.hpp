#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gbs/covering.hpp"
#include "gbs/graph.hpp"
#include "gbs/normalform.hpp"

namespace gbs {

/// Length l*m count vector over the primitive base r.
struct CharVector {
  BigInt r;
  std::vector<std::uint64_t> entries;
  bool operator==(const CharVector&) const = default;
};

CharVector char_vector(const NormalForm& nf);

/// Smallest C with w[(i + C) mod L] = v[i] for all i.
std::optional<std::size_t> cyclic_equal(const CharVector& v, const CharVector& w);

struct IsoCertificate {
  std::size_t shift = 0;
  std::vector<std::size_t> sigma;  // residue i of the first form matches residue sigma[i] of the second
  bool operator==(const IsoCertificate&) const = default;
};

struct IsoResult {
  bool isomorphic = false;
  std::optional<IsoCertificate> certificate;
};

IsoResult iso_normal_forms(const NormalForm& nf1, const NormalForm& nf2);

bool iso_subgroups(const CoveringGraph& c1, const BigInt& n1, const CoveringGraph& c2, const BigInt& n2);

class PreconditionFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InconsistentPotential : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DualEdge {
  std::size_t from;    // index into DualGraph::vertices
  std::size_t to;
  std::string colour;  // vertex of the original graph
  std::uint64_t label; // in [0, m)
};

/// One vertex per edge of the graph with one strictly ascending loop removed at
/// every vertex; edges record exponent differences of labels mod m.
struct DualGraph {
  std::uint64_t m = 1;
  std::vector<std::string> vertices;  // edge ids
  std::vector<DualEdge> edges;
  std::vector<std::uint64_t> potential;  // potential[0] = 0
  std::vector<std::string> deleted_loops;
};

/// Throws PreconditionFailed or InconsistentPotential.
DualGraph dual_graph(const Graph& g, const BigInt& r, std::uint64_t l, std::uint64_t m);

/// Sorted potential values shifted so that the multiset is lexicographically least
/// among all global shifts mod m.
std::vector<std::uint64_t> canonical_residues(std::vector<std::uint64_t> values, std::uint64_t m);

}  // namespace gbs

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gbs/graph.hpp"

namespace gbs {

/// Degree-N cover of the d-petal bouquet: perms[i][x] is the end of the lift of
/// petal i starting at sheet x.
struct CoveringGraph {
  std::size_t d = 0;
  std::size_t n_sheets = 0;
  std::vector<std::vector<std::size_t>> perms;

  bool operator==(const CoveringGraph&) const = default;
};

class InvalidCover : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws InvalidCover on a non-bijection or an intransitive action.
CoveringGraph covering_from_permutations(std::size_t d, std::size_t n_sheets,
                                         std::vector<std::vector<std::size_t>> perms);

/// Every edge labelled (p, q); vertices s0..s{N-1}, edges e{i}_{x} for petal i
/// (1-based) leaving sheet x, petal-major.
Graph lift_labels(const CoveringGraph& c, const BigInt& p, const BigInt& q);

std::string sheet_id(std::size_t x);
std::string lifted_edge_id(std::size_t petal, std::size_t sheet);

/// The group G^d_{p,q}: d loops labelled (p, q) at one vertex.
struct SubgroupDescriptor {
  BigInt d;
  BigInt p;
  BigInt q;
  BigInt gcd_pq;
  bool operator==(const SubgroupDescriptor&) const = default;
};

SubgroupDescriptor descriptor(const BigInt& d, const BigInt& p, const BigInt& q);
Graph descriptor_graph(const SubgroupDescriptor& g);

struct StandardSubgroup {
  BigInt index;
  SubgroupDescriptor group;
  bool operator==(const StandardSubgroup&) const = default;
};

/// H_{m,n} in BS(m,n): index d = gcd(|m|, |n|), isomorphic to G^d_{|m|/d, |n|/d}.
StandardSubgroup standard_subgroup(const BigInt& m, const BigInt& n);

/// Two vertices joined by two edges in a cycle, both labelled (m, n).
Graph index2_cycle(const BigInt& m, const BigInt& n);

/// Cyclic cover of the one-petal bouquet with N sheets.
CoveringGraph cycle_cover(std::size_t n_sheets);

/// The trivial cover of the d-petal bouquet.
CoveringGraph trivial_cover(std::size_t d);

/// Cover of the 2-petal bouquet on k-1 sheets realising G^k_{1,n} in G^2_{1,n}.
CoveringGraph gamma_k(std::size_t k);

bool is_transitive(const CoveringGraph& c);

}  // namespace gbs

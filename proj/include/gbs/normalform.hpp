#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gbs/covering.hpp"
#include "gbs/graph.hpp"
#include "gbs/moves.hpp"

namespace gbs {

/// Spanning tree of a cover made of positive edges, all oriented toward `base`.
struct PositiveSpanningTree {
  std::size_t base = 0;
  std::vector<std::optional<std::size_t>> out_edge;  // per sheet: lifted edge index (petal-major)
  std::vector<std::size_t> depth;                    // tree distance to base
  std::vector<std::size_t> edges() const;
};

PositiveSpanningTree positive_spanning_tree(const CoveringGraph& c);

/// Bouquet with petal labels (base^a_i, base^b_i).
struct ExponentBouquet {
  BigInt base;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> petals;
  bool operator==(const ExponentBouquet&) const = default;
};

/// Petals named e1..ek.
Graph bouquet_graph(const ExponentBouquet& b, const std::string& vertex = "v");

/// Petal exponents from tree path lengths.
ExponentBouquet collapse_by_path_counts(const CoveringGraph& c, const BigInt& n);

/// Collapse moves on the tree edges of the lifted graph (labels (1, n)), in tree
/// order; the collapsed bouquet sits at the base sheet.
std::vector<Move> tree_collapse_moves(const CoveringGraph& c, const PositiveSpanningTree& tree);

/// Executes the collapse moves and checks the result against the path counts.
ExponentBouquet collapse_to_bouquet(const CoveringGraph& c, const BigInt& n);

class NormalFormError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// gcd of |b_i - a_i|; throws when every petal is balanced.
std::uint64_t plateau_m(const ExponentBouquet& b);

struct EuclidOutcome {
  std::uint64_t d = 0;
  std::uint64_t t = 0;
  std::vector<Move> moves;  // slides on loops E = (1, n^a) and F = (n^b, n^c)
};

/// The two-step slide procedure on E = (1, r^a), F = (r^b, r^c), with a >= 1.
EuclidOutcome euclid_slides(std::uint64_t a, std::uint64_t b, std::uint64_t c, const std::string& e_loop = "E",
                            const std::string& f_loop = "F");

std::pair<std::uint64_t, std::uint64_t> euclid_slide_pair(std::uint64_t a, std::uint64_t b, std::uint64_t c);

/// Bouquet with one loop (1, n^m), n = r^l, and loops (n^p, n^p) for each residue.
struct NormalForm {
  BigInt r;
  std::uint64_t l = 1;
  std::uint64_t m = 1;
  std::vector<std::uint64_t> residues;  // sorted, each < m

  std::size_t k() const { return residues.size() + 1; }
  BigInt n() const { return ipow(r, l); }
  bool operator==(const NormalForm&) const = default;
};

/// Sorts residues and checks bounds and that r is not a perfect power.
NormalForm make_normal_form(BigInt r, std::uint64_t l, std::uint64_t m, std::vector<std::uint64_t> residues);

std::string render(const NormalForm& nf);

/// Loops e1 = (1, n^m) and e2.. = (n^p_i, n^p_i).
Graph normal_form_graph(const NormalForm& nf, const std::string& vertex = "v");

ExponentBouquet normal_form_bouquet(const NormalForm& nf);

struct NormalizedBouquet {
  NormalForm form;
  std::vector<Move> moves;  // slides carrying bouquet_graph(b) to the normal-form graph
};

/// Petals are addressed as e1..ek unless `petal_ids` names them.
NormalizedBouquet normalize_bouquet(const ExponentBouquet& b, const std::vector<std::string>& petal_ids = {});

NormalForm bouquet_normal_form(const ExponentBouquet& b);

/// Collapse, then slides; both stages are certified by executing the moves.
NormalForm normal_form_of_cover(const CoveringGraph& c, const BigInt& n);

}  // namespace gbs

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gbs/graph.hpp"

namespace gbs {

/// A finitely generated subgroup of Q*, in canonical form: the exponent lattice over
/// `primes` (increasing) in Hermite normal form, plus sign data. When -1 belongs to
/// the image every row sign is reported positive.
struct ModularImage {
  std::vector<BigInt> primes;
  std::vector<std::vector<BigInt>> basis;  // rows, one per generator
  std::vector<bool> row_negative;          // sign of the generator of each row
  bool has_negative_one = false;

  bool has_negative() const;
  bool is_trivial() const { return basis.empty() && !has_negative_one; }
  bool operator==(const ModularImage&) const = default;
};

/// Canonical subgroup of Q* generated by the given nonzero rationals.
ModularImage subgroup_generated(const std::vector<Rational>& generators);

/// Image of the modular homomorphism, from the moduli of a cycle basis.
ModularImage modular_image(const Graph& g);

/// Moduli of the fundamental cycles of the BFS spanning tree, one per non-tree edge.
std::vector<Rational> cycle_moduli(const Graph& g);

/// Generator q >= 1 when the image is cyclic with a positive generator.
std::optional<Rational> image_generator_cyclic(const ModularImage& img);

std::string to_string(const ModularImage& img);

struct PrimitiveBase {
  BigInt base;
  std::uint64_t exponent = 1;
  bool operator==(const PrimitiveBase&) const = default;
};

/// n = base^exponent with base not a perfect power; n >= 2.
PrimitiveBase primitive_base(const BigInt& n);

/// Minimal positive (k, l) with q1^k = q2^l, for q1, q2 > 1.
std::optional<std::pair<std::uint64_t, std::uint64_t>> common_power(const Rational& q1, const Rational& q2);

}  // namespace gbs

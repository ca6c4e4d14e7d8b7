#include "gbs/covering.hpp"

#include <deque>
#include <numeric>

namespace gbs {

bool is_transitive(const CoveringGraph& c) {
  if (c.n_sheets == 0) return false;
  std::vector<bool> seen(c.n_sheets, false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t count = 1;
  // orbits of a finite permutation group are closed under the forward maps alone
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (const auto& perm : c.perms) {
      if (!seen[perm[x]]) {
        seen[perm[x]] = true;
        ++count;
        queue.push_back(perm[x]);
      }
    }
  }
  return count == c.n_sheets;
}

CoveringGraph covering_from_permutations(std::size_t d, std::size_t n_sheets,
                                         std::vector<std::vector<std::size_t>> perms) {
  if (d == 0) throw InvalidCover("cover needs at least one petal");
  if (n_sheets == 0) throw InvalidCover("cover needs at least one sheet");
  if (perms.size() != d) {
    throw InvalidCover("expected " + std::to_string(d) + " permutations, got " + std::to_string(perms.size()));
  }
  for (std::size_t i = 0; i < d; ++i) {
    if (perms[i].size() != n_sheets) {
      throw InvalidCover("permutation " + std::to_string(i + 1) + " has length " + std::to_string(perms[i].size()));
    }
    std::vector<bool> hit(n_sheets, false);
    for (std::size_t x : perms[i]) {
      if (x >= n_sheets || hit[x]) throw InvalidCover("permutation " + std::to_string(i + 1) + " is not a bijection");
      hit[x] = true;
    }
  }
  CoveringGraph c{d, n_sheets, std::move(perms)};
  if (!is_transitive(c)) throw InvalidCover("action is intransitive (disconnected cover)");
  return c;
}

std::string sheet_id(std::size_t x) { return "s" + std::to_string(x); }

std::string lifted_edge_id(std::size_t petal, std::size_t sheet) {
  return "e" + std::to_string(petal) + "_" + std::to_string(sheet);
}

Graph lift_labels(const CoveringGraph& c, const BigInt& p, const BigInt& q) {
  std::vector<std::string> vertices;
  for (std::size_t x = 0; x < c.n_sheets; ++x) vertices.push_back(sheet_id(x));
  std::vector<RawEdge> edges;
  for (std::size_t i = 0; i < c.d; ++i) {
    for (std::size_t x = 0; x < c.n_sheets; ++x) {
      edges.push_back({lifted_edge_id(i + 1, x), sheet_id(x), sheet_id(c.perms[i][x]), p, q});
    }
  }
  return make_graph(std::move(vertices), std::move(edges));
}

SubgroupDescriptor descriptor(const BigInt& d, const BigInt& p, const BigInt& q) { return {d, p, q, gcd(p, q)}; }

Graph descriptor_graph(const SubgroupDescriptor& g) {
  return lift_labels(trivial_cover(static_cast<std::size_t>(g.d)), g.p, g.q);
}

StandardSubgroup standard_subgroup(const BigInt& m, const BigInt& n) {
  if (m == 0 || n == 0) throw std::invalid_argument("standard_subgroup: m and n must be nonzero");
  const BigInt d = gcd(m, n);
  return {d, descriptor(d, abs(m) / d, abs(n) / d)};
}

Graph index2_cycle(const BigInt& m, const BigInt& n) {
  if (m == 0 || n == 0) throw std::invalid_argument("index2_cycle: m and n must be nonzero");
  return make_graph({"u0", "u1"}, {{"f1", "u0", "u1", m, n}, {"f2", "u1", "u0", m, n}});
}

CoveringGraph cycle_cover(std::size_t n_sheets) {
  std::vector<std::size_t> perm(n_sheets);
  for (std::size_t x = 0; x < n_sheets; ++x) perm[x] = (x + 1) % n_sheets;
  return covering_from_permutations(1, n_sheets, {perm});
}

CoveringGraph trivial_cover(std::size_t d) {
  return covering_from_permutations(d, 1, std::vector<std::vector<std::size_t>>(d, {0}));
}

CoveringGraph gamma_k(std::size_t k) {
  if (k < 3) throw std::invalid_argument("gamma_k: need k >= 3");
  // sheet j - 1 is the vertex v_j
  const std::size_t n = k - 1;
  std::vector<std::size_t> a(n), b(n);
  std::iota(a.begin(), a.end(), 0);
  std::iota(b.begin(), b.end(), 0);
  auto swap_pair = [](std::vector<std::size_t>& perm, std::size_t i, std::size_t j) {
    perm[i - 1] = j - 1;
    perm[j - 1] = i - 1;
  };
  if (k % 2 == 1) {
    for (std::size_t i = 1; i <= (k - 3) / 2; ++i) swap_pair(a, 2 * i, 2 * i + 1);
    for (std::size_t i = 1; i <= (k - 1) / 2; ++i) swap_pair(b, 2 * i - 1, 2 * i);
  } else {
    for (std::size_t i = 1; i <= k / 2 - 1; ++i) swap_pair(a, 2 * i, 2 * i + 1);
    for (std::size_t i = 1; i <= k / 2 - 1; ++i) swap_pair(b, 2 * i - 1, 2 * i);
  }
  return covering_from_permutations(2, n, {a, b});
}

}  // namespace gbs

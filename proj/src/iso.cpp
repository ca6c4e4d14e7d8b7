#include "gbs/iso.hpp"

#include <algorithm>
#include <deque>

#include "gbs/modular.hpp"

namespace gbs {

CharVector char_vector(const NormalForm& nf) {
  CharVector v{nf.r, std::vector<std::uint64_t>(nf.l * nf.m, 0)};
  for (auto p : nf.residues) ++v.entries[nf.l * p];
  return v;
}

std::optional<std::size_t> cyclic_equal(const CharVector& v, const CharVector& w) {
  if (v.r != w.r || v.entries.size() != w.entries.size()) return std::nullopt;
  const std::size_t len = v.entries.size();
  for (std::size_t shift = 0; shift < len; ++shift) {
    bool match = true;
    for (std::size_t i = 0; i < len && match; ++i) match = w.entries[(i + shift) % len] == v.entries[i];
    if (match) return shift;
  }
  return std::nullopt;
}

IsoResult iso_normal_forms(const NormalForm& nf1, const NormalForm& nf2) {
  if (nf1.r != nf2.r) return {};
  if (nf1.l * nf1.m != nf2.l * nf2.m) return {};
  if (nf1.k() != nf2.k()) return {};
  const auto shift = cyclic_equal(char_vector(nf1), char_vector(nf2));
  if (!shift) return {};
  const std::uint64_t s = nf1.l * nf1.m;
  IsoCertificate cert{*shift, {}};
  std::vector<bool> used(nf2.residues.size(), false);
  for (auto p : nf1.residues) {
    const std::uint64_t target = (nf1.l * p + *shift) % s;
    std::size_t j = 0;
    while (j < nf2.residues.size() && (used[j] || nf2.l * nf2.residues[j] != target)) ++j;
    if (j == nf2.residues.size()) throw std::logic_error("iso: shifted vectors agree but residues do not match");
    used[j] = true;
    cert.sigma.push_back(j);
  }
  return {true, std::move(cert)};
}

bool iso_subgroups(const CoveringGraph& c1, const BigInt& n1, const CoveringGraph& c2, const BigInt& n2) {
  if (primitive_base(n1).base != primitive_base(n2).base) return false;
  return iso_normal_forms(normal_form_of_cover(c1, n1), normal_form_of_cover(c2, n2)).isomorphic;
}

namespace {

bool strictly_ascending(const Edge& e) {
  if (!e.is_loop()) return false;
  const BigInt a = abs(e.a), w = abs(e.omega);
  return (a == 1 && w > 1) || (w == 1 && a > 1);
}

std::uint64_t mod(std::int64_t x, std::uint64_t m) {
  const auto mm = static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(((x % mm) + mm) % mm);
}

}  // namespace

DualGraph dual_graph(const Graph& g, const BigInt& r, std::uint64_t l, std::uint64_t m) {
  if (r < 2 || l == 0 || m == 0) throw std::invalid_argument("dual_graph: need r >= 2, l >= 1, m >= 1");
  if (!is_reduced(g)) throw PreconditionFailed("graph is not reduced");
  const auto step = static_cast<std::int64_t>(l * m);
  for (const auto& e : g.edges()) {
    if (!e.is_loop()) continue;
    auto k = exact_log(Rational(abs(e.omega), abs(e.a)), r);
    if (!k || *k % step != 0) throw PreconditionFailed("loop modulus of '" + e.id + "' is not a power of r^(l*m)");
  }

  DualGraph dual;
  dual.m = m;
  std::vector<bool> deleted(g.edge_count(), false);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    std::optional<std::size_t> loop;
    for (std::size_t e = 0; e < g.edge_count() && !loop; ++e) {
      if (g.edges()[e].from == v && strictly_ascending(g.edges()[e])) loop = e;
    }
    if (!loop) throw PreconditionFailed("no strictly ascending loop at '" + g.vertices()[v] + "'");
    deleted[*loop] = true;
    dual.deleted_loops.push_back(g.edges()[*loop].id);
  }

  std::vector<std::size_t> dual_index(g.edge_count(), 0);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (deleted[e]) continue;
    dual_index[e] = dual.vertices.size();
    dual.vertices.push_back(g.edges()[e].id);
  }

  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    std::vector<std::pair<std::size_t, BigInt>> star;  // (edge, |label at v|)
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (deleted[e]) continue;
      const auto& edge = g.edges()[e];
      if (edge.is_loop()) {
        if (edge.from == v) star.emplace_back(e, abs(edge.a));
      } else {
        if (edge.from == v) star.emplace_back(e, abs(edge.a));
        if (edge.to == v) star.emplace_back(e, abs(edge.omega));
      }
    }
    for (std::size_t i = 0; i < star.size(); ++i) {
      for (std::size_t j = i + 1; j < star.size(); ++j) {
        auto k = exact_log(Rational(star[j].second, star[i].second), r);
        if (!k || *k % static_cast<std::int64_t>(l) != 0) {
          throw PreconditionFailed("label proportion at '" + g.vertices()[v] + "' is not a power of r^l");
        }
        dual.edges.push_back({dual_index[star[i].first], dual_index[star[j].first], g.vertices()[v],
                              mod(*k / static_cast<std::int64_t>(l), m)});
      }
    }
  }

  const std::size_t nv = dual.vertices.size();
  dual.potential.assign(nv, 0);
  if (nv == 0) return dual;
  std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> adjacent(nv);
  for (const auto& e : dual.edges) {
    adjacent[e.from].emplace_back(e.to, e.label);
    adjacent[e.to].emplace_back(e.from, (m - e.label) % m);
  }
  std::vector<bool> seen(nv, false);
  seen[0] = true;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (const auto& [y, label] : adjacent[x]) {
      if (seen[y]) continue;
      seen[y] = true;
      dual.potential[y] = (dual.potential[x] + label) % m;
      queue.push_back(y);
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) throw InconsistentPotential("dual graph is disconnected");
  for (const auto& e : dual.edges) {
    if ((dual.potential[e.from] + e.label) % m != dual.potential[e.to]) {
      throw InconsistentPotential("closed path with nonzero label through '" + dual.vertices[e.from] + "' and '" +
                                  dual.vertices[e.to] + "'");
    }
  }
  return dual;
}

std::vector<std::uint64_t> canonical_residues(std::vector<std::uint64_t> values, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("canonical_residues: need m >= 1");
  std::vector<std::uint64_t> best;
  for (std::uint64_t s = 0; s < m; ++s) {
    std::vector<std::uint64_t> shifted;
    for (auto v : values) shifted.push_back((v + s) % m);
    std::sort(shifted.begin(), shifted.end());
    if (s == 0 || shifted < best) best = std::move(shifted);
  }
  return best;
}

}  // namespace gbs

#include "gbs/normalform.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "gbs/modular.hpp"

namespace gbs {

std::vector<std::size_t> PositiveSpanningTree::edges() const {
  std::vector<std::size_t> out;
  for (const auto& e : out_edge) {
    if (e) out.push_back(*e);
  }
  return out;
}

PositiveSpanningTree positive_spanning_tree(const CoveringGraph& c) {
  const std::size_t n = c.n_sheets;
  std::vector<std::vector<std::size_t>> inverse(c.d, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < c.d; ++i) {
    for (std::size_t x = 0; x < n; ++x) inverse[i][c.perms[i][x]] = x;
  }
  PositiveSpanningTree tree{0, std::vector<std::optional<std::size_t>>(n), std::vector<std::size_t>(n, 0)};
  std::vector<bool> in_tree(n, false);
  in_tree[0] = true;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t y = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < c.d; ++i) {
      const std::size_t x = inverse[i][y];
      if (in_tree[x]) continue;
      in_tree[x] = true;
      tree.out_edge[x] = i * n + x;
      tree.depth[x] = tree.depth[y] + 1;
      queue.push_back(x);
    }
  }
  return tree;
}

Graph bouquet_graph(const ExponentBouquet& b, const std::string& vertex) {
  std::vector<std::pair<BigInt, BigInt>> loops;
  for (const auto& [x, y] : b.petals) loops.emplace_back(ipow(b.base, x), ipow(b.base, y));
  return bouquet(loops, vertex);
}

ExponentBouquet collapse_by_path_counts(const CoveringGraph& c, const BigInt& n) {
  const auto tree = positive_spanning_tree(c);
  ExponentBouquet out{n, {}};
  for (std::size_t i = 0; i < c.d; ++i) {
    for (std::size_t x = 0; x < c.n_sheets; ++x) {
      if (tree.out_edge[x] == i * c.n_sheets + x) continue;
      out.petals.emplace_back(tree.depth[x], tree.depth[c.perms[i][x]] + 1);
    }
  }
  return out;
}

std::vector<Move> tree_collapse_moves(const CoveringGraph& c, const PositiveSpanningTree& tree) {
  std::vector<std::size_t> order(c.n_sheets);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return tree.depth[x] < tree.depth[y]; });
  std::vector<Move> moves;
  for (std::size_t x : order) {
    if (!tree.out_edge[x]) continue;
    const std::size_t petal = *tree.out_edge[x] / c.n_sheets;
    moves.push_back(Collapse{{lifted_edge_id(petal + 1, x), Orientation::Negative}});
  }
  return moves;
}

namespace {

struct Collapsed {
  Graph graph;
  ExponentBouquet bouquet;
};

Collapsed collapse_certified(const CoveringGraph& c, const BigInt& n) {
  if (n < 2) throw std::invalid_argument("collapse_to_bouquet: need n >= 2");
  const auto tree = positive_spanning_tree(c);
  Graph g = apply_all(lift_labels(c, 1, n), tree_collapse_moves(c, tree));
  ExponentBouquet expected = collapse_by_path_counts(c, n);
  ExponentBouquet found{n, {}};
  for (const auto& e : g.edges()) {
    auto a = exact_log(e.a, n);
    auto b = exact_log(e.omega, n);
    if (!a || !b) throw std::logic_error("collapse: petal label is not a power of n");
    found.petals.emplace_back(*a, *b);
  }
  if (g.vertex_count() != 1 || found != expected) {
    throw std::logic_error("collapse: executed moves disagree with the path-count formula");
  }
  return {std::move(g), std::move(found)};
}

}  // namespace

ExponentBouquet collapse_to_bouquet(const CoveringGraph& c, const BigInt& n) {
  return collapse_certified(c, n).bouquet;
}

std::uint64_t plateau_m(const ExponentBouquet& b) {
  std::uint64_t m = 0;
  for (const auto& [x, y] : b.petals) m = std::gcd(m, x > y ? x - y : y - x);
  if (m == 0) throw NormalFormError("no ascending petal");
  return m;
}

EuclidOutcome euclid_slides(std::uint64_t a, std::uint64_t b, std::uint64_t c, const std::string& e_loop,
                            const std::string& f_loop) {
  if (a == 0) throw std::invalid_argument("euclid_slides: need a >= 1");
  const std::uint64_t a0 = a, b0 = b, c0 = c;
  EuclidOutcome out;
  while (true) {
    const std::uint64_t s = b / a, t = c / a;
    b %= a;
    c %= a;
    if (s > 0) out.moves.push_back(SlideOverLoop{{f_loop, Orientation::Positive}, e_loop, -static_cast<std::int64_t>(s)});
    if (t > 0) out.moves.push_back(SlideOverLoop{{f_loop, Orientation::Negative}, e_loop, -static_cast<std::int64_t>(t)});
    if (b == c) break;
    const std::uint64_t hi = std::max(b, c), lo = std::min(b, c);
    const std::uint64_t diff = hi - lo;
    const std::uint64_t lambda = (a - lo - 1) / diff;
    a -= lambda * diff;
    const std::int64_t count = b > c ? static_cast<std::int64_t>(lambda) : -static_cast<std::int64_t>(lambda);
    out.moves.push_back(SlideOverLoop{{e_loop, Orientation::Negative}, f_loop, count});
  }
  out.d = a;
  out.t = b;
  const std::uint64_t d = std::gcd(a0, b0 > c0 ? b0 - c0 : c0 - b0);
  if (out.d != d || out.t != b0 % d || out.t != c0 % d) {
    throw std::logic_error("euclid_slides: procedure disagrees with the closed form");
  }
  return out;
}

std::pair<std::uint64_t, std::uint64_t> euclid_slide_pair(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  auto out = euclid_slides(a, b, c);
  return {out.d, out.t};
}

NormalForm make_normal_form(BigInt r, std::uint64_t l, std::uint64_t m, std::vector<std::uint64_t> residues) {
  if (r < 2) throw NormalFormError("normal form base must be >= 2");
  if (primitive_base(r).exponent != 1) throw NormalFormError("normal form base " + to_string(r) + " is a perfect power");
  if (l == 0) throw NormalFormError("normal form needs l >= 1");
  if (m == 0) throw NormalFormError("normal form needs m >= 1");
  for (auto p : residues) {
    if (p >= m) throw NormalFormError("residue " + std::to_string(p) + " is not below m = " + std::to_string(m));
  }
  std::sort(residues.begin(), residues.end());
  return {std::move(r), l, m, std::move(residues)};
}

std::string render(const NormalForm& nf) {
  std::string out = "NF(r=" + to_string(nf.r) + ",l=" + std::to_string(nf.l) + ",m=" + std::to_string(nf.m) + ";p=[";
  for (std::size_t i = 0; i < nf.residues.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(nf.residues[i]);
  }
  return out + "])";
}

ExponentBouquet normal_form_bouquet(const NormalForm& nf) {
  ExponentBouquet b{nf.n(), {{0, nf.m}}};
  for (auto p : nf.residues) b.petals.emplace_back(p, p);
  return b;
}

Graph normal_form_graph(const NormalForm& nf, const std::string& vertex) {
  return bouquet_graph(normal_form_bouquet(nf), vertex);
}

NormalizedBouquet normalize_bouquet(const ExponentBouquet& b, const std::vector<std::string>& petal_ids) {
  if (b.base < 2) throw NormalFormError("bouquet base must be >= 2");
  if (!petal_ids.empty() && petal_ids.size() != b.petals.size()) {
    throw std::invalid_argument("normalize_bouquet: one id per petal expected");
  }
  auto id = [&](std::size_t i) { return petal_ids.empty() ? "e" + std::to_string(i + 1) : petal_ids[i]; };
  std::optional<std::size_t> first;
  for (std::size_t i = 0; i < b.petals.size() && !first; ++i) {
    if (b.petals[i].first == 0 && b.petals[i].second > 0) first = i;
  }
  if (!first) throw NormalFormError("no ascending petal");

  NormalizedBouquet out;
  std::uint64_t a = b.petals[*first].second;
  std::vector<std::pair<std::size_t, std::uint64_t>> residues;
  for (std::size_t i = 0; i < b.petals.size(); ++i) {
    if (i == *first) continue;
    auto step = euclid_slides(a, b.petals[i].first, b.petals[i].second, id(*first), id(i));
    a = step.d;
    residues.emplace_back(i, step.t);
    out.moves.insert(out.moves.end(), step.moves.begin(), step.moves.end());
  }
  if (a != plateau_m(b)) throw std::logic_error("normalize_bouquet: final loop exponent is not m");
  std::vector<std::uint64_t> reduced;
  for (const auto& [i, t] : residues) {
    const auto times = static_cast<std::int64_t>(t / a);
    if (times > 0) {
      out.moves.push_back(SlideOverLoop{{id(i), Orientation::Positive}, id(*first), -times});
      out.moves.push_back(SlideOverLoop{{id(i), Orientation::Negative}, id(*first), -times});
    }
    reduced.push_back(t % a);
  }
  const auto base = primitive_base(b.base);
  out.form = make_normal_form(base.base, base.exponent, a, std::move(reduced));
  return out;
}

NormalForm bouquet_normal_form(const ExponentBouquet& b) { return normalize_bouquet(b).form; }

NormalForm normal_form_of_cover(const CoveringGraph& c, const BigInt& n) {
  auto collapsed = collapse_certified(c, n);
  std::vector<std::string> ids;
  for (const auto& e : collapsed.graph.edges()) ids.push_back(e.id);
  auto normalized = normalize_bouquet(collapsed.bouquet, ids);
  const Graph result = apply_all(collapsed.graph, normalized.moves);
  const std::string& vertex = collapsed.graph.vertices().front();
  if (edge_keys(result) != edge_keys(normal_form_graph(normalized.form, vertex))) {
    throw std::logic_error("normal form: slide moves do not reproduce the normal-form graph");
  }
  return normalized.form;
}

}  // namespace gbs

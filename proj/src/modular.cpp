#include "gbs/modular.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace gbs {

namespace {

// cpp_rational rejects a negative denominator in the two-argument constructor.
Rational ratio(const BigInt& num, const BigInt& den) { return Rational(num) / Rational(den); }

struct Row {
  std::vector<BigInt> v;
  bool negative = false;
};

bool odd(const BigInt& x) { return x % 2 != 0; }

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

// row -= q * other, carrying the sign bit along.
void subtract(Row& row, const Row& other, const BigInt& q) {
  for (std::size_t c = 0; c < row.v.size(); ++c) row.v[c] -= q * other.v[c];
  if (odd(q) && other.negative) row.negative = !row.negative;
}

std::map<BigInt, BigInt> exponent_vector(const Rational& q) {
  std::map<BigInt, BigInt> out;
  for (const auto& pp : factorize(boost::multiprecision::numerator(q))) out[pp.prime] += pp.exponent;
  for (const auto& pp : factorize(boost::multiprecision::denominator(q))) out[pp.prime] -= pp.exponent;
  return out;
}

}  // namespace

bool ModularImage::has_negative() const {
  return has_negative_one || std::any_of(row_negative.begin(), row_negative.end(), [](bool b) { return b; });
}

ModularImage subgroup_generated(const std::vector<Rational>& generators) {
  std::vector<std::map<BigInt, BigInt>> vectors;
  std::map<BigInt, std::size_t> column;
  for (const auto& q : generators) {
    if (q == 0) throw std::invalid_argument("subgroup_generated: zero is not in Q*");
    vectors.push_back(exponent_vector(boost::multiprecision::abs(q)));
    for (const auto& [p, e] : vectors.back()) column.emplace(p, 0);
  }
  ModularImage img;
  for (auto& [p, idx] : column) {
    idx = img.primes.size();
    img.primes.push_back(p);
  }
  const std::size_t cols = img.primes.size();
  std::vector<Row> rows;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    Row r{std::vector<BigInt>(cols, 0), generators[i] < 0};
    for (const auto& [p, e] : vectors[i]) r.v[column[p]] = e;
    rows.push_back(std::move(r));
  }

  std::size_t pivot = 0;
  for (std::size_t c = 0; c < cols && pivot < rows.size(); ++c) {
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t r = pivot; r < rows.size(); ++r) {
        if (rows[r].v[c] != 0 && (!best || abs(rows[r].v[c]) < abs(rows[*best].v[c]))) best = r;
      }
      if (!best) break;
      std::swap(rows[pivot], rows[*best]);
      bool done = true;
      for (std::size_t r = pivot + 1; r < rows.size(); ++r) {
        if (rows[r].v[c] == 0) continue;
        subtract(rows[r], rows[pivot], rows[r].v[c] / rows[pivot].v[c]);
        if (rows[r].v[c] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[pivot].v[c] == 0) continue;
    if (rows[pivot].v[c] < 0) {
      for (auto& x : rows[pivot].v) x = -x;
    }
    for (std::size_t r = 0; r < pivot; ++r) subtract(rows[r], rows[pivot], floor_div(rows[r].v[c], rows[pivot].v[c]));
    ++pivot;
  }

  for (std::size_t r = pivot; r < rows.size(); ++r) {
    if (rows[r].negative) img.has_negative_one = true;
  }
  for (std::size_t r = 0; r < pivot; ++r) {
    img.basis.push_back(rows[r].v);
    img.row_negative.push_back(rows[r].negative && !img.has_negative_one);
  }
  return img;
}

std::vector<Rational> cycle_moduli(const Graph& g) {
  const auto tree = bfs_spanning_tree(g);
  std::vector<Rational> mu(g.vertex_count(), Rational(1));
  for (std::size_t v : tree.order) {
    if (!tree.parent[v]) continue;
    const auto [e, o] = *tree.parent[v];
    mu[v] = mu[g.source(e, o)] * ratio(g.label_at_source(e, o), g.label_at_target(e, o));
  }
  std::vector<Rational> out;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (tree.tree_edge[e]) continue;
    const auto& edge = g.edges()[e];
    out.push_back(mu[edge.from] * ratio(edge.a, edge.omega) / mu[edge.to]);
  }
  return out;
}

ModularImage modular_image(const Graph& g) { return subgroup_generated(cycle_moduli(g)); }

std::optional<Rational> image_generator_cyclic(const ModularImage& img) {
  if (img.has_negative()) return std::nullopt;
  if (img.basis.empty()) return Rational(1);
  if (img.basis.size() > 1) return std::nullopt;
  BigInt num = 1, den = 1;
  for (std::size_t c = 0; c < img.primes.size(); ++c) {
    const BigInt& e = img.basis[0][c];
    if (e > 0) num *= ipow(img.primes[c], static_cast<std::uint64_t>(e));
    if (e < 0) den *= ipow(img.primes[c], static_cast<std::uint64_t>(-e));
  }
  Rational q(num, den);
  return q < 1 ? Rational(1) / q : q;
}

std::string to_string(const ModularImage& img) {
  if (auto q = image_generator_cyclic(img)) return "gen = " + to_string(*q);
  std::string out = "<";
  bool first = true;
  if (img.has_negative_one) {
    out += "-1";
    first = false;
  }
  for (std::size_t r = 0; r < img.basis.size(); ++r) {
    BigInt num = 1, den = 1;
    for (std::size_t c = 0; c < img.primes.size(); ++c) {
      const BigInt& e = img.basis[r][c];
      if (e > 0) num *= ipow(img.primes[c], static_cast<std::uint64_t>(e));
      if (e < 0) den *= ipow(img.primes[c], static_cast<std::uint64_t>(-e));
    }
    Rational q(num, den);
    if (img.row_negative[r]) q = -q;
    if (!first) out += ", ";
    out += to_string(q);
    first = false;
  }
  return out + ">";
}

PrimitiveBase primitive_base(const BigInt& n) {
  if (n < 2) throw std::invalid_argument("primitive_base: need n >= 2");
  const auto factors = factorize(n);
  std::uint64_t e = 0;
  for (const auto& pp : factors) e = std::gcd(e, static_cast<std::uint64_t>(pp.exponent));
  BigInt base = 1;
  for (const auto& pp : factors) base *= ipow(pp.prime, pp.exponent / e);
  return {base, e};
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> common_power(const Rational& q1, const Rational& q2) {
  if (q1 <= 1 || q2 <= 1) throw std::invalid_argument("common_power: need q1, q2 > 1");
  const auto v1 = exponent_vector(q1);
  const auto v2 = exponent_vector(q2);
  if (v1.size() != v2.size()) return std::nullopt;
  BigInt g1 = 0, g2 = 0;
  for (const auto& [p, e] : v1) g1 = gcd(g1, e);
  for (const auto& [p, e] : v2) g2 = gcd(g2, e);
  for (auto i1 = v1.begin(), i2 = v2.begin(); i1 != v1.end(); ++i1, ++i2) {
    if (i1->first != i2->first || i1->second / g1 != i2->second / g2) return std::nullopt;
  }
  const BigInt g = gcd(g1, g2);
  return std::pair{static_cast<std::uint64_t>(g2 / g), static_cast<std::uint64_t>(g1 / g)};
}

}  // namespace gbs

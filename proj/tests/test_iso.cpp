#include "doctest.h"

#include <random>

#include "gbs/iso.hpp"
#include "gbs/modular.hpp"
#include "gbs/moves.hpp"

using namespace gbs;

namespace {

CharVector cv(std::vector<std::uint64_t> entries) { return {2, std::move(entries)}; }

}  // namespace

TEST_CASE("characteristic vectors") {
  CHECK(char_vector(make_normal_form(2, 1, 2, {0, 1})) == cv({1, 1}));
  CHECK(char_vector(make_normal_form(2, 2, 3, {0, 2})) == cv({1, 0, 0, 0, 1, 0}));
  CHECK(char_vector(make_normal_form(2, 1, 1, {0, 0, 0})) == cv({3}));
}

TEST_CASE("cyclic equality") {
  CHECK(cyclic_equal(cv({1, 0}), cv({0, 1})) == std::optional<std::size_t>(1));
  CHECK(cyclic_equal(cv({1, 0, 0, 0, 1, 0}), cv({0, 1, 0, 0, 0, 1})) == std::optional<std::size_t>(1));
  CHECK_FALSE(cyclic_equal(cv({2, 0}), cv({1, 1})).has_value());
  CHECK_FALSE(cyclic_equal(cv({1, 0}), cv({1, 0, 0})).has_value());
  CHECK_FALSE(cyclic_equal(cv({1}), CharVector{3, {1}}).has_value());
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint64_t> entry(0, 2);
  for (int t = 0; t < 50; ++t) {
    CharVector v = cv(std::vector<std::uint64_t>(1 + t % 7));
    for (auto& x : v.entries) x = entry(rng);
    CHECK(cyclic_equal(v, v) == std::optional<std::size_t>(0));
  }
}

TEST_CASE("isomorphism of normal forms") {
  CHECK(iso_normal_forms(make_normal_form(2, 1, 2, {0}), make_normal_form(2, 2, 1, {0})).isomorphic);
  CHECK(normal_form_graph(make_normal_form(2, 1, 2, {0})) == normal_form_graph(make_normal_form(2, 2, 1, {0})));

  const auto r = iso_normal_forms(make_normal_form(2, 2, 3, {0, 2}), make_normal_form(2, 1, 6, {1, 5}));
  CHECK(r.isomorphic);
  REQUIRE(r.certificate.has_value());
  CHECK(r.certificate->shift == 1);
  CHECK(r.certificate->sigma == std::vector<std::size_t>{0, 1});

  CHECK_FALSE(iso_normal_forms(make_normal_form(2, 1, 2, {0, 0}), make_normal_form(2, 1, 2, {0, 1})).isomorphic);
  CHECK_FALSE(iso_normal_forms(make_normal_form(2, 1, 2, {0}), make_normal_form(2, 1, 3, {0})).isomorphic);
  CHECK_FALSE(iso_normal_forms(make_normal_form(2, 1, 2, {0}), make_normal_form(3, 1, 2, {0})).isomorphic);
  CHECK_FALSE(iso_normal_forms(make_normal_form(2, 1, 2, {0}), make_normal_form(2, 1, 2, {0, 0})).isomorphic);
}

TEST_CASE("isomorphism is an equivalence on random forms") {
  std::mt19937_64 rng(5);
  auto random_form = [&] {
    const std::uint64_t l = std::uniform_int_distribution<std::uint64_t>(1, 2)(rng);
    const std::uint64_t m = 6 / l;
    std::vector<std::uint64_t> res(2);
    for (auto& p : res) p = std::uniform_int_distribution<std::uint64_t>(0, m - 1)(rng);
    return make_normal_form(2, l, m, res);
  };
  std::vector<NormalForm> forms;
  for (int i = 0; i < 40; ++i) forms.push_back(random_form());
  for (const auto& a : forms) {
    CHECK(iso_normal_forms(a, a).isomorphic);
    for (const auto& b : forms) {
      const bool ab = iso_normal_forms(a, b).isomorphic;
      CHECK(ab == iso_normal_forms(b, a).isomorphic);
      if (ab) CHECK(modular_image(normal_form_graph(a)) == modular_image(normal_form_graph(b)));
      for (const auto& c : forms) {
        if (ab && iso_normal_forms(b, c).isomorphic) CHECK(iso_normal_forms(a, c).isomorphic);
      }
    }
  }
}

TEST_CASE("isomorphism of subgroups") {
  CHECK_FALSE(iso_subgroups(trivial_cover(2), 4, trivial_cover(2), 8));
  CHECK(iso_subgroups(gamma_k(3), 2, trivial_cover(3), 2));
  const CoveringGraph fig = covering_from_permutations(2, 4, {{1, 2, 3, 0}, {3, 2, 1, 0}});
  CHECK(iso_subgroups(fig, 3, fig, 3));
  CHECK_FALSE(iso_subgroups(fig, 3, fig, 2));
}

TEST_CASE("dual graph of a normal form is complete") {
  const NormalForm nf = make_normal_form(2, 1, 5, {0, 1, 3, 4});
  const DualGraph d = dual_graph(normal_form_graph(nf), 2, 1, 5);
  CHECK(d.vertices.size() == 4);
  CHECK(d.edges.size() == 6);
  CHECK(d.deleted_loops == std::vector<std::string>{"e1"});
  for (const auto& e : d.edges) {
    CHECK(e.colour == "v");
    CHECK(e.label == (nf.residues[e.to] + 5 - nf.residues[e.from]) % 5);
  }
  CHECK(d.potential == std::vector<std::uint64_t>{0, 1, 3, 4});
  CHECK(canonical_residues(d.potential, 5) == canonical_residues(nf.residues, 5));
}

TEST_CASE("dual graph preconditions and vertices without other edges") {
  CHECK_THROWS_AS(dual_graph(bouquet({{2, 3}}), 2, 1, 1), PreconditionFailed);
  CHECK_THROWS_AS(dual_graph(make_graph({"u", "v"}, {{"e", "u", "v", 1, 2}}), 2, 1, 1), PreconditionFailed);
  // u carries only its ascending loop and one edge: degree 3, no edges of colour u.
  const Graph g = make_graph({"v", "u"}, {{"F", "u", "u", 1, 4}, {"E", "u", "v", 2, 2}, {"L", "v", "v", 1, 4}, {"P", "v", "v", 2, 2}});
  const DualGraph d = dual_graph(g, 2, 1, 2);
  for (const auto& e : d.edges) CHECK(e.colour != "u");
  CHECK(d.vertices == std::vector<std::string>{"E", "P"});
}

TEST_CASE("dual graph is unchanged by a slide over the ascending loop") {
  const NormalForm nf = make_normal_form(3, 1, 2, {0, 1, 1});
  const Graph g = normal_form_graph(nf);
  const Graph s = gbs::apply(g, SlideOverLoop{{"e3", Orientation::Positive}, "e1", 1});
  const DualGraph a = dual_graph(g, 3, 1, 2);
  const DualGraph b = dual_graph(s, 3, 1, 2);
  CHECK(a.potential == b.potential);
  REQUIRE(a.edges.size() == b.edges.size());
  for (std::size_t i = 0; i < a.edges.size(); ++i) CHECK(a.edges[i].label == b.edges[i].label);
}

TEST_CASE("canonical residues") {
  CHECK(canonical_residues({1, 2}, 3) == std::vector<std::uint64_t>{0, 1});
  CHECK(canonical_residues({0, 2}, 3) == std::vector<std::uint64_t>{0, 1});
  CHECK(canonical_residues({4, 1, 1}, 5) == std::vector<std::uint64_t>{0, 0, 3});
  CHECK(canonical_residues({}, 4).empty());
}

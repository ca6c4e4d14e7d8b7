#include "doctest.h"

#include "gbs/covering.hpp"
#include "gbs/modular.hpp"

using namespace gbs;

namespace {

CoveringGraph four_sheet() { return covering_from_permutations(2, 4, {{1, 2, 3, 0}, {3, 2, 1, 0}}); }

}  // namespace

TEST_CASE("cover construction and validation") {
  const CoveringGraph t = covering_from_permutations(2, 1, {{0}, {0}});
  CHECK(lift_labels(t, 2, 3) == descriptor_graph(descriptor(2, 2, 3)));
  CHECK(four_sheet().n_sheets == 4);
  CHECK_THROWS_AS(covering_from_permutations(2, 2, {{0, 1}, {0, 1}}), InvalidCover);
  CHECK_THROWS_WITH(covering_from_permutations(2, 2, {{0, 1}, {0, 1}}), doctest::Contains("intransitive"));
  CHECK_THROWS_AS(covering_from_permutations(1, 3, {{0, 0, 1}}), InvalidCover);
  CHECK_THROWS_AS(covering_from_permutations(1, 3, {{0, 1, 3}}), InvalidCover);
  CHECK_THROWS_AS(covering_from_permutations(2, 2, {{1, 0}}), InvalidCover);
  CHECK_THROWS_AS(covering_from_permutations(1, 2, {{1}}), InvalidCover);
}

TEST_CASE("lifting labels") {
  const Graph t = lift_labels(trivial_cover(2), 1, 3);
  CHECK(t.vertex_count() == 1);
  for (const auto& e : t.edges()) {
    CHECK(e.a == 1);
    CHECK(e.omega == 3);
  }

  const Graph f = lift_labels(four_sheet(), 1, 5);
  CHECK(f.vertex_count() == 4);
  CHECK(f.edge_count() == 8);
  CHECK(betti_number(f) == 5);
  CHECK(f.edges()[0].id == "e1_0");
  CHECK(f.vertices()[f.edges()[0].to] == "s1");

  const Graph c = lift_labels(cycle_cover(3), 2, 3);
  CHECK(c.edge_count() == 3);
  CHECK(betti_number(c) == 1);
  CHECK(modular_image(c) == subgroup_generated({Rational(27, 8)}));
}

TEST_CASE("lifted graphs have in- and out-degree d at every vertex") {
  const CoveringGraph c = four_sheet();
  const Graph g = lift_labels(c, 2, 3);
  std::vector<int> in(4, 0), out(4, 0);
  for (const auto& e : g.edges()) {
    ++out[e.from];
    ++in[e.to];
  }
  for (int x = 0; x < 4; ++x) {
    CHECK(in[x] == 2);
    CHECK(out[x] == 2);
  }
  CHECK(is_reduced(g));
}

TEST_CASE("standard subgroups") {
  CHECK(standard_subgroup(4, 6) == StandardSubgroup{2, descriptor(2, 2, 3)});
  CHECK(standard_subgroup(2, 6) == StandardSubgroup{2, descriptor(2, 1, 3)});
  CHECK(standard_subgroup(2, 3) == StandardSubgroup{1, descriptor(1, 2, 3)});
  CHECK(standard_subgroup(-4, 6) == StandardSubgroup{2, descriptor(2, 2, 3)});
  CHECK(descriptor(2, 4, 6).gcd_pq == 2);
  CHECK_FALSE(find_proper_plateau(descriptor_graph(descriptor(3, 2, 5))).has_value());
}

TEST_CASE("index-two cycles") {
  CHECK(index2_cycle(2, 3) == make_graph({"u0", "u1"}, {{"f1", "u0", "u1", 2, 3}, {"f2", "u1", "u0", 2, 3}}));
  const Graph neg = index2_cycle(-2, 3);
  CHECK(neg.edges()[0].a == -2);
  CHECK(neg.edges()[1].a == -2);
  CHECK(sign_normalize(neg) == index2_cycle(2, 3));
  CHECK(image_generator_cyclic(modular_image(index2_cycle(2, 3))) == std::optional<Rational>(Rational(9, 4)));
}

TEST_CASE("gamma_k covers") {
  const CoveringGraph g3 = gamma_k(3);
  CHECK(g3.n_sheets == 2);
  CHECK(g3.perms[0] == std::vector<std::size_t>{0, 1});
  CHECK(g3.perms[1] == std::vector<std::size_t>{1, 0});

  const CoveringGraph g4 = gamma_k(4);
  CHECK(g4.n_sheets == 3);
  CHECK(g4.perms[0] == std::vector<std::size_t>{0, 2, 1});
  CHECK(g4.perms[1] == std::vector<std::size_t>{1, 0, 2});

  for (std::size_t k = 3; k <= 12; ++k) {
    CAPTURE(k);
    const CoveringGraph c = gamma_k(k);
    CHECK(c.n_sheets == k - 1);
    CHECK(is_transitive(c));
    CHECK(betti_number(lift_labels(c, 1, 3)) == k);
  }
  CHECK_THROWS(gamma_k(2));
}

TEST_CASE("coprime labels with q > p > 1 lift to reduced graphs") {
  const CoveringGraph c = covering_from_permutations(3, 5, {{1, 2, 3, 4, 0}, {0, 2, 1, 4, 3}, {4, 3, 2, 1, 0}});
  CHECK(is_reduced(lift_labels(c, 2, 3)));
  CHECK(is_reduced(lift_labels(c, 3, 5)));
  CHECK(betti_number(lift_labels(c, 3, 5)) == 5 * 2 + 1);
}

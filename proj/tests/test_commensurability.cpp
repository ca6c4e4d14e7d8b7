#include "doctest.h"

#include "gbs/commensurability.hpp"
#include "gbs/modular.hpp"

using namespace gbs;

namespace {

CommCase tag(BigInt m1, BigInt n1, BigInt m2, BigInt n2) { return commensurable(m1, n1, m2, n2).tag; }

}  // namespace

TEST_CASE("normalizing Baumslag-Solitar pairs") {
  CHECK(bs_normalize(-2, -6) == BsPair{2, 6, true});
  CHECK(bs_normalize(3, 2) == BsPair{2, 3, true});
  CHECK(bs_normalize(6, -4) == BsPair{-4, 6, true});
  CHECK(bs_normalize(-1, -1) == BsPair{1, 1, true});
  CHECK(bs_normalize(1, -1) == BsPair{-1, 1, true});
  CHECK_THROWS(bs_normalize(0, 3));
}

TEST_CASE("commensurability decisions") {
  CHECK(tag(2, 4, 3, 6) == CommCase::CommonRatio);
  CHECK(tag(1, 4, 1, 8) == CommCase::SolvablePowers);
  CHECK(tag(2, 6, -2, 6) == CommCase::SignTwin);
  CHECK(tag(2, 4, 2, 8) == CommCase::RatioMismatch);
  CHECK(tag(2, 3, 4, 6) == CommCase::RigidNonAscending);
  CHECK(tag(1, 2, 2, 4) == CommCase::MixedSolvability);
  CHECK(tag(1, 1, -1, 1) == CommCase::SignTwin);
  CHECK(tag(2, 3, 3, 2) == CommCase::EqualPair);
  CHECK(tag(1, 2, 1, 3) == CommCase::ModularObstruction);
  CHECK(tag(1, 1, 1, 2) == CommCase::ModularObstruction);
  CHECK(tag(2, 4, 2, 3) == CommCase::DivisibilityMismatch);
  CHECK(tag(-2, 4, 3, 6) == CommCase::CommonRatio);
  CHECK(tag(-1, 2, 1, 4) == CommCase::SolvablePowers);
  CHECK(commensurable(2, 4, 3, 6).commensurable);
  CHECK_FALSE(commensurable(2, 4, 2, 8).commensurable);
  CHECK_FALSE(commensurable(2, 4, 3, 6).witness.has_value());
}

TEST_CASE("negative verdicts agree with the modular obstruction") {
  for (int m1 = -6; m1 <= 6; ++m1) {
    for (int n1 = 1; n1 <= 8; ++n1) {
      for (int m2 = -6; m2 <= 6; ++m2) {
        for (int n2 = 1; n2 <= 8; ++n2) {
          if (m1 == 0 || m2 == 0 || std::abs(m1) == n1 || std::abs(m2) == n2) continue;
          const Rational q1 = Rational(n1, std::abs(m1)), q2 = Rational(n2, std::abs(m2));
          const Rational a = q1 > 1 ? q1 : 1 / q1, b = q2 > 1 ? q2 : 1 / q2;
          if (!common_power(a, b)) CHECK_FALSE(commensurable(m1, n1, m2, n2).commensurable);
        }
      }
    }
  }
}

TEST_CASE("witness examples") {
  const Certificate twin = witness(2, 6, -2, 6);
  REQUIRE(twin.steps.size() == 2);
  CHECK(std::get<Index2CycleStep>(twin.steps[0]) == Index2CycleStep{2, 6});
  CHECK(std::get<Index2CycleStep>(twin.steps[1]) == Index2CycleStep{-2, 6});

  const Certificate ratio = witness(2, 4, 3, 6);
  REQUIRE(ratio.steps.size() == 3);
  CHECK(std::get<StandardSubgroupStep>(ratio.steps[0]).subgroup == StandardSubgroup{2, descriptor(2, 1, 2)});
  CHECK(std::get<StandardSubgroupStep>(ratio.steps[1]).subgroup == StandardSubgroup{3, descriptor(3, 1, 2)});
  CHECK(std::get<GammaKEmbeddingStep>(ratio.steps[2]) == GammaKEmbeddingStep{3, 2, 2});

  const Certificate solv = witness(1, 4, 1, 8);
  REQUIRE(solv.steps.size() == 1);
  CHECK(std::get<CommonSolvableStep>(solv.steps[0]) == CommonSolvableStep{2, 6});
  CHECK(describe(solv.steps[0]) == "CommonSolvable(2, 6)");

  CHECK(witness(2, 3, 3, 2).steps.empty());
  CHECK_THROWS_AS(witness(2, 4, 2, 8), NotCommensurable);
  const auto v = commensurable_with_witness(2, 4, 3, 6);
  REQUIRE(v.witness.has_value());
  CHECK(*v.witness == ratio);
}

TEST_CASE("certificates pass the independent checker") {
  const int pairs[][4] = {{2, 6, -2, 6}, {2, 4, 3, 6}, {1, 4, 1, 8}, {-1, 2, 1, 4}, {1, 1, -1, 1}, {-3, 3, 2, 2},
                          {-4, 8, 5, -10}, {2, 3, 3, 2}, {-5, 5, 4, 4}, {-1, 9, 1, 27}};
  for (const auto& p : pairs) {
    CAPTURE(p[0]);
    CAPTURE(p[1]);
    CAPTURE(p[2]);
    CAPTURE(p[3]);
    REQUIRE(commensurable(p[0], p[1], p[2], p[3]).commensurable);
    const auto r = check_certificate(p[0], p[1], p[2], p[3], witness(p[0], p[1], p[2], p[3]));
    CHECK_MESSAGE(r.ok, r.reason);
  }
}

TEST_CASE("the checker rejects wrong certificates") {
  CHECK_FALSE(check_certificate(2, 4, 3, 6, witness(2, 6, -2, 6)).ok);
  CHECK_FALSE(check_certificate(2, 4, 2, 8, witness(2, 4, 3, 6)).ok);
  CHECK_FALSE(check_certificate(1, 2, 1, 3, Certificate{{CommonSolvableStep{2, 6}}}).ok);
  CHECK_FALSE(check_certificate(1, 4, 1, 8, Certificate{{CommonSolvableStep{2, 3}}}).ok);
  CHECK_FALSE(check_certificate(2, 3, 2, 5, Certificate{}).ok);
  Certificate missing = witness(2, 4, 4, 8);
  missing.steps.pop_back();
  CHECK_FALSE(check_certificate(2, 4, 4, 8, missing).ok);
}

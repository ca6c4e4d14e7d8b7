#include "gbs/commensurability.hpp"

#include <algorithm>
#include <numeric>

#include "gbs/graph.hpp"
#include "gbs/modular.hpp"
#include "gbs/moves.hpp"
#include "gbs/normalform.hpp"

namespace gbs {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

BsPair bs_normalize(const BigInt& m, const BigInt& n) {
  if (m == 0 || n == 0) throw std::invalid_argument("BS(m,n) needs nonzero m and n");
  const std::pair<BigInt, BigInt> candidates[] = {{m, n}, {n, m}, {-m, -n}, {-n, -m}};
  for (const auto& [x, y] : candidates) {
    if (abs(x) <= y) return {x, y, true};
  }
  throw std::logic_error("bs_normalize: no candidate satisfies 1 <= |m| <= n");
}

std::string_view case_name(CommCase c) {
  switch (c) {
    case CommCase::EqualPair: return "EqualPair";
    case CommCase::SolvablePowers: return "SolvablePowers";
    case CommCase::SignTwin: return "SignTwin";
    case CommCase::CommonRatio: return "CommonRatio";
    case CommCase::ModularObstruction: return "ModularObstruction";
    case CommCase::MixedSolvability: return "MixedSolvability";
    case CommCase::DivisibilityMismatch: return "DivisibilityMismatch";
    case CommCase::RatioMismatch: return "RatioMismatch";
    case CommCase::RigidNonAscending: return "RigidNonAscending";
  }
  return "unknown";
}

bool is_positive(CommCase c) {
  return c == CommCase::EqualPair || c == CommCase::SolvablePowers || c == CommCase::SignTwin ||
         c == CommCase::CommonRatio;
}

std::string describe(const CertificateStep& step) {
  return std::visit(
      overloaded{
          [](const StandardSubgroupStep& s) {
            return "StandardSubgroup(BS(" + to_string(s.m) + "," + to_string(s.n) + ") -> G^" +
                   to_string(s.subgroup.group.d) + "_{" + to_string(s.subgroup.group.p) + "," +
                   to_string(s.subgroup.group.q) + "}, index " + to_string(s.subgroup.index) + ")";
          },
          [](const Index2CycleStep& s) { return "Index2Cycle(" + to_string(s.m) + "," + to_string(s.n) + ")"; },
          [](const GammaKEmbeddingStep& s) {
            return "GammaKEmbedding(k=" + std::to_string(s.k) + ", n=" + to_string(s.n) + ", index " +
                   std::to_string(s.index) + ")";
          },
          [](const CommonSolvableStep& s) {
            return "CommonSolvable(" + to_string(s.base) + ", " + std::to_string(s.exponent) + ")";
          },
          [](const FreeTimesZStep& s) { return "FreeTimesZ(" + std::to_string(s.rank) + ")"; },
      },
      step);
}

CommVerdict commensurable(const BigInt& m1, const BigInt& n1, const BigInt& m2, const BigInt& n2) {
  const BsPair p1 = bs_normalize(m1, n1);
  const BsPair p2 = bs_normalize(m2, n2);
  auto verdict = [](CommCase c) { return CommVerdict{is_positive(c), c, std::nullopt}; };
  if (p1.m == p2.m && p1.n == p2.n) return verdict(CommCase::EqualPair);
  if (p1.n == p2.n && p1.m == -p2.m) return verdict(CommCase::SignTwin);
  const BigInt a1 = abs(p1.m), a2 = abs(p2.m);
  if (a1 == 1 && a2 == 1) {
    if (p1.n >= 2 && p2.n >= 2 && primitive_base(p1.n).base == primitive_base(p2.n).base) {
      return verdict(CommCase::SolvablePowers);
    }
    return verdict(CommCase::ModularObstruction);
  }
  if (a1 == 1 || a2 == 1) return verdict(CommCase::MixedSolvability);
  const bool d1 = divides(a1, p1.n), d2 = divides(a2, p2.n);
  if (d1 != d2) return verdict(CommCase::DivisibilityMismatch);
  if (d1) return verdict(p1.n / a1 == p2.n / a2 ? CommCase::CommonRatio : CommCase::RatioMismatch);
  return verdict(CommCase::RigidNonAscending);
}

Certificate witness(const BigInt& m1, const BigInt& n1, const BigInt& m2, const BigInt& n2) {
  const CommVerdict v = commensurable(m1, n1, m2, n2);
  if (!v.commensurable) {
    throw NotCommensurable("BS(" + to_string(m1) + "," + to_string(n1) + ") and BS(" + to_string(m2) + "," +
                           to_string(n2) + ") are not commensurable (" + std::string(case_name(v.tag)) + ")");
  }
  const BsPair p1 = bs_normalize(m1, n1);
  const BsPair p2 = bs_normalize(m2, n2);
  Certificate cert;
  switch (v.tag) {
    case CommCase::EqualPair:
      break;
    case CommCase::SignTwin:
      cert.steps.push_back(Index2CycleStep{p1.m, p1.n});
      cert.steps.push_back(Index2CycleStep{p2.m, p2.n});
      break;
    case CommCase::SolvablePowers: {
      const auto b1 = primitive_base(p1.n), b2 = primitive_base(p2.n);
      std::uint64_t exponent = std::lcm(b1.exponent, b2.exponent);
      if (p1.m < 0 || p2.m < 0) exponent *= 2;
      cert.steps.push_back(CommonSolvableStep{b1.base, exponent});
      break;
    }
    case CommCase::CommonRatio: {
      const BigInt q = p1.n / abs(p1.m);
      for (const auto* p : {&p1, &p2}) {
        if (p->m < 0) cert.steps.push_back(Index2CycleStep{p->m, p->n});
      }
      for (const auto* p : {&p1, &p2}) {
        cert.steps.push_back(StandardSubgroupStep{abs(p->m), p->n, standard_subgroup(abs(p->m), p->n)});
      }
      if (q > 1) {
        for (const auto* p : {&p1, &p2}) {
          const auto k = static_cast<std::uint64_t>(abs(p->m));
          if (k >= 3) cert.steps.push_back(GammaKEmbeddingStep{k, q, k - 1});
        }
      } else {
        cert.steps.push_back(FreeTimesZStep{2});
      }
      break;
    }
    default:
      throw std::logic_error("witness: unexpected positive case");
  }
  return cert;
}

CommVerdict commensurable_with_witness(const BigInt& m1, const BigInt& n1, const BigInt& m2, const BigInt& n2) {
  CommVerdict v = commensurable(m1, n1, m2, n2);
  if (v.commensurable) v.witness = witness(m1, n1, m2, n2);
  return v;
}

// ---------------------------------------------------------------------------
// Certificate checker

namespace {

struct Group {
  BigInt m;
  BigInt n;
};

// BS(m,n) = BS(n,m) = BS(-m,-n): bring to |m| <= n.
Group canonical_group(BigInt m, BigInt n) {
  if (abs(m) > abs(n)) std::swap(m, n);
  if (n < 0) {
    m = -m;
    n = -n;
  }
  return {m, n};
}

CheckResult fail(std::string reason) { return {false, std::move(reason)}; }

Graph one_loop(const Group& g) { return bouquet({{g.m, g.n}}); }

// BS(m,n) and BS(-m,n) share the index-2 cycle subgroup.
bool index2_twins(const Group& g) {
  return sign_normalize(index2_cycle(g.m, g.n)) == sign_normalize(index2_cycle(-g.m, g.n));
}

// The degree-j cyclic cover of BS(m, n), |m| = 1, collapses to BS(1, n') with n' the
// returned modulus, or nothing when the collapse fails.
std::optional<BigInt> cyclic_cover_modulus(const Group& g, std::size_t degree) {
  Graph h = lift_labels(cycle_cover(degree), g.m, g.n);
  for (std::size_t x = 0; x + 1 < degree; ++x) {
    h = gbs::apply(h, Collapse{{lifted_edge_id(1, x), Orientation::Negative}});
  }
  h = sign_normalize(h);
  if (h.vertex_count() != 1 || h.edge_count() != 1) return std::nullopt;
  const Edge& e = h.edges().front();
  if (e.a == 1 && e.omega > 0) return e.omega;
  if (e.omega == 1 && e.a > 0) return e.a;
  return std::nullopt;
}

CheckResult check_common_solvable(const Group& g1, const Group& g2, const CommonSolvableStep& step) {
  if (step.base < 2 || step.exponent == 0) return fail("CommonSolvable: degenerate target");
  const BigInt target = ipow(step.base, step.exponent);
  for (const Group& g : {g1, g2}) {
    if (abs(g.m) != 1) return fail("CommonSolvable: BS(" + to_string(g.m) + "," + to_string(g.n) + ") is not solvable");
    auto e = exact_log(g.n, step.base);
    if (!e || *e == 0 || step.exponent % *e != 0) {
      return fail("CommonSolvable: " + to_string(g.n) + " is not a power of " + to_string(step.base) +
                  " dividing the target exponent");
    }
    const auto modulus = cyclic_cover_modulus(g, static_cast<std::size_t>(step.exponent / *e));
    if (!modulus || *modulus != target) {
      return fail("CommonSolvable: cyclic cover of BS(" + to_string(g.m) + "," + to_string(g.n) +
                  ") does not collapse to BS(1," + to_string(target) + ")");
    }
  }
  return {true, ""};
}

CheckResult check_sign_twin(const Group& g1, const Group& g2, const std::vector<CertificateStep>& steps) {
  if (steps.size() != 2) return fail("SignTwin: expected two index-2 cycles");
  const auto* s1 = std::get_if<Index2CycleStep>(&steps[0]);
  const auto* s2 = std::get_if<Index2CycleStep>(&steps[1]);
  if (!s1 || !s2) return fail("SignTwin: expected two index-2 cycles");
  if (s1->m != g1.m || s1->n != g1.n || s2->m != g2.m || s2->n != g2.n) {
    return fail("SignTwin: cycles do not match the input groups");
  }
  if (sign_normalize(index2_cycle(s1->m, s1->n)) != sign_normalize(index2_cycle(s2->m, s2->n))) {
    return fail("SignTwin: index-2 cycles differ after sign normalization");
  }
  return {true, ""};
}

CheckResult check_common_ratio(const Group& g1, const Group& g2, const std::vector<CertificateStep>& steps) {
  std::optional<BigInt> ratio;
  std::vector<std::uint64_t> ranks;
  for (const Group& g : {g1, g2}) {
    const BigInt k = abs(g.m);
    if (g.m < 0) {
      const bool listed = std::any_of(steps.begin(), steps.end(), [&](const CertificateStep& s) {
        const auto* c = std::get_if<Index2CycleStep>(&s);
        return c && c->m == g.m && c->n == g.n;
      });
      if (!listed) return fail("CommonRatio: missing index-2 cycle for BS(" + to_string(g.m) + "," + to_string(g.n) + ")");
      if (!index2_twins(g)) return fail("CommonRatio: index-2 cycles of BS(+-m,n) differ");
    }
    const StandardSubgroupStep* std_step = nullptr;
    for (const auto& s : steps) {
      const auto* c = std::get_if<StandardSubgroupStep>(&s);
      if (c && c->m == k && c->n == g.n) std_step = c;
    }
    if (!std_step) return fail("CommonRatio: missing standard subgroup for BS(" + to_string(k) + "," + to_string(g.n) + ")");
    const auto& desc = std_step->subgroup.group;
    if (std_step->subgroup.index != desc.d || desc.d * desc.p != k || desc.d * desc.q != g.n || desc.p != 1) {
      return fail("CommonRatio: standard subgroup data inconsistent for BS(" + to_string(k) + "," + to_string(g.n) + ")");
    }
    const Graph h = descriptor_graph(desc);
    if (betti_number(h) != static_cast<std::size_t>(desc.d)) return fail("CommonRatio: descriptor graph has wrong rank");
    if (ratio && *ratio != desc.q) return fail("CommonRatio: ratios differ");
    ratio = desc.q;
    ranks.push_back(static_cast<std::uint64_t>(desc.d));
  }

  const BigInt q = *ratio;
  for (std::uint64_t k : ranks) {
    if (k < 3) continue;
    const CoveringGraph c = gamma_k(k);
    if (c.n_sheets != k - 1) return fail("CommonRatio: gamma_k has the wrong number of sheets");
    if (q == 1) {
      const bool listed = std::any_of(steps.begin(), steps.end(), [](const CertificateStep& s) {
        const auto* f = std::get_if<FreeTimesZStep>(&s);
        return f && f->rank == 2;
      });
      if (!listed) return fail("CommonRatio: missing F_2 x Z step");
      const Graph h = lift_labels(c, 1, 1);
      if (betti_number(h) != k) return fail("CommonRatio: gamma_k cover has the wrong rank");
    } else {
      const bool listed = std::any_of(steps.begin(), steps.end(), [&](const CertificateStep& s) {
        const auto* e = std::get_if<GammaKEmbeddingStep>(&s);
        return e && e->k == k && e->n == q && e->index == k - 1;
      });
      if (!listed) return fail("CommonRatio: missing gamma_k embedding for k = " + std::to_string(k));
      if (normal_form_of_cover(c, q) != normal_form_of_cover(trivial_cover(k), q)) {
        return fail("CommonRatio: gamma_k(" + std::to_string(k) + ") is not G^k_{1,n}");
      }
    }
  }
  return {true, ""};
}

}  // namespace

CheckResult check_certificate(const BigInt& m1, const BigInt& n1, const BigInt& m2, const BigInt& n2,
                              const Certificate& cert) {
  if (m1 == 0 || n1 == 0 || m2 == 0 || n2 == 0) return fail("zero input");
  const Group g1 = canonical_group(m1, n1);
  const Group g2 = canonical_group(m2, n2);
  try {
    if (cert.steps.empty()) {
      if (one_loop(g1) != one_loop(g2)) return fail("empty certificate but the groups differ");
      return {true, ""};
    }
    if (const auto* s = std::get_if<CommonSolvableStep>(&cert.steps.front())) {
      if (cert.steps.size() != 1) return fail("CommonSolvable: unexpected extra steps");
      return check_common_solvable(g1, g2, *s);
    }
    const bool only_cycles = std::all_of(cert.steps.begin(), cert.steps.end(), [](const CertificateStep& s) {
      return std::holds_alternative<Index2CycleStep>(s);
    });
    if (only_cycles) return check_sign_twin(g1, g2, cert.steps);
    return check_common_ratio(g1, g2, cert.steps);
  } catch (const std::exception& e) {
    return fail(std::string("checker raised: ") + e.what());
  }
}

}  // namespace gbs

// Acceptance gate: one PASS/FAIL line per criterion.
#include <bitset>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <string>

#include "gbs/commensurability.hpp"
#include "gbs/covering.hpp"
#include "gbs/iso.hpp"
#include "gbs/normalform.hpp"
#include "gbs/sweep.hpp"

using namespace gbs;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

bool report(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_s > 0 && secs >= limit_s) out.fail("time limit exceeded");
  std::printf("criterion %d: %s  %s (%.2f s%s%s)\n", id, out.ok ? "PASS" : "FAIL", name.c_str(), secs,
              out.detail.empty() ? "" : "; ", out.detail.c_str());
  std::fflush(stdout);
  return out.ok;
}

constexpr std::size_t kGrid = 420;
using Row = std::bitset<kGrid>;

std::size_t grid_index(const std::vector<BsPair>& grid, BigInt m, BigInt n) {
  const BsPair p = bs_normalize(m, n);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] == p) return i;
  }
  throw std::logic_error("pair not in grid");
}

std::string name(const BsPair& p) { return "BS(" + to_string(p.m) + "," + to_string(p.n) + ")"; }

Outcome classification_table(const std::vector<BsPair>& grid, const VerdictMatrix& matrix) {
  Outcome out;
  const VerdictMatrix serial = verdict_matrix_serial(grid);
  if (!(serial == matrix)) out.fail("parallel matrix differs from the serial reference");
  const std::size_t n = grid.size();
  if (n != kGrid) out.fail("grid has " + std::to_string(n) + " pairs");
  std::vector<Row> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = matrix.positive(i, j);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i][i]) out.fail("not reflexive at " + name(grid[i]));
    for (std::size_t j = 0; j < n; ++j) {
      if (rows[i][j] != rows[j][i]) out.fail("not symmetric at " + name(grid[i]) + ", " + name(grid[j]));
      // transitivity over all triples: i ~ j implies every partner of j is a partner of i
      if (rows[i][j] && (rows[j] & ~rows[i]).any()) out.fail("not transitive through " + name(grid[j]));
    }
  }
  auto idx = [&](int m, int k) { return grid_index(grid, m, k); };
  auto same_class = [&](const std::vector<std::pair<int, int>>& members) {
    for (const auto& [m1, n1] : members) {
      for (const auto& [m2, n2] : members) {
        if (!rows[idx(m1, n1)][idx(m2, n2)]) return false;
      }
    }
    return true;
  };
  if (!same_class({{2, 4}, {-2, 4}, {3, 6}, {-3, 6}, {5, 10}, {-5, 10}, {4, 8}, {-4, 8}})) {
    out.fail("ratio-2 class split");
  }
  if (!same_class({{1, 2}, {-1, 2}, {1, 4}, {-1, 4}, {1, 8}, {-1, 8}, {1, 16}, {-1, 16}})) {
    out.fail("solvable base-2 class split");
  }
  Row bs23;
  bs23[idx(2, 3)] = true;
  bs23[idx(-2, 3)] = true;
  if (rows[idx(2, 3)] != bs23) out.fail("class of BS(2,3) is not {BS(2,3), BS(-2,3)}");
  if (rows[idx(1, 2)][idx(2, 4)]) out.fail("BS(1,2) and BS(2,4) in one class");
  return out;
}

Outcome euclid_oracle() {
  Outcome out;
  for (std::uint64_t a = 1; a <= 30; ++a) {
    for (std::uint64_t b = 0; b <= 60; ++b) {
      for (std::uint64_t c = 0; c <= 60; ++c) {
        const std::uint64_t d = std::gcd(a, b > c ? b - c : c - b);
        if (euclid_slide_pair(a, b, c) != std::pair{d, b % d}) {
          out.fail("mismatch at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
  return out;
}

Outcome four_sheet_cover() {
  Outcome out;
  const CoveringGraph c = covering_from_permutations(2, 4, {{1, 2, 3, 0}, {3, 2, 1, 0}});
  for (int p : {2, 3, 5}) {
    const NormalForm nf = normal_form_of_cover(c, p);
    if (!(nf == make_normal_form(p, 1, 2, {0, 0, 1, 1}))) out.fail("p=" + std::to_string(p) + " gave " + render(nf));
    const BigInt q = p;
    if (normal_form_graph(nf) != bouquet({{1, q * q}, {1, 1}, {1, 1}, {q, q}, {q, q}})) {
      out.fail("p=" + std::to_string(p) + ": loops differ from (1,p^2),(p,p),(p,p),(1,1),(1,1)");
    }
  }
  return out;
}

Outcome gamma_k_certification() {
  Outcome out;
  for (std::size_t k = 3; k <= 8; ++k) {
    for (int n : {2, 3, 4}) {
      const std::string at = "k=" + std::to_string(k) + ", n=" + std::to_string(n);
      if (!(normal_form_of_cover(gamma_k(k), n) == normal_form_of_cover(trivial_cover(k), n))) out.fail(at + ": forms differ");
      if (!iso_subgroups(gamma_k(k), n, trivial_cover(k), n)) out.fail(at + ": not isomorphic");
    }
  }
  return out;
}

Outcome move_invariance() {
  Outcome out;
  const auto trials = make_deformation_trials(1000, 50, 20240601);
  const auto reports = deformation_trials_parallel(trials);
  std::size_t failures = 0, moves = 0;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    moves += reports[i].steps_taken;
    if (!reports[i].ok) {
      ++failures;
      out.fail("trial " + std::to_string(i) + " (" + render(trials[i].start) + "): " + reports[i].failure);
    }
  }
  if (failures) out.detail += "; " + std::to_string(failures) + " failing trials";
  if (moves < trials.size() * 50) out.fail("some trials ran out of legal moves");
  out.detail = std::to_string(moves) + " moves" + (out.detail.empty() ? "" : "; " + out.detail);
  // spot check against the serial reference
  const std::vector<DeformationTrial> head(trials.begin(), trials.begin() + 20);
  const std::vector<TrialReport> head_reports(reports.begin(), reports.begin() + 20);
  if (deformation_trials_serial(head) != head_reports) out.fail("parallel trials differ from the serial reference");
  return out;
}

// Brute-force oracle: equal r and l*m, equal k, and some cyclic shift of the count vectors.
bool oracle_iso(const NormalForm& a, const NormalForm& b) {
  if (a.r != b.r || a.l * a.m != b.l * b.m || a.k() != b.k()) return false;
  const std::uint64_t len = a.l * a.m;
  std::vector<int> va(len, 0), vb(len, 0);
  for (auto p : a.residues) ++va[(a.l * p) % len];
  for (auto p : b.residues) ++vb[(b.l * p) % len];
  for (std::uint64_t s = 0; s < len; ++s) {
    bool eq = true;
    for (std::uint64_t i = 0; i < len; ++i) eq = eq && va[i] == vb[(i + s) % len];
    if (eq) return true;
  }
  return false;
}

void residue_multisets(std::uint64_t m, std::size_t count, std::uint64_t from, std::vector<std::uint64_t>& cur,
                       std::vector<std::vector<std::uint64_t>>& out) {
  if (cur.size() == count) {
    out.push_back(cur);
    return;
  }
  for (std::uint64_t p = from; p < m; ++p) {
    cur.push_back(p);
    residue_multisets(m, count, p, cur, out);
    cur.pop_back();
  }
}

Outcome iso_oracle() {
  Outcome out;
  std::vector<NormalForm> forms;
  for (std::uint64_t l = 1; l <= 6; ++l) {
    for (std::uint64_t m = 1; l * m <= 6; ++m) {
      for (std::size_t k = 1; k <= 4; ++k) {
        std::vector<std::vector<std::uint64_t>> sets;
        std::vector<std::uint64_t> cur;
        residue_multisets(m, k - 1, 0, cur, sets);
        for (auto& s : sets) forms.push_back(make_normal_form(2, l, m, s));
      }
    }
  }
  for (const auto& a : forms) {
    for (const auto& b : forms) {
      if (iso_normal_forms(a, b).isomorphic != oracle_iso(a, b)) out.fail(render(a) + " vs " + render(b));
    }
  }
  if (!iso_normal_forms(make_normal_form(2, 2, 3, {0, 2}), make_normal_form(2, 1, 6, {1, 5})).isomorphic) {
    out.fail("NF(2,2,3,[0,2]) should be isomorphic to NF(2,1,6,[1,5])");
  }
  if (iso_normal_forms(make_normal_form(2, 1, 2, {0, 0}), make_normal_form(2, 1, 2, {0, 1})).isomorphic) {
    out.fail("NF(2,1,2,[0,0]) should not be isomorphic to NF(2,1,2,[0,1])");
  }
  out.detail = std::to_string(forms.size()) + " forms" + (out.detail.empty() ? "" : "; " + out.detail);
  return out;
}

Outcome covering_invariants() {
  Outcome out;
  std::mt19937_64 rng(7);
  std::size_t made = 0;
  while (made < 500) {
    const std::size_t d = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    std::vector<std::vector<std::size_t>> perms(d, std::vector<std::size_t>(n));
    for (auto& p : perms) {
      std::iota(p.begin(), p.end(), 0);
      std::shuffle(p.begin(), p.end(), rng);
    }
    if (!is_transitive(CoveringGraph{d, n, perms})) continue;
    ++made;
    const CoveringGraph c = covering_from_permutations(d, n, perms);
    const Graph g = lift_labels(c, 2, 3);
    std::vector<std::size_t> in(n, 0), outd(n, 0);
    for (const auto& e : g.edges()) {
      ++outd[e.from];
      ++in[e.to];
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (in[x] != d || outd[x] != d) out.fail("degree violated at a sheet");
    }
    if (betti_number(g) != n * (d - 1) + 1) out.fail("betti number differs from N(d-1)+1");
  }
  return out;
}

Outcome witness_validation(const std::vector<BsPair>& grid, const VerdictMatrix& matrix) {
  Outcome out;
  std::size_t checked = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = 0; j < grid.size(); ++j) {
      if (!matrix.positive(i, j)) continue;
      const auto& a = grid[i];
      const auto& b = grid[j];
      const auto r = check_certificate(a.m, a.n, b.m, b.n, witness(a.m, a.n, b.m, b.n));
      ++checked;
      if (!r.ok) out.fail(name(a) + " vs " + name(b) + ": " + r.reason);
    }
  }
  out.detail = std::to_string(checked) + " certificates" + (out.detail.empty() ? "" : "; " + out.detail);
  return out;
}

}  // namespace

int main() {
  const auto grid = normalized_grid(20);
  VerdictMatrix matrix;
  bool all = true;
  all &= report(1, "classification table on 1 <= |m| <= n <= 20", 60, [&] {
    matrix = verdict_matrix_parallel(grid);
    return classification_table(grid, matrix);
  });
  all &= report(2, "euclid slide oracle", 5, euclid_oracle);
  all &= report(3, "four-sheet cover normal form", 0, four_sheet_cover);
  all &= report(4, "gamma_k certification", 10, gamma_k_certification);
  all &= report(5, "move invariance over 1000 deformations", 120, move_invariance);
  all &= report(6, "isomorphism oracle equivalence", 0, iso_oracle);
  all &= report(7, "covering invariants", 0, covering_invariants);
  all &= report(8, "witness validation", 0, [&] {
    if (matrix.size != grid.size()) matrix = verdict_matrix_serial(grid);
    return witness_validation(grid, matrix);
  });
  return all ? 0 : 1;
}

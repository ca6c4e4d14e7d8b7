#include "gbs/sweep.hpp"

#include <random>

#include "gbs/iso.hpp"
#include "gbs/modular.hpp"
#include "gbs/moves.hpp"

namespace gbs {

std::vector<BsPair> normalized_grid(std::int64_t max_n) {
  std::vector<BsPair> pairs;
  for (std::int64_t n = 1; n <= max_n; ++n) {
    for (std::int64_t m = 1; m <= n; ++m) {
      pairs.push_back({m, n, true});
      pairs.push_back({-m, n, true});
    }
  }
  return pairs;
}

VerdictMatrix verdict_matrix_serial(const std::vector<BsPair>& pairs) {
  const std::size_t n = pairs.size();
  VerdictMatrix out{n, std::vector<CommCase>(n * n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.tags[i * n + j] = commensurable(pairs[i].m, pairs[i].n, pairs[j].m, pairs[j].n).tag;
    }
  }
  return out;
}

VerdictMatrix verdict_matrix_parallel(const std::vector<BsPair>& pairs) {
  const auto n = static_cast<std::int64_t>(pairs.size());
  VerdictMatrix out{pairs.size(), std::vector<CommCase>(pairs.size() * pairs.size())};
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = 0; j < n; ++j) {
      out.tags[i * n + j] = commensurable(pairs[i].m, pairs[i].n, pairs[j].m, pairs[j].n).tag;
    }
  }
  return out;
}

TrialReport run_deformation_trial(const DeformationTrial& trial) {
  TrialReport report;
  const NormalForm& nf = trial.start;
  try {
    const Graph start = normal_form_graph(nf);
    const std::size_t betti = betti_number(start);
    const ModularImage image = modular_image(start);
    const auto residues = canonical_residues(nf.residues, nf.m);
    const Deformation run = random_deform(start, trial.steps, trial.seed, true);
    report.steps_taken = run.log.size();

    auto failed = [&](std::string why) {
      report.failure = std::move(why);
      return report;
    };
    Graph g = start;
    for (std::size_t step = 0; step <= run.log.size(); ++step) {
      if (step > 0) g = gbs::apply(g, run.log[step - 1]);
      const std::string at = " after step " + std::to_string(step);
      if (!is_reduced(g)) return failed("graph not reduced" + at);
      if (betti_number(g) != betti) return failed("Betti number changed" + at);
      if (modular_image(g) != image) return failed("modular image changed" + at);
      const DualGraph dual = dual_graph(g, nf.r, nf.l, nf.m);
      if (canonical_residues(dual.potential, nf.m) != residues) {
        return failed("potential residues differ from the start form" + at);
      }
    }
    if (!same_up_to_edge_ids(g, run.graph)) return failed("replayed log does not reach the final graph");
    report.ok = true;
  } catch (const std::exception& e) {
    report.failure = e.what();
  }
  return report;
}

std::vector<TrialReport> deformation_trials_serial(const std::vector<DeformationTrial>& trials) {
  std::vector<TrialReport> out(trials.size());
  for (std::size_t i = 0; i < trials.size(); ++i) out[i] = run_deformation_trial(trials[i]);
  return out;
}

std::vector<TrialReport> deformation_trials_parallel(const std::vector<DeformationTrial>& trials) {
  std::vector<TrialReport> out(trials.size());
  const auto n = static_cast<std::int64_t>(trials.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) out[i] = run_deformation_trial(trials[i]);
  return out;
}

std::vector<DeformationTrial> make_deformation_trials(std::size_t count, std::size_t steps, std::uint64_t seed,
                                                      std::uint64_t max_m, std::size_t max_k) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](std::uint64_t lo, std::uint64_t hi) { return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng); };
  std::vector<DeformationTrial> trials;
  for (std::size_t i = 0; i < count; ++i) {
    const BigInt r = uniform(0, 1) == 0 ? 2 : 3;
    const std::uint64_t l = uniform(1, 2);
    const std::uint64_t m = uniform(1, max_m);
    const std::size_t k = uniform(2, max_k);
    std::vector<std::uint64_t> residues;
    for (std::size_t j = 1; j < k; ++j) residues.push_back(uniform(0, m - 1));
    trials.push_back({make_normal_form(r, l, m, std::move(residues)), rng(), steps});
  }
  return trials;
}

}  // namespace gbs

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gbs/commensurability.hpp"
#include "gbs/normalform.hpp"

// Grid sweeps over independent inputs. Each kernel has a serial reference and an
// OpenMP version that must agree with it exactly.

namespace gbs {

/// All normalized BS(m,n) with 1 <= |m| <= n <= max_n, ordered by n, then |m|, then
/// m positive before negative.
std::vector<BsPair> normalized_grid(std::int64_t max_n);

struct VerdictMatrix {
  std::size_t size = 0;
  std::vector<CommCase> tags;  // row-major, size * size

  bool positive(std::size_t i, std::size_t j) const { return is_positive(tags[i * size + j]); }
  bool operator==(const VerdictMatrix&) const = default;
};

VerdictMatrix verdict_matrix_serial(const std::vector<BsPair>& pairs);
VerdictMatrix verdict_matrix_parallel(const std::vector<BsPair>& pairs);

struct DeformationTrial {
  NormalForm start;
  std::uint64_t seed = 0;
  std::size_t steps = 0;
};

struct TrialReport {
  bool ok = false;
  std::size_t steps_taken = 0;
  std::string failure;
  bool operator==(const TrialReport&) const = default;
};

/// Random reduced deformation of the normal-form graph; along the whole trajectory
/// checks Betti number, modular image, dual-graph potential, and that the potential
/// recovers the residue multiset up to a global shift.
TrialReport run_deformation_trial(const DeformationTrial& trial);

std::vector<TrialReport> deformation_trials_serial(const std::vector<DeformationTrial>& trials);
std::vector<TrialReport> deformation_trials_parallel(const std::vector<DeformationTrial>& trials);

/// Seeded trial set: r in {2,3}, l in {1,2}, 1 <= m <= max_m, 2 <= k <= max_k.
std::vector<DeformationTrial> make_deformation_trials(std::size_t count, std::size_t steps, std::uint64_t seed,
                                                      std::uint64_t max_m = 4, std::size_t max_k = 5);

}  // namespace gbs

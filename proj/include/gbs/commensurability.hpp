#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gbs/arith.hpp"
#include "gbs/covering.hpp"

namespace gbs {

struct BsPair {
  BigInt m;
  BigInt n;
  bool normalized = false;
  bool operator==(const BsPair&) const = default;
};

/// Swap and double negation until 1 <= |m| <= n. Throws on zero input.
BsPair bs_normalize(const BigInt& m, const BigInt& n);

enum class CommCase : std::uint8_t {
  EqualPair,
  SolvablePowers,
  SignTwin,
  CommonRatio,
  ModularObstruction,
  MixedSolvability,
  DivisibilityMismatch,
  RatioMismatch,
  RigidNonAscending,
};

std::string_view case_name(CommCase c);
bool is_positive(CommCase c);

/// H_{m,n} <= BS(m,n) of index d, isomorphic to G^d_{p,q}.
struct StandardSubgroupStep {
  BigInt m;
  BigInt n;
  StandardSubgroup subgroup;
  bool operator==(const StandardSubgroupStep&) const = default;
};

/// Index-2 cycle subgroup of BS(m,n).
struct Index2CycleStep {
  BigInt m;
  BigInt n;
  bool operator==(const Index2CycleStep&) const = default;
};

/// G^k_{1,n} as the index-(k-1) subgroup of G^2_{1,n} given by gamma_k(k).
struct GammaKEmbeddingStep {
  std::uint64_t k;
  BigInt n;
  std::uint64_t index;
  bool operator==(const GammaKEmbeddingStep&) const = default;
};

/// BS(1, base^exponent) sits with finite index in both groups.
struct CommonSolvableStep {
  BigInt base;
  std::uint64_t exponent;
  bool operator==(const CommonSolvableStep&) const = default;
};

/// Both groups contain F_rank x Z with finite index.
struct FreeTimesZStep {
  std::uint64_t rank;
  bool operator==(const FreeTimesZStep&) const = default;
};

using CertificateStep =
    std::variant<StandardSubgroupStep, Index2CycleStep, GammaKEmbeddingStep, CommonSolvableStep, FreeTimesZStep>;

struct Certificate {
  std::vector<CertificateStep> steps;
  bool operator==(const Certificate&) const = default;
};

std::string describe(const CertificateStep& step);

struct CommVerdict {
  bool commensurable = false;
  CommCase tag = CommCase::EqualPair;
  std::optional<Certificate> witness;
};

/// Decision only; no certificate.
CommVerdict commensurable(const BigInt& m1, const BigInt& n1, const BigInt& m2, const BigInt& n2);

class NotCommensurable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Certificate witness(const BigInt& m1, const BigInt& n1, const BigInt& m2, const BigInt& n2);

/// Decision plus certificate for positive verdicts.
CommVerdict commensurable_with_witness(const BigInt& m1, const BigInt& n1, const BigInt& m2, const BigInt& n2);

struct CheckResult {
  bool ok = false;
  std::string reason;
};

/// Re-derives every step from graphs, covers and normal forms; shares no code with
/// the decision.
CheckResult check_certificate(const BigInt& m1, const BigInt& n1, const BigInt& m2, const BigInt& n2,
                              const Certificate& cert);

}  // namespace gbs

#ifndef APPORTION_SEQUENCE_HPP
#define APPORTION_SEQUENCE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "apportion/divisor.hpp"
#include "apportion/priority.hpp"

namespace apportion {

// The implicit increasing sequence A(j) = d_j / v of one entity. A(-1) is
// treated as negative infinity and is never counted by rank.
struct EntitySequence {
  std::uint32_t entity = 0;
  std::uint64_t score = 1;  // v >= 1
  const DivisorMethod* method = nullptr;

  ExactPriority element(std::uint64_t j) const;  // A(j)

  // r(x, A) = |{ j >= 0 : d_j / v <= x }|. Computed from a floating-point
  // closed-form index estimate, then corrected with exact comparisons until
  // A(r-1) <= x < A(r).
  std::uint64_t rank(const ExactPriority& x) const;

  // L(x, A): largest element strictly below x, negInfinity if none.
  ExactPriority lowerNeighbor(const ExactPriority& x) const;

  // G(x, A): smallest element strictly above x.
  ExactPriority upperNeighbor(const ExactPriority& x) const;

  struct NeighborPair {
    ExactPriority below;  // L
    ExactPriority above;  // G
  };
  NeighborPair neighbors(const ExactPriority& x) const;
};

std::vector<EntitySequence> makeSequences(const DivisorMethod& method,
                                          std::span<const std::uint64_t> scores);

// r(x, 𝒜): sum of per-sequence ranks.
std::uint64_t totalRank(std::span<const EntitySequence> sequences, const ExactPriority& x);

}  // namespace apportion

#endif  // APPORTION_SEQUENCE_HPP

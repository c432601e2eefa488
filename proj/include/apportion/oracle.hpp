#ifndef APPORTION_ORACLE_HPP
#define APPORTION_ORACLE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "apportion/priority.hpp"
#include "apportion/sequence.hpp"

namespace apportion {

// Order in which equally prioritized claims are awarded.
enum class TiePolicy : std::uint8_t {
  ByScoreThenInputOrder,  // higher score first, then lower input index
  InputOrder,             // lower input index first
  ReportOnly,             // never break ties; report them
};

struct OracleResult {
  ExactPriority threshold;  // value of the last awarded element; negInfinity for k = 0
  std::vector<std::uint64_t> allocation;
};

// Literal simulation of sequential awards: k rounds, each scanning all n
// entities for the smallest next inverted priority. O(nk). Exists as a
// correctness anchor, not for production use.
OracleResult naiveApportion(std::span<const EntitySequence> sequences, std::uint64_t k,
                            TiePolicy policy = TiePolicy::ByScoreThenInputOrder);

// Same contract as naiveApportion, with a priority queue. O(k log n).
OracleResult heapApportion(std::span<const EntitySequence> sequences, std::uint64_t k,
                           TiePolicy policy = TiePolicy::ByScoreThenInputOrder);

// Value of the k-th smallest element of the union, via the priority queue.
// Used as the validated fallback when coarse-solution checks fail.
ExactPriority heapKthSmallest(std::span<const EntitySequence> sequences, std::uint64_t k);

}  // namespace apportion

#endif  // APPORTION_ORACLE_HPP

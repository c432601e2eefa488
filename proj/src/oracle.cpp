#include "apportion/oracle.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace apportion {

namespace {

// True when the claim (p, from entity p.entity) must be awarded before q.
// Priorities compare exactly; equal priorities fall back to the policy order.
bool awardedBefore(const DivisorMethod& m, TiePolicy policy, const ExactPriority& p,
                   const ExactPriority& q) {
  const std::strong_ordering ord = comparePriorities(m, p, q);
  if (ord != 0) return ord < 0;
  if (policy == TiePolicy::ByScoreThenInputOrder && p.score != q.score) {
    return p.score > q.score;
  }
  return p.entity < q.entity;
}

void validate(std::span<const EntitySequence> sequences, std::uint64_t k) {
  if (sequences.empty()) throw std::invalid_argument("apportion: need at least one entity");
  if (k > kMaxDivisorIndex) throw std::overflow_error("apportion: seat count exceeds capacity");
}

}  // namespace

OracleResult naiveApportion(std::span<const EntitySequence> sequences, std::uint64_t k,
                            TiePolicy policy) {
  validate(sequences, k);
  const DivisorMethod& m = *sequences[0].method;
  const std::size_t n = sequences.size();

  OracleResult result;
  result.threshold = ExactPriority::negInfinity();
  result.allocation.assign(n, 0);

  std::vector<ExactPriority> next;
  next.reserve(n);
  for (const EntitySequence& seq : sequences) next.push_back(seq.element(0));

  for (std::uint64_t awarded = 0; awarded < k; ++awarded) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i) {
      if (awardedBefore(m, policy, next[i], next[best])) best = i;
    }
    result.threshold = next[best];
    result.allocation[best] += 1;
    next[best] = sequences[best].element(result.allocation[best]);
  }
  return result;
}

OracleResult heapApportion(std::span<const EntitySequence> sequences, std::uint64_t k,
                           TiePolicy policy) {
  validate(sequences, k);
  const DivisorMethod& m = *sequences[0].method;
  const std::size_t n = sequences.size();

  OracleResult result;
  result.threshold = ExactPriority::negInfinity();
  result.allocation.assign(n, 0);

  auto later = [&m, policy](const ExactPriority& a, const ExactPriority& b) {
    return awardedBefore(m, policy, b, a);  // max-heap -> smallest claim on top
  };
  std::priority_queue<ExactPriority, std::vector<ExactPriority>, decltype(later)> queue(later);
  for (const EntitySequence& seq : sequences) queue.push(seq.element(0));

  for (std::uint64_t awarded = 0; awarded < k; ++awarded) {
    const ExactPriority top = queue.top();
    queue.pop();
    result.threshold = top;
    result.allocation[top.entity] += 1;
    queue.push(sequences[top.entity].element(result.allocation[top.entity]));
  }
  return result;
}

ExactPriority heapKthSmallest(std::span<const EntitySequence> sequences, std::uint64_t k) {
  if (k == 0) return ExactPriority::negInfinity();
  return heapApportion(sequences, k, TiePolicy::InputOrder).threshold;
}

}  // namespace apportion

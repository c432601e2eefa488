#include "apportion/sequence.hpp"

#include <cmath>
#include <stdexcept>

namespace apportion {

namespace {

constexpr std::int64_t kMaxIndex = static_cast<std::int64_t>(kMaxDivisorIndex);

// Closed-form upper bound on the largest j with d_j <= y, per method.
double indexEstimate(const DivisorMethod& m, double y) {
  switch (m.id) {
    case MethodId::Adams:
      return y;
    case MethodId::Jefferson:
      return y - 1.0;
    case MethodId::SainteLague:
    case MethodId::ModifiedSainteLague:
      return (y - 1.0) / 2.0;
    case MethodId::HuntingtonHill:
      // j(j+1) <= y^2
      return (std::sqrt(4.0 * y * y + 1.0) - 1.0) / 2.0;
    case MethodId::Dean:
      // 2j(j+1)/(2j+1) <= y
      return ((y - 1.0) + std::sqrt(y * y + 1.0)) / 2.0;
    case MethodId::Imperiali:
      return y - 2.0;
    case MethodId::Danish:
      return (y - 1.0) / 3.0;
    case MethodId::Geometric:
      return std::log2(y);
  }
  return 0.0;
}

std::int64_t clampIndex(double estimate) {
  if (std::isnan(estimate)) return 0;
  if (estimate < -1.0) return -1;
  if (estimate >= static_cast<double>(kMaxIndex)) return kMaxIndex;
  return static_cast<std::int64_t>(estimate);
}

}  // namespace

ExactPriority EntitySequence::element(std::uint64_t j) const {
  const DivisorValue d = method->divisor(j);
  ExactPriority p;
  p.tag = ExactPriority::Tag::Finite;
  p.method = method->id;
  p.entity = entity;
  p.index = static_cast<std::uint32_t>(j);
  p.score = score;
  p.hint = d.value() / static_cast<double>(score);
  return p;
}

std::uint64_t EntitySequence::rank(const ExactPriority& x) const {
  if (x.tag == ExactPriority::Tag::NegInf) return 0;
  if (x.tag == ExactPriority::Tag::PosInf) {
    throw std::invalid_argument("rank: x must be finite or negative infinity");
  }

  std::int64_t j;
  if (method->kind == DivisorKind::PowerOfTwo) {
    // 2^j / v <= 2^{x.index} / x.score, in log2 space
    j = clampIndex(static_cast<double>(x.index) + std::log2(static_cast<double>(score)) -
                   std::log2(static_cast<double>(x.score)));
  } else {
    const double y = x.hint * static_cast<double>(score);
    j = clampIndex(indexEstimate(*method, y));
  }

  // Correct the estimate: largest j with A(j) <= x, or -1 if none.
  while (j >= 0 && comparePriorities(*method, element(static_cast<std::uint64_t>(j)), x) > 0) {
    --j;
  }
  while (j < kMaxIndex &&
         comparePriorities(*method, element(static_cast<std::uint64_t>(j + 1)), x) <= 0) {
    ++j;
  }
  if (j == kMaxIndex) {
    throw std::overflow_error("rank exceeds divisor index capacity");
  }
  return static_cast<std::uint64_t>(j + 1);
}

ExactPriority EntitySequence::lowerNeighbor(const ExactPriority& x) const {
  if (x.tag == ExactPriority::Tag::NegInf) return ExactPriority::negInfinity();
  const std::uint64_t r = rank(x);
  if (r == 0) return ExactPriority::negInfinity();
  const ExactPriority at = element(r - 1);
  if (comparePriorities(*method, at, x) != 0) return at;  // A(r-1) < x
  if (r == 1) return ExactPriority::negInfinity();
  return element(r - 2);
}

ExactPriority EntitySequence::upperNeighbor(const ExactPriority& x) const {
  if (x.tag == ExactPriority::Tag::NegInf) return element(0);
  return element(rank(x));
}

EntitySequence::NeighborPair EntitySequence::neighbors(const ExactPriority& x) const {
  return {lowerNeighbor(x), upperNeighbor(x)};
}

std::vector<EntitySequence> makeSequences(const DivisorMethod& method,
                                          std::span<const std::uint64_t> scores) {
  if (scores.empty()) throw std::invalid_argument("makeSequences: need at least one entity");
  if (scores.size() > (std::size_t{1} << 30)) {
    throw std::invalid_argument("makeSequences: entity count exceeds 2^30");
  }
  std::vector<EntitySequence> seqs;
  seqs.reserve(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (scores[i] == 0) throw std::invalid_argument("makeSequences: scores must be >= 1");
    seqs.push_back({static_cast<std::uint32_t>(i), scores[i], &method});
  }
  return seqs;
}

std::uint64_t totalRank(std::span<const EntitySequence> sequences, const ExactPriority& x) {
  std::uint64_t sum = 0;
  for (const EntitySequence& seq : sequences) sum += seq.rank(x);
  return sum;
}

}  // namespace apportion

#ifndef APPORTION_SELECT_HPP
#define APPORTION_SELECT_HPP

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "apportion/divisor.hpp"
#include "apportion/priority.hpp"
#include "apportion/sequence.hpp"

namespace apportion {

enum class MedianPolicy : std::uint8_t {
  Randomized,     // random pivots, expected linear
  Deterministic,  // median of medians, worst-case linear
};

struct SelectConfig {
  MedianPolicy median_policy = MedianPolicy::Randomized;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
  // Accept a coarse solution when |r(xi) - k| <= coarse_slack * n; otherwise
  // fall back to the heap backend and record a diagnostic.
  double coarse_slack = 8.0;
  // Evaluate the selection-state invariants after every refinement iteration
  // (slow; intended for tests and debugging).
  bool check_invariants = false;
};

struct SelectStats {
  std::uint64_t work = 0;  // sum of |active| over all refinement iterations
  std::uint64_t lower_iterations = 0;
  std::uint64_t exact_iterations = 0;
  std::int64_t coarse_rank_minus_k = 0;
  bool coarse_valid = true;
  bool used_fallback = false;
  std::uint64_t invariant_violations = 0;
};

// ---------------------------------------------------------------------------
// Median selection

namespace detail {

template <class T, class Less>
void insertionSort(std::span<T> v, Less& less) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    T tmp = std::move(v[i]);
    std::size_t j = i;
    for (; j > 0 && less(tmp, v[j - 1]); --j) v[j] = std::move(v[j - 1]);
    v[j] = std::move(tmp);
  }
}

template <class T, class Less>
T medianOfMediansPivot(std::span<T> v, Less& less);

// Places the nth smallest element (0-based) of v at position nth.
// Three-way partitioning keeps runs of equal keys from degrading the scan.
template <class T, class Less>
void nthSelect(std::span<T> v, std::size_t nth, Less& less, MedianPolicy policy,
               std::mt19937_64& rng) {
  std::size_t lo = 0;
  std::size_t hi = v.size();
  while (hi - lo > 16) {
    T pivot = policy == MedianPolicy::Deterministic
                  ? medianOfMediansPivot(v.subspan(lo, hi - lo), less)
                  : v[lo + rng() % (hi - lo)];
    std::size_t lt = lo;
    std::size_t gt = hi;
    std::size_t i = lo;
    while (i < gt) {
      if (less(v[i], pivot)) {
        std::swap(v[i++], v[lt++]);
      } else if (less(pivot, v[i])) {
        std::swap(v[i], v[--gt]);
      } else {
        ++i;
      }
    }
    if (nth < lt) {
      hi = lt;
    } else if (nth >= gt) {
      lo = gt;
    } else {
      return;  // nth lands in the equal run
    }
  }
  insertionSort(v.subspan(lo, hi - lo), less);
}

template <class T, class Less>
T medianOfMediansPivot(std::span<T> v, Less& less) {
  if (v.size() <= 5) {
    insertionSort(v, less);
    return v[(v.size() - 1) / 2];
  }
  std::vector<T> medians;
  medians.reserve((v.size() + 4) / 5);
  for (std::size_t i = 0; i < v.size(); i += 5) {
    const std::size_t len = std::min<std::size_t>(5, v.size() - i);
    std::span<T> group = v.subspan(i, len);
    insertionSort(group, less);
    medians.push_back(group[(len - 1) / 2]);
  }
  std::mt19937_64 unused(0);
  nthSelect(std::span<T>(medians), (medians.size() - 1) / 2, less, MedianPolicy::Deterministic,
            unused);
  return medians[(medians.size() - 1) / 2];
}

}  // namespace detail

// Lower median: the element at sorted position (n-1)/2, so at least ceil(n/2)
// elements compare <= it and at least ceil(n/2) compare >= it. Reorders the
// span. Expected O(n) for the randomized policy, worst-case O(n) for the
// deterministic one.
template <class T, class Less>
T selectMedian(std::span<T> values, Less less, MedianPolicy policy, std::mt19937_64& rng) {
  if (values.empty()) throw std::invalid_argument("selectMedian: empty input");
  const std::size_t nth = (values.size() - 1) / 2;
  detail::nthSelect(values, nth, less, policy, rng);
  return values[nth];
}

// ---------------------------------------------------------------------------
// Coarse solutions

// Arithmetic approximation A(j) = x_A + y_A * j of one entity's sequence,
// with x_A = e0 / v and y_A = delta / v kept in exact rational form. All
// sequences of one family share (e0, delta).
struct ArithApproxSequence {
  std::uint32_t entity = 0;
  std::uint64_t score = 1;  // v
  Rational e0;
  Rational delta;  // > 0

  double x() const { return e0.value() / static_cast<double>(score); }
  double y() const { return delta.value() / static_cast<double>(score); }
};

// The approximating arithmetic progressions for a family of sequences.
// Rejects the power-of-two extension (it is not approximately arithmetic).
std::vector<ArithApproxSequence> approxSequences(std::span<const EntitySequence> sequences);

// The subset { A : s(x_A, all) <= k }, where s is the continuous rank
// relaxation. Runs the median-partition sweep accumulating s(., C) as a
// linear function; the comparisons against k are exact (integer arithmetic),
// so the returned subset is exactly the contributing set. O(n).
std::vector<ArithApproxSequence> findContributingSequences(
    std::span<const ArithApproxSequence> arith, std::uint64_t k, const SelectConfig& cfg = {});

// s^{-1}(k) = (sum 1/y_A)^{-1} (k + sum x_A/y_A) over the contributing set.
double inverseApproxRank(std::span<const ArithApproxSequence> contributing, std::uint64_t k);

// Power-of-two extension: s^{-1}(k) = 2^{(k - sum log2 v_A)/|C|}.
double inverseApproxRankGeometric(std::span<const EntitySequence> contributing, std::uint64_t k);

// An exact value together with its exact rank over a sequence family.
struct CoarseSolution {
  ExactPriority value;
  std::uint64_t rank = 0;  // r(value, 𝒜)
};

CoarseSolution makeCoarseSolution(std::span<const EntitySequence> sequences,
                                  const ExactPriority& value);

// Given a coarse solution with r(xi) >= k, returns another coarse value with
// k - n <= r(xi', 𝒜) < k. O(n). Throws std::invalid_argument when
// r(xi) < k (callers should skip this step instead).
ExactPriority lowerRankCoarseSolution(std::span<const EntitySequence> sequences, std::uint64_t k,
                                      const CoarseSolution& xi, const SelectConfig& cfg = {},
                                      SelectStats* stats = nullptr);

// Refines a coarse solution with r(xi) < k into the exact value of the k-th
// smallest element of the union. O(n) given a coarse xi.
ExactPriority coarseToExact(std::span<const EntitySequence> sequences, std::uint64_t k,
                            const ExactPriority& xi, const SelectConfig& cfg = {},
                            SelectStats* stats = nullptr);

// Full pipeline: coarse solution from the approximating progressions (or the
// min-first-element fallback when k <= n), validation of the coarse rank
// bound, then exact refinement against the true sequences. O(n).
ExactPriority kthSmallestThreshold(std::span<const EntitySequence> sequences, std::uint64_t k,
                                   const SelectConfig& cfg = {}, SelectStats* stats = nullptr);

}  // namespace apportion

#endif  // APPORTION_SELECT_HPP

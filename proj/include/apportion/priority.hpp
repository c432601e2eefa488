#ifndef APPORTION_PRIORITY_HPP
#define APPORTION_PRIORITY_HPP

#include <compare>
#include <cstdint>
#include <limits>

#include "apportion/divisor.hpp"

namespace apportion {

// One element d_j / v of an entity's inverted-priority sequence, identified
// symbolically so it can be compared without rounding error. The hint is a
// floating-point approximation and is never authoritative. NegInf/PosInf
// sentinels compare below/above every finite priority.
struct ExactPriority {
  enum class Tag : std::uint8_t { NegInf, Finite, PosInf };

  Tag tag = Tag::Finite;
  MethodId method = MethodId::Adams;
  std::uint32_t entity = 0;
  std::uint32_t index = 0;   // divisor index j
  std::uint64_t score = 1;   // v of the owning entity
  double hint = 0.0;         // d_j / v, advisory only

  bool finite() const { return tag == Tag::Finite; }

  static ExactPriority negInfinity() {
    ExactPriority p;
    p.tag = Tag::NegInf;
    p.hint = -std::numeric_limits<double>::infinity();
    return p;
  }

  static ExactPriority posInfinity() {
    ExactPriority p;
    p.tag = Tag::PosInf;
    p.hint = std::numeric_limits<double>::infinity();
    return p;
  }
};

// Exact ordering of d_{j_p}/v_p vs d_{j_q}/v_q. Both priorities must come
// from `method`; mixing methods is a usage error. Rational divisors compare
// by cross multiplication, GeometricMeanRoot by squared cross multiplication,
// PowerOfTwo by exponent-shifted comparison; intermediates are wide enough
// that no score/index combination inside the documented caps can overflow.
std::strong_ordering comparePriorities(const DivisorMethod& method, const ExactPriority& p,
                                       const ExactPriority& q);

inline bool priorityLess(const DivisorMethod& m, const ExactPriority& p, const ExactPriority& q) {
  return comparePriorities(m, p, q) < 0;
}

inline bool priorityEqual(const DivisorMethod& m, const ExactPriority& p, const ExactPriority& q) {
  return comparePriorities(m, p, q) == 0;
}

}  // namespace apportion

#endif  // APPORTION_PRIORITY_HPP

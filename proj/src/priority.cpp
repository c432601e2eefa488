#include "apportion/priority.hpp"

#include <stdexcept>

namespace apportion {

namespace {

using u128 = unsigned __int128;

// 192-bit product a*b as hi*2^64 + lo. a < 2^64 and b < 2^128, so
// a*(b >> 64) + carry < 2^128 and the sum cannot wrap.
struct U192 {
  u128 hi;
  std::uint64_t lo;
};

U192 mul64x128(std::uint64_t a, u128 b) {
  u128 lo_prod = static_cast<u128>(a) * static_cast<std::uint64_t>(b);
  u128 hi_prod = static_cast<u128>(a) * static_cast<std::uint64_t>(b >> 64);
  return {hi_prod + (lo_prod >> 64), static_cast<std::uint64_t>(lo_prod)};
}

// a*b <=> c*d with a, c < 2^64 and b, d < 2^128.
std::strong_ordering mulCompare(std::uint64_t a, u128 b, std::uint64_t c, u128 d) {
  const U192 lhs = mul64x128(a, b);
  const U192 rhs = mul64x128(c, d);
  if (lhs.hi != rhs.hi) return lhs.hi < rhs.hi ? std::strong_ordering::less
                                               : std::strong_ordering::greater;
  if (lhs.lo != rhs.lo) return lhs.lo < rhs.lo ? std::strong_ordering::less
                                               : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// 2^{jp}/vp <=> 2^{jq}/vq, decided as 2^{jp-jq}*vq <=> vp for jp >= jq.
std::strong_ordering comparePowerOfTwo(std::uint64_t jp, std::uint64_t vp, std::uint64_t jq,
                                       std::uint64_t vq) {
  if (jp < jq) {
    const std::strong_ordering flipped = comparePowerOfTwo(jq, vq, jp, vp);
    if (flipped == std::strong_ordering::less) return std::strong_ordering::greater;
    if (flipped == std::strong_ordering::greater) return std::strong_ordering::less;
    return std::strong_ordering::equal;
  }
  const std::uint64_t shift = jp - jq;
  if (shift >= 64) return std::strong_ordering::greater;  // vq*2^shift >= 2^64 > vp
  const u128 lhs = static_cast<u128>(vq) << shift;
  const u128 rhs = vp;
  if (lhs != rhs) return lhs < rhs ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering comparePriorities(const DivisorMethod& method, const ExactPriority& p,
                                       const ExactPriority& q) {
  using Tag = ExactPriority::Tag;
  if (p.tag != Tag::Finite || q.tag != Tag::Finite) {
    const int pt = static_cast<int>(p.tag);
    const int qt = static_cast<int>(q.tag);
    return pt <=> qt;
  }
  if (p.method != method.id || q.method != method.id) {
    throw std::invalid_argument("comparePriorities: priorities from mixed divisor methods");
  }

  switch (method.kind) {
    case DivisorKind::Rational: {
      // p_a/(q_a*v_a) <=> p_b/(q_b*v_b)
      const DivisorValue da = divisorValue(method, p.index);
      const DivisorValue db = divisorValue(method, q.index);
      return mulCompare(da.num, static_cast<u128>(db.den) * q.score, db.num,
                        static_cast<u128>(da.den) * p.score);
    }
    case DivisorKind::GeometricMeanRoot: {
      // sqrt(s_a)/v_a <=> sqrt(s_b)/v_b, both sides nonnegative, so compare
      // s_a*v_b^2 <=> s_b*v_a^2.
      const std::uint64_t sa = static_cast<std::uint64_t>(p.index) * (p.index + std::uint64_t{1});
      const std::uint64_t sb = static_cast<std::uint64_t>(q.index) * (q.index + std::uint64_t{1});
      return mulCompare(sa, static_cast<u128>(q.score) * q.score, sb,
                        static_cast<u128>(p.score) * p.score);
    }
    case DivisorKind::PowerOfTwo:
      return comparePowerOfTwo(p.index, p.score, q.index, q.score);
  }
  throw std::logic_error("comparePriorities: unknown divisor kind");
}

}  // namespace apportion

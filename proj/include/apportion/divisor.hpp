#ifndef APPORTION_DIVISOR_HPP
#define APPORTION_DIVISOR_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace apportion {

enum class MethodId : std::uint8_t {
  Adams,
  Jefferson,
  SainteLague,
  ModifiedSainteLague,
  HuntingtonHill,
  Dean,
  Imperiali,
  Danish,
  Geometric,
};

enum class DivisorKind : std::uint8_t {
  Rational,           // d_j = p_j / q_j with small integer p, q
  GeometricMeanRoot,  // d_j = sqrt(j (j+1))
  PowerOfTwo,         // d_j = 2^j
};

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;  // > 0

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// One divisor d_j in an exactly comparable form. Rational methods carry the
// integer pair p/q; GeometricMeanRoot carries j(j+1) (the value is its square
// root); PowerOfTwo carries the exponent j.
struct DivisorValue {
  enum class Form : std::uint8_t { Rational, SqrtOfInteger, PowerOfTwo };

  Form form = Form::Rational;
  std::uint64_t num = 0;  // p, or j(j+1), or the exponent j
  std::uint64_t den = 1;  // q for Form::Rational, 1 otherwise

  double value() const;
};

// Divisor indices are capped so that every exact comparison fits the integer
// widths used by the comparator: j < 2^31 keeps j(j+1) and 2j(j+1) inside 64
// bits. Scores may use the full 63-bit range regardless of the method.
inline constexpr std::uint64_t kMaxDivisorIndex = (std::uint64_t{1} << 31) - 1;

// A highest-averages method: the divisor sequence d_0 < d_1 < ... plus the
// arithmetic progression e_j = e0 + delta*j that approximates it within
// approx_bound (exactly arithmetic methods have bound 0).
struct DivisorMethod {
  MethodId id;
  DivisorKind kind;
  std::string_view name;  // canonical CLI name
  Rational approx_e0;
  Rational approx_delta;  // > 0
  Rational approx_bound;  // c with |d_j - e_j| <= c for all j
  bool zero_start;        // d_0 == 0

  DivisorValue divisor(std::uint64_t j) const;
};

// d_j for the given method. Throws std::overflow_error past kMaxDivisorIndex.
DivisorValue divisorValue(const DivisorMethod& method, std::uint64_t j);

const DivisorMethod& method(MethodId id);

// The eight catalogued methods.
std::span<const DivisorMethod> tableMethods();

// Catalogued methods plus the geometric (power-of-two) extension.
std::span<const DivisorMethod> allMethods();

// Accepts canonical names and the usual synonyms (dhondt, webster, ...),
// case-insensitively; '_' and ' ' are treated as '-'.
std::optional<MethodId> parseMethodName(std::string_view name);

}  // namespace apportion

#endif  // APPORTION_DIVISOR_HPP

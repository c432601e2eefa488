#include "apportion/divisor.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

namespace apportion {

double DivisorValue::value() const {
  switch (form) {
    case Form::Rational:
      return static_cast<double>(num) / static_cast<double>(den);
    case Form::SqrtOfInteger:
      return std::sqrt(static_cast<double>(num));
    case Form::PowerOfTwo:
      return std::exp2(static_cast<double>(num));
  }
  return 0.0;
}

DivisorValue DivisorMethod::divisor(std::uint64_t j) const { return divisorValue(*this, j); }

namespace {

constexpr std::array<DivisorMethod, 9> kMethods = {{
    {MethodId::Adams, DivisorKind::Rational, "adams", {0, 1}, {1, 1}, {0, 1}, true},
    {MethodId::Jefferson, DivisorKind::Rational, "jefferson", {1, 1}, {1, 1}, {0, 1}, false},
    {MethodId::SainteLague, DivisorKind::Rational, "sainte-lague", {1, 1}, {2, 1}, {0, 1}, false},
    {MethodId::ModifiedSainteLague, DivisorKind::Rational, "modified-sainte-lague",
     {1, 1}, {2, 1}, {1, 1}, false},
    {MethodId::HuntingtonHill, DivisorKind::GeometricMeanRoot, "huntington-hill",
     {0, 1}, {1, 1}, {1, 1}, true},
    {MethodId::Dean, DivisorKind::Rational, "dean", {0, 1}, {1, 1}, {1, 1}, true},
    {MethodId::Imperiali, DivisorKind::Rational, "imperiali", {2, 1}, {1, 1}, {0, 1}, false},
    {MethodId::Danish, DivisorKind::Rational, "danish", {1, 1}, {3, 1}, {0, 1}, false},
    {MethodId::Geometric, DivisorKind::PowerOfTwo, "geometric", {1, 1}, {1, 1}, {0, 1}, false},
}};

}  // namespace

DivisorValue divisorValue(const DivisorMethod& method, std::uint64_t j) {
  if (j > kMaxDivisorIndex) {
    throw std::overflow_error("divisor index " + std::to_string(j) +
                              " exceeds exact-comparison capacity (2^31 - 1)");
  }
  switch (method.id) {
    case MethodId::Adams:
      return {DivisorValue::Form::Rational, j, 1};
    case MethodId::Jefferson:
      return {DivisorValue::Form::Rational, j + 1, 1};
    case MethodId::SainteLague:
      return {DivisorValue::Form::Rational, 2 * j + 1, 1};
    case MethodId::ModifiedSainteLague:
      if (j == 0) return {DivisorValue::Form::Rational, 7, 5};
      return {DivisorValue::Form::Rational, 2 * j + 1, 1};
    case MethodId::HuntingtonHill:
      return {DivisorValue::Form::SqrtOfInteger, j * (j + 1), 1};
    case MethodId::Dean:
      return {DivisorValue::Form::Rational, 2 * j * (j + 1), 2 * j + 1};
    case MethodId::Imperiali:
      return {DivisorValue::Form::Rational, j + 2, 1};
    case MethodId::Danish:
      return {DivisorValue::Form::Rational, 3 * j + 1, 1};
    case MethodId::Geometric:
      return {DivisorValue::Form::PowerOfTwo, j, 1};
  }
  throw std::invalid_argument("unknown divisor method");
}

const DivisorMethod& method(MethodId id) { return kMethods[static_cast<std::size_t>(id)]; }

std::span<const DivisorMethod> tableMethods() {
  return std::span<const DivisorMethod>(kMethods.data(), 8);
}

std::span<const DivisorMethod> allMethods() {
  return std::span<const DivisorMethod>(kMethods.data(), kMethods.size());
}

std::optional<MethodId> parseMethodName(std::string_view name) {
  std::string key;
  key.reserve(name.size());
  for (char c : name) {
    if (c == '_' || c == ' ') {
      key.push_back('-');
    } else if (c == '\'') {
      continue;  // "d'hondt"
    } else {
      key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }

  struct Alias {
    std::string_view name;
    MethodId id;
  };
  static constexpr Alias kAliases[] = {
      {"adams", MethodId::Adams},
      {"smallest-divisors", MethodId::Adams},
      {"jefferson", MethodId::Jefferson},
      {"greatest-divisors", MethodId::Jefferson},
      {"dhondt", MethodId::Jefferson},
      {"d-hondt", MethodId::Jefferson},
      {"sainte-lague", MethodId::SainteLague},
      {"webster", MethodId::SainteLague},
      {"major-fractions", MethodId::SainteLague},
      {"modified-sainte-lague", MethodId::ModifiedSainteLague},
      {"huntington-hill", MethodId::HuntingtonHill},
      {"equal-proportions", MethodId::HuntingtonHill},
      {"geometric-mean", MethodId::HuntingtonHill},
      {"dean", MethodId::Dean},
      {"harmonic-mean", MethodId::Dean},
      {"imperiali", MethodId::Imperiali},
      {"danish", MethodId::Danish},
      {"geometric", MethodId::Geometric},
      {"power-of-two", MethodId::Geometric},
  };
  for (const Alias& a : kAliases) {
    if (a.name == key) return a.id;
  }
  return std::nullopt;
}

}  // namespace apportion

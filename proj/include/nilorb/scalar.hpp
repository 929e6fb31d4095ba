#pragma once

// Exact scalar types used throughout the library, with the Eigen glue needed
// to store them in Eigen dense containers.
//
//   Rational  arbitrary-precision rational (GMP mpq_class)
//   ModP      element of the prime field F_p, p = 2^61 - 1

#include <Eigen/Core>
#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace nilorb {

using Rational = mpq_class;
using Integer = mpz_class;

class ModP {
public:
  static constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

  constexpr ModP() = default;
  constexpr ModP(std::int64_t v) : v_(reduce_signed(v)) {} // NOLINT(google-explicit-constructor)

  static constexpr ModP from_raw(std::uint64_t raw) {
    ModP m;
    m.v_ = raw;
    return m;
  }

  constexpr std::uint64_t value() const { return v_; }

  friend constexpr ModP operator+(ModP a, ModP b) {
    std::uint64_t s = a.v_ + b.v_;
    if (s >= kPrime) s -= kPrime;
    return from_raw(s);
  }
  friend constexpr ModP operator-(ModP a, ModP b) {
    return from_raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + kPrime - b.v_);
  }
  constexpr ModP operator-() const { return from_raw(v_ == 0 ? 0 : kPrime - v_); }
  friend constexpr ModP operator*(ModP a, ModP b) {
    const unsigned __int128 prod = static_cast<unsigned __int128>(a.v_) * b.v_;
    std::uint64_t lo = static_cast<std::uint64_t>(prod) & kPrime;
    std::uint64_t hi = static_cast<std::uint64_t>(prod >> 61);
    std::uint64_t s = lo + hi;
    if (s >= kPrime) s -= kPrime;
    return from_raw(s);
  }
  friend ModP operator/(ModP a, ModP b) { return a * b.inverse(); }

  ModP& operator+=(ModP o) { return *this = *this + o; }
  ModP& operator-=(ModP o) { return *this = *this - o; }
  ModP& operator*=(ModP o) { return *this = *this * o; }
  ModP& operator/=(ModP o) { return *this = *this / o; }

  friend constexpr bool operator==(ModP a, ModP b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(ModP a, ModP b) { return a.v_ != b.v_; }

  ModP pow(std::uint64_t e) const {
    ModP base = *this, acc = 1;
    while (e != 0) {
      if (e & 1U) acc *= base;
      base *= base;
      e >>= 1U;
    }
    return acc;
  }

  /// Throws std::domain_error on zero.
  ModP inverse() const;

  /// Image of a rational number; empty when p divides the denominator.
  static std::optional<ModP> from_rational(const Rational& q);

  friend std::ostream& operator<<(std::ostream& os, ModP m) { return os << m.v_; }

private:
  static constexpr std::uint64_t reduce_signed(std::int64_t v) {
    if (v >= 0) return static_cast<std::uint64_t>(v) % kPrime;
    const std::uint64_t r = static_cast<std::uint64_t>(-(v + 1)) % kPrime;
    return kPrime - 1 - r;
  }

  std::uint64_t v_ = 0;
};

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(ModP m) { return m.value() == 0; }

/// Canonical text form: "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& q);

} // namespace nilorb

namespace Eigen {

template <>
struct NumTraits<nilorb::Rational> : GenericNumTraits<nilorb::Rational> {
  using Real = nilorb::Rational;
  using NonInteger = nilorb::Rational;
  using Literal = nilorb::Rational;
  using Nested = nilorb::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<nilorb::ModP> : GenericNumTraits<nilorb::ModP> {
  using Real = nilorb::ModP;
  using NonInteger = nilorb::ModP;
  using Literal = nilorb::ModP;
  using Nested = nilorb::ModP;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

} // namespace Eigen

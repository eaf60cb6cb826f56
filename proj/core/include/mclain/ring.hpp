#pragma once

// Exact unital rings used as coefficient rings for the group construction.
//
// Three instances are provided: the integers (arbitrary precision), the
// integers modulo n, and 2x2 matrices over the integers modulo n. The last
// one is noncommutative, which is what the commutator identities need to be
// tested against. Every value carries its RingSpec; combining values of
// different specs is a DomainError.

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

namespace mclain {

using BigInt = boost::multiprecision::cpp_int;

class RingSpec {
 public:
  enum class Kind { Integers, IntegersMod, Matrices2x2Mod };

  /// Defaults to the integers.
  RingSpec() = default;

  static RingSpec integers();
  static RingSpec integers_mod(std::uint64_t n);
  static RingSpec matrices2x2_mod(std::uint64_t n);

  /// Accepts `Z`, `Z/n` and `M2(Z/n)` with n >= 2.
  static RingSpec parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  /// 0 for the integers.
  std::uint64_t modulus() const noexcept { return modulus_; }
  bool is_finite() const noexcept { return kind_ != Kind::Integers; }
  bool is_commutative() const noexcept { return kind_ != Kind::Matrices2x2Mod; }

  std::string to_string() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  RingSpec(Kind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

  Kind kind_ = Kind::Integers;
  std::uint64_t modulus_ = 0;
};

/// Residues are kept reduced into [0, n).
struct Residue {
  std::uint64_t value = 0;
  friend bool operator==(const Residue&, const Residue&) = default;
};

/// Row-major [[a, b], [c, d]] with reduced residue entries.
struct Mat2 {
  std::array<std::uint64_t, 4> entry{};
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

class RingValue {
 public:
  using Payload = std::variant<BigInt, Residue, Mat2>;

  /// The zero of the integers.
  RingValue() = default;

  static RingValue zero(const RingSpec& spec);
  static RingValue one(const RingSpec& spec);
  /// Image of an integer under the unital map Z -> R.
  static RingValue from_integer(const RingSpec& spec, const BigInt& n);
  /// Matrix from four integers, reduced mod n. Requires a matrix spec.
  static RingValue matrix(const RingSpec& spec, const BigInt& a, const BigInt& b,
                          const BigInt& c, const BigInt& d);

  /// Parses a literal. Integers: optional sign then digits. Z/n: any integer
  /// literal, reduced. M2(Z/n): `[a,b;c,d]`, or an integer meaning a scalar
  /// matrix. Throws ParseError on malformed input.
  static RingValue parse(const RingSpec& spec, std::string_view literal);

  const RingSpec& spec() const noexcept { return spec_; }
  const Payload& payload() const noexcept { return payload_; }

  bool is_zero() const;
  bool is_one() const;

  /// Canonical literal; `parse(spec, v.to_string()) == v`.
  std::string to_string() const;

  friend RingValue operator+(const RingValue& a, const RingValue& b);
  friend RingValue operator-(const RingValue& a, const RingValue& b);
  friend RingValue operator-(const RingValue& a);
  friend RingValue operator*(const RingValue& a, const RingValue& b);
  RingValue& operator+=(const RingValue& other);

  /// Exact equality; throws DomainError when specs differ.
  friend bool operator==(const RingValue& a, const RingValue& b);

 private:
  RingValue(RingSpec spec, Payload payload)
      : spec_(spec), payload_(std::move(payload)) {}

  RingSpec spec_;
  Payload payload_ = BigInt(0);
};

/// Free-function spellings of the ring operations.
RingValue ring_make(const RingSpec& spec, std::string_view literal);
inline RingValue add(const RingValue& a, const RingValue& b) { return a + b; }
inline RingValue neg(const RingValue& a) { return -a; }
inline RingValue mul(const RingValue& a, const RingValue& b) { return a * b; }
inline bool eq(const RingValue& a, const RingValue& b) { return a == b; }
inline RingValue zero(const RingSpec& spec) { return RingValue::zero(spec); }
inline RingValue one(const RingSpec& spec) { return RingValue::one(spec); }

}  // namespace mclain

#include "mclain/ring.hpp"

#include <cctype>

#include "mclain/error.hpp"

namespace mclain {

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t reduce(const BigInt& n, std::uint64_t modulus) {
  BigInt r = n % modulus;
  if (r < 0) r += modulus;
  return r.convert_to<std::uint64_t>();
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((u128(a) + b) % m);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((u128(a) * b) % m);
}

std::uint64_t neg_mod(std::uint64_t a, std::uint64_t m) { return a == 0 ? 0 : m - a; }

void require_same(const RingValue& a, const RingValue& b) {
  if (!(a.spec() == b.spec())) {
    throw DomainError("ring mismatch: " + a.spec().to_string() + " vs " +
                      b.spec().to_string());
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Signed decimal integer. Accepts the Unicode minus sign U+2212 as well.
BigInt parse_integer(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (s.starts_with("\xE2\x88\x92")) {
    negative = true;
    s.remove_prefix(3);
  } else if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw ParseError("expected an integer literal, got '" + std::string(text) + "'");
  BigInt value = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("expected an integer literal, got '" + std::string(text) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

std::uint64_t parse_modulus(std::string_view digits, std::string_view whole) {
  if (digits.empty() || digits.size() > 19) {
    throw ParseError("bad modulus in ring spec '" + std::string(whole) + "'");
  }
  std::uint64_t n = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("bad modulus in ring spec '" + std::string(whole) + "'");
    }
    n = n * 10 + static_cast<std::uint64_t>(c - '0');
  }
  if (n < 2) throw DomainError("ring modulus must be at least 2, got " + std::to_string(n));
  return n;
}

}  // namespace

RingSpec RingSpec::integers() { return RingSpec(Kind::Integers, 0); }

RingSpec RingSpec::integers_mod(std::uint64_t n) {
  if (n < 2) throw DomainError("ring modulus must be at least 2, got " + std::to_string(n));
  return RingSpec(Kind::IntegersMod, n);
}

RingSpec RingSpec::matrices2x2_mod(std::uint64_t n) {
  if (n < 2) throw DomainError("ring modulus must be at least 2, got " + std::to_string(n));
  return RingSpec(Kind::Matrices2x2Mod, n);
}

RingSpec RingSpec::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s == "Z") return integers();
  if (s.starts_with("Z/")) return integers_mod(parse_modulus(s.substr(2), text));
  if (s.starts_with("M2(Z/") && s.ends_with(")")) {
    return matrices2x2_mod(parse_modulus(s.substr(5, s.size() - 6), text));
  }
  throw ParseError("unknown ring spec '" + std::string(text) + "' (expected Z, Z/n or M2(Z/n))");
}

std::string RingSpec::to_string() const {
  switch (kind_) {
    case Kind::Integers:
      return "Z";
    case Kind::IntegersMod:
      return "Z/" + std::to_string(modulus_);
    case Kind::Matrices2x2Mod:
      return "M2(Z/" + std::to_string(modulus_) + ")";
  }
  return "?";
}

RingValue RingValue::zero(const RingSpec& spec) { return from_integer(spec, 0); }

RingValue RingValue::one(const RingSpec& spec) { return from_integer(spec, 1); }

RingValue RingValue::from_integer(const RingSpec& spec, const BigInt& n) {
  switch (spec.kind()) {
    case RingSpec::Kind::Integers:
      return RingValue(spec, n);
    case RingSpec::Kind::IntegersMod:
      return RingValue(spec, Residue{reduce(n, spec.modulus())});
    case RingSpec::Kind::Matrices2x2Mod: {
      std::uint64_t d = reduce(n, spec.modulus());
      return RingValue(spec, Mat2{{d, 0, 0, d}});
    }
  }
  throw std::logic_error("unreachable ring kind");
}

RingValue RingValue::matrix(const RingSpec& spec, const BigInt& a, const BigInt& b,
                            const BigInt& c, const BigInt& d) {
  if (spec.kind() != RingSpec::Kind::Matrices2x2Mod) {
    throw DomainError("matrix value requested for ring " + spec.to_string());
  }
  const std::uint64_t m = spec.modulus();
  return RingValue(spec, Mat2{{reduce(a, m), reduce(b, m), reduce(c, m), reduce(d, m)}});
}

RingValue RingValue::parse(const RingSpec& spec, std::string_view literal) {
  std::string_view s = trim(literal);
  if (s.starts_with("[")) {
    if (spec.kind() != RingSpec::Kind::Matrices2x2Mod) {
      throw ParseError("matrix literal '" + std::string(literal) + "' used with ring " +
                       spec.to_string());
    }
    if (!s.ends_with("]")) throw ParseError("unterminated matrix literal '" + std::string(literal) + "'");
    std::string_view body = s.substr(1, s.size() - 2);
    const auto semi = body.find(';');
    if (semi == std::string_view::npos || body.find(';', semi + 1) != std::string_view::npos) {
      throw ParseError("matrix literal must look like [a,b;c,d], got '" + std::string(literal) + "'");
    }
    auto split_row = [&](std::string_view row) {
      const auto comma = row.find(',');
      if (comma == std::string_view::npos || row.find(',', comma + 1) != std::string_view::npos) {
        throw ParseError("matrix literal must look like [a,b;c,d], got '" + std::string(literal) + "'");
      }
      return std::pair{parse_integer(row.substr(0, comma)), parse_integer(row.substr(comma + 1))};
    };
    auto [a, b] = split_row(body.substr(0, semi));
    auto [c, d] = split_row(body.substr(semi + 1));
    return matrix(spec, a, b, c, d);
  }
  return from_integer(spec, parse_integer(s));
}

bool RingValue::is_zero() const {
  return std::visit(
      [](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, BigInt>) {
          return p == 0;
        } else if constexpr (std::is_same_v<T, Residue>) {
          return p.value == 0;
        } else {
          return p.entry == std::array<std::uint64_t, 4>{0, 0, 0, 0};
        }
      },
      payload_);
}

bool RingValue::is_one() const { return *this == one(spec_); }

std::string RingValue::to_string() const {
  return std::visit(
      [](const auto& p) -> std::string {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, BigInt>) {
          return p.str();
        } else if constexpr (std::is_same_v<T, Residue>) {
          return std::to_string(p.value);
        } else {
          return "[" + std::to_string(p.entry[0]) + "," + std::to_string(p.entry[1]) + ";" +
                 std::to_string(p.entry[2]) + "," + std::to_string(p.entry[3]) + "]";
        }
      },
      payload_);
}

RingValue operator+(const RingValue& a, const RingValue& b) {
  require_same(a, b);
  const std::uint64_t m = a.spec_.modulus();
  switch (a.spec_.kind()) {
    case RingSpec::Kind::Integers:
      return RingValue(a.spec_, BigInt(std::get<BigInt>(a.payload_) + std::get<BigInt>(b.payload_)));
    case RingSpec::Kind::IntegersMod:
      return RingValue(a.spec_, Residue{add_mod(std::get<Residue>(a.payload_).value,
                                                std::get<Residue>(b.payload_).value, m)});
    case RingSpec::Kind::Matrices2x2Mod: {
      const auto& x = std::get<Mat2>(a.payload_).entry;
      const auto& y = std::get<Mat2>(b.payload_).entry;
      Mat2 r;
      for (int i = 0; i < 4; ++i) r.entry[i] = add_mod(x[i], y[i], m);
      return RingValue(a.spec_, r);
    }
  }
  throw std::logic_error("unreachable ring kind");
}

RingValue operator-(const RingValue& a) {
  const std::uint64_t m = a.spec_.modulus();
  switch (a.spec_.kind()) {
    case RingSpec::Kind::Integers:
      return RingValue(a.spec_, BigInt(-std::get<BigInt>(a.payload_)));
    case RingSpec::Kind::IntegersMod:
      return RingValue(a.spec_, Residue{neg_mod(std::get<Residue>(a.payload_).value, m)});
    case RingSpec::Kind::Matrices2x2Mod: {
      Mat2 r = std::get<Mat2>(a.payload_);
      for (auto& e : r.entry) e = neg_mod(e, m);
      return RingValue(a.spec_, r);
    }
  }
  throw std::logic_error("unreachable ring kind");
}

RingValue operator-(const RingValue& a, const RingValue& b) { return a + (-b); }

RingValue operator*(const RingValue& a, const RingValue& b) {
  require_same(a, b);
  const std::uint64_t m = a.spec_.modulus();
  switch (a.spec_.kind()) {
    case RingSpec::Kind::Integers:
      return RingValue(a.spec_, BigInt(std::get<BigInt>(a.payload_) * std::get<BigInt>(b.payload_)));
    case RingSpec::Kind::IntegersMod:
      return RingValue(a.spec_, Residue{mul_mod(std::get<Residue>(a.payload_).value,
                                                std::get<Residue>(b.payload_).value, m)});
    case RingSpec::Kind::Matrices2x2Mod: {
      const auto& x = std::get<Mat2>(a.payload_).entry;
      const auto& y = std::get<Mat2>(b.payload_).entry;
      auto dot = [&](int r, int c) {
        return add_mod(mul_mod(x[2 * r], y[c], m), mul_mod(x[2 * r + 1], y[2 + c], m), m);
      };
      return RingValue(a.spec_, Mat2{{dot(0, 0), dot(0, 1), dot(1, 0), dot(1, 1)}});
    }
  }
  throw std::logic_error("unreachable ring kind");
}

RingValue& RingValue::operator+=(const RingValue& other) {
  *this = *this + other;
  return *this;
}

bool operator==(const RingValue& a, const RingValue& b) {
  require_same(a, b);
  return a.payload_ == b.payload_;
}

RingValue ring_make(const RingSpec& spec, std::string_view literal) {
  return RingValue::parse(spec, literal);
}

}  // namespace mclain

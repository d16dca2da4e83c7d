#pragma once

// Exact coefficient fields: the rationals and prime fields F_p with p < 2^31.
//
// Elements are plain values; every operation goes through the field object,
// which for F_p is where the modulus lives.  Polynomials share one field
// through their ring, so mixing moduli is caught at the ring level.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "segre/errors.hpp"

namespace segre {

/// Arbitrary-precision rational in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& numerator, const mpz_class& denominator) {
    if (denominator == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
  }

  /// Accepts "a", "-a" or "a/b" with decimal integers.
  static Rational parse(std::string_view text) {
    auto slash = text.find('/');
    auto to_z = [](std::string_view digits) {
      mpz_class z;
      std::string s(digits);
      if (s.empty() || z.set_str(s, 10) != 0) throw ParseError("bad integer '" + s + "'");
      return z;
    };
    if (slash == std::string_view::npos) return Rational(to_z(text), 1);
    return Rational(to_z(text.substr(0, slash)), to_z(text.substr(slash + 1)));
  }

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  std::string to_string() const { return value_.get_str(10); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("division by zero in Q");
    return Rational(mpq_class(a.value_ / b.value_));
  }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}
  mpq_class value_;
};

template <class K>
concept CoefficientField = requires(const K& k, const typename K::Element& a, const typename K::Element& b,
                                    std::string_view text, std::int64_t i) {
  typename K::Element;
  { k.zero() } -> std::same_as<typename K::Element>;
  { k.one() } -> std::same_as<typename K::Element>;
  { k.from_int(i) } -> std::same_as<typename K::Element>;
  { k.parse(text) } -> std::same_as<typename K::Element>;
  { k.add(a, b) } -> std::same_as<typename K::Element>;
  { k.sub(a, b) } -> std::same_as<typename K::Element>;
  { k.mul(a, b) } -> std::same_as<typename K::Element>;
  { k.div(a, b) } -> std::same_as<typename K::Element>;
  { k.neg(a) } -> std::same_as<typename K::Element>;
  { k.inv(a) } -> std::same_as<typename K::Element>;
  { k.is_zero(a) } -> std::same_as<bool>;
  { k.equal(a, b) } -> std::same_as<bool>;
  { k.format(a) } -> std::same_as<std::string>;
  { k.characteristic() } -> std::same_as<std::uint32_t>;
  { k.name() } -> std::same_as<std::string>;
  { k == k } -> std::same_as<bool>;
};

class RationalField {
 public:
  using Element = Rational;

  Element zero() const { return {}; }
  Element one() const { return {1}; }
  Element from_int(std::int64_t v) const { return Rational(static_cast<long>(v)); }
  Element parse(std::string_view text) const { return Rational::parse(text); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element div(const Element& a, const Element& b) const { return a / b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const {
    if (a.is_zero()) throw std::domain_error("inverse of zero in Q");
    return Rational(1) / a;
  }
  bool is_zero(const Element& a) const { return a.is_zero(); }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  std::string format(const Element& a) const { return a.to_string(); }
  std::uint32_t characteristic() const { return 0; }
  std::string name() const { return "Q"; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// Residue class in [0, p).  The modulus is held by the owning PrimeField.
struct Residue {
  std::uint32_t value = 0;
  friend bool operator==(Residue, Residue) = default;
  friend std::ostream& operator<<(std::ostream& os, Residue r) { return os << r.value; }
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

class PrimeField {
 public:
  using Element = Residue;

  static constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 31;

  explicit PrimeField(std::uint64_t p) : p_(static_cast<std::uint32_t>(p)) {
    if (p >= kMaxModulus) throw std::invalid_argument("prime modulus must be below 2^31");
    if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  }

  std::uint32_t modulus() const { return p_; }

  Element zero() const { return {0}; }
  Element one() const { return {1}; }
  Element element(std::uint64_t v) const { return {static_cast<std::uint32_t>(v % p_)}; }
  Element from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return {static_cast<std::uint32_t>(r)};
  }
  /// Decimal integer or "a/b", reduced mod p.
  Element parse(std::string_view text) const {
    auto slash = text.find('/');
    if (slash != std::string_view::npos) return div(parse(text.substr(0, slash)), parse(text.substr(slash + 1)));
    bool negative = !text.empty() && text.front() == '-';
    if (negative) text.remove_prefix(1);
    if (text.empty()) throw ParseError("empty integer literal");
    std::uint64_t r = 0;
    for (char c : text) {
      if (c < '0' || c > '9') throw ParseError("bad integer literal '" + std::string(text) + "'");
      r = (r * 10 + static_cast<std::uint64_t>(c - '0')) % p_;
    }
    Element e{static_cast<std::uint32_t>(r)};
    return negative ? neg(e) : e;
  }

  Element add(Element a, Element b) const {
    std::uint32_t s = a.value + b.value;
    return {s >= p_ ? s - p_ : s};
  }
  Element sub(Element a, Element b) const { return {a.value >= b.value ? a.value - b.value : a.value + p_ - b.value}; }
  Element mul(Element a, Element b) const {
    return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.value) * b.value % p_)};
  }
  Element neg(Element a) const { return {a.value == 0 ? 0 : p_ - a.value}; }
  Element inv(Element a) const {
    if (a.value == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(p_));
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a.value;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      t = std::exchange(new_t, t - q * new_t);
      r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0) t += p_;
    return {static_cast<std::uint32_t>(t)};
  }
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t e) const {
    Element result = one();
    while (e != 0) {
      if (e & 1) result = mul(result, a);
      a = mul(a, a);
      e >>= 1;
    }
    return result;
  }
  bool is_zero(Element a) const { return a.value == 0; }
  bool equal(Element a, Element b) const { return a.value == b.value; }
  /// Symmetric representative, so -1 prints as "-1" rather than "p-1".
  std::string format(Element a) const {
    if (a.value > p_ / 2) return "-" + std::to_string(p_ - a.value);
    return std::to_string(a.value);
  }
  std::uint32_t characteristic() const { return p_; }
  std::string name() const { return "Fp:" + std::to_string(p_); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

static_assert(CoefficientField<RationalField>);
static_assert(CoefficientField<PrimeField>);

/// Runtime choice of coefficient field, as given on the command line.
using FieldSpec = std::variant<RationalField, PrimeField>;

/// "Q" or "Fp:<p>".
inline FieldSpec parse_field_spec(std::string_view text) {
  if (text == "Q" || text == "QQ") return RationalField{};
  if (text.starts_with("Fp:") || text.starts_with("GF:")) {
    std::string digits(text.substr(3));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 10)
      throw ParseError("bad prime in field spec '" + std::string(text) + "'");
    try {
      return PrimeField(std::stoull(digits));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("field spec must be Q or Fp:<prime>, got '" + std::string(text) + "'");
}

inline std::string field_spec_name(const FieldSpec& spec) {
  return std::visit([](const auto& k) { return k.name(); }, spec);
}

/// Rejects fields whose characteristic is listed as forbidden by a construction.
template <CoefficientField K>
void require_characteristic_allowed(const K& field, const std::vector<std::uint32_t>& forbidden,
                                    std::string_view construction) {
  for (auto c : forbidden)
    if (field.characteristic() == c)
      throw CharacteristicError(std::string(construction) + " is not defined in characteristic " + std::to_string(c));
}

/// Coefficient transport between fields: Q -> F_p by reduction, F_p -> F_p for equal p.
template <CoefficientField From, CoefficientField To>
typename To::Element coerce(const From& from, const typename From::Element& a, const To& to) {
  if constexpr (std::same_as<From, To>) {
    if (!(from == to)) throw ContextMismatch("cannot map " + from.name() + " coefficients into " + to.name());
    return a;
  } else if constexpr (std::same_as<From, RationalField> && std::same_as<To, PrimeField>) {
    mpz_class p = to.modulus();
    mpz_class num = a.numerator() % p;
    mpz_class den = a.denominator() % p;
    if (num < 0) num += p;
    if (den == 0) throw CharacteristicError("denominator of " + a.to_string() + " vanishes in " + to.name());
    return to.div(to.element(num.get_ui()), to.element(den.get_ui()));
  } else {
    throw ContextMismatch("cannot map " + from.name() + " coefficients into " + to.name());
  }
}

}  // namespace segre

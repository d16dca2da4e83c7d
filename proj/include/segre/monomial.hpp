#pragma once

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

namespace segre {

using Exponent = std::uint16_t;

/// Dense exponent vector with cached total degree.
class Monomial {
 public:
  using Storage = boost::container::small_vector<Exponent, 16>;

  Monomial() = default;
  /// The monomial 1 in `arity` variables.
  explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
  Monomial(std::initializer_list<Exponent> exps) : exps_(exps) { recompute_degree(); }
  explicit Monomial(std::span<const Exponent> exps) : exps_(exps.begin(), exps.end()) { recompute_degree(); }

  static Monomial variable(std::size_t arity, std::size_t index, Exponent power = 1) {
    Monomial m(arity);
    m.exps_.at(index) = power;
    m.degree_ = power;
    return m;
  }

  std::size_t arity() const { return exps_.size(); }
  std::uint32_t degree() const { return degree_; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return {exps_.data(), exps_.size()}; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.exps_.resize(a.arity());
    for (std::size_t i = 0; i < a.arity(); ++i) {
      std::uint32_t e = std::uint32_t{a.exps_[i]} + b.exps_[i];
      if (e > 0xFFFF) throw std::overflow_error("monomial exponent overflow");
      r.exps_[i] = static_cast<Exponent>(e);
    }
    r.degree_ = a.degree_ + b.degree_;
    return r;
  }

  /// a / b, requires b | a.
  friend Monomial quotient(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.exps_.resize(a.arity());
    for (std::size_t i = 0; i < a.arity(); ++i) r.exps_[i] = static_cast<Exponent>(a.exps_[i] - b.exps_[i]);
    r.degree_ = a.degree_ - b.degree_;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.exps_.resize(a.arity());
    for (std::size_t i = 0; i < a.arity(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    r.recompute_degree();
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.arity(); ++i)
      if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  void recompute_degree() {
    degree_ = 0;
    for (auto e : exps_) degree_ += e;
  }

  Storage exps_;
  std::uint32_t degree_ = 0;
};

/// Total, multiplicative well-order on monomials: lex, graded reverse lex,
/// or a two-block product order whose first block dominates.
class MonomialOrder {
 public:
  enum class Kind { lex, grevlex, block };

  static MonomialOrder lex() { return MonomialOrder(Kind::lex); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex); }
  /// Variables [0, split) are compared first with `first`; ties fall through to
  /// the remaining variables under `second`.  Any monomial involving the first
  /// block beats every monomial in the second block alone.
  static MonomialOrder block(std::size_t split, MonomialOrder first, MonomialOrder second) {
    MonomialOrder o(Kind::block);
    o.split_ = split;
    o.blocks_ = std::make_shared<const std::pair<MonomialOrder, MonomialOrder>>(std::move(first), std::move(second));
    return o;
  }

  Kind kind() const { return kind_; }
  std::size_t split() const { return split_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    if (kind_ == Kind::grevlex && a.degree() != b.degree()) return a.degree() <=> b.degree();
    return compare_range(a.exponents(), b.exponents());
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::strong_ordering compare_range(std::span<const Exponent> a, std::span<const Exponent> b) const {
    switch (kind_) {
      case Kind::lex:
        for (std::size_t i = 0; i < a.size(); ++i)
          if (a[i] != b[i]) return a[i] <=> b[i];
        return std::strong_ordering::equal;
      case Kind::grevlex: {
        std::uint32_t da = 0, db = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
          da += a[i];
          db += b[i];
        }
        if (da != db) return da <=> db;
        for (std::size_t i = a.size(); i-- > 0;)
          if (a[i] != b[i]) return b[i] <=> a[i];
        return std::strong_ordering::equal;
      }
      case Kind::block: {
        auto head = blocks_->first.compare_range(a.first(split_), b.first(split_));
        if (head != 0) return head;
        return blocks_->second.compare_range(a.subspan(split_), b.subspan(split_));
      }
    }
    return std::strong_ordering::equal;
  }

  std::string describe() const {
    switch (kind_) {
      case Kind::lex:
        return "lex";
      case Kind::grevlex:
        return "grevlex";
      case Kind::block:
        return "block(" + std::to_string(split_) + ";" + blocks_->first.describe() + "," +
               blocks_->second.describe() + ")";
    }
    return "?";
  }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    if (a.kind_ != b.kind_) return false;
    if (a.kind_ != Kind::block) return true;
    return a.split_ == b.split_ && a.blocks_->first == b.blocks_->first && a.blocks_->second == b.blocks_->second;
  }

 private:
  explicit MonomialOrder(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::size_t split_ = 0;
  std::shared_ptr<const std::pair<MonomialOrder, MonomialOrder>> blocks_;
};

}  // namespace segre

#pragma once

// Sparse multivariate polynomials over an exact field.  A polynomial is a
// sorted list of terms (strictly descending in its ring's monomial order,
// no zero coefficients) plus a shared pointer to its ring.

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "segre/errors.hpp"
#include "segre/field.hpp"
#include "segre/monomial.hpp"

namespace segre {

template <CoefficientField K>
class Ring {
 public:
  Ring(K field, std::vector<std::string> names, MonomialOrder order = MonomialOrder::grevlex())
      : field_(std::move(field)), names_(std::move(names)), order_(std::move(order)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) throw std::invalid_argument("empty variable name");
      if (!index_.emplace(names_[i], i).second) throw std::invalid_argument("duplicate variable name " + names_[i]);
    }
    if (order_.kind() == MonomialOrder::Kind::block && order_.split() > names_.size())
      throw std::invalid_argument("block split exceeds ring arity");
  }

  const K& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }
  std::size_t arity() const { return names_.size(); }
  const std::vector<std::string>& variable_names() const { return names_; }
  const std::string& variable_name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.field_ == b.field_ && a.names_ == b.names_ && a.order_ == b.order_;
  }

 private:
  K field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
  std::unordered_map<std::string, std::size_t> index_;
};

template <CoefficientField K>
using RingPtr = std::shared_ptr<const Ring<K>>;

template <CoefficientField K>
RingPtr<K> make_ring(K field, std::vector<std::string> names, MonomialOrder order = MonomialOrder::grevlex()) {
  return std::make_shared<const Ring<K>>(std::move(field), std::move(names), std::move(order));
}

/// Names `prefix0 .. prefix<count-1>`.
inline std::vector<std::string> indexed_names(const std::string& prefix, std::size_t count) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

template <CoefficientField K>
void require_same_ring(const RingPtr<K>& a, const RingPtr<K>& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) throw ContextMismatch("polynomials belong to different rings");
}

template <CoefficientField K>
struct Term {
  Monomial monomial;
  typename K::Element coefficient;
};

/// Outcome of a homogeneity test.  The zero polynomial is homogeneous of no
/// particular degree.
struct Homogeneity {
  bool homogeneous = false;
  std::optional<unsigned> degree;
  bool is_zero() const { return homogeneous && !degree; }
};

template <CoefficientField K>
class Polynomial {
 public:
  using Element = typename K::Element;

  Polynomial() = default;
  explicit Polynomial(RingPtr<K> ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr<K> ring, Element c) {
    Polynomial p(std::move(ring));
    if (!p.field().is_zero(c)) p.terms_.push_back({Monomial(p.ring_->arity()), std::move(c)});
    return p;
  }
  static Polynomial constant(RingPtr<K> ring, std::int64_t c) {
    auto e = ring->field().from_int(c);
    return constant(std::move(ring), std::move(e));
  }
  static Polynomial variable(RingPtr<K> ring, std::size_t index) {
    if (index >= ring->arity()) throw std::out_of_range("variable index out of range");
    Polynomial p(std::move(ring));
    p.terms_.push_back({Monomial::variable(p.ring_->arity(), index), p.field().one()});
    return p;
  }
  static Polynomial variable(RingPtr<K> ring, const std::string& name) {
    auto idx = ring->index_of(name);
    if (!idx) throw std::out_of_range("no variable named " + name);
    return variable(std::move(ring), *idx);
  }
  static Polynomial term(RingPtr<K> ring, Monomial m, Element c) {
    if (m.arity() != ring->arity()) throw std::invalid_argument("monomial arity does not match ring");
    Polynomial p(std::move(ring));
    if (!p.field().is_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }
  /// Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(RingPtr<K> ring, std::vector<Term<K>> terms) {
    Polynomial p(std::move(ring));
    for (const auto& t : terms)
      if (t.monomial.arity() != p.ring_->arity()) throw std::invalid_argument("monomial arity does not match ring");
    const auto& order = p.ring_->order();
    std::stable_sort(terms.begin(), terms.end(),
                     [&](const Term<K>& a, const Term<K>& b) { return order.less(b.monomial, a.monomial); });
    const K& k = p.field();
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
        p.terms_.back().coefficient = k.add(p.terms_.back().coefficient, t.coefficient);
        if (k.is_zero(p.terms_.back().coefficient)) p.terms_.pop_back();
      } else if (!k.is_zero(t.coefficient)) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }
  /// Caller guarantees canonical order and nonzero coefficients.
  static Polynomial from_sorted_terms(RingPtr<K> ring, std::vector<Term<K>> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
  }

  const RingPtr<K>& ring() const { return ring_; }
  const K& field() const { return ring_->field(); }
  std::span<const Term<K>> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

  const Term<K>& leading_term() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const Element& leading_coefficient() const { return leading_term().coefficient; }

  /// Maximum total degree of a term; 0 for constants and zero.
  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max<unsigned>(d, t.monomial.degree());
    return d;
  }

  Homogeneity homogeneity() const {
    if (terms_.empty()) return {true, std::nullopt};
    auto d = terms_.front().monomial.degree();
    for (const auto& t : terms_)
      if (t.monomial.degree() != d) return {false, std::nullopt};
    return {true, d};
  }

  /// Coefficient of `m`, zero when absent.
  Element coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.monomial == m) return t.coefficient;
    return field().zero();
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return scale(field().inv(leading_coefficient()));
  }

  Polynomial scale(const Element& c) const {
    const K& k = field();
    if (k.is_zero(c)) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.monomial, k.mul(t.coefficient, c)});
    return r;
  }

  /// this * c * m; multiplication by a monomial preserves term order.
  Polynomial mul_term(const Monomial& m, const Element& c) const {
    const K& k = field();
    if (k.is_zero(c)) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, k.mul(t.coefficient, c)});
    return r;
  }

  Polynomial operator-() const { return scale(field().neg(field().one())); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, true); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring_, b.ring_);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    const K& k = a.field();
    std::vector<Term<K>> products;
    products.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) products.push_back({s.monomial * t.monomial, k.mul(s.coefficient, t.coefficient)});
    return from_terms(a.ring_, std::move(products));
  }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(ring_, field().one());
    Polynomial base = *this;
    while (e != 0) {
      if (e & 1u) result = result * base;
      e >>= 1u;
      if (e != 0) base = base * base;
    }
    return result;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring_, b.ring_);
    if (a.terms_.size() != b.terms_.size()) return false;
    const K& k = a.field();
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].monomial == b.terms_[i].monomial) || !k.equal(a.terms_[i].coefficient, b.terms_[i].coefficient))
        return false;
    return true;
  }

  Element evaluate(std::span<const Element> point) const {
    if (point.size() != ring_->arity()) throw std::invalid_argument("evaluation point has wrong arity");
    const K& k = field();
    Element sum = k.zero();
    for (const auto& t : terms_) {
      Element v = t.coefficient;
      for (std::size_t i = 0; i < point.size(); ++i)
        for (Exponent e = 0; e < t.monomial[i]; ++e) v = k.mul(v, point[i]);
      sum = k.add(sum, v);
    }
    return sum;
  }

  /// Formal derivative; exponents are multiplied in the field, so p | e kills the term.
  Polynomial partial_derivative(std::size_t var) const {
    if (var >= ring_->arity()) throw std::out_of_range("derivative variable index out of range");
    const K& k = field();
    std::vector<Term<K>> out;
    for (const auto& t : terms_) {
      auto e = t.monomial[var];
      if (e == 0) continue;
      auto c = k.mul(t.coefficient, k.from_int(e));
      if (k.is_zero(c)) continue;
      std::vector<Exponent> exps(t.monomial.exponents().begin(), t.monomial.exponents().end());
      --exps[var];
      out.push_back({Monomial(std::span<const Exponent>(exps)), c});
    }
    return from_terms(ring_, std::move(out));
  }

  /// True when no term involves a variable outside `vars`.
  bool only_involves(std::span<const std::size_t> vars) const {
    for (const auto& t : terms_)
      for (std::size_t i = 0; i < ring_->arity(); ++i)
        if (t.monomial[i] != 0 && std::find(vars.begin(), vars.end(), i) == vars.end()) return false;
    return true;
  }

 private:
  static Polynomial combine(const Polynomial& a, const Polynomial& b, bool subtract) {
    require_same_ring(a.ring_, b.ring_);
    const K& k = a.field();
    const auto& order = a.ring_->order();
    Polynomial r(a.ring_);
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size()) {
        r.terms_.push_back(a.terms_[i++]);
        continue;
      }
      Term<K> bt{b.terms_[j].monomial, subtract ? k.neg(b.terms_[j].coefficient) : b.terms_[j].coefficient};
      if (i == a.size()) {
        r.terms_.push_back(std::move(bt));
        ++j;
        continue;
      }
      auto c = order.compare(a.terms_[i].monomial, bt.monomial);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        r.terms_.push_back(std::move(bt));
        ++j;
      } else {
        auto s = k.add(a.terms_[i].coefficient, bt.coefficient);
        if (!k.is_zero(s)) r.terms_.push_back({a.terms_[i].monomial, std::move(s)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  RingPtr<K> ring_;
  std::vector<Term<K>> terms_;
};

/// Ring homomorphism sending variable i of f's ring to images[i].
template <CoefficientField K>
Polynomial<K> substitute(const Polynomial<K>& f, std::span<const Polynomial<K>> images) {
  if (images.size() != f.ring()->arity())
    throw std::invalid_argument("substitution needs one image per variable (" + std::to_string(f.ring()->arity()) +
                                "), got " + std::to_string(images.size()));
  if (images.empty()) throw std::invalid_argument("substitution into an empty ring needs a target ring");
  const auto& target = images.front().ring();
  for (const auto& img : images) require_same_ring(target, img.ring());
  const K& k = f.field();
  if (!(k == target->field())) throw ContextMismatch("substitution images live over a different field");

  // cache powers per variable
  std::vector<std::vector<Polynomial<K>>> powers(images.size());
  auto power = [&](std::size_t var, unsigned e) -> const Polynomial<K>& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(Polynomial<K>::constant(target, k.one()));
    while (cache.size() <= e) cache.push_back(cache.back() * images[var]);
    return cache[e];
  };

  Polynomial<K> result(target);
  for (const auto& t : f.terms()) {
    Polynomial<K> prod = Polynomial<K>::constant(target, t.coefficient);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (t.monomial[i] != 0) prod = prod * power(i, t.monomial[i]);
    result = result + prod;
  }
  return result;
}

template <CoefficientField K>
Polynomial<K> substitute(const Polynomial<K>& f, const std::vector<Polynomial<K>>& images) {
  return substitute(f, std::span<const Polynomial<K>>(images));
}

/// Moves f into `target`, sending variable i to variable index_map[i].
/// Cheaper than substitute when images are variables.
template <CoefficientField K>
Polynomial<K> map_variables(const Polynomial<K>& f, const RingPtr<K>& target, std::span<const std::size_t> index_map) {
  if (index_map.size() != f.ring()->arity()) throw std::invalid_argument("variable map has wrong arity");
  if (!(f.field() == target->field())) throw ContextMismatch("variable map across different fields");
  std::vector<Term<K>> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::vector<Exponent> exps(target->arity(), 0);
    for (std::size_t i = 0; i < index_map.size(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (index_map[i] >= target->arity()) throw std::out_of_range("variable map target out of range");
      exps[index_map[i]] += t.monomial[i];
    }
    terms.push_back({Monomial(std::span<const Exponent>(exps)), t.coefficient});
  }
  return Polynomial<K>::from_terms(target, std::move(terms));
}

/// Same polynomial over another field (Q -> F_p by reduction).
template <CoefficientField From, CoefficientField To>
Polynomial<To> change_field(const Polynomial<From>& f, const RingPtr<To>& target) {
  if (target->arity() != f.ring()->arity()) throw std::invalid_argument("field change needs equal arity");
  std::vector<Term<To>> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back({t.monomial, coerce(f.field(), t.coefficient, target->field())});
  return Polynomial<To>::from_terms(target, std::move(terms));
}

/// Copy of `ring` over another field, keeping names and order.
template <CoefficientField From, CoefficientField To>
RingPtr<To> rebase_ring(const RingPtr<From>& ring, To field) {
  return make_ring(std::move(field), ring->variable_names(), ring->order());
}

}  // namespace segre

#pragma once

// Buchberger's algorithm with the Gebauer-Moeller pair update, normal
// selection strategy, and fully reduced output.  On top of it: ideal
// membership, elimination, and radical membership via the Rabinowitsch trick.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <future>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "segre/errors.hpp"
#include "segre/polynomial.hpp"

namespace segre {

struct GroebnerOptions {
  /// Reduction steps plus processed pairs allowed per basis computation.
  std::uint64_t step_budget = 50'000'000;
  /// Worker threads for independent membership checks in radical_equal.
  unsigned jobs = 1;
  /// Re-check every returned basis with the plain Buchberger criterion.
  bool self_check = false;
  /// Incremented once per basis that passed the self check.
  std::shared_ptr<std::atomic<std::uint64_t>> self_check_count;
};

namespace detail {

class StepCounter {
 public:
  explicit StepCounter(std::uint64_t limit) : limit_(limit) {}
  void tick(std::uint64_t n = 1) {
    used_ += n;
    if (used_ > limit_) throw BudgetExceeded("Groebner step budget of " + std::to_string(limit_) + " exceeded");
  }
  std::uint64_t used() const { return used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

/// Full reduction of f by the polynomials in `divisors` (all nonzero).
template <CoefficientField K>
Polynomial<K> reduce(const Polynomial<K>& f, std::span<const Polynomial<K>* const> divisors, StepCounter* steps) {
  const auto& ring = f.ring();
  const K& k = f.field();
  const auto& order = ring->order();
  std::vector<Term<K>> work(f.terms().begin(), f.terms().end());
  std::vector<Term<K>> remainder;
  std::vector<Term<K>> next;
  std::size_t start = 0;
  while (start < work.size()) {
    const Term<K>& lead = work[start];
    const Polynomial<K>* divisor = nullptr;
    for (const auto* g : divisors)
      if (g->leading_monomial().divides(lead.monomial)) {
        divisor = g;
        break;
      }
    if (divisor == nullptr) {
      remainder.push_back(lead);
      ++start;
      continue;
    }
    if (steps != nullptr) steps->tick();
    Monomial shift = quotient(lead.monomial, divisor->leading_monomial());
    auto factor = k.neg(k.div(lead.coefficient, divisor->leading_coefficient()));
    // work[start+1..] + factor * shift * tail(divisor)
    auto tail = divisor->terms().subspan(1);
    next.clear();
    next.reserve(work.size() - start + tail.size());
    std::size_t i = start + 1, j = 0;
    while (i < work.size() || j < tail.size()) {
      if (j == tail.size()) {
        next.push_back(std::move(work[i++]));
        continue;
      }
      Term<K> shifted{tail[j].monomial * shift, k.mul(tail[j].coefficient, factor)};
      if (i == work.size()) {
        next.push_back(std::move(shifted));
        ++j;
        continue;
      }
      auto c = order.compare(work[i].monomial, shifted.monomial);
      if (c > 0) {
        next.push_back(std::move(work[i++]));
      } else if (c < 0) {
        next.push_back(std::move(shifted));
        ++j;
      } else {
        auto s = k.add(work[i].coefficient, shifted.coefficient);
        if (!k.is_zero(s)) next.push_back({std::move(work[i].monomial), std::move(s)});
        ++i;
        ++j;
      }
    }
    std::swap(work, next);
    start = 0;
  }
  return Polynomial<K>::from_sorted_terms(ring, std::move(remainder));
}

template <CoefficientField K>
std::vector<const Polynomial<K>*> pointers(std::span<const Polynomial<K>> polys) {
  std::vector<const Polynomial<K>*> out;
  out.reserve(polys.size());
  for (const auto& p : polys)
    if (!p.is_zero()) out.push_back(&p);
  return out;
}

}  // namespace detail

/// Generators of an ideal in one ring; zero generators are dropped, so an
/// empty list is the zero ideal.
template <CoefficientField K>
class Ideal {
 public:
  explicit Ideal(RingPtr<K> ring, std::vector<Polynomial<K>> generators = {}) : ring_(std::move(ring)) {
    for (auto& g : generators) {
      require_same_ring(ring_, g.ring());
      if (!g.is_zero()) generators_.push_back(std::move(g));
    }
  }

  const RingPtr<K>& ring() const { return ring_; }
  const std::vector<Polynomial<K>>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  bool empty() const { return generators_.empty(); }

  Ideal with(const Polynomial<K>& extra) const {
    auto gens = generators_;
    gens.push_back(extra);
    return Ideal(ring_, std::move(gens));
  }
  Ideal with(std::span<const Polynomial<K>> extra) const {
    auto gens = generators_;
    gens.insert(gens.end(), extra.begin(), extra.end());
    return Ideal(ring_, std::move(gens));
  }
  Ideal without(std::size_t index) const {
    auto gens = generators_;
    gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(index));
    return Ideal(ring_, std::move(gens));
  }

 private:
  RingPtr<K> ring_;
  std::vector<Polynomial<K>> generators_;
};

template <CoefficientField K>
Polynomial<K> normal_form(const Polynomial<K>& f, std::span<const Polynomial<K>> divisors) {
  for (const auto& g : divisors) require_same_ring(f.ring(), g.ring());
  auto ptrs = detail::pointers<K>(divisors);
  return detail::reduce<K>(f, ptrs, nullptr);
}

template <CoefficientField K>
Polynomial<K> normal_form(const Polynomial<K>& f, const std::vector<Polynomial<K>>& divisors) {
  return normal_form(f, std::span<const Polynomial<K>>(divisors));
}

template <CoefficientField K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g) {
  require_same_ring(f.ring(), g.ring());
  const K& k = f.field();
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  auto a = f.mul_term(quotient(l, f.leading_monomial()), k.inv(f.leading_coefficient()));
  auto b = g.mul_term(quotient(l, g.leading_monomial()), k.inv(g.leading_coefficient()));
  return a - b;
}

/// Plain Buchberger criterion: every S-polynomial reduces to zero.
template <CoefficientField K>
bool is_groebner_basis(std::span<const Polynomial<K>> basis) {
  auto ptrs = detail::pointers<K>(basis);
  for (std::size_t i = 0; i < ptrs.size(); ++i)
    for (std::size_t j = i + 1; j < ptrs.size(); ++j)
      if (!detail::reduce<K>(s_polynomial(*ptrs[i], *ptrs[j]), ptrs, nullptr).is_zero()) return false;
  return true;
}

/// Reduced Groebner basis: monic, no term of an element divisible by the
/// leading monomial of another, sorted by descending leading monomial.
template <CoefficientField K>
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr<K> ring, std::vector<Polynomial<K>> basis, std::uint64_t steps)
      : ring_(std::move(ring)), basis_(std::move(basis)), steps_(steps) {}

  const RingPtr<K>& ring() const { return ring_; }
  const std::vector<Polynomial<K>>& elements() const { return basis_; }
  std::size_t size() const { return basis_.size(); }
  std::uint64_t steps() const { return steps_; }

  /// The basis is {1}.
  bool is_unit() const { return basis_.size() == 1 && basis_.front().is_constant(); }

  Polynomial<K> normal_form(const Polynomial<K>& f) const {
    require_same_ring(ring_, f.ring());
    return segre::normal_form(f, std::span<const Polynomial<K>>(basis_));
  }
  bool contains(const Polynomial<K>& f) const { return normal_form(f).is_zero(); }

 private:
  RingPtr<K> ring_;
  std::vector<Polynomial<K>> basis_;
  std::uint64_t steps_;
};

namespace detail {

template <CoefficientField K>
class Buchberger {
 public:
  Buchberger(RingPtr<K> ring, const GroebnerOptions& options, bool stop_on_unit)
      : ring_(std::move(ring)), steps_(options.step_budget), stop_on_unit_(stop_on_unit) {}

  GroebnerBasis<K> run(const std::vector<Polynomial<K>>& generators) {
    for (const auto& g : generators) {
      if (g.is_zero()) continue;
      if (g.is_constant()) return unit();
      insert(g.monic());
    }
    while (!pairs_.empty()) {
      steps_.tick();
      Pair pair = pop_pair();
      auto s = s_polynomial(polys_[pair.i], polys_[pair.j]);
      auto reducers = active();
      auto h = reduce<K>(s, reducers, &steps_);
      if (h.is_zero()) continue;
      if (h.is_constant() && stop_on_unit_) return unit();
      insert(h.monic());
    }
    return finish();
  }

 private:
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };

  GroebnerBasis<K> unit() {
    return GroebnerBasis<K>(ring_, {Polynomial<K>::constant(ring_, ring_->field().one())}, steps_.used());
  }

  std::vector<const Polynomial<K>*> active() const {
    std::vector<const Polynomial<K>*> out;
    for (std::size_t i = 0; i < polys_.size(); ++i)
      if (in_basis_[i]) out.push_back(&polys_[i]);
    return out;
  }

  // Normal strategy: smallest lcm first, ties broken by generator indices.
  Pair pop_pair() {
    const auto& order = ring_->order();
    std::size_t best = 0;
    for (std::size_t p = 1; p < pairs_.size(); ++p) {
      auto c = order.compare(pairs_[p].lcm, pairs_[best].lcm);
      if (c < 0 || (c == 0 && std::pair(pairs_[p].i, pairs_[p].j) < std::pair(pairs_[best].i, pairs_[best].j)))
        best = p;
    }
    Pair out = std::move(pairs_[best]);
    pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
    return out;
  }

  // Gebauer-Moeller update.
  void insert(Polynomial<K> h) {
    const std::size_t k = polys_.size();
    polys_.push_back(std::move(h));
    in_basis_.push_back(false);
    const Monomial& lh = polys_[k].leading_monomial();

    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < k; ++g)
      if (in_basis_[g]) candidates.push_back({g, k, lcm(polys_[g].leading_monomial(), lh)});

    std::vector<Pair> kept;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const auto& p = candidates[c];
      bool keep = coprime(polys_[p.i].leading_monomial(), lh);
      if (!keep) {
        keep = true;
        for (std::size_t d = c + 1; d < candidates.size() && keep; ++d)
          if (candidates[d].lcm.divides(p.lcm)) keep = false;
        for (std::size_t d = 0; d < kept.size() && keep; ++d)
          if (kept[d].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) kept.push_back(p);
    }

    std::vector<Pair> next;
    next.reserve(pairs_.size() + kept.size());
    for (auto& p : pairs_) {
      bool drop = lh.divides(p.lcm) && !(lcm(polys_[p.i].leading_monomial(), lh) == p.lcm) &&
                  !(lcm(polys_[p.j].leading_monomial(), lh) == p.lcm);
      if (!drop) next.push_back(std::move(p));
    }
    for (auto& p : kept)
      if (!coprime(polys_[p.i].leading_monomial(), lh)) next.push_back(std::move(p));
    pairs_ = std::move(next);

    for (std::size_t g = 0; g < k; ++g)
      if (in_basis_[g] && lh.divides(polys_[g].leading_monomial())) in_basis_[g] = false;
    in_basis_[k] = true;
  }

  GroebnerBasis<K> finish() {
    std::vector<Polynomial<K>> minimal;
    for (std::size_t i = 0; i < polys_.size(); ++i) {
      if (!in_basis_[i]) continue;
      bool redundant = false;
      for (std::size_t j = 0; j < polys_.size() && !redundant; ++j) {
        if (j == i || !in_basis_[j]) continue;
        const auto& li = polys_[i].leading_monomial();
        const auto& lj = polys_[j].leading_monomial();
        if (lj.divides(li) && (!(lj == li) || j < i)) redundant = true;
      }
      if (!redundant) minimal.push_back(polys_[i]);
    }
    std::vector<Polynomial<K>> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<const Polynomial<K>*> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(&minimal[j]);
      const auto& lead = minimal[i].leading_term();
      auto tail = minimal[i] - Polynomial<K>::term(ring_, lead.monomial, lead.coefficient);
      auto head = Polynomial<K>::term(ring_, lead.monomial, lead.coefficient);
      reduced.push_back((head + reduce<K>(tail, others, &steps_)).monic());
    }
    const auto& order = ring_->order();
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial<K>& a, const Polynomial<K>& b) {
      return order.less(b.leading_monomial(), a.leading_monomial());
    });
    return GroebnerBasis<K>(ring_, std::move(reduced), steps_.used());
  }

  RingPtr<K> ring_;
  StepCounter steps_;
  bool stop_on_unit_;
  std::vector<Polynomial<K>> polys_;
  std::vector<bool> in_basis_;
  std::vector<Pair> pairs_;
};

template <CoefficientField K>
void self_check(const GroebnerBasis<K>& gb, const GroebnerOptions& options) {
  if (!options.self_check) return;
  if (!is_groebner_basis<K>(gb.elements())) throw std::logic_error("Buchberger returned a set that is not a Groebner basis");
  if (options.self_check_count) options.self_check_count->fetch_add(1);
}

template <CoefficientField K>
GroebnerBasis<K> buchberger_impl(const Ideal<K>& ideal, const GroebnerOptions& options, bool stop_on_unit) {
  auto gb = Buchberger<K>(ideal.ring(), options, stop_on_unit).run(ideal.generators());
  self_check(gb, options);
  return gb;
}

/// Fresh variable name not used in `ring`.
template <CoefficientField K>
std::string fresh_name(const Ring<K>& ring, std::string base) {
  while (ring.index_of(base)) base += '_';
  return base;
}

}  // namespace detail

template <CoefficientField K>
GroebnerBasis<K> buchberger(const Ideal<K>& ideal, const GroebnerOptions& options = {}) {
  return detail::buchberger_impl(ideal, options, false);
}

template <CoefficientField K>
bool ideal_membership(const Polynomial<K>& f, const Ideal<K>& ideal, const GroebnerOptions& options = {}) {
  require_same_ring(f.ring(), ideal.ring());
  if (f.is_zero()) return true;
  return buchberger(ideal, options).contains(f);
}

/// Generators of ideal ∩ k[keep_vars], returned in the original ring.
template <CoefficientField K>
Ideal<K> eliminate(const Ideal<K>& ideal, std::span<const std::size_t> keep_vars, const GroebnerOptions& options = {}) {
  const auto& ring = ideal.ring();
  std::vector<bool> keep(ring->arity(), false);
  for (auto v : keep_vars) keep.at(v) = true;
  std::vector<std::size_t> eliminated, kept;
  for (std::size_t i = 0; i < ring->arity(); ++i) (keep[i] ? kept : eliminated).push_back(i);
  if (eliminated.empty()) return Ideal<K>(ring, buchberger(ideal, options).elements());

  std::vector<std::string> names;
  std::vector<std::size_t> forward(ring->arity());
  for (auto i : eliminated) {
    forward[i] = names.size();
    names.push_back(ring->variable_name(i));
  }
  for (auto i : kept) {
    forward[i] = names.size();
    names.push_back(ring->variable_name(i));
  }
  auto elim_ring = make_ring(ring->field(), names,
                             MonomialOrder::block(eliminated.size(), MonomialOrder::grevlex(), MonomialOrder::grevlex()));
  std::vector<Polynomial<K>> mapped;
  for (const auto& g : ideal.generators()) mapped.push_back(map_variables(g, elim_ring, forward));
  auto gb = buchberger(Ideal<K>(elim_ring, std::move(mapped)), options);

  std::vector<std::size_t> backward(names.size());
  for (std::size_t i = 0; i < forward.size(); ++i) backward[forward[i]] = i;
  std::vector<std::size_t> kept_positions;
  for (std::size_t p = eliminated.size(); p < names.size(); ++p) kept_positions.push_back(p);
  std::vector<Polynomial<K>> out;
  for (const auto& g : gb.elements())
    if (g.only_involves(kept_positions)) out.push_back(map_variables(g, ring, backward));
  return Ideal<K>(ring, std::move(out));
}

/// f ∈ √I iff I + (1 - t f) is the unit ideal, t a new variable in its own top block.
template <CoefficientField K>
bool radical_membership(const Polynomial<K>& f, const Ideal<K>& ideal, const GroebnerOptions& options = {}) {
  require_same_ring(f.ring(), ideal.ring());
  if (f.is_zero()) return true;
  const auto& ring = ideal.ring();
  std::vector<std::string> names{detail::fresh_name(*ring, "t")};
  names.insert(names.end(), ring->variable_names().begin(), ring->variable_names().end());
  auto ext = make_ring(ring->field(), names, MonomialOrder::block(1, MonomialOrder::grevlex(), ring->order()));
  std::vector<std::size_t> shift(ring->arity());
  for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = i + 1;

  std::vector<Polynomial<K>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(map_variables(g, ext, shift));
  auto t = Polynomial<K>::variable(ext, 0);
  gens.push_back(Polynomial<K>::constant(ext, ring->field().one()) - t * map_variables(f, ext, shift));
  return detail::buchberger_impl(Ideal<K>(ext, std::move(gens)), options, true).is_unit();
}

template <CoefficientField K>
struct RadicalComparison {
  enum class Side { none, first_outside_second, second_outside_first };
  bool equal = true;
  Side side = Side::none;
  /// A generator of one ideal that is not in the radical of the other.
  std::optional<Polynomial<K>> witness;
};

/// Compares √A and √B generator by generator, reporting the first failure.
template <CoefficientField K>
RadicalComparison<K> compare_radicals(const Ideal<K>& a, const Ideal<K>& b, const GroebnerOptions& options = {}) {
  require_same_ring(a.ring(), b.ring());
  using Side = typename RadicalComparison<K>::Side;
  struct Check {
    const Polynomial<K>* f;
    const Ideal<K>* into;
    Side side;
  };
  std::vector<Check> checks;
  for (const auto& g : a.generators()) checks.push_back({&g, &b, Side::first_outside_second});
  for (const auto& g : b.generators()) checks.push_back({&g, &a, Side::second_outside_first});

  std::vector<char> results(checks.size(), 1);
  if (options.jobs <= 1) {
    for (std::size_t i = 0; i < checks.size(); ++i) {
      results[i] = radical_membership(*checks[i].f, *checks[i].into, options) ? 1 : 0;
      if (!results[i]) break;
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> workers;
    for (unsigned w = 0; w < options.jobs; ++w)
      workers.push_back(std::async(std::launch::async, [&] {
        for (std::size_t i = next++; i < checks.size(); i = next++)
          results[i] = radical_membership(*checks[i].f, *checks[i].into, options) ? 1 : 0;
      }));
    for (auto& w : workers) w.get();
  }
  for (std::size_t i = 0; i < checks.size(); ++i)
    if (!results[i]) return {false, checks[i].side, *checks[i].f};
  return {};
}

template <CoefficientField K>
bool radical_equal(const Ideal<K>& a, const Ideal<K>& b, const GroebnerOptions& options = {}) {
  return compare_radicals(a, b, options).equal;
}

}  // namespace segre

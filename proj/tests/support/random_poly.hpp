#pragma once

// Seeded random polynomials and ideals for property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "segre/polynomial.hpp"

namespace segre::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20241016);
  return engine;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

template <CoefficientField K>
typename K::Element random_coefficient(const K& field, int bound = 9) {
  return field.from_int(uniform(-bound, bound));
}

inline Monomial random_monomial(std::size_t arity, unsigned degree) {
  std::vector<Exponent> e(arity, 0);
  for (unsigned k = 0; k < degree; ++k) ++e[static_cast<std::size_t>(uniform(0, static_cast<int>(arity) - 1))];
  return Monomial(std::span<const Exponent>(e));
}

/// Up to `terms` terms of total degree <= max_degree (exactly `degree` if homogeneous).
template <CoefficientField K>
Polynomial<K> random_polynomial(const RingPtr<K>& ring, unsigned max_degree, int terms, bool homogeneous = false) {
  std::vector<Term<K>> out;
  for (int t = 0; t < terms; ++t) {
    unsigned d = homogeneous ? max_degree : static_cast<unsigned>(uniform(0, static_cast<int>(max_degree)));
    out.push_back({random_monomial(ring->arity(), d), random_coefficient(ring->field())});
  }
  return Polynomial<K>::from_terms(ring, std::move(out));
}

template <CoefficientField K>
Polynomial<K> random_nonzero_homogeneous(const RingPtr<K>& ring, unsigned degree, int terms) {
  while (true) {
    auto p = random_polynomial(ring, degree, terms, true);
    if (!p.is_zero()) return p;
  }
}

}  // namespace segre::testing

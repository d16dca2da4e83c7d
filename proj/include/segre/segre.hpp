#pragma once

// Ideals of Segre products X x Y inside P = k[z_ij] and the candidate
// generating sets (up to radical) for the supported constructions.
//
// Variable z_ij stands for x_i * y_j; i indexes the rows 0..n (the x side),
// j the columns 0..m (the y side).  Variables are laid out row-major.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "segre/groebner.hpp"
#include "segre/polynomial.hpp"
#include "segre/text_format.hpp"

namespace segre {

template <CoefficientField K>
class SegreContext {
 public:
  SegreContext(K field, unsigned n, unsigned m) : n_(n), m_(m) {
    if (n < 1 || m < 1) throw std::invalid_argument("Segre context needs n >= 1 and m >= 1");
    std::vector<std::string> names;
    for (unsigned i = 0; i <= n; ++i)
      for (unsigned j = 0; j <= m; ++j) names.push_back(z_name(i, j, n, m));
    ring_ = make_ring(field, std::move(names));
    x_ring_ = make_ring(field, indexed_names("x", n + 1));
    y_ring_ = make_ring(field, indexed_names("y", m + 1));
  }

  /// z<i><j> while both indices are single digits, z_{i,j} otherwise.
  static std::string z_name(unsigned i, unsigned j, unsigned n, unsigned m) {
    if (n < 10 && m < 10) return "z" + std::to_string(i) + std::to_string(j);
    return "z_{" + std::to_string(i) + "," + std::to_string(j) + "}";
  }

  unsigned n() const { return n_; }
  unsigned m() const { return m_; }
  /// N = nm + n + m, the dimension of the ambient projective space.
  unsigned ambient_dimension() const { return n_ * m_ + n_ + m_; }
  const K& field() const { return ring_->field(); }

  const RingPtr<K>& ring() const { return ring_; }
  const RingPtr<K>& x_ring() const { return x_ring_; }
  const RingPtr<K>& y_ring() const { return y_ring_; }

  std::size_t z_index(unsigned i, unsigned j) const {
    if (i > n_ || j > m_) throw std::out_of_range("z index out of range");
    return std::size_t{i} * (m_ + 1) + j;
  }
  Polynomial<K> z(unsigned i, unsigned j) const { return Polynomial<K>::variable(ring_, z_index(i, j)); }

  /// Images z_ij -> x_i * y_j in k[x_0..x_n, y_0..y_m], with that ring.
  std::vector<Polynomial<K>> segre_images(const RingPtr<K>& xy_ring) const {
    std::vector<Polynomial<K>> images;
    for (unsigned i = 0; i <= n_; ++i)
      for (unsigned j = 0; j <= m_; ++j)
        images.push_back(Polynomial<K>::variable(xy_ring, i) * Polynomial<K>::variable(xy_ring, n_ + 1 + j));
    return images;
  }
  RingPtr<K> xy_ring() const {
    auto names = indexed_names("x", n_ + 1);
    auto ys = indexed_names("y", m_ + 1);
    names.insert(names.end(), ys.begin(), ys.end());
    return make_ring(field(), std::move(names));
  }

 private:
  unsigned n_, m_;
  RingPtr<K> ring_, x_ring_, y_ring_;
};

/// z_{i,c0} z_{j,c1} - z_{j,c0} z_{i,c1}.
template <CoefficientField K>
Polynomial<K> minor(const SegreContext<K>& ctx, unsigned i, unsigned j, unsigned c0 = 0, unsigned c1 = 1) {
  if (!(i < j && j <= ctx.n())) throw std::out_of_range("minor rows need i < j <= n");
  if (!(c0 < c1 && c1 <= ctx.m())) throw std::out_of_range("minor columns need c0 < c1 <= m");
  return ctx.z(i, c0) * ctx.z(j, c1) - ctx.z(j, c0) * ctx.z(i, c1);
}

/// All C(n+1,2) * C(m+1,2) two-minors, rows then columns lexicographically.
template <CoefficientField K>
Ideal<K> two_minors(const SegreContext<K>& ctx) {
  std::vector<Polynomial<K>> gens;
  for (unsigned i = 0; i <= ctx.n(); ++i)
    for (unsigned j = i + 1; j <= ctx.n(); ++j)
      for (unsigned c0 = 0; c0 <= ctx.m(); ++c0)
        for (unsigned c1 = c0 + 1; c1 <= ctx.m(); ++c1) gens.push_back(minor(ctx, i, j, c0, c1));
  return Ideal<K>(ctx.ring(), std::move(gens));
}

/// g_k = sum over i < j, i + j = k of [i,j], for k = 1..bound (m = 1 only).
template <CoefficientField K>
std::vector<Polynomial<K>> rank_sums(const SegreContext<K>& ctx, unsigned bound) {
  if (ctx.m() != 1) throw std::invalid_argument("rank sums are defined for m = 1");
  if (bound < 1 || bound > 2 * ctx.n() - 1)
    throw std::out_of_range("rank-sum bound must lie in [1, 2n-1], got " + std::to_string(bound));
  std::vector<Polynomial<K>> sums;
  for (unsigned k = 1; k <= bound; ++k) {
    Polynomial<K> g(ctx.ring());
    for (unsigned i = 0; 2 * i < k; ++i) {
      unsigned j = k - i;
      if (j <= ctx.n()) g = g + minor(ctx, i, j);
    }
    sums.push_back(std::move(g));
  }
  return sums;
}

namespace detail {

template <CoefficientField K>
void require_source(const Polynomial<K>& f, std::size_t arity, const SegreContext<K>& ctx, std::string_view what) {
  if (f.ring()->arity() != arity)
    throw std::invalid_argument(std::string(what) + " must have " + std::to_string(arity) + " variables, got " +
                                std::to_string(f.ring()->arity()));
  if (!(f.field() == ctx.field())) throw ContextMismatch(std::string(what) + " lives over a different field");
}

template <CoefficientField K>
unsigned require_homogeneous(const Polynomial<K>& f, std::string_view what) {
  auto h = f.homogeneity();
  if (!h.homogeneous || !h.degree) throw std::invalid_argument(std::string(what) + " must be a nonzero homogeneous form");
  return *h.degree;
}

/// All exponent vectors of total degree d in `vars` variables, lexicographically descending.
inline std::vector<std::vector<unsigned>> monomials_of_degree(unsigned vars, unsigned d) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> current(vars, 0);
  auto rec = [&](auto&& self, unsigned pos, unsigned left) -> void {
    if (pos + 1 == vars) {
      current[pos] = left;
      out.push_back(current);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      current[pos] = e;
      self(self, pos + 1, left - e);
    }
  };
  rec(rec, 0, d);
  return out;
}

/// Lift of x^alpha * y^beta (equal degrees) to P: pair the sorted row indices
/// with the sorted column indices.
template <CoefficientField K>
Monomial lift_bidegree(const SegreContext<K>& ctx, std::span<const Exponent> alpha, std::span<const unsigned> beta) {
  std::vector<unsigned> rows, cols;
  for (unsigned i = 0; i < alpha.size(); ++i) rows.insert(rows.end(), alpha[i], i);
  for (unsigned j = 0; j < beta.size(); ++j) cols.insert(cols.end(), beta[j], j);
  if (rows.size() != cols.size()) throw std::logic_error("bidegree mismatch in Segre lift");
  std::vector<Exponent> exps(ctx.ring()->arity(), 0);
  for (std::size_t k = 0; k < rows.size(); ++k) ++exps[ctx.z_index(rows[k], cols[k])];
  return Monomial(std::span<const Exponent>(exps));
}

}  // namespace detail

/// f(z_{0,col}, ..., z_{n,col}) for f in n+1 variables.
template <CoefficientField K>
Polynomial<K> pullback(const Polynomial<K>& f, const SegreContext<K>& ctx, unsigned col) {
  detail::require_source(f, ctx.n() + 1, ctx, "pulled-back form");
  if (col > ctx.m()) throw std::out_of_range("column index out of range");
  std::vector<std::size_t> map;
  for (unsigned i = 0; i <= ctx.n(); ++i) map.push_back(ctx.z_index(i, col));
  return map_variables(f, ctx.ring(), map);
}

/// g(z_{row,0}, ..., z_{row,m}) for g in m+1 variables.
template <CoefficientField K>
Polynomial<K> row_pullback(const Polynomial<K>& g, const SegreContext<K>& ctx, unsigned row) {
  detail::require_source(g, ctx.m() + 1, ctx, "pulled-back form");
  if (row > ctx.n()) throw std::out_of_range("row index out of range");
  std::vector<std::size_t> map;
  for (unsigned j = 0; j <= ctx.m(); ++j) map.push_back(ctx.z_index(row, j));
  return map_variables(g, ctx.ring(), map);
}

/// I2(Z) + (f_l : l = 0..m) + (g_k : k = 0..n): same radical as the Segre ideal,
/// with m+1 pullbacks per form on X and n+1 per form on Y.
template <CoefficientField K>
Ideal<K> reduced_segre_ideal(std::span<const Polynomial<K>> x_forms, std::span<const Polynomial<K>> y_forms,
                             const SegreContext<K>& ctx) {
  auto gens = two_minors(ctx).generators();
  for (const auto& f : x_forms) {
    detail::require_homogeneous(f, "form on the first factor");
    for (unsigned l = 0; l <= ctx.m(); ++l) gens.push_back(pullback(f, ctx, l));
  }
  for (const auto& g : y_forms) {
    detail::require_homogeneous(g, "form on the second factor");
    for (unsigned k = 0; k <= ctx.n(); ++k) gens.push_back(row_pullback(g, ctx, k));
  }
  return Ideal<K>(ctx.ring(), std::move(gens));
}

/// I2(Z) + J with a lift of M * f for every monomial M of S of degree deg f
/// (and symmetrically for forms on Y).  This generates the Segre ideal
/// itself, not just up to radical.
template <CoefficientField K>
Ideal<K> segre_ideal(std::span<const Polynomial<K>> x_forms, std::span<const Polynomial<K>> y_forms,
                     const SegreContext<K>& ctx) {
  auto gens = two_minors(ctx).generators();
  for (const auto& f : x_forms) {
    detail::require_source(f, ctx.n() + 1, ctx, "form on the first factor");
    unsigned d = detail::require_homogeneous(f, "form on the first factor");
    for (const auto& beta : detail::monomials_of_degree(ctx.m() + 1, d)) {
      std::vector<Term<K>> terms;
      for (const auto& t : f.terms()) terms.push_back({detail::lift_bidegree(ctx, t.monomial.exponents(), beta), t.coefficient});
      gens.push_back(Polynomial<K>::from_terms(ctx.ring(), std::move(terms)));
    }
  }
  for (const auto& g : y_forms) {
    detail::require_source(g, ctx.m() + 1, ctx, "form on the second factor");
    unsigned e = detail::require_homogeneous(g, "form on the second factor");
    for (const auto& alpha : detail::monomials_of_degree(ctx.n() + 1, e)) {
      std::vector<Exponent> a(alpha.begin(), alpha.end());
      std::vector<Term<K>> terms;
      for (const auto& t : g.terms()) {
        std::vector<unsigned> beta(t.monomial.exponents().begin(), t.monomial.exponents().end());
        terms.push_back({detail::lift_bidegree(ctx, std::span<const Exponent>(a), beta), t.coefficient});
      }
      gens.push_back(Polynomial<K>::from_terms(ctx.ring(), std::move(terms)));
    }
  }
  return Ideal<K>(ctx.ring(), std::move(gens));
}

enum class CaseKind { remark9, theorem10, theorem45, conic, diagonal };

inline std::string_view case_kind_name(CaseKind kind) {
  switch (kind) {
    case CaseKind::remark9:
      return "remark9";
    case CaseKind::theorem10:
      return "theorem10";
    case CaseKind::theorem45:
      return "theorem45";
    case CaseKind::conic:
      return "conic";
    case CaseKind::diagonal:
      return "diagonal";
  }
  return "?";
}

inline CaseKind parse_case_kind(std::string_view text) {
  for (auto k : {CaseKind::remark9, CaseKind::theorem10, CaseKind::theorem45, CaseKind::conic, CaseKind::diagonal})
    if (case_kind_name(k) == text) return k;
  throw ParseError("unknown case kind '" + std::string(text) + "'");
}

/// Known arithmetical rank for a construction: relation is "=" or "<=".
struct ExpectedAra {
  std::string relation;
  unsigned value = 0;
  std::string condition;
};

/// A candidate generating set together with the ideal it should match up to radical.
template <CoefficientField K>
struct CandidateCase {
  CaseKind kind;
  SegreContext<K> context;
  /// The hypersurface form on the first factor, when there is one.
  std::optional<Polynomial<K>> form;
  /// Radical-equivalent target: I2(Z) plus the pulled-back forms.
  Ideal<K> target;
  /// Generating set of the Segre ideal itself, for exact containment.
  Ideal<K> segre;
  /// Generators shared by target and candidate and not counted (I2(Z) for the diagonal).
  std::vector<Polynomial<K>> shared;
  /// The counted candidate generators.
  std::vector<Polynomial<K>> generators;
  std::size_t expected_count = 0;
  ExpectedAra expected_ara;
  std::vector<std::uint32_t> forbidden_characteristics;
  std::vector<std::string> notes;

  Ideal<K> candidate() const {
    auto gens = shared;
    gens.insert(gens.end(), generators.begin(), generators.end());
    return Ideal<K>(context.ring(), std::move(gens));
  }
};

namespace detail {

inline bool involves_only(const Monomial& m, std::initializer_list<std::size_t> vars) {
  for (std::size_t i = 0; i < m.arity(); ++i)
    if (m[i] != 0 && std::find(vars.begin(), vars.end(), i) == vars.end()) return false;
  return true;
}

template <CoefficientField K>
CandidateCase<K> hypersurface_case(CaseKind kind, const Polynomial<K>& form, const SegreContext<K>& ctx,
                                   unsigned bound) {
  std::span<const Polynomial<K>> xs(&form, 1);
  CandidateCase<K> c{kind, ctx, form, reduced_segre_ideal<K>(xs, {}, ctx), segre_ideal<K>(xs, {}, ctx), {}, {}, 0, {}, {}, {}};
  c.generators = rank_sums(ctx, bound);
  c.generators.push_back(pullback(form, ctx, 0));
  c.generators.push_back(pullback(form, ctx, 1));
  return c;
}

}  // namespace detail

/// Every rank sum plus F_0, F_1: 2n+1 generators, no hypothesis on F.
template <CoefficientField K>
CandidateCase<K> remark9_candidate(const Polynomial<K>& form, const SegreContext<K>& ctx) {
  if (ctx.m() != 1) throw std::invalid_argument("remark9 construction needs m = 1");
  detail::require_source(form, ctx.n() + 1, ctx, "hypersurface form");
  detail::require_homogeneous(form, "hypersurface form");
  auto c = detail::hypersurface_case(CaseKind::remark9, form, ctx, 2 * ctx.n() - 1);
  c.expected_count = 2 * ctx.n() + 1;
  c.expected_ara = {"<=", 2 * ctx.n() + 1, "general bound N = 2n+1"};
  return c;
}

/// Throws unless F = c*x_{n-1}^d + sum_{i <= n-2} x_i G_i, c != 0.
template <CoefficientField K>
void check_flex_standard_position(const Polynomial<K>& form, unsigned n) {
  unsigned d = detail::require_homogeneous(form, "hypersurface form");
  const std::size_t a = n - 1, b = n;
  bool has_power = false;
  for (const auto& t : form.terms()) {
    if (!detail::involves_only(t.monomial, {a, b})) continue;
    if (t.monomial[a] == d) {
      has_power = true;
      continue;
    }
    throw std::invalid_argument("not in standard position: term " + format_monomial(t.monomial, *form.ring()) +
                                " involves only " + form.ring()->variable_name(a) + " and " +
                                form.ring()->variable_name(b));
  }
  if (!has_power)
    throw std::invalid_argument("not in standard position: missing term " + form.ring()->variable_name(a) + "^" +
                                std::to_string(d));
}

/// Rank sums up to 2n-2 plus F_0, F_1 for F in flex standard position: 2n generators.
template <CoefficientField K>
CandidateCase<K> theorem10_candidate(const Polynomial<K>& form, const SegreContext<K>& ctx) {
  if (ctx.m() != 1) throw std::invalid_argument("theorem10 construction needs m = 1");
  if (ctx.n() < 2) throw std::invalid_argument("theorem10 construction needs n >= 2");
  detail::require_source(form, ctx.n() + 1, ctx, "hypersurface form");
  check_flex_standard_position(form, ctx.n());
  auto c = detail::hypersurface_case(CaseKind::theorem10, form, ctx, 2 * ctx.n() - 2);
  c.expected_count = 2 * ctx.n();
  c.expected_ara = {"<=", 2 * ctx.n(), "equality 4 for smooth plane curves of degree >= 3"};
  return c;
}

/// Throws unless F = c*x_n^d + sum_{i <= n-3} x_i G_i, c != 0.
template <CoefficientField K>
void check_theorem45_shape(const Polynomial<K>& form, unsigned n) {
  unsigned d = detail::require_homogeneous(form, "hypersurface form");
  bool has_power = false;
  for (const auto& t : form.terms()) {
    if (t.monomial[n] == d) {
      has_power = true;
      continue;
    }
    bool divisible = false;
    for (unsigned i = 0; i + 3 <= n; ++i)
      if (t.monomial[i] != 0) divisible = true;
    if (!divisible)
      throw std::invalid_argument("shape check failed: term " + format_monomial(t.monomial, *form.ring()) +
                                  " is neither x_n^d nor divisible by some x_i with i <= n-3");
  }
  if (!has_power) throw std::invalid_argument("shape check failed: missing term x_n^" + std::to_string(d));
}

/// Rank sums up to 2n-3 plus F_0, F_1: 2n-1 generators.
template <CoefficientField K>
CandidateCase<K> theorem45_candidate(const Polynomial<K>& form, const SegreContext<K>& ctx) {
  if (ctx.m() != 1) throw std::invalid_argument("theorem45 construction needs m = 1");
  if (ctx.n() < 2) throw std::invalid_argument("theorem45 construction needs n >= 2");
  detail::require_source(form, ctx.n() + 1, ctx, "hypersurface form");
  check_theorem45_shape(form, ctx.n());
  auto c = detail::hypersurface_case(CaseKind::theorem45, form, ctx, 2 * ctx.n() - 3);
  c.expected_count = 2 * ctx.n() - 1;
  c.expected_ara = {"=", 2 * ctx.n() - 1, "upper bound always; equality when the hypersurface is smooth"};
  return c;
}

/// Tangent form at column i evaluated at column j:
/// sum_k dF/dx_k(z_{0i}, z_{1i}, z_{2i}) * z_{kj}.
template <CoefficientField K>
Polynomial<K> tangent_form(const Polynomial<K>& form, const SegreContext<K>& ctx, unsigned i, unsigned j) {
  Polynomial<K> sum(ctx.ring());
  for (unsigned k = 0; k <= ctx.n(); ++k) sum = sum + pullback(form.partial_derivative(k), ctx, i) * ctx.z(k, j);
  return sum;
}

/// Conic C x P^m: F_0..F_m and G_h = sum_{i+j=h, j<i} F_ij for h = 1..2m-1; 3m generators.
template <CoefficientField K>
CandidateCase<K> conic_candidate(const Polynomial<K>& form, unsigned m) {
  require_characteristic_allowed(form.field(), {2}, "conic construction");
  if (form.ring()->arity() != 3) throw std::invalid_argument("conic form must have 3 variables");
  if (detail::require_homogeneous(form, "conic form") != 2) throw std::invalid_argument("conic form must have degree 2");
  SegreContext<K> ctx(form.field(), 2, m);
  auto f = map_variables(form, ctx.x_ring(), std::vector<std::size_t>{0, 1, 2});
  std::span<const Polynomial<K>> xs(&f, 1);
  CandidateCase<K> c{CaseKind::conic, ctx, f, reduced_segre_ideal<K>(xs, {}, ctx), segre_ideal<K>(xs, {}, ctx), {}, {}, 0, {}, {2}, {}};
  for (unsigned i = 0; i <= m; ++i) c.generators.push_back(pullback(f, ctx, i));
  for (unsigned h = 1; h + 1 <= 2 * m; ++h) {
    Polynomial<K> g(ctx.ring());
    for (unsigned i = 0; i <= m; ++i)
      if (h >= i && h - i < i) g = g + tangent_form(f, ctx, i, h - i);
    c.generators.push_back(std::move(g));
  }
  c.expected_count = 3 * m;
  c.expected_ara = {"=", 3 * m, "smooth conic, characteristic != 2"};
  c.notes.push_back("tangent forms use sum_k dF/dx_k(column i) * z_{k,j} (row index k, column index j)");
  return c;
}

/// Diagonal of P^n x P^n relative to I2(Z): G_k = sum_{i<j, i+j=k} (z_ij - z_ji).
template <CoefficientField K>
CandidateCase<K> diagonal_candidate(const K& field, unsigned n) {
  SegreContext<K> ctx(field, n, n);
  auto minors = two_minors(ctx).generators();
  auto target_gens = minors;
  for (unsigned i = 0; i <= n; ++i)
    for (unsigned j = i + 1; j <= n; ++j) target_gens.push_back(ctx.z(i, j) - ctx.z(j, i));
  Ideal<K> target(ctx.ring(), target_gens);
  CandidateCase<K> c{CaseKind::diagonal, ctx, std::nullopt, target, target, minors, {}, 0, {}, {}, {}};
  for (unsigned k = 1; k + 1 <= 2 * n; ++k) {
    Polynomial<K> g(ctx.ring());
    for (unsigned i = 0; 2 * i < k; ++i)
      if (k - i <= n) g = g + ctx.z(i, k - i) - ctx.z(k - i, i);
    c.generators.push_back(std::move(g));
  }
  c.expected_count = 2 * n - 1;
  c.expected_ara = {"=", 2 * n - 1, "in the coordinate ring of P^n x P^n, any characteristic"};
  c.notes.push_back("both ideals include I2(Z); the generator count is relative to it");
  return c;
}

/// Same case over another field (Q -> F_p by reduction).  Throws
/// CharacteristicError when the construction excludes the new characteristic.
template <CoefficientField From, CoefficientField To>
CandidateCase<To> change_field(const CandidateCase<From>& c, const To& field) {
  require_characteristic_allowed(field, c.forbidden_characteristics, std::string(case_kind_name(c.kind)) + " construction");
  SegreContext<To> ctx(field, c.context.n(), c.context.m());
  auto map_list = [&](const std::vector<Polynomial<From>>& ps) {
    std::vector<Polynomial<To>> out;
    for (const auto& p : ps) out.push_back(change_field(p, ctx.ring()));
    return out;
  };
  std::optional<Polynomial<To>> form;
  if (c.form) form = change_field(*c.form, ctx.x_ring());
  return CandidateCase<To>{c.kind,
                           ctx,
                           form,
                           Ideal<To>(ctx.ring(), map_list(c.target.generators())),
                           Ideal<To>(ctx.ring(), map_list(c.segre.generators())),
                           map_list(c.shared),
                           map_list(c.generators),
                           c.expected_count,
                           c.expected_ara,
                           c.forbidden_characteristics,
                           c.notes};
}

// Named hypersurfaces used by the CLI and the test suites.

/// x_0^d + ... + x_n^d.
template <CoefficientField K>
Polynomial<K> fermat_form(const RingPtr<K>& ring, unsigned d) {
  Polynomial<K> f(ring);
  for (std::size_t i = 0; i < ring->arity(); ++i) f = f + Polynomial<K>::variable(ring, i).pow(d);
  return f;
}

/// x_0 x_2 - x_1^2.
template <CoefficientField K>
Polynomial<K> standard_conic(const RingPtr<K>& ring) {
  if (ring->arity() != 3) throw std::invalid_argument("standard conic needs 3 variables");
  auto x = [&](std::size_t i) { return Polynomial<K>::variable(ring, i); };
  return x(0) * x(2) - x(1) * x(1);
}

/// x_{n-1}^d + sum_{i <= n-2} x_i x_n^{d-1}: a form in flex standard position.
template <CoefficientField K>
Polynomial<K> standard_position_form(const RingPtr<K>& ring, unsigned d) {
  std::size_t n = ring->arity() - 1;
  if (n < 2 || d < 1) throw std::invalid_argument("standard position form needs n >= 2, d >= 1");
  auto x = [&](std::size_t i) { return Polynomial<K>::variable(ring, i); };
  Polynomial<K> f = x(n - 1).pow(d);
  for (std::size_t i = 0; i + 2 <= n; ++i) f = f + x(i) * x(n).pow(d - 1);
  return f;
}

/// x_n^d + sum_{i <= n-3} x_i x_{i+1}^{d-1}.
template <CoefficientField K>
Polynomial<K> theorem45_form(const RingPtr<K>& ring, unsigned d) {
  std::size_t n = ring->arity() - 1;
  if (n < 2 || d < 1) throw std::invalid_argument("shape form needs n >= 2, d >= 1");
  auto x = [&](std::size_t i) { return Polynomial<K>::variable(ring, i); };
  Polynomial<K> f = x(n).pow(d);
  for (std::size_t i = 0; i + 3 <= n; ++i) f = f + x(i) * x(i + 1).pow(d - 1);
  return f;
}

}  // namespace segre

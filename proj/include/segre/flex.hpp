#pragma once

// d-flexes of a degree-d hypersurface V(F) in P^n: a line L and a point P on
// L such that F restricted to L vanishes only at P, with multiplicity d.
// Also: the linear change that puts a flex in standard position, brute-force
// flex search over small prime fields, and the moduli dimension counts.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <future>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "segre/errors.hpp"
#include "segre/linear_algebra.hpp"
#include "segre/polynomial.hpp"
#include "segre/projective.hpp"
#include "segre/segre.hpp"

namespace segre {

/// L is contained in the hypersurface, so it is not a flex line of anything.
class LineInHypersurface : public std::invalid_argument {
 public:
  explicit LineInHypersurface(const std::string& what) : std::invalid_argument(what) {}
};

/// Line of P^n spanned by two distinct points.
template <CoefficientField K>
class ProjectiveLine {
 public:
  using Element = typename K::Element;

  ProjectiveLine(const K& field, ProjectivePoint<K> a, ProjectivePoint<K> b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.size() != b_.size()) throw std::invalid_argument("line through points of different dimensions");
    if (rank(field, Matrix<K>{a_.coordinates(), b_.coordinates()}) != 2)
      throw std::invalid_argument("a line needs two distinct points");
  }

  /// The line a0 x0 + a1 x1 + a2 x2 = 0 in P^2.
  static ProjectiveLine from_dual(const K& field, const std::vector<Element>& dual) {
    if (dual.size() != 3) throw std::invalid_argument("dual line coordinates need exactly 3 entries");
    auto basis = null_space(field, Matrix<K>{dual}, 3);
    if (basis.size() != 2) throw std::invalid_argument("dual line coordinates are all zero");
    ProjectiveLine line(field, ProjectivePoint<K>(field, basis[0]), ProjectivePoint<K>(field, basis[1]));
    line.dual_ = ProjectivePoint<K>(field, dual);
    return line;
  }

  std::size_t ambient() const { return a_.size() - 1; }
  const ProjectivePoint<K>& first() const { return a_; }
  const ProjectivePoint<K>& second() const { return b_; }
  const std::optional<ProjectivePoint<K>>& dual() const { return dual_; }

  bool contains(const K& field, const ProjectivePoint<K>& p) const {
    if (p.size() != a_.size()) throw std::invalid_argument("point and line live in different dimensions");
    return rank(field, Matrix<K>{a_.coordinates(), b_.coordinates(), p.coordinates()}) == 2;
  }

  /// (s, t) with p proportional to s*first + t*second.
  std::pair<Element, Element> parameters(const K& field, const ProjectivePoint<K>& p) const {
    const auto& a = a_.coordinates();
    const auto& b = b_.coordinates();
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = i + 1; j < a.size(); ++j) {
        auto det = field.sub(field.mul(a[i], b[j]), field.mul(a[j], b[i]));
        if (field.is_zero(det)) continue;
        // Cramer on rows i, j.
        auto s = field.div(field.sub(field.mul(p[i], b[j]), field.mul(p[j], b[i])), det);
        auto t = field.div(field.sub(field.mul(a[i], p[j]), field.mul(a[j], p[i])), det);
        return {s, t};
      }
    throw std::logic_error("degenerate line");
  }

  std::string to_string(const K& field) const {
    if (dual_) return dual_->to_string(field);
    return a_.to_string(field) + "-" + b_.to_string(field);
  }

 private:
  ProjectivePoint<K> a_, b_;
  std::optional<ProjectivePoint<K>> dual_;
};

/// The polynomial ring k[s, t] used for restrictions to a line.
template <CoefficientField K>
RingPtr<K> binary_ring(const K& field) {
  return make_ring(field, {"s", "t"});
}

/// F(s*A + t*B) for the spanning points A, B of L.
template <CoefficientField K>
Polynomial<K> restrict_to_line(const Polynomial<K>& form, const ProjectiveLine<K>& line) {
  const K& k = form.field();
  if (form.ring()->arity() != line.ambient() + 1) throw std::invalid_argument("line and form live in different dimensions");
  auto st = binary_ring(k);
  auto s = Polynomial<K>::variable(st, 0), t = Polynomial<K>::variable(st, 1);
  std::vector<Polynomial<K>> images;
  for (std::size_t i = 0; i <= line.ambient(); ++i)
    images.push_back(s.scale(line.first()[i]) + t.scale(line.second()[i]));
  return substitute(form, images);
}

namespace detail {

template <CoefficientField K>
void require_point_on(const Polynomial<K>& form, const ProjectiveLine<K>& line, const ProjectivePoint<K>& p) {
  const K& k = form.field();
  if (p.size() != form.ring()->arity()) throw std::invalid_argument("point has the wrong number of coordinates");
  if (!line.contains(k, p)) throw std::invalid_argument("point " + p.to_string(k) + " is not on the line");
  if (!k.is_zero(form.evaluate(p.coordinates())))
    throw std::invalid_argument("point " + p.to_string(k) + " is not on the hypersurface");
}

}  // namespace detail

/// Points of L(F_p) where F vanishes.
inline std::vector<ProjectivePoint<PrimeField>> line_zeros(const Polynomial<PrimeField>& form,
                                                           const ProjectiveLine<PrimeField>& line) {
  const PrimeField& k = form.field();
  std::vector<ProjectivePoint<PrimeField>> zeros;
  for (std::uint64_t idx = 0; idx < projective_point_count(k.modulus(), 1); ++idx) {
    auto st = projective_point_at(idx, k.modulus(), 1);
    std::vector<Residue> coords;
    for (std::size_t i = 0; i <= line.ambient(); ++i)
      coords.push_back(k.add(k.mul(k.element(st[0]), line.first()[i]), k.mul(k.element(st[1]), line.second()[i])));
    if (k.is_zero(form.evaluate(coords))) zeros.emplace_back(k, std::move(coords));
  }
  return zeros;
}

/// True when F|_L = c * l^d with l the linear form vanishing at P.
/// Throws if P is not on L or on V(F), and LineInHypersurface if F|_L = 0.
/// Over F_p the answer is cross-checked against the zeros of F on L(F_p).
template <CoefficientField K>
bool is_d_flex(const Polynomial<K>& form, const ProjectiveLine<K>& line, const ProjectivePoint<K>& p) {
  const K& k = form.field();
  auto h = form.homogeneity();
  if (!h.homogeneous || !h.degree) throw std::invalid_argument("flex test needs a nonzero homogeneous form");
  detail::require_point_on(form, line, p);
  auto b = restrict_to_line(form, line);
  if (b.is_zero()) throw LineInHypersurface("line " + line.to_string(k) + " lies in the hypersurface");
  auto [s0, t0] = line.parameters(k, p);
  auto st = b.ring();
  auto l = Polynomial<K>::variable(st, 0).scale(t0) - Polynomial<K>::variable(st, 1).scale(s0);
  auto power = l.pow(*h.degree);
  bool flex = b == power.scale(k.div(b.leading_coefficient(), power.leading_coefficient()));
  if constexpr (std::is_same_v<K, PrimeField>) {
    auto zeros = line_zeros(form, line);
    if (flex && !(zeros.size() == 1 && zeros.front() == p))
      throw std::logic_error("flex test disagrees with point enumeration on the line");
  }
  return flex;
}

/// Invertible linear change of coordinates x = M x'; T = M^{-1}.
template <CoefficientField K>
struct LinearChange {
  Matrix<K> matrix;
  Matrix<K> inverse;
};

/// F' with F'(x') = F(M x') / c0, so F'(T x) = F(x) / c0.
template <CoefficientField K>
struct StandardForm {
  Polynomial<K> form;
  LinearChange<K> change;
  /// F' o T = scale * F.
  typename K::Element scale;
};

/// F(M x') as a form in the same variables.
template <CoefficientField K>
Polynomial<K> apply_linear_change(const Polynomial<K>& form, const Matrix<K>& m) {
  const auto& ring = form.ring();
  const K& k = form.field();
  std::vector<Polynomial<K>> images;
  for (std::size_t row = 0; row < ring->arity(); ++row) {
    Polynomial<K> img(ring);
    for (std::size_t col = 0; col < ring->arity(); ++col)
      if (!k.is_zero(m[row][col])) img = img + Polynomial<K>::variable(ring, col).scale(m[row][col]);
    images.push_back(std::move(img));
  }
  return substitute(form, images);
}

/// Moves a d-flex (L, P) to L = V(x_0..x_{n-2}), P = [0,...,0,1]: the result
/// is c*x_{n-1}^d + sum x_i G_i with c = 1.
template <CoefficientField K>
StandardForm<K> standardize(const Polynomial<K>& form, const ProjectiveLine<K>& line, const ProjectivePoint<K>& p) {
  const K& k = form.field();
  const std::size_t n = form.ring()->arity() - 1;
  if (n < 2) throw std::invalid_argument("standardize needs n >= 2");
  if (!is_d_flex(form, line, p)) throw std::invalid_argument("(L, P) is not a d-flex of F");
  const auto& q = rank(k, Matrix<K>{line.first().coordinates(), p.coordinates()}) == 2 ? line.first() : line.second();
  // Columns: n-1 standard basis vectors completing {Q, P}, then Q, then P.
  std::vector<std::vector<typename K::Element>> columns;
  for (std::size_t i = 0; i <= n && columns.size() + 1 < n; ++i) {
    std::vector<typename K::Element> e(n + 1, k.zero());
    e[i] = k.one();
    Matrix<K> trial = columns;
    trial.push_back(e);
    trial.push_back(q.coordinates());
    trial.push_back(p.coordinates());
    if (rank(k, trial) == trial.size()) columns.push_back(std::move(e));
  }
  columns.push_back(q.coordinates());
  columns.push_back(p.coordinates());
  Matrix<K> m(n + 1, std::vector<typename K::Element>(n + 1, k.zero()));
  for (std::size_t c = 0; c <= n; ++c)
    for (std::size_t r = 0; r <= n; ++r) m[r][c] = columns[c][r];
  auto inv = inverse(k, m);
  if (!inv) throw std::logic_error("completed basis is singular");
  auto moved = apply_linear_change(form, m);
  auto lead = Monomial::variable(n + 1, n - 1, static_cast<Exponent>(form.total_degree()));
  auto c0 = moved.coefficient(lead);
  if (k.is_zero(c0)) throw std::logic_error("standardized form lost its x_{n-1}^d term");
  auto scale = k.inv(c0);
  StandardForm<K> out{moved.scale(scale), {std::move(m), std::move(*inv)}, scale};
  check_flex_standard_position(out.form, static_cast<unsigned>(n));
  return out;
}

/// Points of V(F, dF/dx_0, ..., dF/dx_n) in P^n(F_p).
inline std::vector<ProjectivePoint<PrimeField>> singular_points(const Polynomial<PrimeField>& form,
                                                                std::uint64_t budget = 1'000'000) {
  const PrimeField& k = form.field();
  unsigned n = static_cast<unsigned>(form.ring()->arity() - 1);
  auto total = projective_point_count(k.modulus(), n);
  if (total > budget) throw BudgetExceeded("P^" + std::to_string(n) + "(F_" + std::to_string(k.modulus()) +
                                           ") has more than " + std::to_string(budget) + " points");
  std::vector<Polynomial<PrimeField>> partials;
  for (std::size_t i = 0; i <= n; ++i) partials.push_back(form.partial_derivative(i));
  std::vector<ProjectivePoint<PrimeField>> out;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    auto raw = projective_point_at(idx, k.modulus(), n);
    std::vector<Residue> pt;
    for (auto v : raw) pt.push_back(k.element(v));
    if (!k.is_zero(form.evaluate(pt))) continue;
    bool singular = true;
    for (const auto& d : partials)
      if (!k.is_zero(d.evaluate(pt))) {
        singular = false;
        break;
      }
    if (singular) out.emplace_back(k, std::move(pt));
  }
  return out;
}

struct FlexPair {
  ProjectiveLine<PrimeField> line;
  ProjectivePoint<PrimeField> point;
};

/// All d-flexes of a smooth plane curve V(F) over F_p, lines scanned in the
/// canonical order of their dual coordinates.  Work is split across `jobs`
/// threads by line index; results are merged in scan order.
inline std::vector<FlexPair> find_d_flexes_bruteforce(const Polynomial<PrimeField>& form, unsigned jobs = 1) {
  const PrimeField& k = form.field();
  if (form.ring()->arity() != 3) throw std::invalid_argument("flex search supports plane curves only (n = 2)");
  auto h = form.homogeneity();
  if (!h.homogeneous || !h.degree || *h.degree < 2) throw std::invalid_argument("flex search needs a form of degree >= 2");
  if (auto sing = singular_points(form); !sing.empty())
    throw std::invalid_argument("curve is singular at " + sing.front().to_string(k) + "; flex search needs a smooth curve");
  const std::uint64_t lines = projective_point_count(k.modulus(), 2);
  auto scan = [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<FlexPair> found;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      auto raw = projective_point_at(idx, k.modulus(), 2);
      std::vector<Residue> dual;
      for (auto v : raw) dual.push_back(k.element(v));
      auto line = ProjectiveLine<PrimeField>::from_dual(k, dual);
      if (restrict_to_line(form, line).is_zero()) continue;
      auto zeros = line_zeros(form, line);
      if (zeros.size() != 1) continue;
      if (is_d_flex(form, line, zeros.front())) found.push_back({line, zeros.front()});
    }
    return found;
  };
  jobs = std::max(1u, jobs);
  std::vector<std::future<std::vector<FlexPair>>> parts;
  for (unsigned j = 0; j < jobs; ++j)
    parts.push_back(std::async(jobs == 1 ? std::launch::deferred : std::launch::async, scan, lines * j / jobs,
                               lines * (j + 1) / jobs));
  std::vector<FlexPair> all;
  for (auto& part : parts)
    for (auto& f : part.get()) all.push_back(std::move(f));
  return all;
}

inline long binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// dim V_{d,alpha} = C(d+2-alpha, 2) - 8 + 3 alpha: smooth plane curves of
/// degree d with exactly alpha d-flexes (alpha = 1, 2).
inline long moduli_dim(unsigned d, unsigned alpha) {
  if (d < 3) throw std::invalid_argument("moduli dimensions are stated for d >= 3, got d = " + std::to_string(d));
  if (alpha != 1 && alpha != 2) throw std::invalid_argument("alpha must be 1 or 2");
  return binomial(static_cast<long>(d) + 2 - alpha, 2) - 8 + 3 * static_cast<long>(alpha);
}

struct ModuliDimensions {
  unsigned degree;
  long v_d1;
  long v_d2;
  /// dim V_d = C(d+1,2) - 5: curves with a d-flex.
  long v_d;
  /// dim H_d = C(d+2,2) - 9: all smooth plane curves of degree d, up to PGL.
  long h_d;
  long codimension;
};

inline ModuliDimensions moduli_dimensions(unsigned d) {
  ModuliDimensions out{d, moduli_dim(d, 1), moduli_dim(d, 2), binomial(d + 1, 2) - 5, binomial(d + 2, 2) - 9, 0};
  out.codimension = out.h_d - out.v_d;
  return out;
}

}  // namespace segre

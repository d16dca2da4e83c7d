#pragma once

// Building a CandidateCase from command-line style parameters: kind, sizes,
// and a hypersurface given as text or as a named builtin.  Cases are built
// over Q and moved to other fields afterwards.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "segre/errors.hpp"
#include "segre/flex.hpp"
#include "segre/segre.hpp"
#include "segre/text_format.hpp"

namespace segre {

struct CaseSpec {
  CaseKind kind = CaseKind::conic;
  std::optional<unsigned> n, m, d;
  /// Polynomial text in x0..xn, or fermat:<d>, conic:standard, standard:<d>, t45:<d>.
  std::optional<std::string> form;
  /// For theorem10 with a form not in standard position: a d-flex to move.
  std::optional<std::string> line, point;
};

namespace detail {

inline unsigned parse_builtin_degree(std::string_view text, std::string_view prefix) {
  auto digits = std::string(text.substr(prefix.size()));
  if (digits.empty() || digits.size() > 4 || digits.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("bad degree in builtin form '" + std::string(text) + "'");
  unsigned d = static_cast<unsigned>(std::stoul(digits));
  if (d == 0) throw ParseError("builtin form degree must be positive");
  return d;
}

inline bool is_builtin(std::string_view text) {
  return text.starts_with("fermat:") || text.starts_with("standard:") || text.starts_with("t45:") ||
         text == "conic:standard";
}

}  // namespace detail

/// Resolves a form given as builtin name or text in the ring x0..xn over `field`.
template <CoefficientField K>
Polynomial<K> resolve_form(const RingPtr<K>& ring, std::string_view text) {
  if (text.starts_with("fermat:")) return fermat_form(ring, detail::parse_builtin_degree(text, "fermat:"));
  if (text.starts_with("standard:")) return standard_position_form(ring, detail::parse_builtin_degree(text, "standard:"));
  if (text.starts_with("t45:")) return theorem45_form(ring, detail::parse_builtin_degree(text, "t45:"));
  if (text == "conic:standard") return standard_conic(ring);
  if (text.find(':') != std::string_view::npos) throw ParseError("unknown builtin form '" + std::string(text) + "'");
  return parse_polynomial(ring, text);
}

/// Largest k with x<k> among the identifiers of `text`, if any.
inline std::optional<unsigned> highest_x_index(std::string_view text) {
  std::optional<unsigned> best;
  for (const auto& name : collect_identifiers(text)) {
    if (name.size() < 2 || name[0] != 'x' || name.find_first_not_of("0123456789", 1) != std::string::npos) continue;
    if (name.size() > 6) throw ParseError("variable index too large in '" + name + "'");
    unsigned k = static_cast<unsigned>(std::stoul(name.substr(1)));
    if (!best || k > *best) best = k;
  }
  return best;
}

/// "[a,b,c]" is a dual line (n = 2); "[p];[q]" is the line through two points.
template <CoefficientField K>
ProjectiveLine<K> parse_line(const K& field, const std::string& text) {
  if (auto semi = text.find(';'); semi != std::string::npos)
    return ProjectiveLine<K>(field, ProjectivePoint<K>(field, parse_coordinates(field, text.substr(0, semi))),
                             ProjectivePoint<K>(field, parse_coordinates(field, text.substr(semi + 1))));
  return ProjectiveLine<K>::from_dual(field, parse_coordinates(field, text));
}

/// A known d-flex of the Fermat hypersurface of odd degree: the line through
/// P = [-1,1,0,...,0] and e_2, on which F restricts to t^d.
inline std::pair<ProjectiveLine<RationalField>, ProjectivePoint<RationalField>> fermat_flex(unsigned n, unsigned d) {
  RationalField q;
  if (d % 2 == 0)
    throw std::invalid_argument("no rational d-flex is built in for even-degree Fermat forms; pass --line and --point");
  if (n < 2) throw std::invalid_argument("Fermat flex needs n >= 2");
  std::vector<Rational> p(n + 1, Rational(0)), e2(n + 1, Rational(0));
  p[0] = Rational(-1);
  p[1] = Rational(1);
  e2[2] = Rational(1);
  ProjectivePoint<RationalField> point(q, p);
  return {ProjectiveLine<RationalField>(q, point, ProjectivePoint<RationalField>(q, e2)), point};
}

inline CandidateCase<RationalField> build_case(const CaseSpec& spec) {
  RationalField q;
  auto default_form = [&](unsigned d) -> std::string {
    switch (spec.kind) {
      case CaseKind::remark9:
        return "fermat:" + std::to_string(d);
      case CaseKind::theorem10:
        return "standard:" + std::to_string(d);
      case CaseKind::theorem45:
        return "t45:" + std::to_string(d);
      default:
        return "conic:standard";
    }
  };
  auto pick_n = [&](unsigned fallback) {
    if (spec.n) return *spec.n;
    if (spec.form && !detail::is_builtin(*spec.form))
      if (auto k = highest_x_index(*spec.form)) return std::max(*k, 1u);
    return fallback;
  };

  switch (spec.kind) {
    case CaseKind::conic: {
      if (spec.n && *spec.n != 2) throw std::invalid_argument("conic case lives in P^2 (n = 2)");
      auto ring = make_ring(q, indexed_names("x", 3));
      auto form = resolve_form(ring, spec.form.value_or("conic:standard"));
      return conic_candidate(form, spec.m.value_or(1));
    }
    case CaseKind::diagonal:
      if (spec.form) throw std::invalid_argument("diagonal case takes no form");
      return diagonal_candidate(q, spec.n.value_or(2));
    case CaseKind::remark9:
    case CaseKind::theorem10:
    case CaseKind::theorem45: {
      if (spec.m && *spec.m != 1) throw std::invalid_argument(std::string(case_kind_name(spec.kind)) + " case needs m = 1");
      unsigned d = spec.d.value_or(spec.kind == CaseKind::theorem45 ? 2 : 3);
      std::string text = spec.form.value_or(default_form(d));
      unsigned n = pick_n(spec.kind == CaseKind::theorem45 ? 3 : 2);
      SegreContext<RationalField> ctx(q, n, 1);
      auto form = resolve_form(ctx.x_ring(), text);
      if (spec.kind == CaseKind::remark9) return remark9_candidate(form, ctx);
      if (spec.kind == CaseKind::theorem45) return theorem45_candidate(form, ctx);
      bool standard = true;
      try {
        check_flex_standard_position(form, n);
      } catch (const std::invalid_argument&) {
        standard = false;
      }
      if (standard && !spec.line) return theorem10_candidate(form, ctx);
      std::optional<ProjectiveLine<RationalField>> line;
      std::optional<ProjectivePoint<RationalField>> point;
      if (spec.line || spec.point) {
        if (!spec.line || !spec.point) throw std::invalid_argument("--line and --point go together");
        line = parse_line(q, *spec.line);
        point = ProjectivePoint<RationalField>(q, parse_coordinates(q, *spec.point));
      } else if (text.starts_with("fermat:")) {
        auto [l, p] = fermat_flex(n, form.total_degree());
        line = l;
        point = p;
      } else {
        throw std::invalid_argument("form is not in flex standard position; pass --line and --point for a d-flex");
      }
      auto standardized = standardize(form, *line, *point);
      auto c = theorem10_candidate(standardized.form, ctx);
      c.notes.push_back("standardized from " + to_string(form) + " using the d-flex line " + line->to_string(q) +
                        " and point " + point->to_string(q));
      return c;
    }
  }
  throw std::logic_error("unhandled case kind");
}

}  // namespace segre

#pragma once

// Certification of a CandidateCase: exact containment and radical equality by
// Groebner bases, plus a zero-locus comparison over small prime fields that
// only evaluates polynomials.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <future>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

#include "segre/errors.hpp"
#include "segre/field.hpp"
#include "segre/groebner.hpp"
#include "segre/projective.hpp"
#include "segre/segre.hpp"
#include "segre/text_format.hpp"

namespace segre {

/// Projective F_q-points of V(I), canonical, in scan order.
struct ZeroLocus {
  std::uint32_t q = 0;
  unsigned dimension = 0;
  std::vector<std::vector<std::uint32_t>> points;
};

inline std::string format_point(const std::vector<std::uint32_t>& point) {
  std::string out = "[";
  for (std::size_t i = 0; i < point.size(); ++i) out += (i ? "," : "") + std::to_string(point[i]);
  return out + "]";
}

inline ZeroLocus zero_locus(const Ideal<PrimeField>& ideal, std::uint64_t budget = 1'000'000, unsigned jobs = 1) {
  const PrimeField& k = ideal.ring()->field();
  const std::uint32_t q = k.modulus();
  if (ideal.ring()->arity() == 0) throw std::invalid_argument("zero locus needs at least one variable");
  const unsigned dim = static_cast<unsigned>(ideal.ring()->arity() - 1);
  const std::uint64_t total = projective_point_count(q, dim);
  if (total > budget)
    throw BudgetExceeded("P^" + std::to_string(dim) + "(F_" + std::to_string(q) + ") has " +
                         (total == UINT64_MAX ? std::string("too many") : std::to_string(total)) +
                         " points, over the enumeration budget of " + std::to_string(budget));
  const auto& gens = ideal.generators();
  auto scan = [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<std::vector<std::uint32_t>> found;
    std::vector<Residue> pt(dim + 1);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      auto raw = projective_point_at(idx, q, dim);
      for (unsigned i = 0; i <= dim; ++i) pt[i] = k.element(raw[i]);
      bool zero = true;
      for (const auto& g : gens)
        if (!k.is_zero(g.evaluate(pt))) {
          zero = false;
          break;
        }
      if (zero) found.push_back(std::move(raw));
    }
    return found;
  };
  jobs = std::max(1u, jobs);
  std::vector<std::future<std::vector<std::vector<std::uint32_t>>>> parts;
  for (unsigned j = 0; j < jobs; ++j)
    parts.push_back(std::async(jobs == 1 ? std::launch::deferred : std::launch::async, scan, total * j / jobs,
                               total * (j + 1) / jobs));
  ZeroLocus out{q, dim, {}};
  for (auto& part : parts)
    for (auto& p : part.get()) out.points.push_back(std::move(p));
  return out;
}

struct LocusComparison {
  bool equal = true;
  std::size_t first_points = 0;
  std::size_t second_points = 0;
  /// First point (scan order) lying in exactly one of the two loci.
  std::optional<std::vector<std::uint32_t>> witness;
  /// "first_only" or "second_only" when there is a witness.
  std::string witness_side;
};

inline LocusComparison zero_loci_equal(const Ideal<PrimeField>& a, const Ideal<PrimeField>& b,
                                       std::uint64_t budget = 1'000'000, unsigned jobs = 1) {
  require_same_ring(a.ring(), b.ring());
  auto za = zero_locus(a, budget, jobs);
  auto zb = zero_locus(b, budget, jobs);
  LocusComparison out{za.points == zb.points, za.points.size(), zb.points.size(), std::nullopt, ""};
  if (out.equal) return out;
  // Both lists are sorted, so a merge finds the first difference.
  std::size_t i = 0, j = 0;
  while (i < za.points.size() && j < zb.points.size() && za.points[i] == zb.points[j]) ++i, ++j;
  bool take_first = j == zb.points.size() || (i < za.points.size() && za.points[i] < zb.points[j]);
  out.witness = take_first ? za.points[i] : zb.points[j];
  out.witness_side = take_first ? "first_only" : "second_only";
  return out;
}

struct VerifyConfig {
  /// Field for the Groebner-based checks.
  FieldSpec field = PrimeField(32003);
  /// Primes for the zero-locus oracle.
  std::vector<std::uint32_t> oracle_primes;
  GroebnerOptions groebner;
  std::uint64_t enumeration_budget = 1'000'000;
  unsigned jobs = 1;
  /// Skip the symbolic checks.
  bool oracle_only = false;
  /// Wall-clock timings make the report differ between identical runs.
  bool record_timings = true;
};

struct OracleCheck {
  std::uint32_t q = 0;
  /// "equal", "unequal", "skipped" or "budget_exceeded".
  std::string status;
  std::size_t target_points = 0;
  std::size_t candidate_points = 0;
  std::optional<std::string> witness;
  std::string witness_side;
  std::string reason;
};

struct VerificationReport {
  std::string kind;
  unsigned n = 0, m = 0;
  std::optional<std::string> form;
  std::string field;
  std::size_t candidate_count = 0;
  std::size_t expected_count = 0;
  ExpectedAra expected_ara;
  std::vector<std::string> candidate;
  std::vector<std::string> shared;
  std::vector<std::string> target;

  /// "true", "false", "budget_exceeded" or "skipped".
  std::string containment_exact = "skipped";
  std::optional<std::string> containment_witness;
  std::string radical_equal = "skipped";
  std::optional<std::string> radical_witness;
  std::string radical_witness_side;
  std::vector<OracleCheck> zero_locus_checks;

  /// False when radical equality holds but some zero locus differs.
  bool consistent = true;
  std::uint64_t groebner_steps = 0;
  std::vector<std::pair<std::string, double>> timings_ms;
  std::vector<std::string> notes;
  bool record_timings = true;

  bool certified() const { return containment_exact == "true" && radical_equal == "true" && consistent; }
  bool oracle_pass() const {
    for (const auto& c : zero_locus_checks)
      if (c.status == "unequal" || c.status == "budget_exceeded") return false;
    return consistent;
  }
  bool budget_exceeded() const {
    if (containment_exact == "budget_exceeded" || radical_equal == "budget_exceeded") return true;
    for (const auto& c : zero_locus_checks)
      if (c.status == "budget_exceeded") return true;
    return false;
  }
};

namespace detail {

template <CoefficientField K>
std::vector<std::string> texts(const std::vector<Polynomial<K>>& polys) {
  std::vector<std::string> out;
  for (const auto& p : polys) out.push_back(to_string(p));
  return out;
}

class Stopwatch {
 public:
  double lap() {
    auto now = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

template <CoefficientField K>
void symbolic_checks(const CandidateCase<K>& c, const VerifyConfig& config, VerificationReport& report) {
  Stopwatch clock;
  try {
    auto gb = buchberger(c.segre, config.groebner);
    report.groebner_steps += gb.steps();
    report.containment_exact = "true";
    for (const auto& g : c.generators) {
      auto r = gb.normal_form(g);
      if (!r.is_zero()) {
        report.containment_exact = "false";
        report.containment_witness = to_string(g);
        break;
      }
    }
  } catch (const BudgetExceeded& e) {
    report.containment_exact = "budget_exceeded";
    report.notes.push_back(std::string("containment: ") + e.what());
  }
  report.timings_ms.emplace_back("containment", clock.lap());

  try {
    auto cmp = compare_radicals(c.target, c.candidate(), config.groebner);
    report.radical_equal = cmp.equal ? "true" : "false";
    if (!cmp.equal) {
      report.radical_witness = to_string(*cmp.witness);
      report.radical_witness_side = cmp.side == RadicalComparison<K>::Side::first_outside_second
                                        ? "target_generator_outside_candidate_radical"
                                        : "candidate_generator_outside_target_radical";
    }
  } catch (const BudgetExceeded& e) {
    report.radical_equal = "budget_exceeded";
    report.notes.push_back(std::string("radical: ") + e.what());
  }
  report.timings_ms.emplace_back("radical", clock.lap());
}

}  // namespace detail

/// Runs every configured check and records the outcome; never throws for a
/// failed check.  `c` may live over any field that maps to the configured ones.
template <CoefficientField K>
VerificationReport verify_case(const CandidateCase<K>& c, const VerifyConfig& config) {
  VerificationReport report;
  report.kind = std::string(case_kind_name(c.kind));
  report.n = c.context.n();
  report.m = c.context.m();
  if (c.form) report.form = to_string(*c.form);
  report.field = field_spec_name(config.field);
  report.candidate_count = c.generators.size();
  report.expected_count = c.expected_count;
  report.expected_ara = c.expected_ara;
  report.candidate = detail::texts(c.generators);
  report.shared = detail::texts(c.shared);
  report.target = detail::texts(c.target.generators());
  report.notes = c.notes;
  report.record_timings = config.record_timings;

  if (!config.oracle_only) {
    try {
      std::visit([&](const auto& field) { detail::symbolic_checks(change_field(c, field), config, report); }, config.field);
    } catch (const std::invalid_argument& e) {
      // CharacteristicError or ContextMismatch: the case does not map to the requested field.
      report.notes.push_back(std::string("symbolic checks skipped: ") + e.what());
    }
  }

  detail::Stopwatch clock;
  for (auto q : config.oracle_primes) {
    OracleCheck check;
    check.q = q;
    try {
      auto local = change_field(c, PrimeField(q));
      auto cmp = zero_loci_equal(local.target, local.candidate(), config.enumeration_budget, config.jobs);
      check.status = cmp.equal ? "equal" : "unequal";
      check.target_points = cmp.first_points;
      check.candidate_points = cmp.second_points;
      if (cmp.witness) {
        check.witness = format_point(*cmp.witness);
        check.witness_side = cmp.witness_side == "first_only" ? "target_only" : "candidate_only";
      }
    } catch (const CharacteristicError& e) {
      check.status = "skipped";
      check.reason = e.what();
    } catch (const BudgetExceeded& e) {
      check.status = "budget_exceeded";
      check.reason = e.what();
    }
    if (report.radical_equal == "true" && check.status == "unequal") report.consistent = false;
    report.zero_locus_checks.push_back(std::move(check));
    report.timings_ms.emplace_back("oracle_F" + std::to_string(q), clock.lap());
  }
  return report;
}

/// 0 certified (or all oracles pass under oracle_only), 1 failed, 3 budget exceeded.
inline int exit_code(const VerificationReport& report, bool oracle_only) {
  if (report.budget_exceeded()) return 3;
  if (oracle_only) return report.oracle_pass() ? 0 : 1;
  return report.certified() && report.oracle_pass() ? 0 : 1;
}

inline nlohmann::ordered_json to_json(const VerificationReport& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["case"] = {{"kind", r.kind}, {"n", r.n}, {"m", r.m}, {"form", r.form ? ordered_json(*r.form) : ordered_json(nullptr)}};
  j["field"] = r.field;
  j["candidate_count"] = r.candidate_count;
  j["expected_count"] = r.expected_count;
  j["expected_ara"] = {{"relation", r.expected_ara.relation},
                       {"value", r.expected_ara.value},
                       {"condition", r.expected_ara.condition}};
  j["candidate"] = r.candidate;
  j["shared"] = r.shared;
  j["target"] = r.target;
  j["containment_exact"] = r.containment_exact;
  j["containment_witness"] = r.containment_witness ? ordered_json(*r.containment_witness) : ordered_json(nullptr);
  j["radical_equal"] = r.radical_equal;
  j["radical_witness"] = r.radical_witness ? ordered_json({{"polynomial", *r.radical_witness}, {"side", r.radical_witness_side}})
                                           : ordered_json(nullptr);
  j["zero_locus_checks"] = ordered_json::array();
  for (const auto& c : r.zero_locus_checks) {
    ordered_json e{{"q", c.q}, {"status", c.status}, {"target_points", c.target_points}, {"candidate_points", c.candidate_points}};
    e["witness"] = c.witness ? ordered_json({{"point", *c.witness}, {"side", c.witness_side}}) : ordered_json(nullptr);
    if (!c.reason.empty()) e["reason"] = c.reason;
    j["zero_locus_checks"].push_back(std::move(e));
  }
  j["consistent"] = r.consistent;
  j["certified"] = r.certified();
  j["oracle_pass"] = r.oracle_pass();
  j["groebner_steps"] = r.groebner_steps;
  if (r.record_timings) {
    j["timings_ms"] = ordered_json::object();
    for (const auto& [name, ms] : r.timings_ms) j["timings_ms"][name] = ms;
  }
  j["notes"] = r.notes;
  return j;
}

}  // namespace segre

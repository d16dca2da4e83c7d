// segre-ara: construct, verify and inspect generating sets up to radical for
// Segre products.  Exit codes: 0 success, 1 check failed, 2 usage or parse
// error, 3 budget exceeded.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "segre/cases.hpp"
#include "segre/flex.hpp"
#include "segre/groebner.hpp"
#include "segre/text_format.hpp"
#include "segre/verify.hpp"

namespace {

using namespace segre;
using nlohmann::ordered_json;

constexpr int kUsage = 2;
constexpr int kBudget = 3;

struct CaseFlags {
  std::string kind;
  std::optional<unsigned> n, m, d;
  std::optional<std::string> form, line, point;
  std::string field = "Q";

  CaseSpec spec() const {
    return CaseSpec{parse_case_kind(kind), n, m, d, form, line, point};
  }
};

void add_case_flags(CLI::App* cmd, CaseFlags& f, const std::string& default_field) {
  f.field = default_field;
  cmd->add_option("--kind", f.kind, "remark9 | theorem10 | theorem45 | conic | diagonal")->required();
  cmd->add_option("--n", f.n, "dimension of the first factor");
  cmd->add_option("--m", f.m, "dimension of the second factor");
  cmd->add_option("--d", f.d, "degree of the default form");
  cmd->add_option("--F", f.form, "form in x0..xn, or fermat:<d>, conic:standard, standard:<d>, t45:<d>");
  cmd->add_option("--line", f.line, "theorem10: d-flex line as [a,b,c] (n = 2) or [p];[q]");
  cmd->add_option("--point", f.point, "theorem10: d-flex point [p0,...,pn]");
  cmd->add_option("--field", f.field, "Q or Fp:<prime>")->capture_default_str();
}

void print_list(std::ostream& out, const std::string& title, const std::vector<std::string>& items) {
  out << title << " (" << items.size() << "):\n";
  for (const auto& s : items) out << "  " << s << "\n";
}

template <CoefficientField K>
ordered_json case_json(const CandidateCase<K>& c) {
  ordered_json j;
  j["kind"] = std::string(case_kind_name(c.kind));
  j["n"] = c.context.n();
  j["m"] = c.context.m();
  j["field"] = c.context.field().name();
  j["form"] = c.form ? ordered_json(to_string(*c.form)) : ordered_json(nullptr);
  j["candidate_count"] = c.generators.size();
  j["expected_count"] = c.expected_count;
  j["expected_ara"] = {{"relation", c.expected_ara.relation}, {"value", c.expected_ara.value}, {"condition", c.expected_ara.condition}};
  j["candidate"] = detail::texts(c.generators);
  j["shared"] = detail::texts(c.shared);
  j["target"] = detail::texts(c.target.generators());
  j["notes"] = c.notes;
  return j;
}

template <CoefficientField K>
void print_case(std::ostream& out, const CandidateCase<K>& c) {
  out << "kind: " << case_kind_name(c.kind) << "\n";
  out << "n: " << c.context.n() << "\nm: " << c.context.m() << "\n";
  out << "field: " << c.context.field().name() << "\n";
  if (c.form) out << "form: " << to_string(*c.form) << "\n";
  out << "expected count: " << c.expected_count << "\n";
  out << "expected ara: " << c.expected_ara.relation << " " << c.expected_ara.value << " (" << c.expected_ara.condition << ")\n";
  print_list(out, "candidate", detail::texts(c.generators));
  if (!c.shared.empty()) print_list(out, "shared", detail::texts(c.shared));
  print_list(out, "target", detail::texts(c.target.generators()));
  for (const auto& note : c.notes) out << "note: " << note << "\n";
}

int cmd_construct(const CaseFlags& flags, bool json) {
  auto base = build_case(flags.spec());
  auto field = parse_field_spec(flags.field);
  std::visit(
      [&](const auto& k) {
        auto c = change_field(base, k);
        if (json)
          std::cout << case_json(c).dump(2) << "\n";
        else
          print_case(std::cout, c);
      },
      field);
  return 0;
}

std::vector<std::uint32_t> parse_primes(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 10)
      throw ParseError("bad oracle prime '" + item + "'");
    auto p = std::stoull(item);
    PrimeField check(p);  // validates primality
    out.push_back(check.modulus());
  }
  return out;
}

struct VerifyFlags {
  std::string oracle_primes;
  std::optional<std::uint64_t> budget;
  std::uint64_t enumeration_budget = 1'000'000;
  bool oracle_only = false;
  bool no_timings = false;
  bool self_check = false;
  unsigned jobs = 1;
};

int cmd_verify(const CaseFlags& flags, const VerifyFlags& v, bool json) {
  auto c = build_case(flags.spec());
  VerifyConfig config;
  config.field = parse_field_spec(flags.field);
  if (!v.oracle_primes.empty()) config.oracle_primes = parse_primes(v.oracle_primes);
  if (v.budget) {
    config.groebner.step_budget = *v.budget;
  } else if (const char* env = std::getenv("SEGRE_ARA_BUDGET")) {
    std::string s(env);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("SEGRE_ARA_BUDGET must be a nonnegative integer");
    config.groebner.step_budget = std::stoull(s);
  }
  config.groebner.jobs = v.jobs;
  config.groebner.self_check = v.self_check;
  config.enumeration_budget = v.enumeration_budget;
  config.jobs = v.jobs;
  config.oracle_only = v.oracle_only;
  config.record_timings = !v.no_timings;
  auto report = verify_case(c, config);
  if (json) {
    std::cout << to_json(report).dump(2) << "\n";
  } else {
    std::cout << "case: " << report.kind << " n=" << report.n << " m=" << report.m << "\n";
    if (report.form) std::cout << "form: " << *report.form << "\n";
    std::cout << "field: " << report.field << "\n";
    std::cout << "candidate generators: " << report.candidate_count << " (expected " << report.expected_count << ")\n";
    std::cout << "containment_exact: " << report.containment_exact << "\n";
    if (report.containment_witness) std::cout << "  not contained: " << *report.containment_witness << "\n";
    std::cout << "radical_equal: " << report.radical_equal << "\n";
    if (report.radical_witness)
      std::cout << "  witness: " << *report.radical_witness << " (" << report.radical_witness_side << ")\n";
    for (const auto& z : report.zero_locus_checks) {
      std::cout << "zero locus over F_" << z.q << ": " << z.status;
      if (z.status == "equal" || z.status == "unequal")
        std::cout << " (target " << z.target_points << " points, candidate " << z.candidate_points << " points)";
      if (z.witness) std::cout << " witness " << *z.witness << " " << z.witness_side;
      if (!z.reason.empty()) std::cout << " [" << z.reason << "]";
      std::cout << " (oracle evidence)\n";
    }
    if (!report.consistent) std::cout << "INCONSISTENT: radical equality holds but a zero locus differs\n";
    std::cout << "certified: " << (report.certified() ? "true" : "false") << "\n";
    for (const auto& note : report.notes) std::cout << "note: " << note << "\n";
  }
  return exit_code(report, config.oracle_only);
}

struct FlexFlags {
  std::optional<std::string> form, line, point;
  std::optional<unsigned> n;
  std::string field = "Q";
  bool standardize = false;
  bool search = false;
  std::optional<unsigned> moduli;
  unsigned jobs = 1;
};

std::string format_matrix(const auto& field, const auto& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.size(); ++r) {
    out += r ? ",[" : "[";
    for (std::size_t c = 0; c < m[r].size(); ++c) out += (c ? "," : "") + field.format(m[r][c]);
    out += "]";
  }
  return out + "]";
}

template <CoefficientField K>
int flex_over(const K& field, const FlexFlags& f) {
  if (!f.form) throw std::invalid_argument("--F is required");
  unsigned n = f.n.value_or(2);
  if (!f.n && !detail::is_builtin(*f.form))
    if (auto k = highest_x_index(*f.form)) n = std::max(*k, 2u);
  auto ring = make_ring(field, indexed_names("x", n + 1));
  auto form = resolve_form(ring, *f.form);
  if (f.search) {
    if constexpr (std::is_same_v<K, PrimeField>) {
      auto found = find_d_flexes_bruteforce(form, f.jobs);
      std::cout << "d-flexes over " << field.name() << ": " << found.size() << "\n";
      for (const auto& fp : found)
        std::cout << "  line " << fp.line.to_string(field) << " point " << fp.point.to_string(field) << "\n";
      return 0;
    } else {
      throw std::invalid_argument("--search needs a finite field (--field Fp:<p>)");
    }
  }
  if (!f.line || !f.point) throw std::invalid_argument("--line and --point are required (or use --search)");
  auto line = parse_line(field, *f.line);
  ProjectivePoint<K> point(field, parse_coordinates(field, *f.point));
  bool flex = is_d_flex(form, line, point);
  std::cout << "form: " << to_string(form) << "\n";
  std::cout << "d-flex: " << (flex ? "true" : "false") << "\n";
  if (f.standardize && flex) {
    auto s = standardize(form, line, point);
    std::cout << "standardized: " << to_string(s.form) << "\n";
    std::cout << "M: " << format_matrix(field, s.change.matrix) << "\n";
    std::cout << "T: " << format_matrix(field, s.change.inverse) << "\n";
    std::cout << "scale: " << field.format(s.scale) << "\n";
  }
  return flex ? 0 : 1;
}

int cmd_flex(const FlexFlags& f) {
  if (f.moduli) {
    auto dims = moduli_dimensions(*f.moduli);
    unsigned d = dims.degree;
    std::cout << "dim V_" << d << " = " << dims.v_d << "\n";
    std::cout << "dim H_" << d << " = " << dims.h_d << "\n";
    std::cout << "codim " << dims.codimension << "\n";
    std::cout << "dim V_{" << d << ",1} = " << dims.v_d1 << "\n";
    std::cout << "dim V_{" << d << ",2} = " << dims.v_d2 << "\n";
    return 0;
  }
  return std::visit([&](const auto& k) { return flex_over(k, f); }, parse_field_spec(f.field));
}

struct GbFlags {
  std::string file;
  std::string order = "grevlex";
  std::string field = "Q";
  std::optional<std::string> vars;
};

template <CoefficientField K>
int gb_over(const K& field, const GbFlags& f, std::uint64_t budget) {
  std::ifstream in(f.file);
  if (!in) throw ParseError("cannot open ideal file '" + f.file + "'");
  auto lines = read_polynomial_lines(in);
  std::vector<std::string> names;
  if (f.vars) {
    std::stringstream ss(*f.vars);
    std::string v;
    while (std::getline(ss, v, ',')) names.push_back(v);
  } else {
    for (const auto& l : lines)
      for (auto& id : collect_identifiers(l))
        if (std::find(names.begin(), names.end(), id) == names.end()) names.push_back(id);
    std::sort(names.begin(), names.end(), [](const auto& a, const auto& b) { return natural_less(a, b); });
  }
  MonomialOrder order = f.order == "lex" ? MonomialOrder::lex() : MonomialOrder::grevlex();
  if (f.order != "lex" && f.order != "grevlex") throw ParseError("--order must be lex or grevlex");
  if (names.empty()) names.push_back("x");
  auto ring = make_ring(field, names, order);
  std::vector<Polynomial<K>> gens;
  for (const auto& l : lines) gens.push_back(parse_polynomial(ring, l));
  GroebnerOptions opts;
  opts.step_budget = budget;
  auto gb = buchberger(Ideal<K>(ring, gens), opts);
  if (gb.elements().empty()) std::cout << "0\n";
  for (const auto& g : gb.elements()) std::cout << to_string(g) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generators up to radical for Segre products of hypersurfaces"};
  app.require_subcommand(1);

  CaseFlags construct_flags, verify_flags;
  bool construct_json = false, verify_json = false;
  auto* construct = app.add_subcommand("construct", "print candidate and target generators");
  add_case_flags(construct, construct_flags, "Q");
  construct->add_flag("--json", construct_json, "JSON output");

  VerifyFlags vf;
  auto* verify = app.add_subcommand("verify", "certify a candidate: containment, radical equality, zero-locus oracle");
  add_case_flags(verify, verify_flags, "Fp:32003");
  verify->add_option("--oracle-primes", vf.oracle_primes, "comma-separated primes for the zero-locus oracle");
  verify->add_option("--budget", vf.budget, "Groebner step budget (env SEGRE_ARA_BUDGET)");
  verify->add_option("--enumeration-budget", vf.enumeration_budget, "maximum projective points per oracle run")
      ->capture_default_str();
  verify->add_option("--jobs", vf.jobs, "worker threads")->capture_default_str();
  verify->add_flag("--oracle-only", vf.oracle_only, "skip the symbolic checks");
  verify->add_flag("--self-check", vf.self_check, "re-check every Groebner basis with the S-pair criterion");
  verify->add_flag("--no-timings", vf.no_timings, "omit wall-clock timings for byte-identical output");
  verify->add_flag("--json", verify_json, "JSON report");

  FlexFlags ff;
  auto* flex = app.add_subcommand("flex", "d-flex certificate, standardization, search, moduli dimensions");
  flex->add_option("--F", ff.form, "form in x0..xn or a builtin");
  flex->add_option("--n", ff.n, "ambient dimension (default: from the form, at least 2)");
  flex->add_option("--line", ff.line, "[a,b,c] (n = 2) or [p];[q]");
  flex->add_option("--point", ff.point, "[p0,...,pn]");
  flex->add_option("--field", ff.field, "Q or Fp:<prime>")->capture_default_str();
  flex->add_flag("--standardize", ff.standardize, "print the standard-position form and the coordinate change");
  flex->add_flag("--search", ff.search, "list all d-flexes of a smooth plane curve over F_p");
  flex->add_option("--moduli-dim", ff.moduli, "print the dimension counts for degree d");
  flex->add_option("--jobs", ff.jobs, "worker threads for --search")->capture_default_str();

  GbFlags gf;
  std::uint64_t gb_budget = GroebnerOptions{}.step_budget;
  auto* gb = app.add_subcommand("gb", "reduced Groebner basis of the ideal in a file");
  gb->add_option("file", gf.file, "one polynomial per line, # comments")->required();
  gb->add_option("--order", gf.order, "lex or grevlex")->capture_default_str();
  gb->add_option("--field", gf.field, "Q or Fp:<prime>")->capture_default_str();
  gb->add_option("--vars", gf.vars, "comma-separated variable order (default: natural sort)");
  gb->add_option("--budget", gb_budget, "Groebner step budget")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*construct) return cmd_construct(construct_flags, construct_json);
    if (*verify) return cmd_verify(verify_flags, vf, verify_json);
    if (*flex) return cmd_flex(ff);
    if (*gb)
      return std::visit([&](const auto& k) { return gb_over(k, gf, gb_budget); }, parse_field_spec(gf.field));
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const LineInHypersurface& e) {
    std::cerr << "error: " << e.what() << " (infinite intersection multiplicity)\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

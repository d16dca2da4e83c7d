#include <gtest/gtest.h>

#include "segre/groebner.hpp"
#include "segre/segre.hpp"
#include "segre/text_format.hpp"

using namespace segre;

namespace {

using Q = RationalField;

Polynomial<Q> P(const RingPtr<Q>& ring, const char* text) { return parse_polynomial(ring, text); }

std::vector<std::string> texts(const std::vector<Polynomial<Q>>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(to_string(p));
  return out;
}

/// Kernel of z_ij -> x_i y_j restricted to k[z], by elimination.
Ideal<Q> segre_kernel(const SegreContext<Q>& ctx, const std::vector<Polynomial<Q>>& x_forms) {
  auto names = ctx.ring()->variable_names();
  auto xy = ctx.xy_ring();
  for (const auto& v : xy->variable_names()) names.push_back(v);
  auto big = make_ring(Q{}, names);
  const std::size_t nz = ctx.ring()->arity();
  std::vector<std::size_t> xy_shift;
  for (std::size_t i = 0; i < xy->arity(); ++i) xy_shift.push_back(nz + i);
  std::vector<Polynomial<Q>> gens;
  auto images = ctx.segre_images(xy);
  for (std::size_t k = 0; k < nz; ++k)
    gens.push_back(Polynomial<Q>::variable(big, k) - map_variables(images[k], big, xy_shift));
  for (const auto& f : x_forms) {
    std::vector<std::size_t> xmap;
    for (std::size_t i = 0; i <= ctx.n(); ++i) xmap.push_back(nz + i);
    gens.push_back(map_variables(f, big, xmap));
  }
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < nz; ++k) keep.push_back(k);
  auto elim = eliminate(Ideal<Q>(big, gens), keep);
  std::vector<std::size_t> back(big->arity(), 0);
  for (std::size_t k = 0; k < nz; ++k) back[k] = k;
  std::vector<Polynomial<Q>> out;
  for (const auto& g : elim.generators()) {
    std::vector<Term<Q>> terms;
    for (const auto& t : g.terms()) {
      std::vector<Exponent> e(t.monomial.exponents().begin(), t.monomial.exponents().begin() + static_cast<std::ptrdiff_t>(nz));
      terms.push_back({Monomial(std::span<const Exponent>(e)), t.coefficient});
    }
    out.push_back(Polynomial<Q>::from_terms(ctx.ring(), std::move(terms)));
  }
  return Ideal<Q>(ctx.ring(), out);
}

}  // namespace

TEST(SegreContext, Layout) {
  SegreContext<Q> ctx(Q{}, 2, 1);
  EXPECT_EQ(ctx.ring()->arity(), 6u);
  EXPECT_EQ(ctx.ambient_dimension(), 5u);
  EXPECT_EQ(ctx.ring()->variable_names(), (std::vector<std::string>{"z00", "z01", "z10", "z11", "z20", "z21"}));
  SegreContext<Q> big(Q{}, 10, 1);
  EXPECT_EQ(big.ring()->variable_name(big.z_index(10, 1)), "z_{10,1}");
  EXPECT_THROW(SegreContext<Q>(Q{}, 0, 1), std::invalid_argument);
}

TEST(Minor, Examples) {
  SegreContext<Q> ctx(Q{}, 2, 1);
  EXPECT_EQ(minor(ctx, 0, 1), P(ctx.ring(), "z00*z11 - z10*z01"));
  EXPECT_EQ(minor(ctx, 0, 2), P(ctx.ring(), "z00*z21 - z20*z01"));
  EXPECT_THROW(minor(ctx, 1, 1), std::out_of_range);
  EXPECT_THROW(minor(ctx, 0, 3), std::out_of_range);
  auto xy = ctx.xy_ring();
  auto images = ctx.segre_images(xy);
  for (unsigned i = 0; i <= 2; ++i)
    for (unsigned j = i + 1; j <= 2; ++j) EXPECT_TRUE(substitute(minor(ctx, i, j), images).is_zero());
}

TEST(TwoMinors, Counts) {
  EXPECT_EQ(two_minors(SegreContext<Q>(Q{}, 1, 1)).size(), 1u);
  EXPECT_EQ(two_minors(SegreContext<Q>(Q{}, 2, 1)).size(), 3u);
  EXPECT_EQ(two_minors(SegreContext<Q>(Q{}, 2, 2)).size(), 9u);
}

TEST(RankSums, Examples) {
  SegreContext<Q> ctx(Q{}, 2, 1);
  EXPECT_EQ(rank_sums(ctx, 3), (std::vector{minor(ctx, 0, 1), minor(ctx, 0, 2), minor(ctx, 1, 2)}));
  EXPECT_EQ(rank_sums(ctx, 2), (std::vector{minor(ctx, 0, 1), minor(ctx, 0, 2)}));
  SegreContext<Q> c3(Q{}, 3, 1);
  EXPECT_EQ(rank_sums(c3, 3), (std::vector{minor(c3, 0, 1), minor(c3, 0, 2), minor(c3, 0, 3) + minor(c3, 1, 2)}));
  EXPECT_THROW(rank_sums(ctx, 0), std::out_of_range);
  EXPECT_THROW(rank_sums(ctx, 4), std::out_of_range);
  EXPECT_THROW(rank_sums(SegreContext<Q>(Q{}, 2, 2), 1), std::invalid_argument);
}

TEST(Pullback, Examples) {
  SegreContext<Q> ctx(Q{}, 2, 1);
  EXPECT_EQ(pullback(fermat_form(ctx.x_ring(), 3), ctx, 0), P(ctx.ring(), "z00^3 + z10^3 + z20^3"));
  EXPECT_EQ(pullback(P(ctx.x_ring(), "5"), ctx, 1), P(ctx.ring(), "5"));
  EXPECT_EQ(pullback(P(ctx.x_ring(), "x0"), ctx, 1), P(ctx.ring(), "z01"));
  EXPECT_THROW(pullback(P(ctx.x_ring(), "x0"), ctx, 2), std::out_of_range);
  EXPECT_THROW(pullback(P(ctx.y_ring(), "y0"), ctx, 0), std::invalid_argument);
}

TEST(ReducedSegreIdeal, Examples) {
  SegreContext<Q> ctx(Q{}, 2, 1);
  auto conic = standard_conic(ctx.x_ring());
  EXPECT_EQ(reduced_segre_ideal<Q>(std::vector{conic}, {}, ctx).size(), 5u);
  EXPECT_EQ(reduced_segre_ideal<Q>({}, {}, ctx).generators(), two_minors(ctx).generators());
  SegreContext<Q> c11(Q{}, 1, 1);
  auto x0 = P(c11.x_ring(), "x0");
  EXPECT_EQ(texts(reduced_segre_ideal<Q>(std::vector{x0}, {}, c11).generators()),
            (std::vector<std::string>{"-z01*z10 + z00*z11", "z00", "z01"}));
  EXPECT_THROW(reduced_segre_ideal<Q>(std::vector{P(ctx.x_ring(), "x0 + x1^2")}, {}, ctx), std::invalid_argument);
}

TEST(SegreIdeal, MatchesEliminationKernel) {
  for (auto [n, m] : {std::pair{1u, 1u}, {2u, 1u}, {1u, 2u}, {2u, 2u}}) {
    SegreContext<Q> ctx(Q{}, n, m);
    std::vector<Polynomial<Q>> forms;
    if (n == 2) forms.push_back(standard_conic(ctx.x_ring()));
    else forms.push_back(P(ctx.x_ring(), "x0^2 + x1^2"));
    auto kernel = segre_kernel(ctx, forms);
    auto mine = segre_ideal<Q>(forms, {}, ctx);
    for (const auto& g : kernel.generators()) EXPECT_TRUE(ideal_membership(g, mine)) << n << "," << m << " " << to_string(g);
    for (const auto& g : mine.generators()) EXPECT_TRUE(ideal_membership(g, kernel)) << n << "," << m << " " << to_string(g);
    auto reduced = reduced_segre_ideal<Q>(forms, {}, ctx);
    EXPECT_TRUE(radical_equal(reduced, kernel));
  }
}

TEST(SegreIdeal, ImagesLieInBihomogeneousIdeal) {
  SegreContext<Q> ctx(Q{}, 2, 1);
  auto F = fermat_form(ctx.x_ring(), 3);
  auto xy = ctx.xy_ring();
  auto images = ctx.segre_images(xy);
  std::vector<std::size_t> xmap{0, 1, 2};
  Ideal<Q> w(xy, std::vector{map_variables(F, xy, xmap)});
  auto ideal = segre_ideal<Q>(std::vector{F}, {}, ctx);
  for (const auto& g : ideal.generators())
    EXPECT_TRUE(ideal_membership(substitute(g, images), w)) << to_string(g);
}

TEST(FlexCandidate, Examples) {
  SegreContext<Q> ctx(Q{}, 2, 1);
  auto c = theorem10_candidate(standard_position_form(ctx.x_ring(), 3), ctx);
  EXPECT_EQ(c.generators.size(), 4u);
  EXPECT_EQ(c.expected_count, 4u);
  auto conic = P(ctx.x_ring(), "x1^2 + x0*x2");
  EXPECT_EQ(theorem10_candidate(conic, ctx).generators.size(), 4u);
  try {
    theorem10_candidate(P(ctx.x_ring(), "x0^3 + x2^3"), ctx);
    FAIL() << "expected a standard-position error";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("x2^3"), std::string::npos) << e.what();
  }
  EXPECT_THROW(theorem10_candidate(P(ctx.x_ring(), "x0^3 + x0*x2^2"), ctx), std::invalid_argument);
}

TEST(QuadricCandidate, Examples) {
  SegreContext<Q> c3(Q{}, 3, 1);
  EXPECT_EQ(theorem45_candidate(P(c3.x_ring(), "x3^2 + x0*x1"), c3).generators.size(), 5u);
  SegreContext<Q> c4(Q{}, 4, 1);
  EXPECT_EQ(theorem45_candidate(P(c4.x_ring(), "x4^2 + x0*x1 + x1*x2"), c4).generators.size(), 7u);
  EXPECT_EQ(theorem45_candidate(P(c4.x_ring(), "x4^3"), c4).generators.size(), 7u);
  EXPECT_THROW(theorem45_candidate(P(c3.x_ring(), "x3^2 + x1*x2"), c3), std::invalid_argument);
}

TEST(Conic, Examples) {
  auto x = make_ring(Q{}, indexed_names("x", 3));
  auto c = conic_candidate(standard_conic(x), 1);
  ASSERT_EQ(c.generators.size(), 3u);
  EXPECT_EQ(c.generators[2], P(c.context.ring(), "z21*z00 - 2*z11*z10 + z01*z20"));
  EXPECT_EQ(conic_candidate(standard_conic(x), 2).generators.size(), 6u);
  EXPECT_THROW(conic_candidate(standard_conic(make_ring(PrimeField(2), indexed_names("x", 3))), 1), CharacteristicError);
  EXPECT_THROW(conic_candidate(fermat_form(x, 3), 1), std::invalid_argument);
  EXPECT_THROW(conic_candidate(P(make_ring(Q{}, indexed_names("x", 4)), "x0*x1"), 1), std::invalid_argument);
}

TEST(Conic, ReadingOfTheTangentIndex) {
  // The literal z_{jk} reading is only defined for m >= 2; for m = 2 it fails exact containment,
  // while the z_{kj} reading is contained in the Segre ideal.
  auto x = make_ring(Q{}, indexed_names("x", 3));
  auto c = conic_candidate(standard_conic(x), 2);
  auto gb = buchberger(c.segre);
  for (const auto& g : c.generators) EXPECT_TRUE(gb.contains(g)) << to_string(g);
  const auto& ctx = c.context;
  auto f = *c.form;
  auto literal = [&](unsigned i, unsigned j) {
    Polynomial<Q> s(ctx.ring());
    for (unsigned k = 0; k <= 2; ++k) s = s + pullback(f.partial_derivative(k), ctx, i) * ctx.z(j, k);
    return s;
  };
  EXPECT_FALSE(gb.contains(literal(1, 0)));
}

TEST(Diagonal, Examples) {
  auto c1 = diagonal_candidate(Q{}, 1);
  ASSERT_EQ(c1.generators.size(), 1u);
  EXPECT_EQ(c1.generators[0], P(c1.context.ring(), "z01 - z10"));
  auto c2 = diagonal_candidate(Q{}, 2);
  EXPECT_EQ(texts(c2.generators), (std::vector<std::string>{"z01 - z10", "z02 - z20", "z12 - z21"}));
  auto xy = c2.context.xy_ring();
  auto images = c2.context.segre_images(xy);
  EXPECT_EQ(substitute(c2.generators[1], images), parse_polynomial(xy, "x0*y2 - x2*y0"));
}

TEST(Candidates, CountsAndHomogeneity) {
  for (unsigned n = 2; n <= 6; ++n) {
    SegreContext<Q> ctx(Q{}, n, 1);
    EXPECT_EQ(remark9_candidate(fermat_form(ctx.x_ring(), 3), ctx).generators.size(), 2 * n + 1);
    EXPECT_EQ(theorem10_candidate(standard_position_form(ctx.x_ring(), 3), ctx).generators.size(), 2 * n);
    EXPECT_EQ(theorem45_candidate(theorem45_form(ctx.x_ring(), 2), ctx).generators.size(), 2 * n - 1);
    auto d = diagonal_candidate(Q{}, n);
    EXPECT_EQ(d.generators.size(), 2 * n - 1);
    for (const auto& g : d.generators) EXPECT_TRUE(g.homogeneity().homogeneous);
  }
  auto x = make_ring(Q{}, indexed_names("x", 3));
  for (unsigned m = 1; m <= 4; ++m) {
    auto c = conic_candidate(standard_conic(x), m);
    EXPECT_EQ(c.generators.size(), 3 * m);
    for (const auto& g : c.generators) EXPECT_TRUE(g.homogeneity().homogeneous);
  }
}

TEST(Candidates, ChangeFieldRespectsGuards) {
  auto x = make_ring(Q{}, indexed_names("x", 3));
  auto c = conic_candidate(standard_conic(x), 1);
  EXPECT_THROW(change_field(c, PrimeField(2)), CharacteristicError);
  auto f3 = change_field(c, PrimeField(3));
  EXPECT_EQ(f3.generators.size(), 3u);
  EXPECT_EQ(f3.context.field().modulus(), 3u);
}

TEST(CaseKind, Names) {
  EXPECT_EQ(parse_case_kind("theorem45"), CaseKind::theorem45);
  EXPECT_EQ(case_kind_name(CaseKind::diagonal), "diagonal");
  EXPECT_THROW(parse_case_kind("theorem11"), ParseError);
}

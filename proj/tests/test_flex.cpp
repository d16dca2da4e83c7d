#include <gtest/gtest.h>

#include "segre/cases.hpp"
#include "segre/flex.hpp"
#include "segre/text_format.hpp"

using namespace segre;

namespace {

using Q = RationalField;

template <CoefficientField K>
ProjectivePoint<K> pt(const K& k, std::vector<long> c) {
  std::vector<typename K::Element> e;
  for (auto v : c) e.push_back(k.from_int(v));
  return ProjectivePoint<K>(k, e);
}

template <CoefficientField K>
ProjectiveLine<K> line(const K& k, std::vector<long> a, std::vector<long> b) {
  return ProjectiveLine<K>(k, pt(k, a), pt(k, b));
}

template <CoefficientField K>
RingPtr<K> xring(const K& k, std::size_t vars = 3) {
  return make_ring(k, indexed_names("x", vars));
}

/// F(M x') with M = T^{-1}: checks F' o T = c F by substituting x' = T x.
template <CoefficientField K>
void expect_change_correct(const Polynomial<K>& F, const StandardForm<K>& s) {
  auto back = apply_linear_change(s.form, s.change.inverse);
  EXPECT_EQ(back, F.scale(s.scale));
  EXPECT_FALSE(F.field().is_zero(s.scale));
}

}  // namespace

TEST(ProjectivePoint, Canonical) {
  Q q;
  EXPECT_EQ(pt(q, {0, 2, -4}), pt(q, {0, 1, -2}));
  EXPECT_EQ(pt(q, {0, 2, -4}).to_string(q), "[0,1,-2]");
  EXPECT_THROW(pt(q, {0, 0, 0}), std::invalid_argument);
  EXPECT_THROW(line(q, {1, 0, 0}, {2, 0, 0}), std::invalid_argument);
}

TEST(RestrictToLine, Examples) {
  Q q;
  auto r = xring(q);
  auto st = binary_ring(q);
  EXPECT_EQ(restrict_to_line(fermat_form(r, 3), line(q, {1, -1, 0}, {0, 0, 1})), parse_polynomial(st, "t^3"));
  EXPECT_TRUE(restrict_to_line(parse_polynomial(r, "x0"), line(q, {0, 1, 0}, {0, 0, 1})).is_zero());
  EXPECT_EQ(restrict_to_line(standard_conic(r), line(q, {1, 0, 0}, {0, 0, 1})), parse_polynomial(st, "s*t"));
  EXPECT_THROW(restrict_to_line(parse_polynomial(xring(q, 4), "x0"), line(q, {1, 0, 0}, {0, 0, 1})), std::invalid_argument);
}

TEST(IsDFlex, Examples) {
  Q q;
  auto r = xring(q);
  auto fermat = fermat_form(r, 3);
  auto L = ProjectiveLine<Q>::from_dual(q, {Rational(1), Rational(1), Rational(0)});
  EXPECT_TRUE(is_d_flex(fermat, L, pt(q, {-1, 1, 0})));
  auto conic = standard_conic(r);
  auto tangent = ProjectiveLine<Q>::from_dual(q, {Rational(0), Rational(0), Rational(1)});
  EXPECT_TRUE(is_d_flex(conic, tangent, pt(q, {1, 0, 0})));
  auto secant = ProjectiveLine<Q>::from_dual(q, {Rational(0), Rational(1), Rational(0)});
  EXPECT_FALSE(is_d_flex(conic, secant, pt(q, {1, 0, 0})));
}

TEST(IsDFlex, Errors) {
  Q q;
  auto r = xring(q);
  auto conic = standard_conic(r);
  auto tangent = ProjectiveLine<Q>::from_dual(q, {Rational(0), Rational(0), Rational(1)});
  EXPECT_THROW(is_d_flex(conic, tangent, pt(q, {0, 0, 1})), std::invalid_argument);   // not on L
  EXPECT_THROW(is_d_flex(conic, tangent, pt(q, {1, 1, 0})), std::invalid_argument);   // not on V(F)
  auto in = ProjectiveLine<Q>::from_dual(q, {Rational(1), Rational(0), Rational(0)});
  EXPECT_THROW(is_d_flex(parse_polynomial(r, "x0*x1"), in, pt(q, {0, 1, 0})), LineInHypersurface);
}

TEST(IsDFlex, SignOfTheFermatLine) {
  // [alpha,1,0] with alpha = -1 lies on x0 + x1 = 0; the line x0 - x1 = 0 does not contain it.
  Q q;
  auto fermat = fermat_form(xring(q), 3);
  auto wrong = ProjectiveLine<Q>::from_dual(q, {Rational(1), Rational(-1), Rational(0)});
  EXPECT_FALSE(wrong.contains(q, pt(q, {-1, 1, 0})));
  EXPECT_THROW(is_d_flex(fermat, wrong, pt(q, {-1, 1, 0})), std::invalid_argument);
}

TEST(IsDFlex, FiniteFieldRootsMatch) {
  PrimeField f(7);
  auto fermat = fermat_form(xring(f), 3);
  auto L = ProjectiveLine<PrimeField>::from_dual(f, {f.one(), f.one(), f.zero()});
  auto P = pt(f, {-1, 1, 0});
  ASSERT_TRUE(is_d_flex(fermat, L, P));
  auto zeros = line_zeros(fermat, L);
  ASSERT_EQ(zeros.size(), 1u);
  EXPECT_EQ(zeros.front(), P);
}

TEST(Standardize, AlreadyStandard) {
  Q q;
  auto r = xring(q);
  auto F = standard_position_form(r, 3);
  auto s = standardize(F, line(q, {0, 1, 0}, {0, 0, 1}), pt(q, {0, 0, 1}));
  EXPECT_EQ(s.form, F);
  EXPECT_EQ(s.change.matrix, identity_matrix(q, 3));
  expect_change_correct(F, s);
}

TEST(Standardize, FermatCubic) {
  Q q;
  auto r = xring(q);
  auto F = fermat_form(r, 3);
  auto L = ProjectiveLine<Q>::from_dual(q, {Rational(1), Rational(1), Rational(0)});
  auto s = standardize(F, L, pt(q, {-1, 1, 0}));
  EXPECT_NO_THROW(check_flex_standard_position(s.form, 2));
  auto x1cubed = Monomial{0, 3, 0};
  EXPECT_FALSE(s.form.coefficient(x1cubed).is_zero());
  for (const auto& t : s.form.terms())
    if (t.monomial[0] == 0) {
      EXPECT_EQ(t.monomial, x1cubed) << to_string(s.form);
    }
  expect_change_correct(F, s);
}

TEST(Standardize, ConicTangent) {
  Q q;
  auto r = xring(q);
  auto F = standard_conic(r);
  auto tangent = ProjectiveLine<Q>::from_dual(q, {Rational(0), Rational(0), Rational(1)});
  auto s = standardize(F, tangent, pt(q, {1, 0, 0}));
  EXPECT_FALSE(s.form.coefficient(Monomial{0, 2, 0}).is_zero());
  EXPECT_NO_THROW(check_flex_standard_position(s.form, 2));
  expect_change_correct(F, s);
  EXPECT_THROW(standardize(F, ProjectiveLine<Q>::from_dual(q, {Rational(0), Rational(1), Rational(0)}), pt(q, {1, 0, 0})),
               std::invalid_argument);
}

TEST(Standardize, HigherDimensionFermat) {
  Q q;
  for (unsigned n = 3; n <= 4; ++n) {
    auto r = xring(q, n + 1);
    auto F = fermat_form(r, 3);
    auto [L, P] = fermat_flex(n, 3);
    auto s = standardize(F, L, P);
    EXPECT_NO_THROW(check_flex_standard_position(s.form, n));
    expect_change_correct(F, s);
  }
}

TEST(Standardize, RoundTripOverFiniteField) {
  PrimeField f(7);
  auto F = fermat_form(xring(f), 3);
  for (const auto& fp : find_d_flexes_bruteforce(F)) {
    auto s = standardize(F, fp.line, fp.point);
    EXPECT_NO_THROW(check_flex_standard_position(s.form, 2));
    expect_change_correct(F, s);
  }
}

TEST(FlexSearch, FermatCubicOverF7) {
  PrimeField f(7);
  auto F = fermat_form(xring(f), 3);
  auto found = find_d_flexes_bruteforce(F);
  ASSERT_FALSE(found.empty());
  auto P = pt(f, {-1, 1, 0});
  auto dual = pt(f, {1, 1, 0});
  bool seen = false;
  for (const auto& fp : found)
    if (fp.point == P && fp.line.dual() && *fp.line.dual() == dual) seen = true;
  EXPECT_TRUE(seen);
  EXPECT_EQ(find_d_flexes_bruteforce(F, 4).size(), found.size());
}

TEST(FlexSearch, ConicTangents) {
  PrimeField f(5);
  auto found = find_d_flexes_bruteforce(standard_conic(xring(f)));
  EXPECT_EQ(found.size(), 6u);
}

TEST(FlexSearch, RejectsDegenerateInput) {
  PrimeField f(5);
  auto r = xring(f);
  EXPECT_THROW(find_d_flexes_bruteforce(parse_polynomial(r, "x0^3")), std::invalid_argument);
  EXPECT_THROW(find_d_flexes_bruteforce(fermat_form(xring(f, 4), 3)), std::invalid_argument);
  EXPECT_FALSE(singular_points(parse_polynomial(r, "x0^3")).empty());
  EXPECT_TRUE(singular_points(fermat_form(r, 3)).empty());
}

TEST(Moduli, Examples) {
  EXPECT_EQ(moduli_dim(3, 1), 1);
  auto d4 = moduli_dimensions(4);
  EXPECT_EQ(d4.v_d, 5);
  EXPECT_EQ(d4.h_d, 6);
  EXPECT_EQ(d4.codimension, 1);
  EXPECT_EQ(moduli_dimensions(3).codimension, 0);
  EXPECT_THROW(moduli_dim(2, 1), std::invalid_argument);
  EXPECT_THROW(moduli_dim(5, 3), std::invalid_argument);
}

TEST(Moduli, CodimensionIdentity) {
  for (unsigned d = 3; d <= 12; ++d) EXPECT_EQ(moduli_dimensions(d).codimension, static_cast<long>(d) - 3);
}

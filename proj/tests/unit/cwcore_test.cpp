#include <gtest/gtest.h>

#include <algorithm>

#include "cw/error.hpp"
#include "cw/exact/number_theory.hpp"
#include "cw/orbifold/chevalley_weil.hpp"

using namespace cw::orbifold;
using cw::Error;
using cw::ErrorKind;
using cw::exact::make_rational;

namespace {

EigenvalueProfile exps(std::uint32_t order, std::vector<std::int64_t> e) {
  return EigenvalueProfile::from_exponents(order, e);
}

template <typename F>
ErrorKind error_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no cw::Error thrown";
  return ErrorKind::Parse;
}

// Double cover of P^1 branched at six points: a genus-2 hyperelliptic curve.
CoverSpec hyperelliptic() {
  CoverSpec c;
  c.base = {0, {}};
  for (int i = 0; i < 6; ++i) c.ramification.push_back({2, "g" + std::to_string(i)});
  c.group_order = 2;
  return c;
}

RepInput c2_rep(bool sign) {
  RepInput r{sign ? "sign" : "trivial", 1, !sign, {}, {}};
  for (int i = 0; i < 6; ++i) r.ram_profiles.push_back(exps(2, {sign ? 1 : 0}));
  return r;
}

// Cyclic cover of P^1 with group C6 and monodromies g^3, g^2, g (genus 1).
CoverSpec c6_cover(const std::vector<std::int64_t>& degrees) {
  CoverSpec c;
  c.base = {0, {}};
  for (auto e : degrees) c.ramification.push_back({e, "deg" + std::to_string(e)});
  c.group_order = 6;
  return c;
}

std::vector<RepInput> c6_reps(const std::vector<std::int64_t>& degrees) {
  std::vector<RepInput> out;
  for (std::int64_t j = 0; j < 6; ++j) {
    RepInput r{"chi" + std::to_string(j), 1, j == 0, {}, {}};
    for (auto e : degrees) r.ram_profiles.push_back(exps(static_cast<std::uint32_t>(e), {j % e}));
    out.push_back(std::move(r));
  }
  return out;
}

CoverSpec x1_cover(std::int64_t e) {
  CoverSpec c;
  c.base = {0, {2, 3}};
  c.orbifold_monodromies = {"S", "R^-1"};
  c.ramification.push_back({e, "T"});
  return c;
}

}  // namespace

TEST(CanonicalDegree, Examples) {
  EXPECT_EQ(canonical_degree({0, {2, 3}}), make_rational(-5, 6));
  EXPECT_EQ(canonical_degree({2, {}}), make_rational(2));
  EXPECT_EQ(canonical_degree({0, {}}), make_rational(-2));
  EXPECT_EQ(canonical_degree({1, {2, 2, 2}}), make_rational(3, 2));
  EXPECT_EQ(error_kind([] { canonical_degree({0, {1}}); }), ErrorKind::Precondition);
  EXPECT_EQ(error_kind([] { canonical_degree({-1, {}}); }), ErrorKind::Precondition);
}

TEST(IsotropyTrace, Examples) {
  EXPECT_EQ(isotropy_trace(EigenvalueProfile(3, {1, 0, 0})), 0);
  EXPECT_EQ(isotropy_trace(EigenvalueProfile(3, {0, 1, 1})), 3);
  EXPECT_EQ(isotropy_trace(exps(14, {5, 8, 1})), 14);
}

TEST(RiemannRoch, Examples) {
  const OrbifoldCurve x1{0, {2, 3}};
  const std::vector<std::int64_t> traces{1, 2};
  EXPECT_EQ(riemann_roch_chi(2, make_rational(3), x1, traces), make_rational(23, 6));
  EXPECT_EQ(riemann_roch_chi(1, make_rational(0), {1, {}}, {}), make_rational(0));
  EXPECT_EQ(riemann_roch_chi(3, make_rational(-1), {2, {}}, {}), make_rational(-4));
  EXPECT_EQ(error_kind([&] { riemann_roch_chi(1, 0, x1, {}); }), ErrorKind::Precondition);
}

TEST(CwTerms, KleinQuarticSummands) {
  // The three-dimensional representation with T-eigenvalues z7, z7^2, z7^4,
  // Tr S = -1 and Tr R = 0.
  const RepInput rep{"gamma_2", 3, false, {exps(7, {1, 2, 4})}, {EigenvalueProfile(2, {1, 2}), EigenvalueProfile(3, {1, 1, 1})}};
  const auto t = cw_terms(x1_cover(7), rep);
  EXPECT_EQ(t.epsilon, 0);
  EXPECT_EQ(t.euler_base, make_rational(1, 2));
  EXPECT_EQ(t.ramification_rank, 3);
  EXPECT_EQ(t.parabolic_degree, -1);
  ASSERT_EQ(t.isotropy.size(), 2U);
  EXPECT_EQ(t.isotropy[0], make_rational(-1, 2));
  EXPECT_EQ(t.isotropy[1], -1);
  EXPECT_EQ(t.total(), 1);
  EXPECT_EQ(cw_multiplicity_general(x1_cover(7), rep), 1);
}

TEST(CwTerms, TwistDirection) {
  // The eigenvalue 1 of S contributes -1/2 and the eigenvalue 1 of R^-1
  // contributes -2/3; the eigenvalues -1 and zeta3 contribute nothing.
  const RepInput plus{"a", 1, false, {exps(6, {0})}, {exps(2, {0}), exps(3, {0})}};
  const auto t = cw_terms(x1_cover(6), plus);
  EXPECT_EQ(t.isotropy[0], make_rational(-1, 2));
  EXPECT_EQ(t.isotropy[1], make_rational(-2, 3));
  const RepInput minus{"b", 1, false, {exps(6, {0})}, {exps(2, {1}), exps(3, {1})}};
  const auto u = cw_terms(x1_cover(6), minus);
  EXPECT_EQ(u.isotropy[0], 0);
  EXPECT_EQ(u.isotropy[1], 0);
}

TEST(Multiplicity, ClassicalHyperelliptic) {
  const auto cover = hyperelliptic();
  EXPECT_EQ(cw_multiplicity_general(cover, c2_rep(true)), 2);
  EXPECT_EQ(cw_multiplicity_general(cover, c2_rep(false)), 0);
  const std::vector<RepInput> reps{c2_rep(false), c2_rep(true)};
  const auto d = decompose(cover, reps, 2);
  ASSERT_TRUE(d.certificate.has_value());
  EXPECT_EQ(d.certificate->computed, 2);
  EXPECT_EQ(error_kind([&] { decompose(cover, reps, 3); }), ErrorKind::GenusMismatch);
}

TEST(Multiplicity, TrivialRepEqualsBaseGenus) {
  for (std::int64_t g = 0; g <= 4; ++g) {
    CoverSpec c;
    c.base = {g, {}};
    c.ramification = {{2, "a"}, {2, "b"}};
    const RepInput trivial{"1", 1, true, {exps(2, {0}), exps(2, {0})}, {}};
    EXPECT_EQ(cw_multiplicity_general(c, trivial), g);
  }
}

TEST(Multiplicity, TrivialRepVanishesOverX1) {
  for (std::int64_t e = 2; e <= 60; ++e) {
    const RepInput trivial{"1", 1, true, {exps(static_cast<std::uint32_t>(e), {0})}, {exps(2, {0}), exps(3, {0})}};
    EXPECT_EQ(cw_multiplicity_general(x1_cover(e), trivial), 0) << e;
  }
}

TEST(Multiplicity, CyclicGenusOneCover) {
  const std::vector<std::int64_t> degrees{2, 3, 6};
  const auto reps = c6_reps(degrees);
  const auto d = decompose(c6_cover(degrees), reps, 1);
  for (const auto& e : d.entries) EXPECT_EQ(e.multiplicity, e.id == "chi1" ? 1 : 0) << e.id;
}

TEST(Multiplicity, RamificationOrderIsIrrelevant) {
  std::vector<std::int64_t> degrees{2, 3, 6};
  const auto reference = decompose(c6_cover(degrees), c6_reps(degrees), 1);
  std::sort(degrees.begin(), degrees.end());
  do {
    const auto d = decompose(c6_cover(degrees), c6_reps(degrees), 1);
    for (std::size_t i = 0; i < d.entries.size(); ++i) {
      EXPECT_EQ(d.entries[i].multiplicity, reference.entries[i].multiplicity);
    }
  } while (std::next_permutation(degrees.begin(), degrees.end()));
}

TEST(Multiplicity, InconsistentInput) {
  CoverSpec one_point;
  one_point.base = {0, {}};
  one_point.ramification = {{2, "g"}};
  const RepInput sign{"sign", 1, false, {exps(2, {1})}, {}};
  EXPECT_EQ(error_kind([&] { cw_multiplicity_general(one_point, sign); }), ErrorKind::NonIntegral);

  CoverSpec unramified;
  unramified.base = {0, {}};
  const RepInput bare{"sign", 1, false, {}, {}};
  EXPECT_EQ(error_kind([&] { cw_multiplicity_general(unramified, bare); }), ErrorKind::Negative);

  EXPECT_EQ(error_kind([&] { cw_terms(one_point, bare); }), ErrorKind::Precondition);
  const RepInput wrong_order{"x", 1, false, {exps(3, {1})}, {}};
  EXPECT_EQ(error_kind([&] { cw_terms(one_point, wrong_order); }), ErrorKind::Precondition);
  const RepInput wrong_dim{"x", 2, false, {exps(2, {1})}, {}};
  EXPECT_EQ(error_kind([&] { cw_terms(one_point, wrong_dim); }), ErrorKind::Precondition);

  CoverSpec bad_order = one_point;
  bad_order.group_order = 3;
  EXPECT_EQ(error_kind([&] { bad_order.validate(); }), ErrorKind::Precondition);
  CoverSpec missing_label;
  missing_label.base = {0, {2}};
  EXPECT_EQ(error_kind([&] { missing_label.validate(); }), ErrorKind::Precondition);
}

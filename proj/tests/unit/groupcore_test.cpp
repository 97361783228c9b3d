#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "cw/error.hpp"
#include "cw/group/character_table.hpp"
#include "cw/group/element.hpp"
#include "cw/group/finite_group.hpp"
#include "cw/group/profile.hpp"

using namespace cw::group;
using cw::exact::Cyclotomic;

namespace {

std::vector<GroupElement> st_generators(std::uint32_t m, bool projective) {
  return {ModMatrix::make(0, -1, 1, 0, m, projective), ModMatrix::make(1, 1, 0, 1, m, projective)};
}

FiniteGroup psl2(std::uint32_t p) { return FiniteGroup::generate(st_generators(p, true)); }

FiniteGroup fermat_group(std::uint32_t n) {
  const std::vector<GroupElement> gens{SemidirectElement::make(0, 0, s3::kSwap, n),
                                       SemidirectElement::make(0, -1, s3::kSwapRotation, n)};
  return FiniteGroup::generate(gens);
}

std::multiset<std::int64_t> dims(const CharacterTable& t) { return {t.dimensions.begin(), t.dimensions.end()}; }

void expect_profiles_integral(const FiniteGroup& g, const CharacterTable& t) {
  for (const auto& c : t.classes()) {
    for (std::size_t row = 0; row < t.characters.size(); ++row) {
      const auto values = t.values_on_powers(g, row, c.representative);
      const auto profile = nk_profile(values, t.dimensions[row]);
      EXPECT_EQ(profile.dim(), t.dimensions[row]);
    }
  }
}

}  // namespace

TEST(GroupElement, S3TableIsAGroup) {
  for (int a = 0; a < 6; ++a) {
    EXPECT_EQ(s3::multiply(a, s3::inverse(a)), s3::kIdentity);
    for (int b = 0; b < 6; ++b) {
      for (int c = 0; c < 6; ++c) EXPECT_EQ(s3::multiply(s3::multiply(a, b), c), s3::multiply(a, s3::multiply(b, c)));
    }
  }
  EXPECT_EQ(s3::multiply(s3::kRotation, s3::kRotationSquared), s3::kIdentity);
  EXPECT_EQ(s3::multiply(s3::kSwap, s3::kRotation), s3::kSwapRotation);
  EXPECT_EQ(s3::multiply(s3::kRotation, s3::kSwap), s3::kRotationSwap);
}

TEST(GroupElement, ProjectiveCanonicalSign) {
  const auto a = ModMatrix::make(1, 1, 0, 1, 7, true);
  const auto b = ModMatrix::make(-1, -1, 0, -1, 7, true);
  EXPECT_EQ(a, b);
  EXPECT_NE(ModMatrix::make(1, 1, 0, 1, 7, false), ModMatrix::make(-1, -1, 0, -1, 7, false));
  EXPECT_THROW(ModMatrix::make(2, 0, 0, 2, 7, false), cw::Error);
}

TEST(GroupElement, InverseAndMixedKinds) {
  const GroupElement m = ModMatrix::make(2, 3, 1, 2, 11, false);
  EXPECT_EQ(multiply(m, inverse(m)), identity_like(m));
  const GroupElement s = SemidirectElement::make(2, 5, s3::kRotationSwap, 7);
  EXPECT_EQ(multiply(inverse(s), s), identity_like(s));
  const GroupElement p = Permutation{{2, 0, 1, 3}};
  EXPECT_EQ(multiply(p, inverse(p)), identity_like(p));
  EXPECT_THROW(multiply(m, s), cw::Error);
  EXPECT_THROW(multiply(m, ModMatrix::make(1, 0, 0, 1, 13, false)), cw::Error);
}

TEST(FiniteGroup, NamedOrders) {
  EXPECT_EQ(psl2(7).order(), 168U);
  EXPECT_EQ(FiniteGroup::generate(st_generators(8, false)).order(), 384U);
  EXPECT_EQ(FiniteGroup::generate(st_generators(8, true)).order(), 192U);
  for (std::uint32_t p : {5U, 11U, 13U}) EXPECT_EQ(psl2(p).order(), p * (p * p - 1) / 2);
  const std::vector<GroupElement> id{ModMatrix::make(1, 0, 0, 1, 5, false)};
  EXPECT_EQ(FiniteGroup::generate(id).order(), 1U);
  for (std::uint32_t n = 2; n <= 8; ++n) EXPECT_EQ(fermat_group(n).order(), 6 * n * n);
}

TEST(FiniteGroup, SizeCapAndPreconditions) {
  try {
    (void)FiniteGroup::generate(st_generators(13, true), 1000);
    ADD_FAILURE();
  } catch (const cw::Error& e) {
    EXPECT_EQ(e.kind(), cw::ErrorKind::SizeBound);
  }
  EXPECT_THROW((void)FiniteGroup::generate(std::vector<GroupElement>{}), cw::Error);
}

TEST(FiniteGroup, GeneratorOrderDoesNotMatter) {
  auto gens = st_generators(7, true);
  gens.push_back(ModMatrix::make(0, -1, 1, 1, 7, true));
  const auto a = FiniteGroup::generate(gens);
  std::reverse(gens.begin(), gens.end());
  const auto b = FiniteGroup::generate(gens);
  ASSERT_EQ(a.order(), b.order());
  for (const auto& x : a.elements()) EXPECT_TRUE(b.find(x).has_value());
}

TEST(FiniteGroup, IdentityInversesAndPowers) {
  const auto g = psl2(7);
  EXPECT_EQ(g.index_of(identity_like(g.element(1))), 0U);
  EXPECT_EQ(g.exponent(), 84U);
  for (std::size_t i = 0; i < g.order(); ++i) {
    EXPECT_EQ(g.multiply(i, g.inverse(i)), 0U);
    EXPECT_EQ(g.power(i, static_cast<std::int64_t>(g.element_order(i))), 0U);
    EXPECT_EQ(g.power(i, -1), g.inverse(i));
  }
}

TEST(ConjugacyClasses, PartitionProperties) {
  const auto g = psl2(7);
  const auto part = conjugacy_classes(g);
  EXPECT_EQ(part.classes.size(), 6U);
  std::size_t total = 0;
  for (const auto& c : part.classes) {
    EXPECT_EQ(g.order() % c.size, 0U);
    EXPECT_EQ(part.class_of[c.representative], static_cast<std::size_t>(&c - part.classes.data()));
    total += c.size;
  }
  EXPECT_EQ(total, g.order());
  // Representatives are the least index in each class.
  for (std::size_t i = 0; i < g.order(); ++i) EXPECT_LE(part.classes[part.class_of[i]].representative, i);

  const std::vector<GroupElement> id{Permutation{{0, 1, 2}}};
  EXPECT_EQ(conjugacy_classes(FiniteGroup::generate(id)).classes.size(), 1U);
}

TEST(Dixon, CyclicThree) {
  const std::vector<GroupElement> gen{Permutation{{1, 2, 0}}};
  const auto g = FiniteGroup::generate(gen);
  const auto t = character_table_dixon(g);
  ASSERT_EQ(t.characters.size(), 3U);
  const auto r = g.index_of(gen[0]);
  std::set<std::string> seen;
  for (std::size_t row = 0; row < 3; ++row) {
    const auto values = t.values_on_powers(g, row, r);
    ASSERT_EQ(values.size(), 3U);
    EXPECT_EQ(values[2], values[1] * values[1]);
    EXPECT_EQ(values[1].pow(3), Cyclotomic(1));
    seen.insert(values[1].to_string());
  }
  EXPECT_EQ(seen, (std::set<std::string>{"1", "z3", "-1 - z3"}));
}

TEST(Dixon, TrivialGroup) {
  const std::vector<GroupElement> id{ModMatrix::make(1, 0, 0, 1, 3, false)};
  const auto t = character_table_dixon(FiniteGroup::generate(id));
  EXPECT_EQ(t.dimensions, (std::vector<std::int64_t>{1}));
  EXPECT_TRUE(verify_orthogonality(t).passed());
}

TEST(Dixon, Psl2Dimensions) {
  EXPECT_EQ(dims(character_table_dixon(psl2(5))), (std::multiset<std::int64_t>{1, 3, 3, 4, 5}));
  EXPECT_EQ(dims(character_table_dixon(psl2(7))), (std::multiset<std::int64_t>{1, 3, 3, 6, 7, 8}));
}

TEST(Dixon, CorpusTablesAreConsistent) {
  std::vector<FiniteGroup> corpus;
  for (std::uint32_t p : {5U, 7U, 11U, 13U}) corpus.push_back(psl2(p));
  corpus.push_back(FiniteGroup::generate(st_generators(8, true)));
  for (std::uint32_t n = 3; n <= 8; ++n) corpus.push_back(fermat_group(n));
  for (const auto& g : corpus) {
    const auto t = character_table_dixon(g);
    const auto report = verify_orthogonality(t);
    EXPECT_TRUE(report.passed()) << "order " << g.order();
    EXPECT_EQ(t.characters.size(), t.classes().size());
    for (std::size_t i = 0; i < t.characters.size(); ++i) EXPECT_EQ(t.characters[i][0], Cyclotomic(t.dimensions[i]));
    EXPECT_TRUE(std::is_sorted(t.dimensions.begin(), t.dimensions.end()));
    expect_profiles_integral(g, t);
  }
}

TEST(Dixon, PerturbationIsDetected) {
  auto t = character_table_dixon(psl2(5));
  ASSERT_TRUE(verify_orthogonality(t).passed());
  t.characters[2][1] += Cyclotomic(1);
  const auto report = verify_orthogonality(t);
  EXPECT_FALSE(report.passed());
  const auto bad = std::find_if(report.rows.begin(), report.rows.end(), [](const PairCheck& p) { return !p.passed; });
  ASSERT_NE(bad, report.rows.end());
  EXPECT_TRUE(bad->first == 2 || bad->second == 2);
}

TEST(Dixon, FermatClassCountMatchesIrreducibles) {
  // (Z/3)^2 x| S3: three S3-fixed characters of (Z/3)^2 contribute three
  // irreducibles each and the remaining free orbit of six contributes one.
  const auto g = fermat_group(3);
  EXPECT_EQ(conjugacy_classes(g).classes.size(), 10U);
  EXPECT_EQ(character_table_dixon(g).characters.size(), 10U);
}

TEST(Profile, UnipotentProfilesOfPsl2) {
  for (std::uint32_t p : {7U, 13U}) {
    const auto g = psl2(p);
    const auto t = character_table_dixon(g);
    const auto tt = g.index_of(ModMatrix::make(1, 1, 0, 1, p, true));
    std::set<std::int64_t> squares;
    for (std::int64_t x = 1; x < p; ++x) squares.insert(x * x % p);
    std::vector<std::int64_t> qr(p, 0), qnr(p, 0), all(p, 1);
    for (std::uint32_t k = 1; k < p; ++k) (squares.count(k) ? qr : qnr)[k] = 1;
    std::set<std::vector<std::int64_t>> half_dim;
    for (std::size_t row = 0; row < t.characters.size(); ++row) {
      const auto prof = nk_profile(t.values_on_powers(g, row, tt), t.dimensions[row]);
      const std::vector<std::int64_t> counts(prof.counts().begin(), prof.counts().end());
      if (t.dimensions[row] == static_cast<std::int64_t>(p)) EXPECT_EQ(counts, all);
      if (t.dimensions[row] == static_cast<std::int64_t>((p - 1) / 2)) half_dim.insert(counts);
      if (t.dimensions[row] == static_cast<std::int64_t>((p + 1) / 2)) {
        EXPECT_EQ(prof.count(0), 1);
      }
    }
    if (p % 4 == 3) EXPECT_EQ(half_dim, (std::set<std::vector<std::int64_t>>{qr, qnr}));
  }
}

TEST(Profile, NkOfTrivialAndErrors) {
  const std::vector<Cyclotomic> trivial{1, 1, 1};
  EXPECT_EQ(nk_profile(trivial, 1), EigenvalueProfile(3, {1, 0, 0}));
  const std::vector<Cyclotomic> bad{2, Cyclotomic(cw::exact::make_rational(1, 2)), 0};
  EXPECT_THROW((void)nk_profile(bad, 2), cw::Error);
  const std::vector<Cyclotomic> wrong_dim{3, 1, 1};
  EXPECT_THROW((void)nk_profile(wrong_dim, 1), cw::Error);
  EXPECT_THROW(EigenvalueProfile(3, {1, -1, 0}), cw::Error);
}

TEST(Profile, Twist) {
  const EigenvalueProfile one(3, {1, 0, 0});
  EXPECT_EQ(twist_profile(one, -1), EigenvalueProfile(3, {0, 0, 1}));
  EXPECT_EQ(twist_profile(one, 0), one);
  // Standard representation of S3 at the rotation: eigenvalues zeta3, zeta3^2.
  const EigenvalueProfile rho3(3, {0, 1, 1});
  EXPECT_EQ(rho3.trace(), Cyclotomic(-1));
  EXPECT_EQ(twist_profile(rho3, -1), EigenvalueProfile(3, {1, 1, 0}));
  const EigenvalueProfile p(7, {0, 2, 1, 0, 3, 0, 1});
  for (std::int64_t s = -9; s <= 9; ++s) EXPECT_EQ(twist_profile(twist_profile(p, s), -s), p);
  const std::int64_t exps[] = {1, 2, 4, 8};
  EXPECT_EQ(EigenvalueProfile::from_exponents(7, exps), EigenvalueProfile(7, {0, 2, 1, 0, 1, 0, 0}));
}

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "cw/error.hpp"
#include "cw/group/character_table.hpp"
#include "cw/modular/modular.hpp"

using namespace cw::modular;
using cw::Error;
using cw::ErrorKind;
using cw::exact::make_rational;

namespace {

Cyclotomic z(std::uint32_t n, std::int64_t k = 1) { return Cyclotomic::root_of_unity(n, k); }

std::int64_t general(const Psl2zRepData& rep) {
  const auto e = static_cast<std::int64_t>(rep.t_profile.order());
  return cw::orbifold::cw_multiplicity_general(modular_cover(e), to_rep_input(rep));
}

MatrixModel gamma7_model() {
  const Cyclotomic o(0);
  const Cyclotomic one(1);
  return {"gamma7",
          CycloMatrix::from_rows({{o, o, one}, {o, -one, o}, {one, o, o}}),
          CycloMatrix::from_rows({{z(7), z(7, 2) + z(7, 3), z(7, 2)}, {o, z(7, 2), z(7, 2)}, {o, o, z(7, 4)}})};
}

Psl2zRepData gamma7_expected() {
  const std::vector<std::int64_t> exps{1, 2, 4};
  return {"gamma_2", 3, Cyclotomic(-1), Cyclotomic(0), Cyclotomic(0), EigenvalueProfile::from_exponents(7, exps), false};
}

// T = diag(l1, l2) and the unique S with S^2 = I, Tr S = 0 and Tr ST = Tr R,
// normalised so that the upper right entry is 1.
MatrixModel two_dim_model(const Psl2zRepData& rep) {
  const auto n = rep.t_profile.order();
  std::vector<std::int64_t> exps;
  for (std::uint32_t k = 0; k < n; ++k) {
    for (std::int64_t c = 0; c < rep.t_profile.count(k); ++c) exps.push_back(k);
  }
  const Cyclotomic l1 = z(n, exps.at(0));
  const Cyclotomic l2 = z(n, exps.at(1));
  const Cyclotomic a = (rep.trace_R / (l1 - l2)).simplified();
  const Cyclotomic o(0);
  const Cyclotomic one(1);
  return {rep.id, CycloMatrix::from_rows({{a, one}, {one - a * a, -a}}), CycloMatrix::from_rows({{l1, o}, {o, l2}})};
}

std::vector<std::int64_t> multiplicities(const cw::group::FiniteGroup& g, const cw::group::CharacterTable& table,
                                         std::size_t s, std::size_t t) {
  std::vector<std::int64_t> out;
  for (const auto& rep : reps_from_character_table(g, table, s, t)) out.push_back(rep.is_trivial ? 0 : cw_modular(rep));
  return out;
}

}  // namespace

TEST(Psl2zCharacters, OnlyTheGenusOneCharacterOccurs) {
  const auto chars = psl2z_characters();
  ASSERT_EQ(chars.size(), 6U);
  EXPECT_THROW(cw_modular(chars[0]), Error);
  for (std::size_t j = 1; j < 6; ++j) {
    EXPECT_EQ(cw_modular(chars[j]), j == 1 ? 1 : 0) << j;
    EXPECT_EQ(general(chars[j]), cw_modular(chars[j]));
  }
  EXPECT_EQ(general(chars[0]), 0);
}

TEST(Psl2zCharacters, TraceOfRIsCompatibleWithT) {
  // chi(T) = chi(S) chi(R) since T = S R in PSL2(Z).
  for (const auto& c : psl2z_characters()) {
    EXPECT_EQ((c.trace_S * c.trace_R).simplified(), c.t_profile.trace()) << c.id;
  }
}

TEST(Genus, NormalSubgroups) {
  EXPECT_EQ(genus_normal_subgroup(168, 7), 3);
  EXPECT_EQ(genus_normal_subgroup(294, 14), 15);
  EXPECT_EQ(genus_normal_subgroup(60, 5), 0);
  EXPECT_EQ(genus_normal_subgroup(1092, 13), 50);
  EXPECT_EQ(genus_normal_subgroup(660, 11), 26);
  EXPECT_EQ(genus_normal_subgroup(192, 8), 5);
  EXPECT_EQ(genus_normal_subgroup(6, 6), 1);
  EXPECT_THROW(genus_normal_subgroup(10, 3), Error);
  EXPECT_THROW(genus_normal_subgroup(10, 5), Error);
  for (const auto& s : admissible_2dim_spectra()) {
    EXPECT_EQ(s.level % s.order, 0);
    EXPECT_EQ(genus_normal_subgroup(s.minimal_index, s.level), s.genus);
  }
}

TEST(Relevel, PreservesEigenvalues) {
  const std::vector<std::int64_t> exps{1, 3};
  const auto p = EigenvalueProfile::from_exponents(8, exps);
  const auto q = relevel(p, 24);
  EXPECT_EQ(q.count(3), 1);
  EXPECT_EQ(q.count(9), 1);
  EXPECT_EQ(q.trace(), p.trace());
  EXPECT_THROW(relevel(p, 12), Error);
  const auto chars = psl2z_characters();
  for (std::int64_t e : {6, 12, 30}) EXPECT_EQ(cw_modular(chars[1], e), 1);
}

TEST(TraceProfiles, RoundTrip) {
  for (std::int64_t dim = 1; dim <= 4; ++dim) {
    for (std::int64_t a = 0; a <= dim; ++a) {
      for (std::int64_t b = 0; a + b <= dim; ++b) {
        const EigenvalueProfile r(3, {a, b, dim - a - b});
        const Cyclotomic tr = r.trace();
        const Cyclotomic tr_sq = Cyclotomic(a) + Cyclotomic(b) * z(3, 2) + Cyclotomic(dim - a - b) * z(3, 4);
        EXPECT_EQ(rinv_profile_from_traces(dim, tr, tr_sq.simplified()), r);
        const auto twisted = cw::group::twist_profile(r, -1);
        const Cyclotomic isotropy(make_rational(twisted.count(1), 3) + make_rational(2 * twisted.count(2), 3));
        EXPECT_EQ(rinv_isotropy_from_traces(dim, tr, tr_sq.simplified()), isotropy);
      }
      EXPECT_EQ(s_profile_from_trace(dim, Cyclotomic(2 * a - dim)), EigenvalueProfile(2, {a, dim - a}));
    }
  }
  EXPECT_THROW(s_profile_from_trace(2, Cyclotomic(1)), Error);
  EXPECT_THROW(s_profile_from_trace(2, z(3)), Error);
}

TEST(TwoDimensional, TwentySevenSpectra) {
  const auto reps = finite_image_2dim_reps();
  ASSERT_EQ(reps.size(), 27U);
  std::set<std::string> ids;
  std::vector<std::pair<std::uint32_t, std::vector<std::int64_t>>> occurring;
  for (const auto& rep : reps) {
    ids.insert(rep.id);
    const auto d = cw_modular(rep);
    EXPECT_EQ(d, general(rep)) << rep.id;
    EXPECT_LE(d, 1) << rep.id;
    if (d > 0) {
      std::vector<std::int64_t> exps;
      for (std::uint32_t k = 0; k < rep.t_profile.order(); ++k) {
        if (rep.t_profile.count(k) > 0) exps.push_back(k);
      }
      occurring.emplace_back(rep.t_profile.order(), exps);
    }
  }
  EXPECT_EQ(ids.size(), 27U);
  ASSERT_EQ(occurring.size(), admissible_2dim_spectra().size());
  for (const auto& s : admissible_2dim_spectra()) {
    const std::pair<std::uint32_t, std::vector<std::int64_t>> key{s.order, {s.a, s.b}};
    EXPECT_NE(std::find(occurring.begin(), occurring.end(), key), occurring.end()) << s.order << " " << s.a;
  }
}

TEST(TwoDimensional, ExplicitModelsAreIrreducible) {
  for (const auto& rep : finite_image_2dim_reps()) {
    const auto model = two_dim_model(rep);
    const auto report = verify_model(model, rep);
    for (const auto& c : report.checks) EXPECT_TRUE(c.passed) << rep.id << ": " << c.name << " " << c.detail;
    // The lower left entry 1 - a^2 vanishes exactly when T and S share an eigenvector.
    EXPECT_FALSE(model.S(1, 0).is_zero()) << rep.id;
  }
}

TEST(VerifyModel, KleinQuartic) {
  const auto report = verify_model(gamma7_model(), gamma7_expected());
  for (const auto& c : report.checks) EXPECT_TRUE(c.passed) << c.name << " " << c.detail;
  ASSERT_TRUE(report.t_profile.has_value());
  EXPECT_EQ(*report.t_profile, gamma7_expected().t_profile);
  EXPECT_EQ(cw_modular(gamma7_expected()), 1);
}

TEST(VerifyModel, DetectsWrongSign) {
  auto model = gamma7_model();
  model.S = Cyclotomic(-1) * model.S;
  const auto report = verify_model(model, gamma7_expected());
  EXPECT_FALSE(report.passed());
  const auto it = std::find_if(report.checks.begin(), report.checks.end(),
                               [](const ModelCheck& c) { return c.name == "(ST)^3 = I"; });
  ASSERT_NE(it, report.checks.end());
  EXPECT_FALSE(it->passed);
}

TEST(VerifyModel, DimensionMismatch) {
  auto expected = gamma7_expected();
  expected.dim = 2;
  const auto report = verify_model(gamma7_model(), expected);
  EXPECT_FALSE(report.passed());
  EXPECT_EQ(report.checks.size(), 1U);
}

TEST(CongruenceQuotients, GenusCertificate) {
  // Gamma(N) is torsion free for N >= 2, so there are no elliptic points.
  for (std::uint32_t n = 2; n <= 8; ++n) {
    const auto g = congruence_quotient(n);
    const auto table = cw::group::character_table_dixon(g);
    const auto s = g.generator_indices()[0];
    const auto t = g.generator_indices()[1];
    const auto order = static_cast<std::int64_t>(g.order());
    const auto reps = reps_from_character_table(g, table, s, t);
    std::vector<cw::orbifold::RepInput> inputs;
    for (const auto& r : reps) inputs.push_back(to_rep_input(r));
    const auto genus = genus_normal_subgroup(order, n);
    const auto d = cw::orbifold::decompose(modular_cover(n, g.order()), inputs, genus);
    for (std::size_t i = 0; i < reps.size(); ++i) {
      if (!reps[i].is_trivial) EXPECT_EQ(d.entries[i].multiplicity, cw_modular(reps[i]));
    }
  }
}

TEST(CongruenceQuotients, Level8Splits) {
  const auto g = congruence_quotient(8);
  ASSERT_EQ(g.order(), 192U);
  const auto table = cw::group::character_table_dixon(g);
  const auto reps = reps_from_character_table(g, table, g.generator_indices()[0], g.generator_indices()[1]);
  std::multiset<std::int64_t> dims;
  std::set<std::vector<std::int64_t>> spectra;
  for (const auto& r : reps) {
    const auto d = r.is_trivial ? 0 : cw_modular(r);
    EXPECT_LE(d, 1);
    if (d == 1) {
      dims.insert(r.dim);
      spectra.insert({r.t_profile.counts().begin(), r.t_profile.counts().end()});
    }
  }
  EXPECT_EQ(dims, (std::multiset<std::int64_t>{2, 3}));
  EXPECT_TRUE(spectra.count({0, 1, 0, 1, 0, 0, 0, 0}));
  EXPECT_TRUE(spectra.count({0, 1, 1, 0, 0, 1, 0, 0}));
}

TEST(CongruenceQuotients, ConjugationInvariance) {
  std::mt19937_64 rng(42);
  for (std::uint32_t n : {5U, 7U}) {
    const auto g = congruence_quotient(n);
    const auto table = cw::group::character_table_dixon(g);
    const auto s = g.generator_indices()[0];
    const auto t = g.generator_indices()[1];
    const auto reference = multiplicities(g, table, s, t);
    for (int trial = 0; trial < 5; ++trial) {
      const auto x = static_cast<std::size_t>(rng() % g.order());
      const auto xi = g.inverse(x);
      const auto s2 = g.multiply(g.multiply(x, s), xi);
      const auto t2 = g.multiply(g.multiply(x, t), xi);
      EXPECT_EQ(multiplicities(g, table, s2, t2), reference);
    }
  }
}

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "cw/error.hpp"
#include "cw/exact/number_theory.hpp"
#include "cw/group/character_table.hpp"
#include "cw/modular/modular.hpp"
#include "cw/psl2/psl2fp.hpp"

using namespace cw::psl2;
using cw::Error;
using cw::ErrorKind;

namespace {

std::vector<std::uint32_t> primes_between(std::uint32_t lo, std::uint32_t hi) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = lo; p <= hi; ++p) {
    if (cw::exact::is_prime(p)) out.push_back(p);
  }
  return out;
}

std::map<std::string, std::int64_t> nonzero(const cw::orbifold::Decomposition& d) {
  std::map<std::string, std::int64_t> out;
  for (const auto& e : d.entries) {
    if (e.multiplicity != 0) out[e.id] = e.multiplicity;
  }
  return out;
}

struct Row {
  std::int64_t dim;
  std::vector<Cyclotomic> values;

  bool operator==(const Row& o) const { return dim == o.dim && values == o.values; }
};

// Matches rows up to permutation.
bool same_rows(std::vector<Row> a, std::vector<Row> b) {
  if (a.size() != b.size()) return false;
  for (const auto& r : a) {
    const auto it = std::find(b.begin(), b.end(), r);
    if (it == b.end()) return false;
    b.erase(it);
  }
  return true;
}

}  // namespace

TEST(Legendre, SmallValues) {
  EXPECT_EQ(legendre(2, 7), 1);
  EXPECT_EQ(legendre(3, 7), -1);
  EXPECT_EQ(legendre(-1, 7), -1);
  EXPECT_EQ(legendre(-1, 13), 1);
  EXPECT_EQ(legendre(14, 7), 0);
  EXPECT_EQ(legendre(13, 3), 1);
  EXPECT_EQ(legendre(11, 3), -1);
  EXPECT_EQ(epsilon3(3), 2);
  EXPECT_EQ(epsilon3(4), -1);
}

TEST(GaussSum, SquaresToPlusMinusP) {
  for (auto p : primes_between(5, 61)) {
    const auto g = gauss_sum(p);
    const auto sign = p % 4 == 1 ? 1 : -1;
    EXPECT_EQ((g * g).simplified(), Cyclotomic(sign * static_cast<std::int64_t>(p))) << p;
  }
}

TEST(CharData, Errors) {
  EXPECT_EQ([] { try { char_data(9); } catch (const Error& e) { return e.kind(); } return ErrorKind::Parse; }(),
            ErrorKind::NotPrime);
  EXPECT_EQ([] { try { char_data(3); } catch (const Error& e) { return e.kind(); } return ErrorKind::Parse; }(),
            ErrorKind::TooSmall);
}

TEST(CharData, DimensionsAndClassCount) {
  for (auto p : primes_between(5, 47)) {
    const auto reps = char_data(p);
    // PSL2(F_p) has (p + 5) / 2 conjugacy classes.
    EXPECT_EQ(reps.size(), (p + 5) / 2) << p;
    std::int64_t sum = 0;
    for (const auto& r : reps) sum += r.dim * r.dim;
    const auto pp = static_cast<std::int64_t>(p);
    EXPECT_EQ(sum, pp * (pp * pp - 1) / 2) << p;
  }
}

TEST(CharData, TableProfilesMatchFourierInversion) {
  for (auto p : primes_between(5, 31)) {
    for (const auto& r : char_data(p)) {
      const auto values = values_on_t_powers(r);
      EXPECT_EQ(cw::group::nk_profile(values, r.dim), t_profile(r)) << p << " " << r.label();
    }
  }
}

TEST(CharData, SAndRTracesAreConsistentWithProfiles) {
  for (auto p : primes_between(5, 47)) {
    for (const auto& r : char_data(p)) {
      EXPECT_NO_THROW(cw::modular::s_profile_from_trace(r.dim, r.trace_S)) << r.label();
      EXPECT_NO_THROW(cw::modular::rinv_profile_from_traces(r.dim, r.trace_R, r.trace_R)) << r.label();
    }
  }
}

TEST(CharData, MatchesDixonTable) {
  for (std::uint32_t p : {5U, 7U, 11U, 13U}) {
    const auto g = cw::modular::congruence_quotient(p);
    ASSERT_EQ(g.order(), static_cast<std::size_t>(p) * (p * p - 1) / 2);
    const auto table = cw::group::character_table_dixon(g);
    ASSERT_TRUE(cw::group::verify_orthogonality(table).passed());
    const auto s = g.generator_indices()[0];
    const auto t = g.generator_indices()[1];
    const auto r = g.multiply(s, t);
    const auto tn = g.power(t, cw::exact::least_primitive_root(p));
    const auto& cls = table.partition.class_of;
    std::vector<Row> dixon;
    for (std::size_t i = 0; i < table.characters.size(); ++i) {
      const auto& chi = table.characters[i];
      dixon.push_back({table.dimensions[i], {chi[cls[s]], chi[cls[r]], chi[cls[t]], chi[cls[tn]]}});
    }
    std::vector<Row> generated;
    for (const auto& c : char_data(p)) {
      generated.push_back({c.dim, {c.trace_S, c.trace_R, c.trace_T, c.trace_T_nonresidue}});
    }
    EXPECT_TRUE(same_rows(dixon, generated)) << p;
  }
}

TEST(ClassNumber, MatchesReducedForms) {
  for (auto p : primes_between(7, 163)) {
    if (p % 4 != 3) continue;
    EXPECT_EQ(class_number(p), class_number_reduced_forms(p)) << p;
  }
  EXPECT_EQ(class_number(7), 1);
  EXPECT_EQ(class_number(23), 3);
  EXPECT_EQ(class_number(47), 5);
  EXPECT_EQ(class_number(163), 1);
  EXPECT_THROW(class_number(13), Error);
  EXPECT_THROW(class_number(3), Error);
}

TEST(Multiplicities, ClosedFormEqualsDirect) {
  for (auto p : primes_between(5, 47)) {
    const auto closed = multiplicities_closed_form(p);
    const auto direct = multiplicities_direct(p);
    ASSERT_EQ(closed.entries.size(), direct.entries.size());
    for (std::size_t i = 0; i < closed.entries.size(); ++i) {
      EXPECT_EQ(closed.entries[i].id, direct.entries[i].id);
      EXPECT_EQ(closed.entries[i].multiplicity, direct.entries[i].multiplicity) << p << " " << closed.entries[i].id;
    }
    ASSERT_TRUE(closed.certificate.has_value());
    EXPECT_EQ(closed.certificate->computed, genus_gamma(p));
  }
}

TEST(Multiplicities, KnownDecompositions) {
  EXPECT_TRUE(nonzero(multiplicities_direct(5)).empty());
  EXPECT_EQ(nonzero(multiplicities_direct(7)), (std::map<std::string, std::int64_t>{{"gamma_2", 1}}));
  EXPECT_EQ(nonzero(multiplicities_direct(11)),
            (std::map<std::string, std::int64_t>{{"lambda", 1}, {"theta_2", 1}, {"gamma_2", 1}}));
  EXPECT_EQ(nonzero(multiplicities_direct(13)),
            (std::map<std::string, std::int64_t>{{"mu_1", 1}, {"theta_1", 1}, {"theta_2", 1}, {"theta_3", 1}}));
  EXPECT_EQ(genus_gamma(11), 26);
  EXPECT_EQ(genus_gamma(13), 50);
}

TEST(Multiplicities, OnlySevenIsIrreducible) {
  for (auto p : primes_between(5, 47)) {
    const auto d = nonzero(multiplicities_closed_form(p));
    const bool irreducible = d.size() == 1 && d.begin()->second == 1;
    EXPECT_EQ(irreducible, p == 7) << p;
  }
}

TEST(Multiplicities, DirectMatchesDixonPath) {
  for (std::uint32_t p : {5U, 7U, 11U}) {
    const auto g = cw::modular::congruence_quotient(p);
    const auto table = cw::group::character_table_dixon(g);
    const auto reps =
        cw::modular::reps_from_character_table(g, table, g.generator_indices()[0], g.generator_indices()[1]);
    std::multiset<std::pair<std::int64_t, std::int64_t>> from_table;
    for (const auto& r : reps) from_table.insert({r.dim, r.is_trivial ? 0 : cw::modular::cw_modular(r)});
    std::multiset<std::pair<std::int64_t, std::int64_t>> from_data;
    for (const auto& e : multiplicities_direct(p).entries) from_data.insert({e.dim, e.multiplicity});
    EXPECT_EQ(from_table, from_data) << p;
  }
}

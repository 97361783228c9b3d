#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "cw/group/finite_group.hpp"

namespace cw::verify {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;

  void add(std::string name, bool passed, std::string detail = {});
  bool passed() const noexcept;
  std::size_t failures() const noexcept;
};

struct Options {
  std::string fault;  // name of a deliberately injected fault, empty for none
  std::size_t max_group_order = group::FiniteGroup::kDefaultSizeCap;
  std::filesystem::path fixture_dir;
  std::uint64_t seed = 20240611;
  std::size_t random_cases = 10000;
};

/// exactmath, groups, psl2fp, fermat, fixtures.
const std::vector<std::string>& suite_names();

/// Names accepted by Options::fault.
const std::vector<std::string>& fault_names();

/// Runs one suite, or every suite for "all". Throws `ErrorKind::Precondition`
/// on an unknown suite or fault name.
Report run_suite(std::string_view name, const Options& options);

// Individual invariants; each appends named checks to the report and turns
// library errors into failed checks.

/// Field axioms on random elements of Q(zeta_n), n <= 60.
void ring_axioms(Report& report, const Options& options);
/// nk_profile inverts the character of a profile; twists compose and invert.
void profile_round_trips(Report& report, const Options& options);
/// Multiplicities do not change when S and T are conjugated simultaneously.
void conjugation_invariance(Report& report, const Options& options);
/// The trivial representation has multiplicity 0 over the modular orbifold.
void trivial_vanishing(Report& report, const Options& options);
/// Gamma(7): the Klein quartic carries gamma_2 once and nothing else.
void klein_quartic(Report& report, const Options& options);
/// PSL2(F_p) closed forms against the direct formula, 5 <= p <= 47.
void psl2fp_closed_vs_direct(Report& report, const Options& options);
/// Class numbers against reduced forms, p = 3 mod 4, 7 <= p <= 163.
void class_numbers(Report& report, const Options& options);
/// Fermat closed forms against the direct formula, 3 <= N <= 12, and the
/// group relations and induced models for 3 <= N <= 8.
void fermat_closed_vs_direct(Report& report, const Options& options);
/// Dixon tables against the module tables and the Gamma(8) decomposition.
void oracle_tables(Report& report, const Options& options);
/// Every stored matrix model against its stated data.
void fixtures(Report& report, const Options& options);

}  // namespace cw::verify

#include "cw/verify/suites.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "cw/error.hpp"
#include "cw/exact/number_theory.hpp"
#include "cw/fermat/fermat.hpp"
#include "cw/group/character_table.hpp"
#include "cw/io/json.hpp"
#include "cw/modular/modular.hpp"
#include "cw/psl2/psl2fp.hpp"

namespace cw::verify {

using exact::BigRational;
using exact::Cyclotomic;
using group::EigenvalueProfile;

void Report::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
}

bool Report::passed() const noexcept { return failures() == 0; }

std::size_t Report::failures() const noexcept {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"exactmath", "groups", "psl2fp", "fermat", "fixtures"};
  return names;
}

const std::vector<std::string>& fault_names() {
  static const std::vector<std::string> names{"ring",    "profile", "conjugation", "orthogonality", "class-number",
                                              "psl2fp",  "fermat",  "fixture"};
  return names;
}

namespace {

// Runs one invariant; library errors become a failed check.
template <class F>
void guarded(Report& report, const std::string& name, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report.add(name, false, e.what());
  }
}

std::vector<std::uint32_t> primes_between(std::uint32_t lo, std::uint32_t hi) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = lo; p <= hi; ++p) {
    if (exact::is_prime(p)) out.push_back(p);
  }
  return out;
}

std::map<std::string, std::int64_t> nonzero(const orbifold::Decomposition& d) {
  std::map<std::string, std::int64_t> out;
  for (const auto& e : d.entries) {
    if (e.multiplicity != 0) out[e.id] = e.multiplicity;
  }
  return out;
}

std::string describe(const std::map<std::string, std::int64_t>& m) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [id, d] : m) {
    out << (first ? "" : ", ") << id << ":" << d;
    first = false;
  }
  out << "}";
  return out.str();
}

// Entry-by-entry comparison; returns the first difference or an empty string.
std::string compare_decompositions(const orbifold::Decomposition& a, const orbifold::Decomposition& b) {
  if (a.entries.size() != b.entries.size()) return "entry counts differ";
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    const auto& x = a.entries[i];
    const auto& y = b.entries[i];
    if (x.id != y.id || x.dim != y.dim || x.multiplicity != y.multiplicity) {
      return x.id + ": " + std::to_string(x.multiplicity) + " vs " + y.id + ": " + std::to_string(y.multiplicity);
    }
  }
  return {};
}

std::int64_t sum_dim_squares(const group::CharacterTable& t) {
  std::int64_t s = 0;
  for (auto d : t.dimensions) s += d * d;
  return s;
}

template <class Row>
bool same_multiset(std::vector<Row> a, std::vector<Row> b) {
  if (a.size() != b.size()) return false;
  for (const auto& x : a) {
    const auto it = std::find(b.begin(), b.end(), x);
    if (it == b.end()) return false;
    b.erase(it);
  }
  return true;
}

struct RepRow {
  std::int64_t dim;
  Cyclotomic s, r, rinv;
  EigenvalueProfile t;

  bool operator==(const RepRow& o) const {
    return dim == o.dim && s == o.s && r == o.r && rinv == o.rinv && t == o.t;
  }
};

std::vector<std::int64_t> modular_multiplicities(const group::FiniteGroup& g, const group::CharacterTable& table,
                                                 std::size_t s, std::size_t t) {
  std::vector<std::int64_t> out;
  for (const auto& rep : modular::reps_from_character_table(g, table, s, t)) {
    out.push_back(rep.is_trivial ? 0 : modular::cw_modular(rep));
  }
  return out;
}

std::vector<Cyclotomic> character_of_profile(const EigenvalueProfile& p) {
  std::vector<Cyclotomic> out;
  const auto n = p.order();
  for (std::uint32_t j = 0; j < n; ++j) {
    Cyclotomic v;
    for (std::uint32_t k = 0; k < n; ++k) {
      if (p.count(k) != 0) v += Cyclotomic(p.count(k)) * Cyclotomic::root_of_unity(n, static_cast<std::int64_t>(k) * j);
    }
    out.push_back(v);
  }
  return out;
}

std::string fermat_six_label(std::uint32_t n, std::int64_t a, std::int64_t b) {
  for (const auto& o : fermat::orbit_decomposition(n)) {
    for (const auto& m : o.members) {
      if (m.alpha == a && m.beta == b) {
        return "rho_" + std::to_string(o.representative.alpha) + "," + std::to_string(o.representative.beta);
      }
    }
  }
  throw Error(ErrorKind::Precondition, "no orbit contains the label");
}

bool is_block_diagonal(const exact::CycloMatrix& m, const std::vector<std::int64_t>& blocks) {
  std::vector<std::size_t> block_of;
  for (std::size_t b = 0; b < blocks.size(); ++b) block_of.insert(block_of.end(), static_cast<std::size_t>(blocks[b]), b);
  if (block_of.size() != m.size()) return false;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (block_of[i] != block_of[j] && !m(i, j).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

void ring_axioms(Report& report, const Options& options) {
  const std::string name = "cyclotomic ring axioms (" + std::to_string(options.random_cases) + " cases, orders <= 60)";
  guarded(report, name, [&] {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::uint32_t> order_dist(1, 60);
    std::uniform_int_distribution<int> coeff_dist(-4, 4);
    std::uniform_int_distribution<int> den_dist(1, 3);
    auto random_value = [&](std::uint32_t n) {
      std::vector<BigRational> dense(n);
      for (auto& c : dense) c = exact::make_rational(coeff_dist(rng), den_dist(rng));
      return Cyclotomic::from_dense(n, dense);
    };
    for (std::size_t i = 0; i < options.random_cases; ++i) {
      const std::uint32_t n = order_dist(rng);
      const auto divs = exact::divisors(n);
      std::uniform_int_distribution<std::size_t> pick(0, divs.size() - 1);
      const auto a = random_value(static_cast<std::uint32_t>(divs[pick(rng)]));
      const auto b = random_value(static_cast<std::uint32_t>(divs[pick(rng)]));
      const auto c = random_value(n);
      auto ab = a * b;
      if (options.fault == "ring" && i == 0) ab += Cyclotomic(1);
      std::string broken;
      if (!(a + b == b + a)) broken = "a + b = b + a";
      else if (!(ab == b * a)) broken = "ab = ba";
      else if (!((a * b) * c == a * (b * c))) broken = "(ab)c = a(bc)";
      else if (!(a * (b + c) == a * b + a * c)) broken = "a(b + c) = ab + ac";
      else if (!(a - a).is_zero()) broken = "a - a = 0";
      else if (!a.is_zero() && !(a * a.inverse() == Cyclotomic(1))) broken = "a a^-1 = 1";
      else if (!a.is_zero() && !((b / a) * a == b)) broken = "(b/a) a = b";
      if (!broken.empty()) {
        report.add(name, false, "case " + std::to_string(i) + " in Q(zeta_" + std::to_string(n) + "): " + broken);
        return;
      }
    }
    report.add(name, true);
  });
}

void profile_round_trips(Report& report, const Options& options) {
  const std::string name = "nk_profile and twist_profile round trips";
  guarded(report, name, [&] {
    std::mt19937_64 rng(options.seed + 1);
    std::uniform_int_distribution<std::uint32_t> order_dist(1, 60);
    std::uniform_int_distribution<std::int64_t> dim_dist(1, 6);
    const std::size_t cases = std::max<std::size_t>(1, options.random_cases / 20);
    for (std::size_t i = 0; i < cases; ++i) {
      const auto n = order_dist(rng);
      std::uniform_int_distribution<std::int64_t> exp_dist(0, n - 1);
      std::vector<std::int64_t> exps(static_cast<std::size_t>(dim_dist(rng)));
      for (auto& e : exps) e = exp_dist(rng);
      const auto p = EigenvalueProfile::from_exponents(n, exps);
      const auto chars = character_of_profile(p);
      const auto shift = exp_dist(rng) - static_cast<std::int64_t>(n / 2);
      const auto applied = options.fault == "profile" && i == 0 ? shift + 1 : shift;
      std::vector<Cyclotomic> twisted_chars;
      for (std::uint32_t j = 0; j < n; ++j) twisted_chars.push_back(chars[j] * Cyclotomic::root_of_unity(n, applied * j));
      const auto dim = static_cast<std::int64_t>(exps.size());
      std::string broken;
      if (!(group::nk_profile(chars, dim) == p)) broken = "nk_profile(character) = profile";
      else if (!(group::twist_profile(group::twist_profile(p, shift), -shift) == p)) broken = "twist by s then -s";
      else if (!(group::nk_profile(twisted_chars, dim) == group::twist_profile(p, shift))) broken = "twist matches the twisted character";
      if (!broken.empty()) {
        report.add(name, false, "case " + std::to_string(i) + ", profile " + p.to_string() + ": " + broken);
        return;
      }
    }
    report.add(name, true, std::to_string(cases) + " random profiles");
  });
}

void conjugation_invariance(Report& report, const Options& options) {
  struct Case {
    std::string label;
    group::FiniteGroup (*make)(std::uint32_t, std::size_t);
    std::uint32_t n;
  };
  const std::vector<Case> cases{{"PSL2(F_5)", &modular::congruence_quotient, 5},
                                {"PSL2(F_7)", &modular::congruence_quotient, 7},
                                {"(Z/4)^2 x| S3", &fermat::fermat_group, 4},
                                {"(Z/5)^2 x| S3", &fermat::fermat_group, 5}};
  std::mt19937_64 rng(options.seed + 2);
  for (const auto& c : cases) {
    const std::string name = "conjugation invariance of multiplicities, " + c.label;
    guarded(report, name, [&] {
      const auto g = c.make(c.n, options.max_group_order);
      const auto table = group::character_table_dixon(g);
      const auto s = g.generator_indices()[0];
      const auto t = g.generator_indices()[1];
      const auto reference = modular_multiplicities(g, table, s, t);
      for (int trial = 0; trial < 5; ++trial) {
        const auto x = static_cast<std::size_t>(rng() % g.order());
        const auto xi = g.inverse(x);
        const auto s2 = g.multiply(g.multiply(x, s), xi);
        const auto t2 = options.fault == "conjugation" ? g.multiply(g.multiply(x, t), g.multiply(xi, t)) : g.multiply(g.multiply(x, t), xi);
        if (modular_multiplicities(g, table, s2, t2) != reference) {
          report.add(name, false, "conjugating by element " + std::to_string(x) + " changes the multiplicities");
          return;
        }
      }
      report.add(name, true);
    });
  }
}

void trivial_vanishing(Report& report, const Options& options) {
  guarded(report, "trivial multiplicity 0 over X(1), levels 2..60", [&] {
    for (std::int64_t e = 2; e <= 60; ++e) {
      modular::Psl2zRepData trivial;
      trivial.id = "1";
      trivial.is_trivial = true;
      trivial.trace_S = trivial.trace_R = trivial.trace_Rinv = Cyclotomic(1);
      const std::vector<std::int64_t> zero{0};
      trivial.t_profile = EigenvalueProfile::from_exponents(static_cast<std::uint32_t>(e), zero);
      const auto d = orbifold::cw_multiplicity_general(modular::modular_cover(e), modular::to_rep_input(trivial));
      if (d != 0) {
        report.add("trivial multiplicity 0 over X(1), levels 2..60", false, "level " + std::to_string(e) + " gives " + std::to_string(d));
        return;
      }
    }
    report.add("trivial multiplicity 0 over X(1), levels 2..60", true);
  });
  guarded(report, "trivial multiplicity 0 for PSL2(Z/m), m = 2..8", [&] {
    for (std::uint32_t m = 2; m <= 8; ++m) {
      const auto g = modular::congruence_quotient(m, options.max_group_order);
      const auto table = group::character_table_dixon(g);
      const auto reps = modular::reps_from_character_table(g, table, g.generator_indices()[0], g.generator_indices()[1]);
      for (const auto& rep : reps) {
        if (!rep.is_trivial) continue;
        const auto e = static_cast<std::int64_t>(rep.t_profile.order());
        const auto d = orbifold::cw_multiplicity_general(modular::modular_cover(e, g.order()), modular::to_rep_input(rep));
        if (d != 0) {
          report.add("trivial multiplicity 0 for PSL2(Z/m), m = 2..8", false, "m = " + std::to_string(m));
          return;
        }
      }
    }
    report.add("trivial multiplicity 0 for PSL2(Z/m), m = 2..8", true);
  });
  guarded(report, "trivial multiplicity 0 for PSL2(F_p) and Fermat quotients", [&] {
    for (auto p : primes_between(5, 47)) {
      for (const auto& e : psl2::multiplicities_direct(p).entries) {
        if (e.id == "trivial" && e.multiplicity != 0) throw Error(ErrorKind::Precondition, "p = " + std::to_string(p));
      }
    }
    for (std::uint32_t n = 3; n <= 12; ++n) {
      for (const auto& e : fermat::multiplicities_direct(n).entries) {
        if (e.id == "rho_1" && e.multiplicity != 0) throw Error(ErrorKind::Precondition, "N = " + std::to_string(n));
      }
    }
    report.add("trivial multiplicity 0 for PSL2(F_p) and Fermat quotients", true);
  });
}

void klein_quartic(Report& report, const Options&) {
  const std::string name = "Klein quartic: gamma_2 once, total dimension 3";
  guarded(report, name, [&] {
    const auto closed = psl2::multiplicities_closed_form(7);
    const auto direct = psl2::multiplicities_direct(7);
    const auto diff = compare_decompositions(closed, direct);
    const auto found = nonzero(direct);
    const std::map<std::string, std::int64_t> want{{"gamma_2", 1}};
    const bool ok = diff.empty() && found == want && direct.total_dimension() == 3 && psl2::genus_gamma(7) == 3;
    report.add(name, ok, diff.empty() ? "found " + describe(found) + ", total " + std::to_string(direct.total_dimension()) : diff);
  });
}

void psl2fp_closed_vs_direct(Report& report, const Options& options) {
  for (auto p : primes_between(5, 47)) {
    const std::string name = "PSL2(F_" + std::to_string(p) + ") closed form = direct, genus certificate";
    guarded(report, name, [&] {
      auto closed = psl2::multiplicities_closed_form(p);
      if (options.fault == "psl2fp" && p == 11) closed.entries.back().multiplicity += 1;
      const auto direct = psl2::multiplicities_direct(p);
      const auto diff = compare_decompositions(closed, direct);
      const std::int64_t order = static_cast<std::int64_t>(p) * (p * p - 1) / 2;
      const BigRational genus = 1 + exact::make_rational(order, 12) - exact::make_rational(order, 2 * p);
      const bool cert = exact::is_integer(genus) && direct.total_dimension() == *exact::to_int64(genus) &&
                        closed.total_dimension() == direct.total_dimension() && psl2::genus_gamma(p) == direct.total_dimension();
      report.add(name, diff.empty() && cert,
                 diff.empty() ? "genus " + std::to_string(direct.total_dimension()) + ", expected " + exact::to_string(genus) : diff);
    });
  }
  guarded(report, "genus of X(11) is 26 and of X(13) is 50", [&] {
    report.add("genus of X(11) is 26 and of X(13) is 50", psl2::genus_gamma(11) == 26 && psl2::genus_gamma(13) == 50);
  });
}

void class_numbers(Report& report, const Options& options) {
  const std::string name = "class numbers from Legendre sums = reduced forms, p = 3 mod 4, 7 <= p <= 163";
  guarded(report, name, [&] {
    std::vector<std::string> bad;
    std::size_t count = 0;
    for (auto p : primes_between(7, 163)) {
      if (p % 4 != 3) continue;
      ++count;
      auto h = psl2::class_number(p);
      if (options.fault == "class-number" && p == 23) h += 1;
      const auto oracle = psl2::class_number_reduced_forms(p);
      if (h != oracle) bad.push_back("h(" + std::to_string(p) + ") = " + std::to_string(h) + " vs " + std::to_string(oracle));
    }
    const bool spots = psl2::class_number(7) == 1 && psl2::class_number_reduced_forms(23) == 3;
    std::string detail = std::to_string(count) + " primes";
    for (const auto& b : bad) detail += "; " + b;
    report.add(name, bad.empty() && spots, detail);
  });
}

void fermat_closed_vs_direct(Report& report, const Options& options) {
  for (std::uint32_t n = 3; n <= 12; ++n) {
    const std::string name = "Fermat N=" + std::to_string(n) + " closed form = direct, genus certificate";
    guarded(report, name, [&] {
      auto closed = fermat::multiplicities_closed_form(n);
      if (options.fault == "fermat" && n == 7) closed.entries.front().multiplicity += 1;
      const auto direct = fermat::multiplicities_direct(n);
      const auto diff = compare_decompositions(closed, direct);
      const std::int64_t genus = static_cast<std::int64_t>(n - 1) * (n - 2) / 2;
      const bool cert = direct.total_dimension() == genus && closed.total_dimension() == genus &&
                        modular::genus_normal_subgroup(6LL * n * n, 2LL * n) == genus;
      report.add(name, diff.empty() && cert, diff.empty() ? "genus " + std::to_string(genus) : diff);
    });
  }
  guarded(report, "Fermat N=7 decomposition", [&] {
    const std::map<std::string, std::int64_t> want{
        {"rho-_1", 1}, {"rho-_2", 1}, {"rho-_3", 1}, {fermat_six_label(7, 2, 1), 1}};
    const auto found = nonzero(fermat::multiplicities_closed_form(7));
    report.add("Fermat N=7 decomposition", found == want, "found " + describe(found) + ", expected " + describe(want));
  });
  guarded(report, "Fermat N=6 decomposition", [&] {
    const std::map<std::string, std::int64_t> want{{"rho^2_2", 1}, {"rho-_1", 1}, {fermat_six_label(6, 3, 2), 1}};
    const auto found = nonzero(fermat::multiplicities_closed_form(6));
    report.add("Fermat N=6 decomposition", found == want, "found " + describe(found) + ", expected " + describe(want));
  });
  for (std::uint32_t n = 3; n <= 8; ++n) {
    const std::string rel = "Fermat N=" + std::to_string(n) + " group relations";
    guarded(report, rel, [&] {
      const auto g = fermat::fermat_group(n, options.max_group_order);
      const auto s = g.generator_indices()[0];
      const auto t = g.generator_indices()[1];
      const auto a = g.power(t, 2);
      const auto b = g.multiply(g.multiply(s, a), s);
      const bool ok = g.element_order(s) == 2 && g.element_order(g.multiply(s, t)) == 3 &&
                      g.element_order(t) == 2 * n && g.element_order(a) == n &&
                      g.element(b) == group::GroupElement(group::SemidirectElement::make(0, 1, group::s3::kIdentity, n));
      report.add(rel, ok);
    });
    const std::string models = "Fermat N=" + std::to_string(n) + " induced models";
    guarded(report, models, [&] {
      const auto g = fermat::fermat_group(n, options.max_group_order);
      std::vector<std::string> bad;
      for (const auto& rep : fermat::rep_table(n)) {
        const auto model = fermat::model_for(g, rep);
        const auto r = modular::verify_model(model, rep.to_psl2z());
        const auto a = model.T.pow(2);
        if (!r.passed() || !a.pow(n).is_identity()) bad.push_back(rep.label());
      }
      std::string detail;
      for (const auto& b : bad) detail += (detail.empty() ? "failing: " : ", ") + b;
      report.add(models, bad.empty(), detail);
    });
  }
}

void oracle_tables(Report& report, const Options& options) {
  for (std::uint32_t p : {5U, 7U, 11U, 13U}) {
    const std::string name = "Dixon table of PSL2(F_" + std::to_string(p) + ") against the module table";
    guarded(report, name, [&] {
      const auto g = modular::congruence_quotient(p, options.max_group_order);
      auto table = group::character_table_dixon(g);
      if (options.fault == "orthogonality" && p == 5) table.characters[2][1] += Cyclotomic(1);
      const bool orth = group::verify_orthogonality(table).passed();
      const bool squares = sum_dim_squares(table) == static_cast<std::int64_t>(g.order());
      const auto s = g.generator_indices()[0];
      const auto t = g.generator_indices()[1];
      const auto r = g.multiply(s, t);
      const auto tn = g.power(t, static_cast<std::int64_t>(exact::least_primitive_root(p)));
      const auto& cls = table.partition.class_of;
      using Row = std::pair<std::int64_t, std::vector<Cyclotomic>>;
      std::vector<Row> dixon;
      for (std::size_t i = 0; i < table.characters.size(); ++i) {
        const auto& chi = table.characters[i];
        dixon.push_back({table.dimensions[i], {chi[cls[s]], chi[cls[r]], chi[cls[t]], chi[cls[tn]]}});
      }
      std::vector<Row> generated;
      for (const auto& c : psl2::char_data(p)) generated.push_back({c.dim, {c.trace_S, c.trace_R, c.trace_T, c.trace_T_nonresidue}});
      const bool match = same_multiset(dixon, generated);
      report.add(name, orth && squares && match,
                 std::string("orthogonality ") + (orth ? "ok" : "FAILED") + ", sum dim^2 " + (squares ? "ok" : "FAILED") +
                     ", rows " + (match ? "match" : "DIFFER"));
    });
  }

  const std::string level8 = "Dixon table of SL2(Z/8)/{+-1} and the Gamma(8) decomposition";
  guarded(report, level8, [&] {
    const auto g = modular::congruence_quotient(8, options.max_group_order);
    const auto table = group::character_table_dixon(g);
    const bool order = g.order() == 192;
    const bool orth = group::verify_orthogonality(table).passed();
    const bool squares = sum_dim_squares(table) == static_cast<std::int64_t>(g.order());
    const auto reps = modular::reps_from_character_table(g, table, g.generator_indices()[0], g.generator_indices()[1]);
    std::vector<orbifold::RepInput> inputs;
    for (const auto& r : reps) inputs.push_back(modular::to_rep_input(r));
    const auto genus = modular::genus_normal_subgroup(192, 8);
    const auto d = orbifold::decompose(modular::modular_cover(8, g.order()), inputs, genus);
    std::multiset<std::int64_t> dims;
    std::set<std::vector<std::int64_t>> spectra;
    bool simple = true;
    for (std::size_t i = 0; i < d.entries.size(); ++i) {
      if (d.entries[i].multiplicity == 0) continue;
      simple = simple && d.entries[i].multiplicity == 1;
      dims.insert(d.entries[i].dim);
      const auto counts = reps[i].t_profile.counts();
      spectra.insert({counts.begin(), counts.end()});
    }
    const bool split = simple && dims == std::multiset<std::int64_t>{2, 3} && d.total_dimension() == 5 && genus == 5;
    const std::set<std::vector<std::int64_t>> want{{0, 1, 0, 1, 0, 0, 0, 0}, {0, 1, 1, 0, 0, 1, 0, 0}};
    report.add(level8, order && orth && squares && split && spectra == want,
               "order " + std::to_string(g.order()) + ", " + std::to_string(dims.size()) + " constituents, total " +
                   std::to_string(d.total_dimension()));
  });

  for (std::uint32_t n = 3; n <= 8; ++n) {
    const std::string name = "Dixon table of (Z/" + std::to_string(n) + ")^2 x| S3 against the module tables";
    guarded(report, name, [&] {
      const auto g = fermat::fermat_group(n, options.max_group_order);
      const auto table = group::character_table_dixon(g);
      const bool orth = group::verify_orthogonality(table).passed();
      const bool squares = sum_dim_squares(table) == static_cast<std::int64_t>(g.order());

      std::vector<std::vector<Cyclotomic>> induced;
      for (const auto& d : fermat::induced_table(g, n)) {
        std::vector<Cyclotomic> row;
        for (const auto& c : table.classes()) row.push_back(fermat::induced_value(g, d.chi, d.psi, c.representative));
        induced.push_back(std::move(row));
      }
      const bool induced_match = same_multiset(induced, table.characters);

      const auto s = g.generator_indices()[0];
      const auto t = g.generator_indices()[1];
      std::vector<RepRow> dixon;
      for (const auto& r : modular::reps_from_character_table(g, table, s, t)) dixon.push_back({r.dim, r.trace_S, r.trace_R, r.trace_Rinv, r.t_profile});
      std::vector<RepRow> listed;
      for (const auto& r : fermat::rep_table(n)) listed.push_back({r.dim, r.trace_S, r.trace_R, r.trace_Rinv, r.t_profile()});
      const bool table_match = same_multiset(dixon, listed);
      report.add(name, orth && squares && induced_match && table_match,
                 std::string("orthogonality ") + (orth ? "ok" : "FAILED") + ", sum dim^2 " + (squares ? "ok" : "FAILED") +
                     ", induced characters " + (induced_match ? "match" : "DIFFER") + ", trace table " +
                     (table_match ? "matches" : "DIFFERS"));
    });
  }
}

void fixtures(Report& report, const Options& options) {
  std::vector<io::Fixture> all;
  guarded(report, "load fixtures", [&] {
    all = io::load_fixtures(options.fixture_dir);
    report.add("load fixtures", !all.empty(), std::to_string(all.size()) + " models from " + options.fixture_dir.string());
  });
  for (auto& f : all) {
    guarded(report, f.id, [&] {
      if (options.fault == "fixture" && f.id == "gamma7") f.model.S = Cyclotomic(-1) * f.model.S;
      const auto r = modular::verify_model(f.model, f.expected);
      for (const auto& c : r.checks) report.add(f.id + ": " + c.name, c.passed, c.passed ? "" : c.detail);
      if (!f.blocks.empty()) {
        report.add(f.id + ": invariant blocks", is_block_diagonal(f.model.S, f.blocks) && is_block_diagonal(f.model.T, f.blocks));
      }
      if (f.fermat_exponent) {
        const auto n = *f.fermat_exponent;
        report.add(f.id + ": (T^2)^" + std::to_string(n) + " = I", f.model.T.pow(2).pow(n).is_identity());
      }
    });
  }
}

Report run_suite(std::string_view name, const Options& options) {
  if (!options.fault.empty() &&
      std::find(fault_names().begin(), fault_names().end(), options.fault) == fault_names().end()) {
    throw Error(ErrorKind::Precondition, "unknown fault '" + options.fault + "'");
  }
  Report report;
  report.suite = std::string(name);
  const bool all = name == "all";
  if (!all && std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
    throw Error(ErrorKind::Precondition, "unknown suite '" + std::string(name) + "'");
  }
  if (all || name == "exactmath") ring_axioms(report, options);
  if (all || name == "groups") {
    profile_round_trips(report, options);
    oracle_tables(report, options);
    conjugation_invariance(report, options);
    trivial_vanishing(report, options);
  }
  if (all || name == "psl2fp") {
    klein_quartic(report, options);
    psl2fp_closed_vs_direct(report, options);
    class_numbers(report, options);
  }
  if (all || name == "fermat") fermat_closed_vs_direct(report, options);
  if (all || name == "fixtures") fixtures(report, options);
  return report;
}

}  // namespace cw::verify

#include "cw/modular/modular.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cw/error.hpp"
#include "cw/exact/number_theory.hpp"

namespace cw::modular {

using exact::make_rational;

namespace {

Cyclotomic zeta(std::uint32_t n, std::int64_t k = 1) { return Cyclotomic::root_of_unity(n, k); }

std::int64_t to_integer(const Cyclotomic& value, const std::string& what) {
  if (!value.is_rational()) throw Error(ErrorKind::NonIntegral, what + " is not rational: " + value.to_string());
  const auto q = value.to_rational();
  const auto v = exact::to_int64(q);
  if (!v) throw Error(ErrorKind::NonIntegral, what + " = " + exact::to_string(q));
  return *v;
}

}  // namespace

EigenvalueProfile relevel(const EigenvalueProfile& profile, std::int64_t e) {
  const auto n = static_cast<std::int64_t>(profile.order());
  if (e < 1 || e % n != 0) throw Error(ErrorKind::Precondition, "level must be a multiple of the profile order");
  std::vector<std::int64_t> counts(static_cast<std::size_t>(e), 0);
  for (std::int64_t k = 0; k < n; ++k) counts[static_cast<std::size_t>(k * (e / n))] = profile.count(k);
  return {static_cast<std::uint32_t>(e), std::move(counts)};
}

std::int64_t cw_modular(const Psl2zRepData& rep) {
  if (rep.is_trivial) throw Error(ErrorKind::TrivialRep, "the formula applies to nontrivial representations only");
  const auto& t = rep.t_profile;
  const auto e = static_cast<std::int64_t>(t.order());
  if (t.dim() != rep.dim) throw Error(ErrorKind::Precondition, rep.id + ": T-profile does not sum to the dimension");

  BigRational rational = make_rational(-5 * rep.dim, 12);
  for (std::int64_t k = 1; k < e; ++k) rational += make_rational(t.count(k) * (e - k), e);
  const Cyclotomic z3 = zeta(3);
  const Cyclotomic z3sq = zeta(3, 2);
  const Cyclotomic one(1);
  const Cyclotomic three(3);
  Cyclotomic d = Cyclotomic(rational) - rep.trace_S / Cyclotomic(4) +
                 z3sq * rep.trace_Rinv / (three * (one - z3sq)) + z3 * rep.trace_R / (three * (one - z3));
  d = d.simplified();
  if (!d.is_rational() || !exact::is_integer(d.to_rational())) {
    throw Error(ErrorKind::NonIntegral, rep.id + ": multiplicity " + d.to_string());
  }
  const auto value = to_integer(d, rep.id + ": multiplicity");
  if (value < 0) throw Error(ErrorKind::Negative, rep.id + ": multiplicity " + std::to_string(value));
  return value;
}

std::int64_t cw_modular(const Psl2zRepData& rep, std::int64_t e) {
  Psl2zRepData copy = rep;
  copy.t_profile = relevel(rep.t_profile, e);
  return cw_modular(copy);
}

orbifold::CoverSpec modular_cover(std::int64_t e, std::uint64_t group_order) {
  orbifold::CoverSpec cover;
  cover.base = orbifold::OrbifoldCurve{0, {2, 3}};
  cover.orbifold_monodromies = {"S", "R^-1"};
  if (e >= 2) cover.ramification.push_back({e, "T"});
  cover.group_order = group_order;
  return cover;
}

EigenvalueProfile s_profile_from_trace(std::int64_t dim, const Cyclotomic& trace_S) {
  const auto tr = to_integer(trace_S, "Tr S");
  if ((dim + tr) % 2 != 0) throw Error(ErrorKind::NonIntegral, "Tr S has the wrong parity");
  return {2, {(dim + tr) / 2, (dim - tr) / 2}};
}

EigenvalueProfile rinv_profile_from_traces(std::int64_t dim, const Cyclotomic& trace_Rinv, const Cyclotomic& trace_R) {
  const std::vector<Cyclotomic> values{Cyclotomic(dim), trace_Rinv, trace_R};
  return group::nk_profile(values, dim);
}

Cyclotomic rinv_isotropy_from_traces(std::int64_t dim, const Cyclotomic& trace_Rinv, const Cyclotomic& trace_R) {
  const Cyclotomic one(1);
  const Cyclotomic three(3);
  return (Cyclotomic(make_rational(dim, 3)) - zeta(3, 2) * trace_Rinv / (three * (one - zeta(3, 2))) -
          zeta(3) * trace_R / (three * (one - zeta(3))))
      .simplified();
}

orbifold::RepInput to_rep_input(const Psl2zRepData& rep) {
  orbifold::RepInput in;
  in.id = rep.id;
  in.dim = rep.dim;
  in.is_trivial = rep.is_trivial;
  if (rep.t_profile.order() >= 2) in.ram_profiles.push_back(rep.t_profile);
  in.orb_profiles.push_back(s_profile_from_trace(rep.dim, rep.trace_S));
  in.orb_profiles.push_back(rinv_profile_from_traces(rep.dim, rep.trace_Rinv, rep.trace_R));
  return in;
}

std::int64_t genus_normal_subgroup(std::int64_t index, std::int64_t e, std::int64_t e2, std::int64_t e3) {
  if (index < 1 || e < 1 || index % e != 0) {
    throw Error(ErrorKind::Precondition, "index must be a positive multiple of the ramification level");
  }
  const BigRational g = make_rational(1) + make_rational(index, 12) - make_rational(e2, 4) - make_rational(e3, 3) -
                        make_rational(index / e, 2);
  if (!exact::is_integer(g)) throw Error(ErrorKind::NonIntegral, "genus " + exact::to_string(g));
  return *exact::to_int64(g);
}

std::vector<Psl2zRepData> psl2z_characters() {
  std::vector<Psl2zRepData> out;
  for (std::int64_t j = 0; j < 6; ++j) {
    Psl2zRepData r;
    r.id = "chi_" + std::to_string(j);
    r.dim = 1;
    r.trace_S = Cyclotomic(j % 2 == 0 ? 1 : -1);
    r.trace_R = zeta(3, -j).simplified();
    r.trace_Rinv = zeta(3, j).simplified();
    std::vector<std::int64_t> counts(6, 0);
    counts[static_cast<std::size_t>(j)] = 1;
    r.t_profile = EigenvalueProfile(6, counts);
    r.is_trivial = j == 0;
    out.push_back(std::move(r));
  }
  return out;
}

const std::vector<AdmissibleSpectrum>& admissible_2dim_spectra() {
  static const std::vector<AdmissibleSpectrum> spectra{
      {12, 1, 5, 48, 12, 3},
      {8, 1, 3, 48, 8, 2},
      {20, 1, 9, 240, 20, 15},
      {20, 3, 7, 720, 60, 55},
  };
  return spectra;
}

std::vector<Psl2zRepData> finite_image_2dim_reps() {
  // Exponents over zeta_120, which contains every eigenvalue that can occur.
  constexpr std::int64_t kL = 120;
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  std::vector<Psl2zRepData> out;
  for (std::int64_t t = 0; t < 3; ++t) {
    // det T = -det R = -zeta3^t.
    const std::int64_t det = exact::mod(kL / 2 + t * kL / 3, kL);
    for (std::int64_t a = 0; a < kL; ++a) {
      const std::int64_t b = exact::mod(det - a, kL);
      if (b < a) continue;
      const std::int64_t ratio_order = kL / std::gcd(exact::mod(a - b, kL), kL);
      if (ratio_order < 2 || ratio_order > 5) continue;
      if (!seen.insert({a, b}).second) continue;
      const std::int64_t n = kL / std::gcd(std::gcd(a, b), kL);
      const std::int64_t step = kL / n;
      Psl2zRepData r;
      r.dim = 2;
      r.trace_S = Cyclotomic(0);
      if (t == 0) {
        r.trace_R = Cyclotomic(-1);
        r.trace_Rinv = Cyclotomic(-1);
      } else {
        r.trace_R = Cyclotomic(1) + zeta(3, t);
        r.trace_Rinv = Cyclotomic(1) + zeta(3, -t);
      }
      const std::int64_t exps[] = {a / step, b / step};
      r.t_profile = EigenvalueProfile::from_exponents(static_cast<std::uint32_t>(n), exps);
      r.id = "z" + std::to_string(n) + "^" + std::to_string(a / step) + ",z" + std::to_string(n) + "^" +
             std::to_string(b / step);
      out.push_back(std::move(r));
    }
  }
  return out;
}

bool ModelReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const ModelCheck& c) { return c.passed; });
}

ModelReport verify_model(const MatrixModel& model, const Psl2zRepData& expected) {
  ModelReport report;
  report.id = model.id;
  const std::size_t n = model.S.size();
  const auto dim_ok = static_cast<std::int64_t>(n) == expected.dim && model.T.size() == n;
  report.checks.push_back({"dimension", dim_ok, std::to_string(n)});
  if (!dim_ok) return report;

  const auto id = CycloMatrix::identity(n);
  const CycloMatrix r = model.S * model.T;
  report.checks.push_back({"S^2 = I", (model.S * model.S) == id, ""});
  report.checks.push_back({"(ST)^3 = I", r.pow(3) == id, ""});

  const std::uint32_t e = expected.t_profile.order();
  const bool finite = model.T.pow(e) == id;
  report.checks.push_back({"T^" + std::to_string(e) + " = I", finite, ""});

  const auto poly = model.T.characteristic_polynomial();
  std::vector<std::int64_t> counts(e, 0);
  for (std::uint32_t k = 0; k < e; ++k) {
    counts[k] = static_cast<std::int64_t>(exact::root_multiplicity(poly, zeta(e, k)));
  }
  const EigenvalueProfile found(e, counts);
  if (finite) report.t_profile = found;
  const bool spectrum_ok = finite && found == expected.t_profile;
  report.checks.push_back(
      {"T eigenvalues", spectrum_ok, "found " + found.to_string() + ", expected " + expected.t_profile.to_string()});

  auto trace_check = [&report](const std::string& name, const Cyclotomic& got, const Cyclotomic& want) {
    report.checks.push_back({name, got == want, "found " + got.to_string() + ", expected " + want.to_string()});
  };
  trace_check("Tr S", model.S.trace(), expected.trace_S);
  trace_check("Tr R", r.trace(), expected.trace_R);
  trace_check("Tr R^-1", r.inverse().trace(), expected.trace_Rinv);
  return report;
}

std::vector<Psl2zRepData> reps_from_character_table(const group::FiniteGroup& group, const group::CharacterTable& table,
                                                    std::size_t s_index, std::size_t t_index) {
  const auto& class_of = table.partition.class_of;
  const std::size_t r_index = group.multiply(s_index, t_index);
  const std::size_t rinv_index = group.inverse(r_index);
  std::vector<Psl2zRepData> out;
  for (std::size_t row = 0; row < table.characters.size(); ++row) {
    const auto& chi = table.characters[row];
    Psl2zRepData rep;
    rep.id = "chi" + std::to_string(row);
    rep.dim = table.dimensions[row];
    rep.trace_S = chi[class_of[s_index]];
    rep.trace_R = chi[class_of[r_index]];
    rep.trace_Rinv = chi[class_of[rinv_index]];
    rep.t_profile = group::nk_profile(table.values_on_powers(group, row, t_index), rep.dim);
    rep.is_trivial = std::all_of(chi.begin(), chi.end(), [](const Cyclotomic& v) { return v == Cyclotomic(1); });
    out.push_back(std::move(rep));
  }
  return out;
}

group::FiniteGroup congruence_quotient(std::uint32_t level, std::size_t size_cap) {
  const std::vector<group::GroupElement> gens{group::ModMatrix::make(0, -1, 1, 0, level, true),
                                              group::ModMatrix::make(1, 1, 0, 1, level, true)};
  return group::FiniteGroup::generate(gens, size_cap);
}

}  // namespace cw::modular

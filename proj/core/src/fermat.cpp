#include "cw/fermat/fermat.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "cw/error.hpp"
#include "cw/exact/number_theory.hpp"
#include "cw/group/element.hpp"

namespace cw::fermat {

using exact::mod;
using group::SemidirectElement;

namespace {

void check_exponent(std::uint32_t n) {
  if (n < 3) throw Error(ErrorKind::TooSmall, "the Fermat exponent must be at least 3");
}

CharLabel label(std::uint32_t n, std::int64_t a, std::int64_t b) { return {n, mod(a, n), mod(b, n)}; }

Cyclotomic zeta(std::uint32_t n, std::int64_t k) { return Cyclotomic::root_of_unity(n, k).simplified(); }

}  // namespace

std::string CharLabel::to_string() const {
  return "chi_" + std::to_string(alpha) + "," + std::to_string(beta);
}

CharLabel swap(const CharLabel& c) { return label(c.n, c.beta, c.alpha); }

CharLabel rotate(const CharLabel& c) { return label(c.n, c.beta, -c.alpha - c.beta); }

std::vector<Orbit> orbit_decomposition(std::uint32_t n) {
  check_exponent(n);
  std::set<CharLabel> seen;
  std::vector<Orbit> out;
  for (std::int64_t a = 0; a < n; ++a) {
    for (std::int64_t b = 0; b < n; ++b) {
      const CharLabel start = label(n, a, b);
      if (seen.count(start)) continue;
      std::set<CharLabel> members{start};
      std::vector<CharLabel> frontier{start};
      while (!frontier.empty()) {
        const CharLabel c = frontier.back();
        frontier.pop_back();
        for (const CharLabel& next : {swap(c), rotate(c)}) {
          if (members.insert(next).second) frontier.push_back(next);
        }
      }
      seen.insert(members.begin(), members.end());
      Orbit orbit;
      orbit.members.assign(members.begin(), members.end());
      switch (members.size()) {
        case 1: orbit.stabilizer = Stabilizer::S3; break;
        case 3: orbit.stabilizer = Stabilizer::C2; break;
        case 6: orbit.stabilizer = Stabilizer::Trivial; break;
        default: throw Error(ErrorKind::CensusMismatch, "orbit of size " + std::to_string(members.size()));
      }
      if (orbit.stabilizer == Stabilizer::Trivial) {
        const auto it = std::find_if(orbit.members.begin(), orbit.members.end(),
                                     [](const CharLabel& c) { return c.alpha != 0 && c.beta != 0; });
        if (it == orbit.members.end()) throw Error(ErrorKind::CensusMismatch, "free orbit without a nonzero member");
        orbit.representative = *it;
      } else {
        const auto it = std::find_if(orbit.members.begin(), orbit.members.end(),
                                     [](const CharLabel& c) { return c.alpha == c.beta; });
        if (it == orbit.members.end()) throw Error(ErrorKind::CensusMismatch, "no diagonal member in a short orbit");
        orbit.representative = *it;
      }
      out.push_back(std::move(orbit));
    }
  }

  auto rank = [](Stabilizer s) { return s == Stabilizer::S3 ? 0 : s == Stabilizer::C2 ? 1 : 2; };
  std::sort(out.begin(), out.end(), [&](const Orbit& x, const Orbit& y) {
    if (rank(x.stabilizer) != rank(y.stabilizer)) return rank(x.stabilizer) < rank(y.stabilizer);
    return x.representative < y.representative;
  });

  const std::int64_t nn = n;
  const std::int64_t fixed = n % 3 == 0 ? 3 : 1;
  const std::int64_t short_orbits = nn - fixed;
  const std::int64_t free_orbits = (nn * nn - fixed - 3 * short_orbits) / 6;
  std::map<Stabilizer, std::int64_t> census;
  for (const auto& o : out) ++census[o.stabilizer];
  if (census[Stabilizer::S3] != fixed || census[Stabilizer::C2] != short_orbits ||
      census[Stabilizer::Trivial] != free_orbits || fixed + 3 * short_orbits + 6 * free_orbits != nn * nn) {
    throw Error(ErrorKind::CensusMismatch, "orbit census for N = " + std::to_string(n));
  }
  return out;
}

std::string FermatRep::label() const {
  const auto a = std::to_string(alpha);
  switch (kind) {
    case Kind::Rho1: return "rho_1";
    case Kind::Rho2: return "rho_2";
    case Kind::Rho3: return "rho_3";
    case Kind::Plus: return "rho+_" + a;
    case Kind::Minus: return "rho-_" + a;
    case Kind::Six: return "rho_" + a + "," + std::to_string(beta);
    case Kind::Extra1: return "rho^1_" + a;
    case Kind::Extra2: return "rho^2_" + a;
    case Kind::Extra3: return "rho^3_" + a;
  }
  return "?";
}

EigenvalueProfile FermatRep::t_profile() const { return EigenvalueProfile::from_exponents(2 * n, t_exponents); }

modular::Psl2zRepData FermatRep::to_psl2z() const {
  return {label(), dim, trace_S, trace_R, trace_Rinv, t_profile(), kind == Kind::Rho1};
}

std::vector<FermatRep> rep_table(std::uint32_t n) {
  check_exponent(n);
  const std::int64_t nn = n;
  const Cyclotomic one(1);
  const Cyclotomic zero(0);
  std::vector<FermatRep> out;
  auto add = [&](Kind kind, std::int64_t a, std::int64_t b, std::int64_t dim, Cyclotomic s, Cyclotomic r,
                 Cyclotomic rinv, std::vector<std::int64_t> exps) {
    for (auto& e : exps) e = mod(e, 2 * nn);
    out.push_back({n, kind, a, b, dim, std::move(s), std::move(r), std::move(rinv), std::move(exps)});
  };

  add(Kind::Rho1, 0, 0, 1, one, one, one, {0});
  add(Kind::Rho2, 0, 0, 1, -one, one, one, {nn});
  add(Kind::Rho3, 0, 0, 2, zero, -one, -one, {0, nn});

  const auto orbits = orbit_decomposition(n);
  std::vector<std::int64_t> alphas;
  for (const auto& o : orbits) {
    if (o.stabilizer == Stabilizer::C2) alphas.push_back(o.representative.alpha);
  }
  // zeta_N^-a = zeta_2N^-2a and -x multiplies by zeta_2N^N.
  for (auto a : alphas) add(Kind::Plus, a, a, 3, one, zero, zero, {-2 * a, a, a + nn});
  for (auto a : alphas) add(Kind::Minus, a, a, 3, -one, zero, zero, {nn - 2 * a, a + nn, a});
  for (const auto& o : orbits) {
    if (o.stabilizer != Stabilizer::Trivial) continue;
    const auto a = o.representative.alpha;
    const auto b = o.representative.beta;
    add(Kind::Six, a, b, 6, zero, zero, zero, {a, a + nn, b, b + nn, -a - b, -a - b + nn});
  }
  if (n % 3 == 0) {
    const std::int64_t third = nn / 3;
    const std::int64_t two_thirds = 2 * nn / 3;
    const Cyclotomic z3 = zeta(3, 1);
    const Cyclotomic z3inv = zeta(3, 2);
    // zeta_3 = zeta_2N^(2N/3), zeta_6 = zeta_2N^(N/3).
    add(Kind::Extra1, third, third, 1, one, z3inv, z3, {-2 * third});
    add(Kind::Extra1, two_thirds, two_thirds, 1, one, z3, z3inv, {2 * third});
    add(Kind::Extra2, third, third, 1, -one, z3inv, z3, {nn - 2 * third});
    add(Kind::Extra2, two_thirds, two_thirds, 1, -one, z3, z3inv, {nn + 2 * third});
    add(Kind::Extra3, third, third, 2, zero, -z3inv, -z3, {third, third + nn});
    add(Kind::Extra3, two_thirds, two_thirds, 2, zero, -z3, -z3inv, {nn + 2 * third, 2 * third});
  }

  std::int64_t sum = 0;
  for (const auto& r : out) sum += r.dim * r.dim;
  if (sum != 6 * nn * nn) {
    throw Error(ErrorKind::CensusMismatch, "sum of squared dimensions " + std::to_string(sum) + " for N = " +
                                               std::to_string(n));
  }
  return out;
}

std::int64_t genus(std::uint32_t n) {
  const std::int64_t nn = n;
  return (nn - 1) * (nn - 2) / 2;
}

namespace {

orbifold::Decomposition certify(orbifold::Decomposition out, std::uint32_t n) {
  const auto g = genus(n);
  out.certificate = orbifold::GenusCertificate{g, out.total_dimension()};
  if (out.certificate->computed != g) {
    throw Error(ErrorKind::GenusMismatch, "N = " + std::to_string(n) + ": total " +
                                              std::to_string(out.certificate->computed) + ", genus " +
                                              std::to_string(g));
  }
  return out;
}

}  // namespace

orbifold::Decomposition multiplicities_closed_form(std::uint32_t n) {
  const std::int64_t nn = n;
  orbifold::Decomposition out;
  for (const auto& rep : rep_table(n)) {
    std::int64_t d = 0;
    switch (rep.kind) {
      case Kind::Minus: d = rep.alpha <= (nn - 1) / 2 ? 1 : 0; break;
      case Kind::Six: d = rep.alpha + rep.beta < nn ? 1 : 0; break;
      case Kind::Extra2: d = rep.alpha == nn / 3 ? 1 : 0; break;
      default: d = 0;
    }
    out.entries.push_back({rep.label(), rep.dim, d});
  }
  return certify(std::move(out), n);
}

orbifold::Decomposition multiplicities_direct(std::uint32_t n) {
  const auto cover = modular::modular_cover(2 * static_cast<std::int64_t>(n));
  orbifold::Decomposition out;
  for (const auto& rep : rep_table(n)) {
    const auto data = rep.to_psl2z();
    const auto d = data.is_trivial ? orbifold::cw_multiplicity_general(cover, modular::to_rep_input(data))
                                   : modular::cw_modular(data);
    out.entries.push_back({rep.label(), rep.dim, d});
  }
  return certify(std::move(out), n);
}

group::FiniteGroup fermat_group(std::uint32_t n, std::size_t size_cap) {
  check_exponent(n);
  const std::vector<group::GroupElement> gens{SemidirectElement::make(0, 0, group::s3::kSwap, n),
                                              SemidirectElement::make(0, -1, group::s3::kSwapRotation, n)};
  auto g = group::FiniteGroup::generate(gens, size_cap);
  if (g.order() != 6ULL * n * n) throw Error(ErrorKind::CensusMismatch, "unexpected group order");
  return g;
}

namespace {

// v -> M v for the S3 matrix of sigma.
std::pair<std::int64_t, std::int64_t> act(int sigma, std::int64_t a, std::int64_t b) {
  const auto& m = group::s3::matrix(sigma);
  return {m[0] * a + m[1] * b, m[2] * a + m[3] * b};
}

std::vector<int> stabilizer_of(const CharLabel& chi) {
  // chi(M v) = chi(v) for v = (1,0) and (0,1).
  std::vector<int> out;
  for (int s = 0; s < 6; ++s) {
    const auto& m = group::s3::matrix(s);
    const bool fixes = mod(chi.alpha * m[0] + chi.beta * m[2] - chi.alpha, chi.n) == 0 &&
                       mod(chi.alpha * m[1] + chi.beta * m[3] - chi.beta, chi.n) == 0;
    if (fixes) out.push_back(s);
  }
  return out;
}

void check_little_rep(const std::vector<int>& stab, LittleRep psi) {
  if ((psi == LittleRep::Sign && stab.size() < 2) || (psi == LittleRep::Standard && stab.size() != 6)) {
    throw Error(ErrorKind::Precondition, "representation is not defined on the stabilizer");
  }
}

int little_dim(LittleRep psi) { return psi == LittleRep::Standard ? 2 : 1; }

// Theta(w, k) = chi(w) psi(k) as a (dim psi)-square matrix, row major.
std::vector<Cyclotomic> theta(const CharLabel& chi, LittleRep psi, std::int64_t a, std::int64_t b, int k) {
  const Cyclotomic x = zeta(chi.n, chi.alpha * a + chi.beta * b);
  switch (psi) {
    case LittleRep::Trivial: return {x};
    case LittleRep::Sign: return {x * Cyclotomic(group::s3::sign(k))};
    case LittleRep::Standard: {
      const auto& m = group::s3::matrix(k);
      return {x * Cyclotomic(m[0]), x * Cyclotomic(m[1]), x * Cyclotomic(m[2]), x * Cyclotomic(m[3])};
    }
  }
  return {};
}

Cyclotomic theta_trace(const CharLabel& chi, LittleRep psi, std::int64_t a, std::int64_t b, int k) {
  const auto m = theta(chi, psi, a, b, k);
  return psi == LittleRep::Standard ? m[0] + m[3] : m[0];
}

// (0, s)^-1 (v, h) (0, t) = (s^-1 v, s^-1 h t).
std::tuple<std::int64_t, std::int64_t, int> conjugate(int s, const SemidirectElement& g, int t) {
  const int si = group::s3::inverse(s);
  const auto [a, b] = act(si, g.a, g.b);
  return {a, b, group::s3::multiply(group::s3::multiply(si, g.sigma), t)};
}

const SemidirectElement& as_semidirect(const group::FiniteGroup& g, std::size_t index) {
  return std::get<SemidirectElement>(g.element(index));
}

}  // namespace

EigenvalueProfile InducedData::t_profile() const { return group::nk_profile(on_t_powers, dim); }

Cyclotomic induced_value(const group::FiniteGroup& g, const CharLabel& chi, LittleRep psi, std::size_t index) {
  const auto stab = stabilizer_of(chi);
  check_little_rep(stab, psi);
  const auto& x = as_semidirect(g, index);
  Cyclotomic sum;
  for (int s = 0; s < 6; ++s) {
    const auto [a, b, k] = conjugate(s, x, s);
    if (std::find(stab.begin(), stab.end(), k) != stab.end()) sum += theta_trace(chi, psi, a, b, k);
  }
  return (sum / Cyclotomic(static_cast<std::int64_t>(stab.size()))).simplified();
}

InducedData induced_character(const group::FiniteGroup& g, const CharLabel& chi, LittleRep psi) {
  const auto stab = stabilizer_of(chi);
  check_little_rep(stab, psi);
  auto value = [&](std::size_t index) { return induced_value(g, chi, psi, index); };

  const auto s = g.generator_indices()[0];
  const auto t = g.generator_indices()[1];
  const auto r = g.multiply(s, t);
  InducedData out;
  out.chi = chi;
  out.psi = psi;
  out.dim = static_cast<std::int64_t>(6 / stab.size()) * little_dim(psi);
  out.trace_S = value(s);
  out.trace_R = value(r);
  out.trace_Rinv = value(g.inverse(r));
  for (std::uint32_t j = 0; j < 2 * chi.n; ++j) out.on_t_powers.push_back(value(g.power(t, j)));
  return out;
}

std::vector<InducedData> induced_table(const group::FiniteGroup& g, std::uint32_t n) {
  std::vector<InducedData> out;
  for (const auto& o : orbit_decomposition(n)) {
    switch (o.stabilizer) {
      case Stabilizer::S3:
        for (auto psi : {LittleRep::Trivial, LittleRep::Sign, LittleRep::Standard}) {
          out.push_back(induced_character(g, o.representative, psi));
        }
        break;
      case Stabilizer::C2:
        for (auto psi : {LittleRep::Trivial, LittleRep::Sign}) out.push_back(induced_character(g, o.representative, psi));
        break;
      case Stabilizer::Trivial: out.push_back(induced_character(g, o.representative, LittleRep::Trivial)); break;
    }
  }
  return out;
}

modular::MatrixModel induced_model(const group::FiniteGroup& g, const CharLabel& chi, LittleRep psi) {
  const auto stab = stabilizer_of(chi);
  check_little_rep(stab, psi);
  const auto in_stab = [&stab](int k) { return std::find(stab.begin(), stab.end(), k) != stab.end(); };

  // Left coset representatives of the stabilizer in S3.
  std::vector<int> reps;
  for (int s = 0; s < 6; ++s) {
    const bool new_coset = std::none_of(reps.begin(), reps.end(), [&](int r) {
      return in_stab(group::s3::multiply(group::s3::inverse(r), s));
    });
    if (new_coset) reps.push_back(s);
  }
  const std::size_t b = little_dim(psi);
  const std::size_t dim = reps.size() * b;

  auto matrix_of = [&](std::size_t index) {
    const auto& x = as_semidirect(g, index);
    exact::CycloMatrix m(dim);
    for (std::size_t i = 0; i < reps.size(); ++i) {
      for (std::size_t j = 0; j < reps.size(); ++j) {
        const auto [a, bb, k] = conjugate(reps[i], x, reps[j]);
        if (!in_stab(k)) continue;
        const auto block = theta(chi, psi, a, bb, k);
        for (std::size_t u = 0; u < b; ++u) {
          for (std::size_t v = 0; v < b; ++v) m(i * b + u, j * b + v) = block[u * b + v];
        }
      }
    }
    return m;
  };

  return {chi.to_string(), matrix_of(g.generator_indices()[0]), matrix_of(g.generator_indices()[1])};
}

modular::MatrixModel model_for(const group::FiniteGroup& g, const FermatRep& rep) {
  const auto n = rep.n;
  CharLabel chi = label(n, rep.alpha, rep.beta);
  LittleRep psi = LittleRep::Trivial;
  switch (rep.kind) {
    case Kind::Rho2:
    case Kind::Minus:
    case Kind::Extra2: psi = LittleRep::Sign; break;
    case Kind::Rho3:
    case Kind::Extra3: psi = LittleRep::Standard; break;
    default: break;
  }
  auto model = induced_model(g, chi, psi);
  model.id = rep.label();
  return model;
}

}  // namespace cw::fermat

#include "cw/psl2/psl2fp.hpp"

#include "cw/error.hpp"
#include "cw/exact/number_theory.hpp"

namespace cw::psl2 {

using exact::make_rational;

namespace {

void check_prime(std::uint32_t p) {
  if (!exact::is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (p < 5) throw Error(ErrorKind::TooSmall, "p must be at least 5");
}

int sign_pow(std::int64_t e) { return e % 2 == 0 ? 1 : -1; }

Cyclotomic half(const Cyclotomic& x) { return x / Cyclotomic(2); }

}  // namespace

std::string to_string(Family family) {
  switch (family) {
    case Family::Trivial: return "trivial";
    case Family::Lambda: return "lambda";
    case Family::Mu: return "mu";
    case Family::Theta: return "theta";
    case Family::Chi1: return "chi_1";
    case Family::Chi2: return "chi_2";
    case Family::Gamma1: return "gamma_1";
    case Family::Gamma2: return "gamma_2";
  }
  return "?";
}

std::string Psl2fpCharData::label() const {
  if (family == Family::Mu || family == Family::Theta) return to_string(family) + "_" + std::to_string(parameter);
  return to_string(family);
}

int legendre(std::int64_t a, std::uint32_t p) {
  const auto r = static_cast<std::uint64_t>(exact::mod(a, p));
  if (r == 0) return 0;
  return exact::pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

int epsilon3(std::int64_t n) { return exact::mod(n, 3) == 0 ? 2 : -1; }

Cyclotomic gauss_sum(std::uint32_t p) {
  std::vector<BigRational> dense(p);
  for (std::uint32_t k = 1; k < p; ++k) dense[k] = legendre(k, p);
  return Cyclotomic::from_dense(p, dense);
}

std::vector<Psl2fpCharData> char_data(std::uint32_t p) {
  check_prime(p);
  const bool one_mod_4 = p % 4 == 1;
  const bool one_mod_3 = p % 3 == 1;
  const Cyclotomic g = gauss_sum(p);
  const Cyclotomic one(1);

  std::vector<Psl2fpCharData> out;
  auto add = [&](Family f, std::int64_t param, std::int64_t dim, Cyclotomic s, Cyclotomic r, Cyclotomic t,
                 Cyclotomic tn) {
    out.push_back({p, f, param, dim, std::move(s), std::move(r), std::move(t), std::move(tn)});
  };
  const auto pp = static_cast<std::int64_t>(p);

  add(Family::Trivial, 0, 1, one, one, one, one);
  if (one_mod_4) {
    add(Family::Lambda, 0, pp, 1, one_mod_3 ? 1 : -1, 0, 0);
    for (std::int64_t s = 1; s <= (pp - 5) / 4; ++s) {
      add(Family::Mu, s, pp + 1, 2 * sign_pow(s), one_mod_3 ? epsilon3(s) : 0, 1, 1);
    }
    for (std::int64_t t = 1; t <= (pp - 1) / 4; ++t) {
      add(Family::Theta, t, pp - 1, 0, one_mod_3 ? 0 : -epsilon3(t), -1, -1);
    }
    const Cyclotomic s_trace(sign_pow((pp - 1) / 4));
    const Cyclotomic r_trace(one_mod_3 ? 1 : 0);
    add(Family::Chi1, 0, (pp + 1) / 2, s_trace, r_trace, half(one + g), half(one - g));
    add(Family::Chi2, 0, (pp + 1) / 2, s_trace, r_trace, half(one - g), half(one + g));
  } else {
    add(Family::Lambda, 0, pp, -1, one_mod_3 ? 1 : -1, 0, 0);
    for (std::int64_t s = 1; s <= (pp - 3) / 4; ++s) {
      add(Family::Mu, s, pp + 1, 0, one_mod_3 ? epsilon3(s) : 0, 1, 1);
    }
    for (std::int64_t t = 1; t <= (pp - 3) / 4; ++t) {
      add(Family::Theta, t, pp - 1, -2 * sign_pow(t), one_mod_3 ? 0 : -epsilon3(t), -1, -1);
    }
    const Cyclotomic s_trace(-sign_pow((pp + 1) / 4));
    const Cyclotomic r_trace(one_mod_3 ? 0 : -1);
    add(Family::Gamma1, 0, (pp - 1) / 2, s_trace, r_trace, half(-one - g), half(-one + g));
    add(Family::Gamma2, 0, (pp - 1) / 2, s_trace, r_trace, half(-one + g), half(-one - g));
  }
  return out;
}

EigenvalueProfile t_profile(const Psl2fpCharData& rep) {
  const std::uint32_t p = rep.p;
  std::vector<std::int64_t> counts(p, 0);
  auto fill_units = [&](int residue_class) {
    for (std::uint32_t k = 1; k < p; ++k) {
      if (residue_class == 0 || legendre(k, p) == residue_class) counts[k] = 1;
    }
  };
  switch (rep.family) {
    case Family::Trivial: counts[0] = 1; break;
    case Family::Lambda: counts[0] = 1; fill_units(0); break;
    case Family::Mu: counts[0] = 2; fill_units(0); break;
    case Family::Theta: fill_units(0); break;
    case Family::Chi1: counts[0] = 1; fill_units(1); break;
    case Family::Chi2: counts[0] = 1; fill_units(-1); break;
    case Family::Gamma1: fill_units(-1); break;
    case Family::Gamma2: fill_units(1); break;
  }
  EigenvalueProfile profile(p, std::move(counts));
  if (profile.dim() != rep.dim) throw Error(ErrorKind::Precondition, rep.label() + ": T-profile does not sum to dim");
  return profile;
}

std::vector<Cyclotomic> values_on_t_powers(const Psl2fpCharData& rep) {
  std::vector<Cyclotomic> out;
  out.reserve(rep.p);
  out.emplace_back(rep.dim);
  for (std::uint32_t j = 1; j < rep.p; ++j) out.push_back(legendre(j, rep.p) == 1 ? rep.trace_T : rep.trace_T_nonresidue);
  return out;
}

modular::Psl2zRepData to_psl2z(const Psl2fpCharData& rep) {
  modular::Psl2zRepData out;
  out.id = rep.label();
  out.dim = rep.dim;
  out.trace_S = rep.trace_S;
  out.trace_R = rep.trace_R;
  out.trace_Rinv = rep.trace_R;
  out.t_profile = t_profile(rep);
  out.is_trivial = rep.family == Family::Trivial;
  return out;
}

std::pair<BigRational, BigRational> residue_sums(std::uint32_t p) {
  BigRational qr, qnr;
  for (std::uint32_t k = 1; k < p; ++k) (legendre(k, p) == 1 ? qr : qnr) += make_rational(k, p);
  return {qr, qnr};
}

std::int64_t class_number(std::uint32_t p) {
  if (!exact::is_prime(p) || p % 4 != 3 || p < 7) {
    throw Error(ErrorKind::Precondition, "class number needs a prime p = 3 (mod 4), p >= 7");
  }
  const BigRational h = make_rational(p - 1, 2) - 2 * residue_sums(p).first;
  const auto v = exact::is_integer(h) ? exact::to_int64(h) : std::nullopt;
  if (!v || *v <= 0) throw Error(ErrorKind::NonIntegral, "class number " + exact::to_string(h));
  return *v;
}

std::int64_t class_number_reduced_forms(std::uint32_t p) {
  // a x^2 + b x y + c y^2 with b^2 - 4ac = -p, |b| <= a <= c, and b >= 0
  // whenever |b| = a or a = c.
  const auto disc = static_cast<std::int64_t>(p);
  std::int64_t count = 0;
  for (std::int64_t a = 1; 3 * a * a <= disc; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      const std::int64_t num = b * b + disc;
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = num / (4 * a);
      if (c < a) continue;
      if (a == c && b < 0) continue;
      ++count;
    }
  }
  return count;
}

std::int64_t genus_gamma(std::uint32_t p) {
  check_prime(p);
  const auto pp = static_cast<std::int64_t>(p);
  return modular::genus_normal_subgroup(pp * (pp * pp - 1) / 2, pp);
}

namespace {

std::int64_t checked_multiplicity(const BigRational& d, const std::string& id) {
  if (!exact::is_integer(d)) throw Error(ErrorKind::NonIntegral, id + ": multiplicity " + exact::to_string(d));
  const auto v = *exact::to_int64(d);
  if (v < 0) throw Error(ErrorKind::Negative, id + ": multiplicity " + std::to_string(v));
  return v;
}

orbifold::Decomposition certify(orbifold::Decomposition out, std::uint32_t p) {
  const auto genus = genus_gamma(p);
  out.certificate = orbifold::GenusCertificate{genus, out.total_dimension()};
  if (out.certificate->computed != genus) {
    throw Error(ErrorKind::GenusMismatch, "p = " + std::to_string(p) + ": total " +
                                              std::to_string(out.certificate->computed) + ", genus " +
                                              std::to_string(genus));
  }
  return out;
}

}  // namespace

orbifold::Decomposition multiplicities_closed_form(std::uint32_t p) {
  const auto reps = char_data(p);
  const auto pp = static_cast<std::int64_t>(p);
  const BigRational l3 = legendre(pp, 3);
  const BigRational one = 1;
  orbifold::Decomposition out;
  for (const auto& rep : reps) {
    BigRational d;
    const auto s = rep.parameter;
    if (p % 4 == 1) {
      switch (rep.family) {
        case Family::Trivial: d = 0; break;
        case Family::Lambda: d = make_rational(pp - 9, 12) - l3 / 3; break;
        case Family::Mu:
          d = make_rational(pp - 11, 12) - make_rational(sign_pow(s), 2) - (one + l3) * make_rational(epsilon3(s), 6);
          break;
        case Family::Theta: d = make_rational(pp - 1, 12) + (one - l3) * make_rational(epsilon3(s), 6); break;
        case Family::Chi1:
        case Family::Chi2:
          d = make_rational(pp - 11, 24) - make_rational(sign_pow((pp - 1) / 4), 4) - (one + l3) / 6;
          break;
        default: throw Error(ErrorKind::Precondition, "unexpected family for p = 1 (4)");
      }
    } else {
      const BigRational h = class_number(p);
      switch (rep.family) {
        case Family::Trivial: d = 0; break;
        case Family::Lambda: d = make_rational(pp - 3, 12) - l3 / 3; break;
        case Family::Mu: d = make_rational(pp - 11, 12) - (one + l3) * make_rational(epsilon3(s), 6); break;
        case Family::Theta:
          d = make_rational(pp - 1, 12) + make_rational(sign_pow(s), 2) + (one - l3) * make_rational(epsilon3(s), 6);
          break;
        case Family::Gamma1:
        case Family::Gamma2: {
          const BigRational common =
              make_rational(pp - 1, 24) + make_rational(sign_pow((pp + 1) / 4), 4) + (one - l3) / 6;
          d = common + (rep.family == Family::Gamma1 ? -h : h) / 2;
          break;
        }
        default: throw Error(ErrorKind::Precondition, "unexpected family for p = 3 (4)");
      }
    }
    out.entries.push_back({rep.label(), rep.dim, checked_multiplicity(d, rep.label())});
  }
  return certify(std::move(out), p);
}

orbifold::Decomposition multiplicities_direct(std::uint32_t p) {
  const auto reps = char_data(p);
  orbifold::Decomposition out;
  const auto cover = modular::modular_cover(p);
  for (const auto& rep : reps) {
    const auto data = to_psl2z(rep);
    const auto d = rep.family == Family::Trivial
                       ? orbifold::cw_multiplicity_general(cover, modular::to_rep_input(data))
                       : modular::cw_modular(data);
    out.entries.push_back({rep.label(), rep.dim, d});
  }
  return certify(std::move(out), p);
}

}  // namespace cw::psl2

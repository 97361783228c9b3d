#include "cw/orbifold/chevalley_weil.hpp"

#include <string>

#include "cw/error.hpp"

namespace cw::orbifold {

using exact::make_rational;

void OrbifoldCurve::validate() const {
  if (genus < 0) throw Error(ErrorKind::Precondition, "genus must be nonnegative");
  for (auto p : orbifold_orders) {
    if (p < 2) throw Error(ErrorKind::Precondition, "orbifold orders must be at least 2");
  }
}

void CoverSpec::validate() const {
  base.validate();
  if (orbifold_monodromies.size() != base.orbifold_orders.size()) {
    throw Error(ErrorKind::Precondition, "one monodromy label is needed per orbifold point");
  }
  for (const auto& r : ramification) {
    if (r.degree < 2) throw Error(ErrorKind::Precondition, "ramification degrees must be at least 2");
    if (group_order != 0 && group_order % static_cast<std::uint64_t>(r.degree) != 0) {
      throw Error(ErrorKind::Precondition, "ramification degree " + std::to_string(r.degree) + " does not divide |G|");
    }
  }
  for (auto p : base.orbifold_orders) {
    if (group_order != 0 && group_order % static_cast<std::uint64_t>(p) != 0) {
      throw Error(ErrorKind::Precondition, "orbifold order " + std::to_string(p) + " does not divide |G|");
    }
  }
}

BigRational CwTerms::total() const {
  BigRational out = epsilon + euler_base + ramification_rank + parabolic_degree;
  for (const auto& t : isotropy) out += t;
  return out;
}

std::int64_t Decomposition::total_dimension() const noexcept {
  std::int64_t out = 0;
  for (const auto& e : entries) out += e.dim * e.multiplicity;
  return out;
}

BigRational canonical_degree(const OrbifoldCurve& curve) {
  curve.validate();
  BigRational out = make_rational(2 * curve.genus - 2 + static_cast<std::int64_t>(curve.orbifold_orders.size()));
  for (auto p : curve.orbifold_orders) out -= make_rational(1, p);
  return out;
}

std::int64_t isotropy_trace(const EigenvalueProfile& profile) {
  std::int64_t out = 0;
  for (std::uint32_t k = 0; k < profile.order(); ++k) out += static_cast<std::int64_t>(k) * profile.count(k);
  return out;
}

BigRational riemann_roch_chi(std::int64_t rank, const BigRational& degree, const OrbifoldCurve& base,
                             std::span<const std::int64_t> isotropy_traces) {
  base.validate();
  if (isotropy_traces.size() != base.orbifold_orders.size()) {
    throw Error(ErrorKind::Precondition, "one isotropy trace is needed per orbifold point");
  }
  BigRational out = make_rational(rank * (1 - base.genus)) + degree;
  for (std::size_t i = 0; i < isotropy_traces.size(); ++i) {
    out -= make_rational(isotropy_traces[i], base.orbifold_orders[i]);
  }
  return out;
}

namespace {

void check_profile(const EigenvalueProfile& profile, std::int64_t order, std::int64_t dim, const std::string& where) {
  if (static_cast<std::int64_t>(profile.order()) != order) {
    throw Error(ErrorKind::Precondition, where + ": profile order " + std::to_string(profile.order()) +
                                             " does not match " + std::to_string(order));
  }
  if (profile.dim() != dim) {
    throw Error(ErrorKind::Precondition, where + ": profile counts sum to " + std::to_string(profile.dim()) +
                                             ", expected dimension " + std::to_string(dim));
  }
}

}  // namespace

CwTerms cw_terms(const CoverSpec& cover, const RepInput& rep) {
  cover.validate();
  if (rep.dim < 1) throw Error(ErrorKind::Precondition, "representation dimension must be positive");
  if (rep.ram_profiles.size() != cover.ramification.size() ||
      rep.orb_profiles.size() != cover.base.orbifold_orders.size()) {
    throw Error(ErrorKind::Precondition, "representation " + rep.id + " has the wrong number of profiles");
  }

  CwTerms terms;
  terms.epsilon = rep.is_trivial ? 1 : 0;

  const auto& orders = cover.base.orbifold_orders;
  BigRational base = make_rational(cover.base.genus - 1 + static_cast<std::int64_t>(orders.size()));
  for (auto p : orders) base -= make_rational(1, p);
  terms.euler_base = make_rational(rep.dim) * base;

  for (std::size_t j = 0; j < cover.ramification.size(); ++j) {
    const auto e = cover.ramification[j].degree;
    const auto& profile = rep.ram_profiles[j];
    check_profile(profile, e, rep.dim, rep.id + " at " + cover.ramification[j].monodromy);
    for (std::int64_t k = 1; k < e; ++k) {
      terms.ramification_rank += make_rational(profile.count(k));
      terms.parabolic_degree -= make_rational(profile.count(k) * k, e);
    }
  }

  for (std::size_t j = 0; j < orders.size(); ++j) {
    const auto p = orders[j];
    check_profile(rep.orb_profiles[j], p, rep.dim, rep.id + " at " + cover.orbifold_monodromies[j]);
    const auto twisted = group::twist_profile(rep.orb_profiles[j], -1);
    BigRational term;
    for (std::int64_t k = 1; k < p; ++k) term -= make_rational(twisted.count(k) * k, p);
    terms.isotropy.push_back(term);
  }
  return terms;
}

std::int64_t cw_multiplicity_general(const CoverSpec& cover, const RepInput& rep) {
  const BigRational d = cw_terms(cover, rep).total();
  if (!exact::is_integer(d)) throw Error(ErrorKind::NonIntegral, rep.id + ": multiplicity " + exact::to_string(d));
  const auto value = exact::to_int64(d);
  if (!value) throw Error(ErrorKind::NonIntegral, rep.id + ": multiplicity out of range");
  if (*value < 0) throw Error(ErrorKind::Negative, rep.id + ": multiplicity " + std::to_string(*value));
  return *value;
}

Decomposition decompose(const CoverSpec& cover, std::span<const RepInput> reps,
                        std::optional<std::int64_t> expected_genus) {
  Decomposition out;
  for (const auto& rep : reps) out.entries.push_back({rep.id, rep.dim, cw_multiplicity_general(cover, rep)});
  if (expected_genus) {
    out.certificate = GenusCertificate{*expected_genus, out.total_dimension()};
    if (out.certificate->computed != *expected_genus) {
      throw Error(ErrorKind::GenusMismatch, "sum of multiplicities times dimensions is " +
                                                std::to_string(out.certificate->computed) + ", expected genus " +
                                                std::to_string(*expected_genus));
    }
  }
  return out;
}

}  // namespace cw::orbifold

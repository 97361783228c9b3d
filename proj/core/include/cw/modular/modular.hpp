#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cw/exact/cyclotomic.hpp"
#include "cw/exact/matrix.hpp"
#include "cw/group/character_table.hpp"
#include "cw/group/finite_group.hpp"
#include "cw/group/profile.hpp"
#include "cw/orbifold/chevalley_weil.hpp"

namespace cw::modular {

using exact::BigRational;
using exact::Cyclotomic;
using exact::CycloMatrix;
using group::EigenvalueProfile;

/// A representation of a finite quotient G of PSL2(Z), described by the
/// traces at S, R = ST and R^-1 and the eigenvalue profile of T. The order of
/// the profile is the ramification level e.
struct Psl2zRepData {
  std::string id;
  std::int64_t dim = 1;
  Cyclotomic trace_S;
  Cyclotomic trace_R;
  Cyclotomic trace_Rinv;
  EigenvalueProfile t_profile;
  bool is_trivial = false;
};

/// Multiplicity of a nontrivial irreducible representation of
/// G = PSL2(Z)/Gamma in the weight-two cusp forms of Gamma, from traces.
/// Throws `ErrorKind::TrivialRep`, `ErrorKind::NonIntegral` or
/// `ErrorKind::Negative`.
std::int64_t cw_modular(const Psl2zRepData& rep);

/// Same with the T-profile re-indexed to level e (a multiple of its order).
std::int64_t cw_modular(const Psl2zRepData& rep, std::int64_t e);

/// Cover X(Gamma) -> X(1): base of genus 0 with cone points of orders 2 and 3
/// (monodromies S and R^-1) and a single ramified cusp of index e (monodromy T).
orbifold::CoverSpec modular_cover(std::int64_t e, std::uint64_t group_order = 0);

/// Input for the general formula: S- and R^-1-profiles are recovered from the
/// traces, the T-profile is used as is.
orbifold::RepInput to_rep_input(const Psl2zRepData& rep);

/// Profile of rho(S) (order 2) from its trace: N_0 = (dim + Tr)/2, N_1 = (dim - Tr)/2.
EigenvalueProfile s_profile_from_trace(std::int64_t dim, const Cyclotomic& trace_S);
/// Profile of rho(R^-1) (order 3) from Tr R^-1 and Tr R = Tr (R^-1)^2.
EigenvalueProfile rinv_profile_from_traces(std::int64_t dim, const Cyclotomic& trace_Rinv, const Cyclotomic& trace_R);
/// dim/3 - zeta3^2 Tr R^-1 / (3(1 - zeta3^2)) - zeta3 Tr R / (3(1 - zeta3)), which
/// equals N_1/3 + 2 N_2/3 for the profile of zeta3^-1 rho(R^-1).
Cyclotomic rinv_isotropy_from_traces(std::int64_t dim, const Cyclotomic& trace_Rinv, const Cyclotomic& trace_R);

/// Profile with the same eigenvalues at a level that is a multiple of its order.
EigenvalueProfile relevel(const EigenvalueProfile& profile, std::int64_t e);

/// Genus of X(Gamma) for a normal subgroup of index d with ramification level
/// e and e2, e3 elliptic points: 1 + d/12 - e2/4 - e3/3 - (d/e)/2.
/// Throws `ErrorKind::NonIntegral` when the data is inconsistent.
std::int64_t genus_normal_subgroup(std::int64_t index, std::int64_t e, std::int64_t e2 = 0, std::int64_t e3 = 0);

/// The six characters of PSL2(Z): chi_j(T) = zeta6^j, chi_j(S) = (-1)^j,
/// chi_j(R) = zeta3^-j, for j = 0..5.
std::vector<Psl2zRepData> psl2z_characters();

/// Two-dimensional T-spectrum {zeta_n^a, zeta_n^b} together with the smallest
/// normal subgroup whose cusp forms contain it.
struct AdmissibleSpectrum {
  std::uint32_t order = 1;
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t minimal_index = 0;
  std::int64_t level = 0;  // order of T modulo that subgroup
  std::int64_t genus = 0;
};

/// The four two-dimensional spectra that occur in a canonical representation.
const std::vector<AdmissibleSpectrum>& admissible_2dim_spectra();

/// Two-dimensional irreducible representations of PSL2(Z) with finite image,
/// one per T-spectrum. The projective image of T has order m in {2,3,4,5}
/// and det rho(T) = -det rho(R) is minus a cube root of unity; there are 27.
std::vector<Psl2zRepData> finite_image_2dim_reps();

/// Representation of PSL2(Z) given by S and T matrices.
struct MatrixModel {
  std::string id;
  CycloMatrix S;
  CycloMatrix T;
};

struct ModelCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ModelReport {
  std::string id;
  std::vector<ModelCheck> checks;
  std::optional<EigenvalueProfile> t_profile;  // when T^e = I

  bool passed() const noexcept;
};

/// Exact checks of S^2 = I, (ST)^3 = I, T^e = I, the T-profile from the
/// characteristic polynomial and the traces of S, R = ST and R^-1.
ModelReport verify_model(const MatrixModel& model, const Psl2zRepData& expected);

/// Representation data for every irreducible of a finite quotient of PSL2(Z),
/// given the images of S and T. Each entry's id is "chi<row>".
std::vector<Psl2zRepData> reps_from_character_table(const group::FiniteGroup& group,
                                                    const group::CharacterTable& table, std::size_t s_index,
                                                    std::size_t t_index);

/// Principal congruence quotient PSL2(Z/m) or SL2(Z/m)/{+-1}, generated by S and T.
group::FiniteGroup congruence_quotient(std::uint32_t level, std::size_t size_cap = group::FiniteGroup::kDefaultSizeCap);

}  // namespace cw::modular

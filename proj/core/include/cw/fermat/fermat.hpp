#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cw/exact/cyclotomic.hpp"
#include "cw/group/finite_group.hpp"
#include "cw/group/profile.hpp"
#include "cw/modular/modular.hpp"
#include "cw/orbifold/chevalley_weil.hpp"

namespace cw::fermat {

using exact::Cyclotomic;
using group::EigenvalueProfile;

/// The character chi_{alpha,beta} of (Z/N)^2 with chi(A) = zeta_N^alpha and
/// chi(B) = zeta_N^beta, entries reduced to 0..N-1.
struct CharLabel {
  std::uint32_t n = 3;
  std::int64_t alpha = 0;
  std::int64_t beta = 0;

  std::string to_string() const;
  friend bool operator==(const CharLabel&, const CharLabel&) = default;
  friend auto operator<=>(const CharLabel& a, const CharLabel& b) {
    if (a.alpha != b.alpha) return a.alpha <=> b.alpha;
    return a.beta <=> b.beta;
  }
};

CharLabel swap(const CharLabel& c);
/// (alpha, beta) -> (beta, -alpha - beta).
CharLabel rotate(const CharLabel& c);

enum class Stabilizer { S3, C2, Trivial };

struct Orbit {
  std::vector<CharLabel> members;  // sorted
  Stabilizer stabilizer = Stabilizer::Trivial;
  CharLabel representative;
};

/// S3-orbits on the N^2 characters, ordered by stabilizer (S3, C2, trivial)
/// and then by representative. Size-6 orbits are represented by their least
/// member with both entries nonzero; size-3 orbits by (alpha, alpha). Throws
/// `ErrorKind::TooSmall` for N < 3 and `ErrorKind::CensusMismatch` if the
/// orbit sizes do not add up.
std::vector<Orbit> orbit_decomposition(std::uint32_t n);

enum class Kind { Rho1, Rho2, Rho3, Plus, Minus, Six, Extra1, Extra2, Extra3 };

/// An irreducible representation of (Z/N)^2 x| S3 with its traces at S, R,
/// R^-1 and the T-eigenvalues as exponents of zeta_{2N}.
struct FermatRep {
  std::uint32_t n = 3;
  Kind kind = Kind::Rho1;
  std::int64_t alpha = 0;  // Plus/Minus: alpha; Six: representative; Extra: N/3 or 2N/3
  std::int64_t beta = 0;
  std::int64_t dim = 1;
  Cyclotomic trace_S;
  Cyclotomic trace_R;
  Cyclotomic trace_Rinv;
  std::vector<std::int64_t> t_exponents;

  /// "rho_1", "rho+_2", "rho-_2", "rho_1,3", "rho^2_2", ...
  std::string label() const;
  /// Order-2N profile of rho(T).
  EigenvalueProfile t_profile() const;
  modular::Psl2zRepData to_psl2z() const;
};

/// Every irreducible representation, in the order rho_1, rho_2, rho_3,
/// rho+_alpha, rho-_alpha, six-dimensional ones, then the 3 | N extras.
/// Throws `ErrorKind::CensusMismatch` if the dimensions do not sum correctly.
std::vector<FermatRep> rep_table(std::uint32_t n);

/// Genus (N-1)(N-2)/2 of the Fermat curve.
std::int64_t genus(std::uint32_t n);

/// Multiplicities from the closed formulas, with the genus certificate.
orbifold::Decomposition multiplicities_closed_form(std::uint32_t n);

/// Multiplicities from the modular-group formula at level 2N; rho_1 uses the
/// general formula.
orbifold::Decomposition multiplicities_direct(std::uint32_t n);

/// (Z/N)^2 x| S3 generated by S = (0, swap) and T = ((0,-1), s u), of order
/// 6N^2. Generator indices: S first, T second.
group::FiniteGroup fermat_group(std::uint32_t n, std::size_t size_cap = group::FiniteGroup::kDefaultSizeCap);

/// Irreducible representations of a stabilizer subgroup of S3.
enum class LittleRep { Trivial, Sign, Standard };

/// Data of Ind_K^G (chi x psi), K = (Z/N)^2 x| Stab(chi), computed in the
/// explicit group.
struct InducedData {
  CharLabel chi;
  LittleRep psi = LittleRep::Trivial;
  std::int64_t dim = 0;
  Cyclotomic trace_S;
  Cyclotomic trace_R;
  Cyclotomic trace_Rinv;
  std::vector<Cyclotomic> on_t_powers;  // T^0, ..., T^(2N-1)

  EigenvalueProfile t_profile() const;
};

/// Value of Ind_K^G (chi x psi) at the element with the given index. Throws
/// `ErrorKind::Precondition` if psi is not a representation of the
/// stabilizer of chi.
Cyclotomic induced_value(const group::FiniteGroup& g, const CharLabel& chi, LittleRep psi, std::size_t index);

InducedData induced_character(const group::FiniteGroup& g, const CharLabel& chi, LittleRep psi);

/// Induced data for every orbit representative and every irreducible of its
/// stabilizer.
std::vector<InducedData> induced_table(const group::FiniteGroup& g, std::uint32_t n);

/// Matrices of Ind_K^G (chi x psi) at S and T in the induced basis.
modular::MatrixModel induced_model(const group::FiniteGroup& g, const CharLabel& chi, LittleRep psi);

/// The induced model realising a rep_table entry.
modular::MatrixModel model_for(const group::FiniteGroup& g, const FermatRep& rep);

}  // namespace cw::fermat

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cw/exact/cyclotomic.hpp"
#include "cw/group/profile.hpp"
#include "cw/modular/modular.hpp"
#include "cw/orbifold/chevalley_weil.hpp"

namespace cw::psl2 {

using exact::BigRational;
using exact::Cyclotomic;
using group::EigenvalueProfile;

/// Irreducible characters of PSL2(F_p) in the Frobenius-Schur labelling.
/// Chi1/Chi2 occur for p = 1 (4), Gamma1/Gamma2 for p = 3 (4).
enum class Family { Trivial, Lambda, Mu, Theta, Chi1, Chi2, Gamma1, Gamma2 };

std::string to_string(Family family);

struct Psl2fpCharData {
  std::uint32_t p = 5;
  Family family = Family::Trivial;
  std::int64_t parameter = 0;  // s for Mu, t for Theta, otherwise 0
  std::int64_t dim = 1;
  Cyclotomic trace_S;
  Cyclotomic trace_R;  // equals the trace at R^-1, which is conjugate to R
  Cyclotomic trace_T;
  Cyclotomic trace_T_nonresidue;  // at T^n for a quadratic non-residue n

  /// "lambda", "mu_2", "gamma_1", ...
  std::string label() const;
};

/// Legendre symbol (a/p) for an odd prime p; 0 when p divides a.
int legendre(std::int64_t a, std::uint32_t p);

/// 2 if 3 | n, -1 otherwise.
int epsilon3(std::int64_t n);

/// sum_{k=1}^{p-1} (k/p) zeta_p^k, equal to sqrt(p) for p = 1 (4) and
/// i sqrt(p) = sqrt(-p) for p = 3 (4).
Cyclotomic gauss_sum(std::uint32_t p);

/// All irreducible characters (the trivial one first) with traces at S,
/// R = ST, T and the non-residue unipotent class. Throws
/// `ErrorKind::NotPrime` or `ErrorKind::TooSmall` (p < 5).
std::vector<Psl2fpCharData> char_data(std::uint32_t p);

/// Eigenvalue profile of T (order p), with N_0 fixed by the dimension.
EigenvalueProfile t_profile(const Psl2fpCharData& rep);

/// Character on T^0, ..., T^(p-1) as read from the table.
std::vector<Cyclotomic> values_on_t_powers(const Psl2fpCharData& rep);

modular::Psl2zRepData to_psl2z(const Psl2fpCharData& rep);

/// Sums of k/p over the quadratic residues and non-residues in 1..p-1.
std::pair<BigRational, BigRational> residue_sums(std::uint32_t p);

/// Class number of Q(sqrt(-p)) for p = 3 (4), p >= 7, from the residue sum:
/// h = (p-1)/2 - (2/p) sum_{(k/p)=1} k. Throws `ErrorKind::Precondition`.
std::int64_t class_number(std::uint32_t p);

/// Number of reduced positive definite binary quadratic forms of discriminant
/// -p (brute force), the class number for p = 3 (4) prime and p > 3.
std::int64_t class_number_reduced_forms(std::uint32_t p);

/// Multiplicities in the weight-two cusp forms of Gamma(p) from the closed
/// formulas, with the genus certificate. Entries follow char_data order.
orbifold::Decomposition multiplicities_closed_form(std::uint32_t p);

/// Same, by evaluating the modular-group formula on the table data. The
/// trivial character is evaluated with the general formula.
orbifold::Decomposition multiplicities_direct(std::uint32_t p);

/// Genus of X(Gamma(p)).
std::int64_t genus_gamma(std::uint32_t p);

}  // namespace cw::psl2

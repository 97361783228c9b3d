#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cw/exact/bigrational.hpp"
#include "cw/group/profile.hpp"

namespace cw::orbifold {

using exact::BigRational;
using group::EigenvalueProfile;

/// Compact orbifold curve: a genus g surface with cone points of the given orders.
struct OrbifoldCurve {
  std::int64_t genus = 0;
  std::vector<std::int64_t> orbifold_orders;

  /// Throws `ErrorKind::Precondition` on a negative genus or an order below 2.
  void validate() const;
};

struct RamificationPoint {
  std::int64_t degree = 2;  // ramification index e_j
  std::string monodromy;    // label of the local monodromy gamma_{R_j}
};

/// Galois cover X -> Y with group G, ramified over points distinct from the
/// cone points of Y.
struct CoverSpec {
  OrbifoldCurve base;
  std::vector<RamificationPoint> ramification;
  std::vector<std::string> orbifold_monodromies;  // one per cone point of the base
  std::uint64_t group_order = 0;                  // 0 when unknown

  void validate() const;
};

/// The data of one irreducible representation needed by the formula.
struct RepInput {
  std::string id;
  std::int64_t dim = 1;
  bool is_trivial = false;
  std::vector<EigenvalueProfile> ram_profiles;  // at gamma_{R_j}, order e_j
  std::vector<EigenvalueProfile> orb_profiles;  // at gamma_{P_j}, order p_j
};

/// Named summands of the multiplicity formula.
struct CwTerms {
  BigRational epsilon;            // 1 for the trivial representation
  BigRational euler_base;         // dim * (g_Y - 1 + n - sum 1/p_j)
  BigRational ramification_rank;  // sum_j sum_{k>=1} N_k(rho; gamma_{R_j})
  BigRational parabolic_degree;   // -sum_j sum_k N_k(rho; gamma_{R_j}) k / e_j
  std::vector<BigRational> isotropy;  // -sum_k N_k(zeta_{p_j}^-1 rho; gamma_{P_j}) k / p_j, per cone point

  BigRational total() const;
};

struct DecompositionEntry {
  std::string id;
  std::int64_t dim = 0;
  std::int64_t multiplicity = 0;
};

struct GenusCertificate {
  std::int64_t expected = 0;
  std::int64_t computed = 0;  // sum of multiplicity * dim
};

struct Decomposition {
  std::vector<DecompositionEntry> entries;
  std::optional<GenusCertificate> certificate;

  std::int64_t total_dimension() const noexcept;
};

/// deg Omega^1 = 2g - 2 + n - sum 1/p_i.
BigRational canonical_degree(const OrbifoldCurve& curve);

/// Sum of k * N_k.
std::int64_t isotropy_trace(const EigenvalueProfile& profile);

/// rk (1 - g) + deg - sum_i iota_i / p_i.
BigRational riemann_roch_chi(std::int64_t rank, const BigRational& degree, const OrbifoldCurve& base,
                             std::span<const std::int64_t> isotropy_traces);

/// Evaluates each summand; throws `ErrorKind::Precondition` when the profiles
/// do not match the cover.
CwTerms cw_terms(const CoverSpec& cover, const RepInput& rep);

/// Multiplicity of the representation in H^0(X, Omega^1). Throws
/// `ErrorKind::NonIntegral` or `ErrorKind::Negative` on inconsistent input.
std::int64_t cw_multiplicity_general(const CoverSpec& cover, const RepInput& rep);

/// Multiplicities of every listed representation. With an expected genus,
/// throws `ErrorKind::GenusMismatch` unless sum d_i dim_i equals it.
Decomposition decompose(const CoverSpec& cover, std::span<const RepInput> reps,
                        std::optional<std::int64_t> expected_genus = std::nullopt);

}  // namespace cw::orbifold

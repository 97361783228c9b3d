#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cw/exact/cyclotomic.hpp"
#include "cw/group/profile.hpp"
#include "cw/modular/modular.hpp"
#include "cw/orbifold/chevalley_weil.hpp"

namespace cw::io {

using nlohmann::json;
using exact::Cyclotomic;
using group::EigenvalueProfile;

/// {"order": n, "coeffs": [rational strings]} in the smallest field holding
/// the value, power basis.
json to_json(const Cyclotomic& value);

/// Accepts an integer, a rational string "a/b", {"order", "coeffs"} (any
/// length, reduced modulo Phi_n), {"zeta": [n, k], "coeff": c} for c*zeta_n^k,
/// or an array whose elements are summed. Throws `ErrorKind::Parse`.
Cyclotomic cyclotomic_from_json(const json& value);

/// {"order": n, "counts": [...]}.
json to_json(const EigenvalueProfile& profile);

/// Accepts {"order", "counts"}, {"order", "exponents"} or
/// {"character_on_powers": [...]} (the latter needs `dim`).
EigenvalueProfile profile_from_json(const json& value, std::optional<std::int64_t> dim = std::nullopt);

json to_json(const exact::CycloMatrix& matrix);
exact::CycloMatrix matrix_from_json(const json& rows);

json to_json(const modular::Psl2zRepData& rep);
modular::Psl2zRepData psl2z_rep_from_json(const json& value);

/// A matrix model from the literature together with the data it should have.
struct Fixture {
  std::string id;
  std::string description;
  modular::MatrixModel model;
  modular::Psl2zRepData expected;
  std::vector<std::int64_t> blocks;              // dimensions of invariant diagonal blocks, if any
  std::optional<std::uint32_t> fermat_exponent;  // N when rho(T)^2 is the image of a translation of order N
};

Fixture fixture_from_json(const json& value);
json to_json(const Fixture& fixture);

/// Every *.json fixture in the directory, sorted by file name.
std::vector<Fixture> load_fixtures(const std::filesystem::path& directory);

/// Input of the general formula: the cover, the representations and an
/// optional genus to certify against.
struct CoverSpecDocument {
  orbifold::CoverSpec cover;
  std::vector<orbifold::RepInput> reps;
  std::optional<std::int64_t> expected_genus;
};

/// Validates the schema, integrality of profiles and uniqueness of ids.
/// Throws `ErrorKind::Parse`.
CoverSpecDocument cover_spec_from_json(const json& value);
json to_json(const CoverSpecDocument& doc);

struct DecompositionDocument {
  json inputs;
  orbifold::Decomposition decomposition;
  std::string tool_version;
};

json to_json(const DecompositionDocument& doc);
DecompositionDocument decomposition_from_json(const json& value);

/// Reads and parses a file. Throws `ErrorKind::Parse`.
json read_json(const std::filesystem::path& path);

/// Two-space indented dump with a trailing newline; key order is sorted so
/// the output is byte-stable.
std::string dump(const json& value);

}  // namespace cw::io

#include "cw/io/json.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "cw/error.hpp"

namespace cw::io {

using exact::BigRational;
using exact::CycloMatrix;

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) fail(std::string("missing field '") + key + "'");
  return obj.at(key);
}

std::int64_t as_int(const json& v, const char* what) {
  if (!v.is_number_integer()) fail(std::string(what) + " must be an integer");
  return v.get<std::int64_t>();
}

std::uint32_t as_order(const json& v, const char* what) {
  const auto n = as_int(v, what);
  if (n < 1 || n > static_cast<std::int64_t>(exact::max_cyclotomic_order())) {
    fail(std::string(what) + " out of range: " + std::to_string(n));
  }
  return static_cast<std::uint32_t>(n);
}

BigRational rational_from_json(const json& v) {
  if (v.is_number_integer()) return exact::make_rational(v.get<std::int64_t>());
  if (v.is_string()) return exact::parse_rational(v.get<std::string>());
  fail("expected an integer or a rational string, got " + v.dump());
}

std::vector<std::int64_t> int_list(const json& v, const char* what) {
  if (!v.is_array()) fail(std::string(what) + " must be an array");
  std::vector<std::int64_t> out;
  for (const auto& x : v) out.push_back(as_int(x, what));
  return out;
}

std::vector<EigenvalueProfile> profile_list(const json& obj, const char* key, std::int64_t dim) {
  std::vector<EigenvalueProfile> out;
  if (!obj.contains(key)) return out;
  const auto& list = obj.at(key);
  if (!list.is_array()) fail(std::string(key) + " must be an array");
  for (const auto& p : list) out.push_back(profile_from_json(p, dim));
  return out;
}

}  // namespace

json to_json(const Cyclotomic& value) {
  const auto v = value.simplified();
  json coeffs = json::array();
  for (const auto& c : v.coeffs()) coeffs.push_back(exact::to_string(c));
  return {{"order", v.order()}, {"coeffs", coeffs}};
}

Cyclotomic cyclotomic_from_json(const json& value) {
  if (value.is_number_integer() || value.is_string()) return Cyclotomic(rational_from_json(value));
  if (value.is_array()) {
    Cyclotomic sum;
    for (const auto& term : value) sum += cyclotomic_from_json(term);
    return sum;
  }
  if (value.is_object() && value.contains("zeta")) {
    const auto& z = value.at("zeta");
    if (!z.is_array() || z.size() != 2) fail("zeta must be [n, k]");
    const auto n = as_order(z[0], "zeta order");
    const auto k = as_int(z[1], "zeta exponent");
    auto root = Cyclotomic::root_of_unity(n, k);
    if (value.contains("coeff")) root *= cyclotomic_from_json(value.at("coeff"));
    return root;
  }
  if (value.is_object() && value.contains("order")) {
    const auto n = as_order(value.at("order"), "order");
    const auto& list = field(value, "coeffs");
    if (!list.is_array()) fail("coeffs must be an array");
    std::vector<BigRational> dense;
    for (const auto& c : list) dense.push_back(rational_from_json(c));
    return Cyclotomic::from_dense(n, dense);
  }
  fail("not a cyclotomic value: " + value.dump());
}

json to_json(const EigenvalueProfile& profile) {
  return {{"order", profile.order()}, {"counts", std::vector<std::int64_t>(profile.counts().begin(), profile.counts().end())}};
}

EigenvalueProfile profile_from_json(const json& value, std::optional<std::int64_t> dim) {
  if (!value.is_object()) fail("profile must be an object");
  EigenvalueProfile profile;
  if (value.contains("character_on_powers")) {
    const auto& list = value.at("character_on_powers");
    if (!list.is_array() || list.empty()) fail("character_on_powers must be a nonempty array");
    std::vector<Cyclotomic> chars;
    for (const auto& c : list) chars.push_back(cyclotomic_from_json(c));
    const auto d = dim ? *dim : [&] {
      const auto first = chars.front();
      if (!first.is_rational() || !exact::is_integer(first.to_rational())) fail("character value at the identity must be an integer");
      return *exact::to_int64(first.to_rational());
    }();
    try {
      profile = group::nk_profile(chars, d);
    } catch (const Error& e) {
      fail(std::string("character_on_powers: ") + e.what());
    }
  } else {
    const auto n = as_order(field(value, "order"), "profile order");
    try {
      if (value.contains("counts")) {
        profile = EigenvalueProfile(n, int_list(value.at("counts"), "counts"));
      } else {
        const auto exps = int_list(field(value, "exponents"), "exponents");
        profile = EigenvalueProfile::from_exponents(n, exps);
      }
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Parse) throw;
      fail(std::string("profile: ") + e.what());
    }
    if (std::any_of(profile.counts().begin(), profile.counts().end(), [](std::int64_t c) { return c < 0; })) {
      fail("profile counts must be nonnegative");
    }
  }
  if (dim && profile.dim() != *dim) {
    fail("profile dimension " + std::to_string(profile.dim()) + " differs from " + std::to_string(*dim));
  }
  return profile;
}

json to_json(const CycloMatrix& matrix) {
  json rows = json::array();
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < matrix.size(); ++j) row.push_back(to_json(matrix(i, j)));
    rows.push_back(row);
  }
  return rows;
}

CycloMatrix matrix_from_json(const json& rows) {
  if (!rows.is_array() || rows.empty()) fail("matrix must be a nonempty array of rows");
  std::vector<std::vector<Cyclotomic>> out;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != rows.size()) fail("matrix must be square");
    auto& r = out.emplace_back();
    for (const auto& x : row) r.push_back(cyclotomic_from_json(x));
  }
  return CycloMatrix::from_rows(out);
}

json to_json(const modular::Psl2zRepData& rep) {
  return {{"id", rep.id},
          {"dim", rep.dim},
          {"is_trivial", rep.is_trivial},
          {"trace_S", to_json(rep.trace_S)},
          {"trace_R", to_json(rep.trace_R)},
          {"trace_Rinv", to_json(rep.trace_Rinv)},
          {"t_profile", to_json(rep.t_profile)}};
}

modular::Psl2zRepData psl2z_rep_from_json(const json& value) {
  modular::Psl2zRepData rep;
  rep.id = value.value("id", "");
  rep.dim = as_int(field(value, "dim"), "dim");
  rep.is_trivial = value.value("is_trivial", false);
  rep.trace_S = cyclotomic_from_json(field(value, "trace_S"));
  rep.trace_R = cyclotomic_from_json(field(value, "trace_R"));
  rep.trace_Rinv = cyclotomic_from_json(field(value, "trace_Rinv"));
  rep.t_profile = profile_from_json(field(value, "t_profile"), rep.dim);
  return rep;
}

static Fixture fixture_from_json_unchecked(const json& value) {
  Fixture f;
  if (!field(value, "id").is_string()) fail("id must be a string");
  f.id = value.at("id").get<std::string>();
  f.description = value.value("description", "");
  f.model.id = f.id;
  f.model.S = matrix_from_json(field(value, "S"));
  f.model.T = matrix_from_json(field(value, "T"));
  if (f.model.S.size() != f.model.T.size()) fail(f.id + ": S and T differ in size");
  f.expected = psl2z_rep_from_json(field(value, "expected"));
  if (f.expected.id.empty()) f.expected.id = f.id;
  if (value.contains("blocks")) f.blocks = int_list(value.at("blocks"), "blocks");
  if (value.contains("fermat_exponent")) f.fermat_exponent = as_order(value.at("fermat_exponent"), "fermat_exponent");
  return f;
}

json to_json(const Fixture& fixture) {
  json out = {{"id", fixture.id},
              {"description", fixture.description},
              {"S", to_json(fixture.model.S)},
              {"T", to_json(fixture.model.T)},
              {"expected", to_json(fixture.expected)}};
  if (!fixture.blocks.empty()) out["blocks"] = fixture.blocks;
  if (fixture.fermat_exponent) out["fermat_exponent"] = *fixture.fermat_exponent;
  return out;
}

std::vector<Fixture> load_fixtures(const std::filesystem::path& directory) {
  std::vector<std::filesystem::path> files;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(directory, ec)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  if (ec) fail("cannot list " + directory.string() + ": " + ec.message());
  std::sort(files.begin(), files.end());
  std::vector<Fixture> out;
  for (const auto& f : files) {
    try {
      out.push_back(fixture_from_json(read_json(f)));
    } catch (const Error& e) {
      fail(f.filename().string() + ": " + e.what());
    }
  }
  return out;
}

static CoverSpecDocument cover_spec_from_json_unchecked(const json& value) {
  if (!value.is_object()) fail("cover spec must be an object");
  CoverSpecDocument doc;
  const auto& base = field(value, "base");
  doc.cover.base.genus = as_int(field(base, "genus"), "base.genus");
  if (base.contains("orbifold_orders")) doc.cover.base.orbifold_orders = int_list(base.at("orbifold_orders"), "orbifold_orders");
  if (value.contains("group_order")) doc.cover.group_order = static_cast<std::uint64_t>(as_int(value.at("group_order"), "group_order"));
  if (value.contains("ramification")) {
    for (const auto& r : value.at("ramification")) {
      orbifold::RamificationPoint point;
      point.degree = as_int(field(r, "degree"), "ramification degree");
      point.monodromy = r.value("monodromy", "");
      doc.cover.ramification.push_back(point);
    }
  }
  if (value.contains("orbifold_monodromies")) {
    for (const auto& m : value.at("orbifold_monodromies")) doc.cover.orbifold_monodromies.push_back(m.get<std::string>());
  }
  try {
    doc.cover.validate();
  } catch (const Error& e) {
    fail(std::string("cover: ") + e.what());
  }

  const auto& reps = field(value, "reps");
  if (!reps.is_array() || reps.empty()) fail("reps must be a nonempty array");
  std::set<std::string> ids;
  for (const auto& r : reps) {
    orbifold::RepInput rep;
    if (!field(r, "id").is_string()) fail("rep id must be a string");
    rep.id = r.at("id").get<std::string>();
    if (!ids.insert(rep.id).second) fail("duplicate rep id '" + rep.id + "'");
    rep.dim = as_int(field(r, "dim"), "dim");
    if (rep.dim < 1) fail(rep.id + ": dim must be positive");
    rep.is_trivial = r.value("is_trivial", false);
    if (rep.is_trivial && rep.dim != 1) fail(rep.id + ": the trivial representation has dimension 1");
    rep.ram_profiles = profile_list(r, "ramification", rep.dim);
    rep.orb_profiles = profile_list(r, "orbifold", rep.dim);
    if (rep.ram_profiles.size() != doc.cover.ramification.size()) fail(rep.id + ": one ramification profile per ramification point");
    if (rep.orb_profiles.size() != doc.cover.base.orbifold_orders.size()) fail(rep.id + ": one orbifold profile per cone point");
    for (std::size_t j = 0; j < rep.ram_profiles.size(); ++j) {
      if (rep.ram_profiles[j].order() != doc.cover.ramification[j].degree) fail(rep.id + ": ramification profile order differs from the degree");
    }
    for (std::size_t j = 0; j < rep.orb_profiles.size(); ++j) {
      if (rep.orb_profiles[j].order() != doc.cover.base.orbifold_orders[j]) fail(rep.id + ": orbifold profile order differs from the cone order");
    }
    doc.reps.push_back(std::move(rep));
  }
  if (value.contains("expected_genus")) doc.expected_genus = as_int(value.at("expected_genus"), "expected_genus");
  return doc;
}

json to_json(const CoverSpecDocument& doc) {
  json ram = json::array();
  for (const auto& r : doc.cover.ramification) {
    json point = {{"degree", r.degree}};
    if (!r.monodromy.empty()) point["monodromy"] = r.monodromy;
    ram.push_back(point);
  }
  json reps = json::array();
  for (const auto& r : doc.reps) {
    json rr = json::array();
    for (const auto& p : r.ram_profiles) rr.push_back(to_json(p));
    json ro = json::array();
    for (const auto& p : r.orb_profiles) ro.push_back(to_json(p));
    reps.push_back({{"id", r.id}, {"dim", r.dim}, {"is_trivial", r.is_trivial}, {"ramification", rr}, {"orbifold", ro}});
  }
  json out = {{"base", {{"genus", doc.cover.base.genus}, {"orbifold_orders", doc.cover.base.orbifold_orders}}},
              {"ramification", ram},
              {"reps", reps}};
  if (!doc.cover.orbifold_monodromies.empty()) out["orbifold_monodromies"] = doc.cover.orbifold_monodromies;
  if (doc.cover.group_order != 0) out["group_order"] = doc.cover.group_order;
  if (doc.expected_genus) out["expected_genus"] = *doc.expected_genus;
  return out;
}

json to_json(const DecompositionDocument& doc) {
  json entries = json::array();
  for (const auto& e : doc.decomposition.entries) {
    entries.push_back({{"rep_id", e.id}, {"dim", e.dim}, {"multiplicity", e.multiplicity}});
  }
  json cert = nullptr;
  if (doc.decomposition.certificate) {
    const auto& c = *doc.decomposition.certificate;
    cert = {{"expected", c.expected}, {"computed", c.computed}, {"holds", c.expected == c.computed}};
  }
  return {{"inputs", doc.inputs},
          {"entries", entries},
          {"total_dimension", doc.decomposition.total_dimension()},
          {"genus_certificate", cert},
          {"tool_version", doc.tool_version}};
}

static DecompositionDocument decomposition_from_json_unchecked(const json& value) {
  DecompositionDocument doc;
  doc.inputs = value.value("inputs", json::object());
  doc.tool_version = value.value("tool_version", "");
  for (const auto& e : field(value, "entries")) {
    orbifold::DecompositionEntry entry;
    entry.id = field(e, "rep_id").get<std::string>();
    entry.dim = as_int(field(e, "dim"), "dim");
    entry.multiplicity = as_int(field(e, "multiplicity"), "multiplicity");
    if (entry.multiplicity < 0) fail(entry.id + ": negative multiplicity");
    doc.decomposition.entries.push_back(entry);
  }
  if (value.contains("genus_certificate") && !value.at("genus_certificate").is_null()) {
    const auto& c = value.at("genus_certificate");
    doc.decomposition.certificate = orbifold::GenusCertificate{as_int(field(c, "expected"), "expected"),
                                                               as_int(field(c, "computed"), "computed")};
  }
  return doc;
}

template <class F>
auto guarded(F&& parse) {
  try {
    return parse();
  } catch (const json::exception& e) {
    fail(e.what());
  }
}

Fixture fixture_from_json(const json& value) {
  return guarded([&] { return fixture_from_json_unchecked(value); });
}

CoverSpecDocument cover_spec_from_json(const json& value) {
  return guarded([&] { return cover_spec_from_json_unchecked(value); });
}

DecompositionDocument decomposition_from_json(const json& value) {
  return guarded([&] { return decomposition_from_json_unchecked(value); });
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(path.string() + ": " + e.what());
  }
}

std::string dump(const json& value) { return value.dump(2) + "\n"; }

}  // namespace cw::io

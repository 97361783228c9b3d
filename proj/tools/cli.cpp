#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>

#include "cw/error.hpp"
#include "cw/exact/cyclotomic.hpp"
#include "cw/exact/number_theory.hpp"
#include "cw/fermat/fermat.hpp"
#include "cw/group/character_table.hpp"
#include "cw/io/json.hpp"
#include "cw/modular/modular.hpp"
#include "cw/psl2/psl2fp.hpp"
#include "cw/verify/suites.hpp"
#include "cw/version.hpp"

namespace cw::cli {

using io::json;

namespace {

enum class Format { Text, Json };

struct Mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::NotPrime:
    case ErrorKind::TooSmall:
    case ErrorKind::Precondition:
    case ErrorKind::OrderBound:
    case ErrorKind::SizeBound:
      return kUsage;
    default:
      return kInvariantFailure;
  }
}

// Nonzero multiplicities first, each group in its original order.
orbifold::Decomposition nonzero_first(orbifold::Decomposition d) {
  std::stable_partition(d.entries.begin(), d.entries.end(), [](const auto& e) { return e.multiplicity != 0; });
  return d;
}

void require_equal(const orbifold::Decomposition& closed, const orbifold::Decomposition& direct) {
  if (closed.entries.size() != direct.entries.size()) throw Mismatch("closed form and direct evaluation list different representations");
  for (std::size_t i = 0; i < closed.entries.size(); ++i) {
    const auto& a = closed.entries[i];
    const auto& b = direct.entries[i];
    if (a.id != b.id || a.multiplicity != b.multiplicity) {
      throw Mismatch("closed form gives " + a.id + " x" + std::to_string(a.multiplicity) + ", direct evaluation gives " +
                     b.id + " x" + std::to_string(b.multiplicity));
    }
  }
}

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void print_decomposition(const io::DecompositionDocument& doc, Format format, std::ostream& out) {
  if (format == Format::Json) {
    out << io::dump(io::to_json(doc));
    return;
  }
  for (const auto& [key, value] : doc.inputs.items()) out << key << ": " << scalar_text(value) << "\n";
  std::size_t width = 6;
  for (const auto& e : doc.decomposition.entries) width = std::max(width, e.id.size());
  out << std::left << std::setw(static_cast<int>(width)) << "rep_id" << "  " << std::right << std::setw(5) << "dim" << "  "
      << "multiplicity\n";
  for (const auto& e : doc.decomposition.entries) {
    out << std::left << std::setw(static_cast<int>(width)) << e.id << "  " << std::right << std::setw(5) << e.dim << "  "
        << std::setw(12) << e.multiplicity << "\n";
  }
  out << "total dimension: " << doc.decomposition.total_dimension() << "\n";
  if (const auto& c = doc.decomposition.certificate) {
    out << "genus certificate: expected " << c->expected << ", computed " << c->computed << ", "
        << (c->expected == c->computed ? "holds" : "FAILS") << "\n";
  } else {
    out << "genus certificate: none\n";
  }
  out << "tool version: " << doc.tool_version << "\n";
}

io::DecompositionDocument make_document(json inputs, orbifold::Decomposition d) {
  return {std::move(inputs), nonzero_first(std::move(d)), std::string(kVersion)};
}

int finish(const io::DecompositionDocument& doc, Format format, std::ostream& out, std::ostream& err) {
  print_decomposition(doc, format, out);
  const auto& c = doc.decomposition.certificate;
  if (c && c->expected != c->computed) {
    err << "genus certificate fails: expected " << c->expected << ", computed " << c->computed << "\n";
    return kInvariantFailure;
  }
  return kOk;
}

int cmd_modular_level(std::int64_t p, Format format, std::ostream& out, std::ostream& err) {
  if (p < 5 || !exact::is_prime(static_cast<std::uint64_t>(p))) {
    err << "--p must be a prime >= 5, got " << p << "\n";
    return kUsage;
  }
  const auto q = static_cast<std::uint32_t>(p);
  const auto closed = psl2::multiplicities_closed_form(q);
  const auto direct = psl2::multiplicities_direct(q);
  require_equal(closed, direct);
  return finish(make_document({{"command", "modular-level"}, {"p", p}}, closed), format, out, err);
}

int cmd_fermat(std::int64_t n, Format format, std::ostream& out, std::ostream& err) {
  if (n < 3 || n > 1000) {
    err << "--exponent must lie in 3..1000 (the Fermat curve has genus 0 below 3), got " << n << "\n";
    return kUsage;
  }
  const auto m = static_cast<std::uint32_t>(n);
  const auto closed = fermat::multiplicities_closed_form(m);
  const auto direct = fermat::multiplicities_direct(m);
  require_equal(closed, direct);
  return finish(make_document({{"command", "fermat"}, {"exponent", n}}, closed), format, out, err);
}

int cmd_general(const std::string& path, Format format, std::ostream& out, std::ostream& err) {
  const auto spec = io::cover_spec_from_json(io::read_json(path));
  auto d = orbifold::decompose(spec.cover, spec.reps);
  if (spec.expected_genus) d.certificate = orbifold::GenusCertificate{*spec.expected_genus, d.total_dimension()};
  return finish(make_document({{"command", "general"}, {"spec", io::to_json(spec)}}, std::move(d)), format, out, err);
}

int cmd_verify(const std::string& suite, const verify::Options& options, Format format, std::ostream& out) {
  const auto report = verify::run_suite(suite, options);
  if (format == Format::Json) {
    json checks = json::array();
    for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    out << io::dump({{"suite", report.suite},
                     {"checks", checks},
                     {"failures", report.failures()},
                     {"passed", report.passed()},
                     {"tool_version", std::string(kVersion)}});
  } else {
    for (const auto& c : report.checks) {
      out << (c.passed ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty()) out << " (" << c.detail << ")";
      out << "\n";
    }
    out << report.suite << ": " << report.checks.size() - report.failures() << " passed, " << report.failures()
        << " failed\n";
  }
  return report.passed() ? kOk : kInvariantFailure;
}

struct TableRequest {
  std::optional<std::int64_t> p;
  std::optional<std::int64_t> exponent;
  std::optional<std::int64_t> level;
};

int cmd_table(const TableRequest& req, std::size_t max_group_order, Format format, std::ostream& out, std::ostream& err) {
  const int given = req.p.has_value() + req.exponent.has_value() + req.level.has_value();
  if (given != 1) {
    err << "table needs exactly one of --p, --exponent, --level\n";
    return kUsage;
  }
  std::string group;
  std::vector<modular::Psl2zRepData> rows;
  if (req.p) {
    if (*req.p < 5 || !exact::is_prime(static_cast<std::uint64_t>(*req.p))) {
      err << "--p must be a prime >= 5, got " << *req.p << "\n";
      return kUsage;
    }
    group = "PSL2(F_" + std::to_string(*req.p) + ")";
    for (const auto& c : psl2::char_data(static_cast<std::uint32_t>(*req.p))) rows.push_back(psl2::to_psl2z(c));
  } else if (req.exponent) {
    if (*req.exponent < 3 || *req.exponent > 1000) {
      err << "--exponent must lie in 3..1000, got " << *req.exponent << "\n";
      return kUsage;
    }
    const auto n = static_cast<std::uint32_t>(*req.exponent);
    group = "(Z/" + std::to_string(n) + ")^2 x| S3";
    for (const auto& r : fermat::rep_table(n)) rows.push_back(r.to_psl2z());
  } else {
    if (*req.level < 2 || *req.level > 1000) {
      err << "--level must lie in 2..1000, got " << *req.level << "\n";
      return kUsage;
    }
    const auto m = static_cast<std::uint32_t>(*req.level);
    const auto g = modular::congruence_quotient(m, max_group_order);
    group = "SL2(Z/" + std::to_string(m) + ")/{+-1}";
    rows = modular::reps_from_character_table(g, group::character_table_dixon(g), g.generator_indices()[0],
                                              g.generator_indices()[1]);
  }

  if (format == Format::Json) {
    json reps = json::array();
    for (const auto& r : rows) reps.push_back(io::to_json(r));
    out << io::dump({{"group", group}, {"reps", reps}, {"tool_version", std::string(kVersion)}});
    return kOk;
  }
  out << "group: " << group << "\n";
  for (const auto& r : rows) {
    out << r.id << ": dim " << r.dim << ", Tr S = " << r.trace_S.to_string() << ", Tr R = " << r.trace_R.to_string()
        << ", Tr R^-1 = " << r.trace_Rinv.to_string() << ", T " << r.t_profile.to_string() << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multiplicities of irreducible representations in the canonical representation of Galois covers",
               "cwtool"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  std::size_t max_group_order = group::FiniteGroup::kDefaultSizeCap;
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-group-order", max_group_order, "Refuse to enumerate larger groups")->check(CLI::PositiveNumber);

  std::int64_t p = 0;
  auto* modular_level = app.add_subcommand("modular-level", "Decompose the cusp forms of Gamma(p) under PSL2(F_p)");
  modular_level->add_option("--p", p, "Prime p >= 5")->required();

  std::int64_t exponent = 0;
  auto* fermat_cmd = app.add_subcommand("fermat", "Decompose the canonical representation of the Fermat curve of degree N");
  fermat_cmd->add_option("--exponent", exponent, "Degree N >= 3")->required();

  std::string spec_path;
  auto* general = app.add_subcommand("general", "Evaluate the orbifold formula on a JSON cover specification");
  general->add_option("--spec", spec_path, "Cover specification file")->required();

  std::string suite;
  verify::Options options;
  options.fixture_dir = std::string(CW_DATA_DIR) + "/fixtures";
  std::string fixture_dir = options.fixture_dir.string();
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  std::vector<std::string> suites = verify::suite_names();
  suites.push_back("all");
  verify_cmd->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suites));
  verify_cmd->add_option("--inject-fault", options.fault, "Deliberately break one invariant")
      ->check(CLI::IsMember(verify::fault_names()));
  verify_cmd->add_option("--fixtures", fixture_dir, "Directory of matrix model fixtures");
  verify_cmd->add_option("--cases", options.random_cases, "Random cases for the property checks")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", options.seed, "Seed for the property checks");

  TableRequest table_req;
  auto* table = app.add_subcommand("table", "Print representation data of a finite quotient of PSL2(Z)");
  table->add_option("--p", table_req.p, "PSL2(F_p) from the closed tables");
  table->add_option("--exponent", table_req.exponent, "(Z/N)^2 x| S3 from the little-group tables");
  table->add_option("--level", table_req.level, "SL2(Z/m)/{+-1} via Dixon's algorithm");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, r;
    const int code = app.exit(e, o, r);
    out << o.str();
    err << r.str();
    return code == 0 ? kOk : kUsage;
  }

  const Format format = format_name == "json" ? Format::Json : Format::Text;
  options.max_group_order = max_group_order;
  options.fixture_dir = fixture_dir;
  try {
    if (*modular_level) return cmd_modular_level(p, format, out, err);
    if (*fermat_cmd) return cmd_fermat(exponent, format, out, err);
    if (*general) return cmd_general(spec_path, format, out, err);
    if (*verify_cmd) return cmd_verify(suite, options, format, out);
    if (*table) return cmd_table(table_req, max_group_order, format, out, err);
  } catch (const Mismatch& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return kMismatch;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code(e.kind());
  }
  return kUsage;
}

}  // namespace cw::cli

#include "curlie/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iomanip>
#include <map>
#include <optional>

#include "curlie/catalog.hpp"
#include "curlie/current.hpp"
#include "curlie/errors.hpp"
#include "curlie/io.hpp"
#include "curlie/suites.hpp"

namespace curlie {

namespace {

struct Options {
  std::vector<std::string> paths;
  std::string g;
  std::string s;
  std::string rep;
  std::string output;
  std::string suite = "all";
  std::uint64_t seed = 42;
  std::optional<std::size_t> trials;
  std::optional<std::size_t> max_degree;
  bool json = false;
};

void print_table(std::ostream& out, const Json& rows) {
  if (rows.empty()) return;
  std::vector<std::string> keys;
  for (const auto& [k, v] : rows.front().items()) keys.push_back(k);
  std::vector<std::size_t> width;
  for (const auto& k : keys) width.push_back(k.size());
  auto cell = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < keys.size(); ++i) width[i] = std::max(width[i], cell(r[keys[i]]).size());
  }
  for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << keys[i];
  out << '\n';
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < keys.size(); ++i) {
      out << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << cell(r[keys[i]]);
    }
    out << '\n';
  }
}

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
  std::map<std::string, LieAlgebra> loaded;
  bool all_ok = true;
  for (const auto& path : o.paths) {
    Json j = read_json_file(path);
    const std::string kind = j.is_object() && j.contains("kind") && j["kind"].is_string() ? j["kind"].get<std::string>() : "";
    ValidationReport report;
    if (kind == "lie" || kind == "assoc") {
      RawAlgebra raw = parse_algebra(j);
      report = kind == "lie" ? validate_lie(raw.table) : validate_assoc(raw.table, raw.unit_index);
      report.subject = path + " (" + raw.name + ")";
      if (report.ok() && kind == "lie") loaded.emplace(raw.name, build_lie(raw));
      if (report.ok() && kind == "assoc" && raw.unit_index != 0) {
        err << "warning: " << path << ": unit is basis vector " << raw.unit_index
            << "; basis reordered so the unit comes first\n";
      }
    } else if (kind == "representation") {
      RawRepresentation raw = parse_representation(j);
      auto it = loaded.find(raw.algebra);
      LieAlgebra g = it != loaded.end() ? it->second : catalog::lie_by_name(raw.algebra);
      report = validate_representation(g, raw.module_dim, raw.matrices);
      report.subject = path + " (" + raw.name + ")";
    } else {
      throw ParseError(path + ": unknown kind \"" + kind + "\"");
    }
    out << report.summary() << '\n';
    all_ok = all_ok && report.ok();
  }
  return all_ok ? kPass : kVerificationFailed;
}

int cmd_cohomology(const Options& o, std::ostream& out) {
  LieAlgebra g = load_lie(o.g);
  Representation rep = load_representation(o.rep, g);
  std::optional<CommAssocAlgebra> s;
  if (!o.s.empty()) s = load_assoc(o.s);
  Json rows = cohomology_table(rep, s ? &*s : nullptr, o.max_degree);
  Json doc = {{"command", {{"name", "cohomology"}, {"g", g.name()}, {"rep", rep.name()}, {"s", s ? s->name() : ""}}},
              {"dimensions", rows}};
  if (o.json) {
    out << doc.dump(2) << '\n';
  } else {
    out << "cohomology of " << g.name() << (s ? "⊗" + s->name() : "") << " with coefficients in " << rep.name()
        << (s ? "⊗" + s->name() : "") << '\n';
    print_table(out, rows);
  }
  if (!o.output.empty()) write_json_file(o.output, doc);
  return kPass;
}

int cmd_verify(const Options& o, std::ostream& out) {
  LieAlgebra g = load_lie(o.g);
  CommAssocAlgebra s = load_assoc(o.s);
  Representation rep = load_representation(o.rep, g);
  const auto start = std::chrono::steady_clock::now();
  VerifyOutcome outcome = run_verify(g, s, rep, {o.suite, o.seed, o.trials});
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Json doc = outcome.report;
  doc["timing"] = {{"seconds", seconds}};

  if (o.json) {
    out << doc.dump(2) << '\n';
  } else {
    out << "suite " << o.suite << " on (" << g.name() << ", " << rep.name() << ", " << s.name() << "), seed "
        << o.seed << '\n';
    if (doc["tables"].contains("ses")) print_table(out, doc["tables"]["ses"]);
    for (const auto& c : doc["checks"]) {
      out << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["suite"].get<std::string>() << ": "
          << c["name"].get<std::string>();
      if (c["degree"].get<int>() >= 0) out << " [p=" << c["degree"].get<int>() << "]";
      if (c.contains("detail")) out << " (" << c["detail"].get<std::string>() << ")";
      out << '\n';
    }
    for (const auto& note : doc["skipped"]) out << "SKIP " << note.get<std::string>() << '\n';
    if (doc["hypothesis"]["failed"].get<bool>()) {
      out << "HYPOTHESIS FAILED: " << doc["hypothesis"]["detail"].get<std::string>() << '\n';
    }
    out << (outcome.status == kPass ? "PASS" : "FAIL") << " (" << std::fixed << std::setprecision(3) << seconds
        << " s)\n";
  }
  if (!o.output.empty()) write_json_file(o.output, doc);
  return outcome.status;
}

int cmd_current(const Options& o, std::ostream& out) {
  LieAlgebra gs = current_algebra(load_lie(o.g), load_assoc(o.s));
  Json doc = to_json(gs);
  if (o.output.empty()) {
    out << doc.dump(2) << '\n';
  } else {
    write_json_file(o.output, doc);
  }
  return kPass;
}

int cmd_export(const Options& o, std::ostream& out, std::ostream& err) {
  Json doc;
  if (!o.g.empty() && !o.rep.empty()) {
    doc = to_json(load_representation(o.rep, load_lie(o.g)));
  } else if (!o.g.empty()) {
    doc = to_json(load_lie(o.g));
  } else if (!o.s.empty()) {
    doc = to_json(load_assoc(o.s));
  } else {
    err << "export needs --g, --s, or --g with --rep\n";
    return kInputError;
  }
  if (o.output.empty()) {
    out << doc.dump(2) << '\n';
  } else {
    write_json_file(o.output, doc);
  }
  return kPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact cohomology of current Lie algebras", "curlie"};
  app.require_subcommand(1);
  Options o;

  auto* validate = app.add_subcommand("validate", "Validate algebra and representation files");
  validate->add_option("paths", o.paths, "JSON files")->required();

  auto* coh = app.add_subcommand("cohomology", "Print dimensions of cohomology groups");
  coh->add_option("--g", o.g, "Lie algebra (catalog name or JSON file)")->required();
  coh->add_option("--rep", o.rep, "Representation (trivial, adjoint, natural or JSON file)")->required();
  coh->add_option("--s", o.s, "Commutative algebra S; computes H(g⊗S;V⊗S)");
  coh->add_option("--max-degree", o.max_degree, "Highest degree (default: dimension of the Lie algebra)");
  coh->add_option("-o,--output", o.output, "Write the JSON table here");
  coh->add_flag("--json", o.json, "Print JSON instead of a text table");

  auto* verify = app.add_subcommand("verify", "Verify identities on a (g, S, V) triple");
  verify->add_option("--g", o.g, "Lie algebra")->required();
  verify->add_option("--s", o.s, "Commutative algebra")->required();
  verify->add_option("--rep", o.rep, "Representation")->required();
  verify->add_option("--suite", o.suite, "Suite to run")->check(CLI::IsMember(suite_names()));
  verify->add_option("--seed", o.seed, "Random seed");
  verify->add_option("--trials", o.trials, "Random trials per case");
  verify->add_option("-o,--output", o.output, "Write the JSON report here");
  verify->add_flag("--json", o.json, "Print the JSON report");

  auto* current = app.add_subcommand("current", "Write the current algebra g⊗S as an algebra file");
  current->add_option("--g", o.g, "Lie algebra")->required();
  current->add_option("--s", o.s, "Commutative algebra")->required();
  current->add_option("-o,--output", o.output, "Output file (default: stdout)");

  auto* exp = app.add_subcommand("export", "Write a catalog algebra or representation as JSON");
  exp->add_option("--g", o.g, "Lie algebra");
  exp->add_option("--s", o.s, "Commutative algebra");
  exp->add_option("--rep", o.rep, "Representation of --g");
  exp->add_option("-o,--output", o.output, "Output file (default: stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*validate) return cmd_validate(o, out, err);
    if (*coh) return cmd_cohomology(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*current) return cmd_current(o, out);
    if (*exp) return cmd_export(o, out, err);
  } catch (const HypothesisFailed& e) {
    err << "hypothesis failed: " << e.what() << '\n';
    return kHypothesisFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace curlie

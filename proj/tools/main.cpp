#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "report_io.hpp"

using namespace nclorentz;

namespace {

struct Common {
  std::string config_file;
  std::optional<std::string> lambda, exact_lambda, samples, seed, tol, type, z, zp;
  bool timing = false;
  std::string format = "text";
  std::string out;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--config", c.config_file, "key = value configuration file");
  sub->add_option("--lambda", c.lambda, "comma-separated cosmological constants for numeric sweeps");
  sub->add_option("--exact-lambda", c.exact_lambda, "comma-separated rationals for exact re-solves");
  sub->add_option("--samples", c.samples, "random coset points per lambda");
  sub->add_option("--seed", c.seed, "random seed");
  sub->add_option("--tol", c.tol, "numeric tolerance");
  sub->add_option("--type", c.type, "I, II, III or all");
  sub->add_option("--z", c.z, "numeric value of z");
  sub->add_option("--zp", c.zp, "numeric value of z'");
  sub->add_flag("--timing", c.timing, "record wall-clock seconds per check");
  sub->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--out", c.out, "output path ('-' for stdout)");
}

RunConfig build_config(const Common& c) {
  RunConfig cfg;
  if (!c.config_file.empty())
    for (const auto& [k, v] : report::read_config_file(c.config_file)) report::apply_setting(cfg, k, v);
  const auto set = [&](const char* key, const std::optional<std::string>& v) {
    if (v) report::apply_setting(cfg, key, *v);
  };
  set("lambda", c.lambda);
  set("exact_lambda", c.exact_lambda);
  set("samples", c.samples);
  set("seed", c.seed);
  set("tolerance", c.tol);
  set("type", c.type);
  set("z", c.z);
  set("zp", c.zp);
  if (c.timing) cfg.timing = true;
  return cfg;
}

// Text goes to stdout unless --out is given; JSON goes to a file unless --out is '-'.
void emit(const Common& c, const std::string& text, const std::string& json, const std::string& default_name) {
  const bool is_json = c.format == "json";
  const std::string& body = is_json ? json : text;
  if (c.out == "-" || (!is_json && c.out.empty())) {
    std::cout << body;
    return;
  }
  const auto path = report::resolve_output(c.out, default_name);
  report::write_file(path, body);
  std::cerr << "report written to " << path.string() << "\n";
}

int report_records(const Common& c, const RunConfig& cfg, const std::vector<CheckRecord>& recs, const std::string& what) {
  emit(c, report::to_text(recs, cfg.timing), report::to_json(recs, cfg, what), "report-" + what + ".json");
  return report::all_pass(recs) ? 0 : 1;
}

std::string classification_text(const ClassificationReport& r) {
  std::string s = "system " + r.dim + " " + r.condition + ": " + std::to_string(r.rows) + " rows, " +
                  std::to_string(r.unknowns) + " unknowns\n";
  s += "dimension = " + std::to_string(r.dimension) + "\n";
  for (std::size_t i = 0; i < r.basis.size(); ++i) s += "basis[" + std::to_string(i) + "] = " + r.basis[i] + "\n";
  for (const auto& c : r.constraints) s += "constraint: " + c + " = 0\n";
  return s;
}

std::string classification_json(const ClassificationReport& r) {
  const nlohmann::ordered_json j{{"version", report::kVersion},
                                 {"config", {{"dim", r.dim}, {"condition", r.condition}}},
                                 {"rows", r.rows},
                                 {"unknowns", r.unknowns},
                                 {"dimension", r.dimension},
                                 {"basis", r.basis},
                                 {"constraints", r.constraints}};
  return j.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie bialgebras with quantum Lorentz subgroup: verification and classification"};
  app.require_subcommand(1);

  Common verify_opts;
  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "all, bialgebra, classify, phs, quantize or contract")
      ->check(CLI::IsMember({"all", "bialgebra", "classify", "phs", "quantize", "contract"}));
  add_common(verify, verify_opts);

  Common classify_opts;
  std::string dim = "3+1", condition = "trivial";
  auto* classify = app.add_subcommand("classify", "solve the r-matrix systems");
  classify->add_option("--dim", dim, "3+1 or 2+1")->check(CLI::IsMember({"3+1", "2+1"}));
  classify->add_option("--condition", condition, "trivial or subbialgebra")
      ->check(CLI::IsMember({"trivial", "subbialgebra"}));
  classify->add_option("--format", classify_opts.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  classify->add_option("--out", classify_opts.out, "output path ('-' for stdout)");

  Common table_opts;
  std::string which = "lorentz";
  auto* table = app.add_subcommand("table", "re-derive a table entry by entry");
  table->add_option("--which", which, "lorentz, phs or contracted")
      ->check(CLI::IsMember({"lorentz", "phs", "contracted"}));
  add_common(table, table_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) {
      const RunConfig cfg = build_config(verify_opts);
      return report_records(verify_opts, cfg, run_suite(suite, cfg), suite);
    }
    if (*table) {
      const RunConfig cfg = build_config(table_opts);
      return report_records(table_opts, cfg, run_table(which, cfg), "table-" + which);
    }
    const auto rep = classification(dim, condition);
    emit(classify_opts, classification_text(rep), classification_json(rep), "classify.json");
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

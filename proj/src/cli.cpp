#include "latticeflaw/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>

#include "latticeflaw/bijection.hpp"
#include "latticeflaw/enumeration.hpp"
#include "latticeflaw/formula.hpp"

namespace latticeflaw {

namespace {

long long resolve_cap(const std::optional<long long>& flag_value) {
  if (flag_value) return *flag_value;
  if (const char* env = std::getenv("LATTICEFLAW_CAP")) {
    std::size_t used = 0;
    long long value = 0;
    std::string text(env);
    try {
      value = std::stoll(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != text.size() || value < 1) {
      throw std::invalid_argument("LATTICEFLAW_CAP must be a positive integer, got \"" +
                                  text + "\"");
    }
    return value;
  }
  return kDefaultEnumerationCap;
}

int run_count(const RunConfig& config, std::ostream& out) {
  BoundarySpec spec(config.a, config.b, config.g);
  out << to_string(count_flawed(*config.k, spec)) << '\n';
  return 0;
}

int run_table(const RunConfig& config, std::ostream& out) {
  BoundarySpec spec(config.a, config.b, config.g);
  FlawTable table =
      config.oracle
          ? oracle_flaw_table(spec, OracleOptions{config.cap, config.jobs})
          : formula_flaw_table(spec);
  if (config.format == "csv") {
    out << to_csv(table);
  } else if (config.format == "json") {
    out << to_json(table) << '\n';
  } else {
    out << to_markdown(table);
  }
  return 0;
}

int run_enumerate(const RunConfig& config, std::ostream& out) {
  BoundarySpec spec(config.a, config.b, config.g);
  if (config.k && (*config.k < 0 || *config.k >= spec.total_steps())) {
    throw std::invalid_argument("k must satisfy 0 <= k < g*(a+b)");
  }
  PathEnumerator enumerator(spec, config.cap);
  bool json = config.format == "json";
  bool csv = config.format == "csv";
  if (csv) out << "steps,flaws\n";
  if (json) out << '[';
  bool first = true;
  while (auto path = enumerator.next()) {
    long long flaws = flaw_count(*path, spec);
    if (config.k && flaws != *config.k) continue;
    if (json) {
      if (!first) out << ',';
      out << nlohmann::json{{"steps", path->text()}, {"flaws", flaws}}.dump();
    } else if (csv) {
      out << path->text() << ',' << flaws << '\n';
    } else {
      out << path->text() << '\n';
    }
    first = false;
  }
  if (json) out << "]\n";
  return 0;
}

int run_verify(const RunConfig& config, std::ostream& out) {
  BoundarySpec spec(config.a, config.b, config.g);
  bool all = config.suite == "all";
  CheckReport report;

  if (all || config.suite == "identity") {
    // The identity is per scale; cover every scale up to g.
    for (long long h = 1; h <= config.g; ++h) {
      report.merge(alternating_identity_check(h, config.a, config.b));
    }
  }
  if (config.suite == "recurrence" || (all && config.g >= 2)) {
    report.merge(recurrence_check(config.g, config.a, config.b));
  }
  if (all || config.suite == "oracle") {
    report.merge(
        verify_counting(spec, OracleOptions{config.cap, config.jobs}));
  }
  if (all || config.suite == "bijection") {
    std::ofstream trace_file;
    BijectionVerifyOptions options;
    options.cap = config.cap;
    if (!config.trace_path.empty()) {
      trace_file.open(config.trace_path);
      if (!trace_file) {
        throw std::invalid_argument("cannot open trace file " +
                                    config.trace_path);
      }
      options.trace = &trace_file;
    }
    report.merge(verify_bijection(spec, options));
  }

  if (config.format == "json") {
    out << to_json(report) << '\n';
  } else {
    out << to_text(report);
  }
  return report.ok() ? 0 : 1;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == "count") return run_count(config, out);
    if (config.command == "table") return run_table(config, out);
    if (config.command == "enumerate") return run_enumerate(config, out);
    if (config.command == "verify") return run_verify(config, out);
    err << "error: unknown command \"" << config.command << "\"\n";
    return 2;
  } catch (const EnumerationCapExceeded& e) {
    err << "error: " << e.what()
        << " (raise --oracle-cap or LATTICEFLAW_CAP to allow it)\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "latticeflaw: exact flaw statistics for monotone lattice paths "
      "against a rational-slope boundary"};
  app.require_subcommand(1);

  RunConfig config;
  std::optional<long long> cap_flag;

  auto add_spec_options = [&](CLI::App* cmd) {
    cmd->add_option("--a", config.a, "east span per scale unit (coprime to --b)")
        ->required();
    cmd->add_option("--b", config.b, "north span per scale unit")->required();
    cmd->add_option("--g", config.g, "scale: paths end at (g*a, g*b)")
        ->required();
  };
  auto add_cap_option = [&](CLI::App* cmd) {
    cmd->add_option("--oracle-cap", cap_flag,
                    "largest path-space size any enumeration may walk "
                    "(default 10^8, env LATTICEFLAW_CAP)");
  };

  CLI::App* count = app.add_subcommand(
      "count", "print the number of paths with exactly k flaws");
  add_spec_options(count);
  long long k_value = 0;
  count->add_option("--k", k_value, "flaw count")->required();

  CLI::App* table = app.add_subcommand(
      "table", "print the flaw-count table for every k");
  add_spec_options(table);
  table->add_flag("--oracle", config.oracle,
                  "recount by exhaustive enumeration instead of the formula");
  table->add_option("--format", config.format, "csv, json, or md (default csv)")
      ->check(CLI::IsMember({"csv", "json", "md"}));
  table->add_option("--jobs", config.jobs, "oracle worker threads")
      ->check(CLI::PositiveNumber);
  add_cap_option(table);

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "list member paths in lexicographic order");
  add_spec_options(enumerate);
  std::optional<long long> k_filter;
  enumerate->add_option("--k", k_filter, "only paths with exactly k flaws");
  enumerate->add_option("--format", config.format,
                        "text, csv, or json (default text)")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  add_cap_option(enumerate);

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  add_spec_options(verify);
  verify->add_option("--suite", config.suite,
                     "bijection, recurrence, identity, oracle, or all")
      ->check(CLI::IsMember(
          {"bijection", "recurrence", "identity", "oracle", "all"}));
  verify->add_option("--format", config.format, "text or json (default text)")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--jobs", config.jobs, "oracle worker threads")
      ->check(CLI::PositiveNumber);
  verify->add_option("--trace", config.trace_path,
                     "write one JSON line per flaw-raising application");
  add_cap_option(verify);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("latticeflaw");
  for (const std::string& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  config.command = app.get_subcommands().front()->get_name();
  if (config.command == "count") config.k = k_value;
  if (config.command == "enumerate") config.k = k_filter;
  if (config.format.empty()) {
    config.format = config.command == "table" ? "csv" : "text";
  }
  try {
    config.cap = resolve_cap(cap_flag);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  return run(config, out, err);
}

}  // namespace latticeflaw

// gw-cli: run the glider/localization case studies and the verification suite.
//
//   gw-cli list
//   gw-cli run cusp --bound 12 --json out.json
//   gw-cli run sheaf --config sheaf.cfg
//   gw-cli verify --json -
//
// Exit status: 0 when every check passes or is inconclusive, 1 on any failed check, 2 on a
// configuration error.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gw/cli/cases.hpp"

namespace {

struct Overrides {
  int bound = 0, depth = 0, power_bound = 0, samples = 0;
  std::string config, json;
  bool quiet = false;

  gw::cli::CaseConfig apply(gw::cli::CaseConfig cfg) const {
    if (bound) cfg.bound = bound;
    if (depth) cfg.depth = depth;
    if (power_bound) cfg.power_bound = power_bound;
    if (samples) cfg.samples = samples;
    return cfg;
  }
};

void add_bounds(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--bound", o.bound, "ambient degree bound B")->check(CLI::Range(1, 1000));
  cmd->add_option("--depth", o.depth, "chain depth D")->check(CLI::Range(1, 1000));
  cmd->add_option("--power-bound", o.power_bound, "power bound for denominators and filters")->check(CLI::Range(1, 1000));
  cmd->add_option("--samples", o.samples, "sample count for sampled checks")->check(CLI::Range(1, 1000));
  cmd->add_option("--json", o.json, "write the JSON report to PATH ('-' for stdout)");
  cmd->add_flag("-q,--quiet", o.quiet, "suppress the text report");
}

int finish(const gw::cli::Report& r, const Overrides& o) {
  if (!o.quiet && o.json != "-") std::cout << gw::cli::report_text(r);
  if (!o.json.empty()) gw::cli::write_file(o.json, gw::cli::report_json(r));
  return r.status() == gw::Status::Fail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Glider representations: filtered localization and sheaf case studies"};
  app.require_subcommand(1);

  Overrides run_o, verify_o;
  std::string case_name;
  auto* run = app.add_subcommand("run", "run one case and report its checks");
  run->add_option("case", case_name, "case name (see list)")->required();
  run->add_option("--config", run_o.config, "case config file");
  add_bounds(run, run_o);

  auto* verify = app.add_subcommand("verify", "run every case");
  add_bounds(verify, verify_o);

  auto* list = app.add_subcommand("list", "list the available cases");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (list->parsed()) {
      for (const auto& c : gw::cli::case_table()) std::cout << c.name << "\t" << c.summary << "\n";
      return 0;
    }
    if (run->parsed()) {
      gw::cli::CaseConfig cfg = run_o.config.empty() ? gw::cli::CaseConfig{} : gw::cli::load_config(run_o.config);
      return finish(gw::cli::run_case(case_name, run_o.apply(cfg)), run_o);
    }
    return finish(gw::cli::verify_suite(gw::cli::all_case_names(), verify_o.apply({})), verify_o);
  } catch (const gw::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const gw::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

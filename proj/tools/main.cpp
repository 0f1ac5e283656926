#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cokasch/workspace.hpp"
#include "cokasch/zmodule.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw std::invalid_argument("cannot open workspace file '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Co-Kasch, Kasch, h-ring and Cartan checks for finite rings and modules"};
  app.require_subcommand(1);

  std::string workspace_path;
  std::string format = "text";
  cokasch::u64 seed = 0;
  app.add_option("--workspace", workspace_path, "Workspace JSON file");
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--seed", seed, "Seed for randomized checks")->capture_default_str();

  std::string target = "all";
  std::string ring_sel = "all";
  std::string expr;

  auto* validate = app.add_subcommand("validate", "Re-run every validator in the workspace");
  validate->add_option("--target", target, "Entry name, or all");

  auto* simples = app.add_subcommand("simples", "List the simple module catalog of a ring");
  simples->add_option("--ring", target, "Ring name")->required();

  auto* cartan = app.add_subcommand("cartan", "Cartan matrix of a ring");
  cartan->add_option("--ring", target, "Ring name")->required();

  auto* check_cokasch = app.add_subcommand("check-cokasch", "Decide whether a module is co-Kasch");
  check_cokasch->add_option("--module", target, "Module name")->required();

  auto* check_kasch = app.add_subcommand("check-kasch", "Decide whether a module is Kasch");
  check_kasch->add_option("--module", target, "Module name")->required();

  auto* check_hring = app.add_subcommand("check-hring", "Decide whether a ring is an h-ring");
  check_hring->add_option("--ring", target, "Ring name")->required();

  auto* witness_hring =
      app.add_subcommand("witness-hring", "On a non-h-ring, construct the failing extension");
  witness_hring->add_option("--ring", target, "Ring name")->required();

  auto* check_z = app.add_subcommand("check-z", "Decide whether a Z-module expression is co-Kasch");
  auto* z_name = check_z->add_option("--zmodule", target, "Workspace zmodule name");
  auto* z_expr = check_z->add_option("--expr", expr, "Inline expression, e.g. \"Z + Prufer(2)\"");
  z_name->excludes(z_expr);

  auto* verify = app.add_subcommand("verify", "Run property checks over the workspace rings");
  verify->add_option("--prop", target, "Check id, or all")->capture_default_str();
  verify->add_option("--ring", ring_sel, "Ring name, or all")->capture_default_str();

  app.add_subcommand("run", "Run the task list stored in the workspace");

  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    std::vector<cokasch::TaskOutcome> outcomes;
    if (command == "check-z" && !expr.empty()) {
      cokasch::Workspace ephemeral;
      ephemeral.zmodules.emplace_back("expr", cokasch::parse_zmodule(expr));
      outcomes.push_back(cokasch::run_task(ephemeral, {"check-z", "expr"}, seed));
    } else {
      if (workspace_path.empty())
        throw std::invalid_argument("--workspace is required for '" + command + "'");
      cokasch::Workspace ws = cokasch::parse_workspace(read_file(workspace_path));
      if (command == "run") {
        outcomes = cokasch::run_tasks(ws, seed);
      } else if (command == "verify" && ring_sel != "all") {
        cokasch::Workspace narrowed;
        narrowed.rings.emplace_back(ring_sel, ws.ring(ring_sel));
        outcomes.push_back(cokasch::run_task(narrowed, {"verify", target}, seed));
      } else {
        outcomes.push_back(cokasch::run_task(ws, {command, target}, seed));
      }
    }
    std::cout << (format == "json" ? cokasch::render_reports_json(outcomes)
                                   : cokasch::render_reports_text(outcomes));
    for (const cokasch::TaskOutcome& outcome : outcomes)
      if (outcome.harness_failure) return 2;
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

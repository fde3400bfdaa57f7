// gaql: command-line front end. Either runs a line-delimited JSON task file
// (`gaql run tasks.jsonl`, or `-` for stdin) or a single command given as
// flags (`gaql fiber --ring x,y,z --map "1 + x*z, y + z + x*y*z" --point 0,0`).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "gaql/task.hpp"

namespace {

std::string flag_name(const std::string& field) {
  std::string s = field;
  for (char& c : s)
    if (c == '_') c = '-';
  return "--" + s;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace gaql::cli;

  CLI::App app{"Exact polynomial toolkit for additive group actions and quotient maps"};
  app.require_subcommand(1);

  RunOptions options;
  try {
    options.nilpotency_bound = default_nilpotency_bound();
  } catch (const gaql::Error& e) {
    std::cerr << "gaql: " << e.what() << '\n';
    return kExitUsage;
  }
  std::string order = "grevlex";
  bool no_timing = false;
  auto add_run_options = [&](CLI::App* sub) {
    sub->add_option("--order", order, "Monomial order for printed bases (lex|grevlex)")
        ->check(CLI::IsMember({"lex", "grevlex"}));
    sub->add_flag("--no-timing", no_timing, "Omit the timing key from records");
  };

  std::string task_path;
  CLI::App* run = app.add_subcommand("run", "Execute a line-delimited JSON task file");
  run->add_option("task", task_path, "Task file, or - for stdin")->required();
  run->add_option("--bound", options.nilpotency_bound, "Default nilpotency bound");
  run->add_option("--degree-bound", options.degree_bound, "Default slice degree bound");
  run->add_option("--power-bound", options.power_bound, "Default localization power bound");
  add_run_options(run);

  std::string ring_vars;
  std::string defs_path;
  std::map<std::string, std::map<std::string, std::string>> flag_values;
  std::map<std::string, CLI::App*> commands;
  for (const auto& name : command_names()) {
    CLI::App* sub = app.add_subcommand(name, "Run the '" + name + "' command");
    commands[name] = sub;
    if (name == "ring") {
      sub->add_option("--ring,--vars", ring_vars, "Comma-separated variable names")->required();
    } else {
      sub->add_option("--ring", ring_vars, "Comma-separated variable names");
      sub->add_option("--defs", defs_path, "Task file with declarations to load first");
    }
    for (const auto& field : command_fields(name)) {
      if (field == "vars" || field == "order") continue;
      sub->add_option(flag_name(field), flag_values[name][field]);
    }
    add_run_options(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  options.order = order == "lex" ? gaql::MonomialOrder::lex() : gaql::MonomialOrder::grevlex();
  options.timing = !no_timing;

  if (run->parsed()) {
    if (task_path == "-") return run_task(std::cin, std::cout, options);
    std::ifstream in(task_path);
    if (!in) {
      std::cerr << "gaql: cannot open " << task_path << "\n";
      return kExitUsage;
    }
    return run_task(in, std::cout, options);
  }

  for (const auto& [name, sub] : commands) {
    if (!sub->parsed()) continue;
    std::ostringstream task;
    std::vector<std::string> vars;
    if (!ring_vars.empty()) {
      std::stringstream ss(ring_vars);
      for (std::string v; std::getline(ss, v, ',');) {
        auto b = v.find_first_not_of(' ');
        auto e = v.find_last_not_of(' ');
        vars.push_back(b == std::string::npos ? "" : v.substr(b, e - b + 1));
      }
      task << json{{"cmd", "ring"}, {"vars", vars}}.dump() << '\n';
    }
    if (name == "ring") {
      std::istringstream in(task.str());
      return run_task(in, std::cout, options);
    }
    if (!defs_path.empty()) {
      std::ifstream defs(defs_path);
      if (!defs) {
        std::cerr << "gaql: cannot open " << defs_path << "\n";
        return kExitUsage;
      }
      task << defs.rdbuf() << '\n';
    }
    std::map<std::string, std::string> given;
    for (const auto& [field, value] : flag_values[name])
      if (sub->count(flag_name(field)) > 0) given[field] = value;
    try {
      task << command_from_flags(name, given, vars).dump() << '\n';
    } catch (const gaql::Error& e) {
      std::cerr << "gaql: " << e.what() << "\n";
      return kExitUsage;
    }
    std::istringstream in(task.str());
    return run_task(in, std::cout, options);
  }
  return kExitUsage;
}

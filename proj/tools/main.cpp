#include <cstdlib>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "cli.hpp"

using uag::cli::Command;
using uag::cli::RunConfig;

namespace {

struct Flags {
  RunConfig config;
  std::optional<std::uint64_t> budget;
  std::string format = "text";
  std::string factor = "left";
};

void common(CLI::App* sub, Flags& f) {
  auto& c = f.config;
  sub->add_option("--algebra,-a", c.algebra, "Algebra file, or a built-in name (s3, d4, q8, z2, ...)")->required();
  sub->add_option("--term", c.term, "Use the magma (A, p(x,y)) instead of A");
  sub->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--budget", f.budget, "Enumeration budget (overrides UAG_BUDGET)")->check(CLI::PositiveNumber);
  sub->add_option("--workers", c.workers, "Solver threads")->check(CLI::Range(1u, 1024u));
}

void system_input(CLI::App* sub, RunConfig& c) {
  sub->add_option("--system", c.system, "System file");
  sub->add_option("--text", c.text, "System text, e.g. 'vars x; x * x = e'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equation solving and q-compactness checks over finite algebras"};
  app.require_subcommand(1);
  Flags f;
  auto& c = f.config;
  std::map<CLI::App*, Command> commands;

  auto* solve = app.add_subcommand("solve", "Print every solution of a system");
  common(solve, f);
  system_input(solve, c);
  solve->add_option("--width,-N", c.width, "Solve over the direct power A^N");
  commands[solve] = Command::solve;

  auto* entails = app.add_subcommand("entails", "Check whether a system entails an equation");
  common(entails, f);
  system_input(entails, c);
  entails->add_option("--width,-N", c.width, "Work over the direct power A^N");
  entails->add_option("--equation", c.equation, "Target equation")->required();
  commands[entails] = Command::entails;

  auto* center = app.add_subcommand("center", "Print the center");
  common(center, f);
  center->add_option("--width,-N", c.width, "Use the direct power A^N");
  commands[center] = Command::center;

  auto* ann = app.add_subcommand("annihilator", "Print the right annihilator of a ring");
  common(ann, f);
  ann->add_option("--width,-N", c.width, "Use the direct power A^N");
  commands[ann] = Command::annihilator;

  auto* verify = app.add_subcommand("verify", "Run a q-compactness or product verification");
  common(verify, f);
  verify->add_option("--kind", c.kind, "group | ring | monoid | magma | chain | product")->required();
  verify->add_option("--width,-N", c.width, "Truncation width");
  verify->add_option("--prefix,-n", c.prefix, "Prefix depth");
  verify->add_option("--with", c.with, "Second factor for --kind product");
  verify->add_option("--trials", c.trials, "Random systems for --kind product");
  verify->add_option("--seed", c.seed, "Seed for random systems");
  commands[verify] = Command::verify;

  auto* chain = app.add_subcommand("chain", "Descent profile of the semilattice system");
  common(chain, f);
  chain->add_option("--width,-N", c.width, "Truncation width")->required();
  commands[chain] = Command::chain;

  auto* project = app.add_subcommand("project", "Project a system over A x B onto one factor");
  common(project, f);
  system_input(project, c);
  project->add_option("--with", c.with, "Second factor B")->required();
  project->add_option("--factor", f.factor, "left | right")->check(CLI::IsMember({"left", "right"}));
  commands[project] = Command::project;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : uag::cli::exit_code::usage;
  }

  for (auto& [sub, cmd] : commands) {
    if (sub->parsed()) c.command = cmd;
  }
  c.format = f.format == "json" ? uag::cli::Format::json : uag::cli::Format::text;
  c.factor = f.factor == "right" ? uag::Factor::right : uag::Factor::left;
  try {
    c.budget = uag::cli::resolve_budget(f.budget, std::getenv("UAG_BUDGET"));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return uag::cli::exit_code::usage;
  }
  return uag::cli::run(c, std::cout, std::cerr);
}

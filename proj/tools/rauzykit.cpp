#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "rauzy/cli.hpp"

int main(int argc, char** argv) {
  using rauzy::cli::Command;
  CLI::App app{"rauzykit: Rauzy classes, renaming groups and invariants of permutation pairs"};
  app.require_subcommand(1);

  const std::map<std::string, std::string> about{
      {"invariants", "cycle permutation, marked structure and profile"},
      {"renamings", "renaming group of the extended class"},
      {"class", "Rauzy class under right moves"},
      {"extended-class", "class under all four moves"},
      {"verify-ratio", "labeled over non-labeled class size against n! or n!/2"},
      {"spin", "spin parity via a block normal form"},
      {"decompose", "block decomposition and type of a standard pair"},
      {"find-pattern", "shortest move word from pair to target"}};

  Command cmd;
  std::string flavor = "extended";
  std::size_t budget = 0;
  for (const auto& verb : rauzy::cli::verbs()) {
    auto* sub = app.add_subcommand(verb, about.at(verb));
    sub->add_option("pair", cmd.pair, "pair as 'a b c | c b a'")->required();
    if (verb == "find-pattern") sub->add_option("target", cmd.target, "target pair on the same letters")->required();
    sub->add_flag("--json", cmd.json, "emit one JSON document");
    sub->add_option("--budget", budget, "labeled member cap (non-labeled cap is a tenth)")->check(CLI::PositiveNumber);
    sub->add_option("--cache", cmd.cache, "class cache file");
    sub->add_option("--flavor", flavor, "right or extended")->check(CLI::IsMember({"right", "extended"}));
    sub->callback([&cmd, verb] { cmd.verb = verb; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return rauzy::cli::kUsage;
  }
  if (budget > 0) cmd.budget = budget;
  cmd.flavor = rauzy::parse_flavor(flavor);

  const auto out = rauzy::cli::run(cmd);
  std::cout << out.out;
  std::cerr << out.err;
  return out.exit_code;
}

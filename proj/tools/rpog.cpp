#include <cstdio>

#include "CLI11.hpp"
#include "rpog/cli_lib.hpp"

int main(int argc, char** argv) {
  CLI::App app{"verification toolkit for right-preordered groups"};
  app.require_subcommand(1);

  rpog::RunConfig cfg;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "random seed for sampled checks");
    sub->add_option("--samples", cfg.samples, "sample count per check");
    sub->add_option("--max-order", cfg.max_order, "largest accepted order");
    sub->add_option("--format", cfg.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  auto* validate = app.add_subcommand("validate", "check the group and cone laws");
  validate->add_option("file", cfg.paths, "input file or built-in name")
      ->required();
  add_common(validate);

  auto* check = app.add_subcommand("check", "run one verdict");
  check
      ->add_option("kind", cfg.kind,
                   "preordered|schreier|category|groupoid|lattice|modular|"
                   "action-rep|s-center|smith|huq|axioms|effective")
      ->required();
  check->add_option("file", cfg.paths, "input file(s) or built-in name(s)")
      ->required();
  add_common(check);

  auto* example = app.add_subcommand("example", "replay a recorded example");
  example->add_option("id", cfg.paths, "example id")->required();
  add_common(example);

  auto* census = app.add_subcommand("census", "tabulate structures by order");
  census->add_option("max_order", cfg.paths, "largest order to enumerate");
  add_common(census);

  CLI11_PARSE(app, argc, argv);

  for (CLI::App* sub : {validate, check, example, census})
    if (sub->parsed()) cfg.command = sub->get_name();

  rpog::RunResult r = rpog::run_command(cfg);
  std::fputs(r.output.c_str(), stdout);
  return r.exit_code;
}

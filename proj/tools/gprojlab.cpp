#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "gprojlab/cli.hpp"

int main(int argc, char** argv) {
  gprojlab::RunConfig cfg;
  CLI::App app{"Gorenstein homological algebra of bound quiver algebras"};
  app.require_subcommand(1);
  std::string out_path;
  std::size_t bound = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", cfg.input_path, "input .quiv file")->required();
    sub->add_option("--bound", bound, "resolution length bound (default 4*dim+4, or GPROJLAB_BOUND)");
    sub->add_option("--seed", cfg.seed, "random seed")->default_val(0);
    sub->add_option("--field", cfg.field, "scalar field")->check(CLI::IsMember({"rat", "p"}))->default_val("rat");
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "md"}))->default_val("json");
    sub->add_option("--sample", cfg.sample, "sample size for randomized checks")->default_val(20);
    sub->add_option("--out", out_path, "write the report to this path instead of stdout");
  };
  add_common(app.add_subcommand("analyze", "Gorenstein dimension with certificates"));
  add_common(app.add_subcommand("gproj", "Gorenstein projective modules, stable Hom table and Omega-orbits"));
  auto* verify = app.add_subcommand("verify", "check a gluing statement on the input");
  add_common(verify);
  verify->add_option("which", cfg.which, "recollement | decomposition | gd-bounds | defect-hypothesis | all")
      ->check(CLI::IsMember({"recollement", "decomposition", "gd-bounds", "defect-hypothesis", "all"}));
  verify->add_flag("--control", cfg.control, "recollement only: use a deliberately wrong i^* (negative control)");
  add_common(app.add_subcommand("ct-a", "count and stable table check for cluster-tilted algebras of type A"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : gprojlab::kExitInput;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (app.get_subcommands().front()->count("--bound")) cfg.bound = bound;

  auto result = gprojlab::run_command(cfg);
  const std::string text = gprojlab::render(result, cfg.format);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write '" << out_path << "'\n";
      return gprojlab::kExitInput;
    }
    out << text;
  }
  if (result.doc.contains("error")) std::cerr << "gprojlab: " << result.doc["error"]["message"].get<std::string>() << "\n";
  return result.exit_code;
}

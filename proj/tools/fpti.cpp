#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fpti/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Parameter test ideals and Frobenius computations over F_p"};
  app.require_subcommand(1);
  std::string input;
  fpti::cli::Options opt;
  std::uint64_t seed = opt.seed;

  for (const auto& name : fpti::cli::commands()) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--input", input, "input file ('-' for stdin)")->required();
    sub->add_option("--format", opt.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--verify", opt.verify, "cross-check the result");
    sub->add_option("--seed", seed, "seed for random test-element search");
    sub->add_option("--cap-iterations", opt.cap_iterations, "star closure iteration cap")
        ->check(CLI::PositiveNumber);
    if (name == "froot" || name == "star" || name == "ext")
      sub->add_option("-e", opt.e, "Frobenius exponent")->check(CLI::PositiveNumber);
    if (name == "ext") sub->add_option("-i", opt.i, "Ext degree")->required();
    if (name == "hsl") {
      sub->add_option("-j", opt.j, "Ext degree")->required();
      sub->add_option("--emax", opt.emax, "largest chain index computed")->check(CLI::PositiveNumber);
    }
  }
  CLI11_PARSE(app, argc, argv);
  auto* sub = app.get_subcommands().front();
  opt.seed = seed;
  opt.i_set = sub->get_name() == "ext";
  opt.j_set = sub->get_name() == "hsl";

  std::stringstream buf;
  if (input == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream f(input);
    if (!f) {
      std::cerr << "error: cannot open " << input << "\n";
      return fpti::cli::kInputError;
    }
    buf << f.rdbuf();
  }
  auto rep = fpti::cli::run_text(sub->get_name(), buf.str(), opt);
  std::cout << rep.out;
  if (!rep.err.empty()) std::cerr << "error: " << rep.err << "\n";
  return rep.exit_code;
}

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pomsetcodes/experiment.hpp"

namespace {

struct Flags {
  std::string spec_path;
  std::string method;
  int trials = -1;
  long long seed = -1;
  long long budget = -1;
  bool dump_spec = false;
};

void add_common(CLI::App* cmd, Flags& flags) {
  cmd->add_option("--spec", flags.spec_path, "experiment spec file (JSON)")->required();
  cmd->add_option("--method", flags.method, "auto|theorem|corollary|sum|fourier");
  cmd->add_option("--trials", flags.trials, "probe trial count");
  cmd->add_option("--seed", flags.seed, "probe random seed");
  cmd->add_option("--budget", flags.budget, "exhaustive enumeration budget");
  cmd->add_flag("--dump-spec", flags.dump_spec, "print the parsed spec as canonical JSON and exit");
}

int run(const std::string& command, const Flags& flags) {
  pomsetcodes::ExperimentSpec spec;
  try {
    spec = pomsetcodes::ExperimentSpec::load(flags.spec_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cout << "RESULT: error\n";
    return 2;
  }
  if (!flags.method.empty()) spec.options.method = flags.method;
  if (flags.trials >= 0) spec.options.trials = flags.trials;
  if (flags.seed >= 0) spec.options.seed = static_cast<std::uint64_t>(flags.seed);
  if (flags.budget >= 0) spec.options.budget = flags.budget;

  if (flags.dump_spec) {
    std::cout << spec.to_json().dump(2) << "\n";
    return 0;
  }

  const pomsetcodes::CommandResult result = pomsetcodes::execute(command, spec);
  std::cout << result.report;
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weight enumerators and MacWilliams-type identities for pomset block codes"};
  app.require_subcommand(1);

  Flags flags;
  const char* commands[] = {"enumerate", "dual", "verify", "probe"};
  const char* descriptions[] = {
      "weight enumerator of the code itself",
      "dual code and its enumerator under the reversed pomset",
      "identity path vs. brute-force dual enumeration",
      "search for codes with equal enumerators but differing dual enumerators"};
  for (int k = 0; k < 4; ++k) add_common(app.add_subcommand(commands[k], descriptions[k]), flags);

  CLI11_PARSE(app, argc, argv);
  return run(app.get_subcommands().front()->get_name(), flags);
}

// holevo: Holevo quantity and its upper bounds for finite quantum ensembles.
//
//   holevo report <file> [--log-base 2] [--format json|csv]
//   holevo example <trine | orthogonal:m | oscillator:N> [--log-base 2] [--format json|csv]
//   holevo figure1 --n-min 0.1 --n-max 10 --steps 50 --out curve.csv
//   holevo verify <fei | bounds | tightness> --trials 1000 --seed 1

#include <cstdint>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "holevo/cli.hpp"

namespace {

void add_report_flags(CLI::App* cmd, int& base, holevo::io::Format& format) {
  cmd->add_option("--log-base", base, "Display entropies in base e (default) or base 2")
      ->check(CLI::IsMember({2}));
  const std::map<std::string, holevo::io::Format> formats{{"json", holevo::io::Format::json},
                                                          {"csv", holevo::io::Format::csv}};
  cmd->add_option("--format", format, "Output format")->transform(CLI::CheckedTransformer(formats));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Holevo quantity of finite ensembles and upper bounds on it"};
  app.require_subcommand(1);

  int base = 0;
  auto format = holevo::io::Format::json;

  std::string path;
  auto* report = app.add_subcommand("report", "Report chi and all bounds for an ensemble file");
  report->add_option("file", path, "Ensemble JSON file")->required();
  add_report_flags(report, base, format);

  std::string name;
  auto* example = app.add_subcommand("example", "Report a named ensemble");
  example->add_option("name", name, "trine | orthogonal:<m> | oscillator:<N>")->required();
  add_report_flags(example, base, format);

  double n_min = 0.1, n_max = 10.0;
  int steps = 50;
  std::string out_csv;
  auto* figure = app.add_subcommand("figure1", "Oscillator chi and its bound as functions of N (CSV)");
  figure->add_option("--n-min", n_min, "Smallest mean photon number");
  figure->add_option("--n-max", n_max, "Largest mean photon number");
  figure->add_option("--steps", steps, "Number of grid points (>= 2)");
  figure->add_option("--out", out_csv, "Output CSV path (stdout if omitted)");

  std::string suite;
  long trials = 1000;
  std::uint64_t seed = 1;
  std::string dump_dir = ".";
  auto* verify = app.add_subcommand("verify", "Run a randomized property suite");
  verify->add_option("suite", suite, "fei | bounds | tightness")->required();
  verify->add_option("--trials", trials, "Number of random trials");
  verify->add_option("--seed", seed, "Base seed");
  verify->add_option("--dump-dir", dump_dir, "Directory for violating instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : holevo::cli::kExitInput;
  }

  const holevo::cli::ReportOptions opt{base == 2 ? holevo::io::LogBase::two : holevo::io::LogBase::natural,
                                       format};
  try {
    if (*report) return holevo::cli::cmd_report(path, opt, std::cout, std::cerr);
    if (*example) return holevo::cli::cmd_example(name, opt, std::cout, std::cerr);
    if (*figure) return holevo::cli::cmd_figure1(n_min, n_max, steps, out_csv, std::cout, std::cerr);
    if (*verify) return holevo::cli::cmd_verify(suite, trials, seed, dump_dir, std::cout, std::cerr);
  } catch (const holevo::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return holevo::cli::kExitInput;
  }
  return holevo::cli::kExitInput;
}

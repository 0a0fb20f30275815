#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>

#include "holevo/bounds.hpp"
#include "holevo/gallery.hpp"
#include "holevo/io.hpp"
#include "holevo/verify.hpp"

/// Command implementations behind the `holevo` tool. Each writes to the given
/// streams and returns the process exit code.
namespace holevo::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInput = 2;

struct ReportOptions {
  io::LogBase base = io::LogBase::natural;
  io::Format format = io::Format::json;
};

inline void print_report(const BoundReport& rep, const ReportOptions& opt, std::ostream& out) {
  if (opt.format == io::Format::csv) {
    out << io::report_to_csv(rep, opt.base);
  } else {
    out << io::report_to_json(rep, opt.base).dump(2) << '\n';
  }
}

inline int cmd_report(const std::string& path, const ReportOptions& opt, std::ostream& out,
                      std::ostream& err) {
  try {
    print_report(full_report(io::read_ensemble_file(path)), opt, out);
  } catch (const io::InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}

/// Builds one of the named ensembles: `trine`, `orthogonal:<m>`, `oscillator:<N>`.
inline DiscreteEnsemble named_ensemble(const std::string& name) {
  const auto colon = name.find(':');
  const std::string kind = name.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : name.substr(colon + 1);
  auto need_arg = [&] {
    if (arg.empty()) throw io::InputError("example '" + kind + "' needs a parameter, e.g. " + kind + ":4");
  };
  try {
    if (kind == "trine" && arg.empty()) return trine_ensemble();
    if (kind == "orthogonal") {
      need_arg();
      std::size_t used = 0;
      const long m = std::stol(arg, &used);
      if (used != arg.size() || m < 1) throw io::InputError("orthogonal:<m> needs an integer m >= 1");
      return orthogonal_ensemble(m);
    }
    if (kind == "oscillator") {
      need_arg();
      std::size_t used = 0;
      const double n = std::stod(arg, &used);
      if (used != arg.size() || !(n > 0.0)) throw io::InputError("oscillator:<N> needs N > 0");
      return oscillator_ensemble({n, std::nullopt, 1e-12}).ensemble;
    }
  } catch (const std::logic_error&) {
    throw io::InputError("cannot parse parameter in '" + name + "'");
  }
  throw io::InputError("unknown example '" + name + "' (expected trine, orthogonal:<m>, oscillator:<N>)");
}

inline int cmd_example(const std::string& name, const ReportOptions& opt, std::ostream& out,
                       std::ostream& err) {
  try {
    print_report(full_report(named_ensemble(name)), opt, out);
  } catch (const io::InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}

/// Writes the N,chi,chi_hat,gap table to `out_path`, or to `out` when the
/// path is empty or "-".
inline int cmd_figure1(double n_min, double n_max, int steps, const std::string& out_path,
                       std::ostream& out, std::ostream& err) {
  std::string csv;
  try {
    csv = io::curve_to_csv(io::oscillator_curve(n_min, n_max, steps));
  } catch (const io::InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  if (out_path.empty() || out_path == "-") {
    out << csv;
    return kExitOk;
  }
  std::ofstream file(out_path);
  if (!file) {
    err << "error: cannot write " << out_path << '\n';
    return kExitInput;
  }
  file << csv;
  return kExitOk;
}

inline void print_suite(const verify::SuiteResult& res, std::ostream& out) {
  out << "suite " << res.suite << ": " << res.trials << " trials\n";
  for (const auto& [name, w] : res.worst) out << "  worst slack " << name << " = " << io::format_double(w) << '\n';
  for (const auto& [name, w] : res.informational) {
    out << "  worst slack " << name << " = " << io::format_double(w) << " (not enforced)\n";
  }
  out << (res.passed() ? "PASS" : "FAIL") << " (" << res.violations.size() << " violations)\n";
}

inline int cmd_verify(const std::string& suite, long trials, std::uint64_t seed, const std::string& dump_dir,
                      std::ostream& out, std::ostream& err) {
  if (trials < 1) {
    err << "error: --trials must be >= 1\n";
    return kExitInput;
  }
  verify::SuiteResult res;
  if (suite == "fei") {
    res = verify::run_fei_suite(static_cast<std::size_t>(trials), seed);
  } else if (suite == "bounds") {
    res = verify::run_bounds_suite(static_cast<std::size_t>(trials), seed);
  } else if (suite == "tightness") {
    res = verify::run_tightness_suite();
  } else {
    err << "error: unknown suite '" << suite << "' (expected fei, bounds, tightness)\n";
    return kExitInput;
  }
  print_suite(res, out);
  if (res.passed()) return kExitOk;

  // One file per offending instance; the ensemble part reads back with `report`.
  std::error_code ec;
  std::filesystem::create_directories(dump_dir, ec);
  for (const auto& v : res.violations) {
    if (!v.instance) continue;
    auto doc = io::ensemble_to_json(*v.instance);
    doc["violation"] = {{"suite", res.suite}, {"seed", seed}, {"trial", v.trial},
                        {"inequality", v.inequality}, {"slack", v.slack}};
    const auto path = std::filesystem::path(dump_dir) /
                      ("violation-" + res.suite + "-seed" + std::to_string(seed) + "-trial" +
                       std::to_string(v.trial) + ".json");
    std::ofstream f(path);
    if (f) {
      f << doc.dump(2) << '\n';
      err << "violation " << v.inequality << " (slack " << io::format_double(v.slack) << ") written to "
          << path.string() << '\n';
    } else {
      err << "cannot write " << path.string() << '\n';
    }
  }
  return kExitViolation;
}

}  // namespace holevo::cli

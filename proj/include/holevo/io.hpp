#pragma once

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "holevo/bounds.hpp"
#include "holevo/ensemble.hpp"
#include "holevo/errors.hpp"
#include "holevo/gallery.hpp"

namespace holevo::io {

using json = nlohmann::json;

inline constexpr int kEnsembleFileVersion = 1;

/// Malformed or invalid input file. The message names the first violated
/// invariant (and member index where relevant).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Shortest decimal text that reads back to the same double.
inline std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

// ---------------------------------------------------------------------------
// Ensemble files
//
//   {"version": 1, "dim": d,
//    "members": [{"prob": p, "label": "...", "state": [[[re, im], ...], ...]}, ...]}

inline json ensemble_to_json(const DiscreteEnsemble& mu) {
  json members = json::array();
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const Matrix& m = mu.states()[i].matrix();
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
      rows.push_back(std::move(row));
    }
    json member = {{"prob", mu.probs()[i]}, {"state", std::move(rows)}};
    if (auto label = mu.label(i)) member["label"] = *label;
    members.push_back(std::move(member));
  }
  return {{"version", kEnsembleFileVersion}, {"dim", mu.dim()}, {"members", std::move(members)}};
}

namespace detail {

inline Matrix parse_state(const json& state, long dim, std::size_t index) {
  const std::string where = "member " + std::to_string(index) + ": ";
  if (!state.is_array() || static_cast<long>(state.size()) != dim) {
    throw InputError(where + "state must be a " + std::to_string(dim) + "x" + std::to_string(dim) +
                     " array");
  }
  Matrix m(dim, dim);
  for (long r = 0; r < dim; ++r) {
    const json& row = state[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<long>(row.size()) != dim) {
      throw InputError(where + "state row " + std::to_string(r) + " must have " + std::to_string(dim) +
                       " entries");
    }
    for (long c = 0; c < dim; ++c) {
      const json& z = row[static_cast<std::size_t>(c)];
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
        throw InputError(where + "entry (" + std::to_string(r) + "," + std::to_string(c) +
                         ") must be an [re, im] pair");
      }
      m(r, c) = Complex(z[0].get<double>(), z[1].get<double>());
    }
  }
  return m;
}

}  // namespace detail

inline DiscreteEnsemble ensemble_from_json(const json& doc) {
  if (!doc.is_object()) throw InputError("ensemble file must be a JSON object");
  if (!doc.contains("version") || !doc["version"].is_number_integer() ||
      doc["version"].get<int>() != kEnsembleFileVersion) {
    throw InputError("unsupported or missing version (expected " + std::to_string(kEnsembleFileVersion) + ")");
  }
  if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<long>() < 1) {
    throw InputError("dim must be an integer >= 1");
  }
  const long dim = doc["dim"].get<long>();
  if (!doc.contains("members") || !doc["members"].is_array() || doc["members"].empty()) {
    throw InputError("members must be a non-empty array");
  }

  std::vector<double> probs;
  std::vector<DensityOperator> states;
  std::vector<std::string> labels;
  bool any_label = false;
  const json& members = doc["members"];
  for (std::size_t i = 0; i < members.size(); ++i) {
    const json& mem = members[i];
    const std::string where = "member " + std::to_string(i) + ": ";
    if (!mem.is_object()) throw InputError(where + "must be an object");
    if (!mem.contains("prob") || !mem["prob"].is_number()) throw InputError(where + "prob must be a number");
    probs.push_back(mem["prob"].get<double>());
    if (mem.contains("label")) {
      if (!mem["label"].is_string()) throw InputError(where + "label must be a string");
      labels.push_back(mem["label"].get<std::string>());
      any_label = true;
    } else {
      labels.emplace_back();
    }
    if (!mem.contains("state")) throw InputError(where + "state is missing");
    const Matrix m = detail::parse_state(mem["state"], dim, i);
    try {
      states.emplace_back(m);
    } catch (const ValidationError& e) {
      throw InputError(where + e.what());
    }
  }
  try {
    return DiscreteEnsemble(ProbabilityVector(std::move(probs)), std::move(states),
                            any_label ? std::move(labels) : std::vector<std::string>{});
  } catch (const ValidationError& e) {
    throw InputError(e.what());
  }
}

inline DiscreteEnsemble read_ensemble_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw InputError("parse error in " + path + ": " + e.what());
  }
  return ensemble_from_json(doc);
}

inline void write_ensemble_file(const std::string& path, const DiscreteEnsemble& mu) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << ensemble_to_json(mu).dump(2) << '\n';
}

// ---------------------------------------------------------------------------
// Reports

enum class LogBase { natural, two };
enum class Format { json, csv };

struct ReportField {
  std::string name;
  double value;
};

/// BoundReport fields in a fixed order. Entropy-valued fields are divided by
/// ln 2 when base 2 is requested; eps_av, c_mu and omega_residual are not.
inline std::vector<ReportField> flatten(const BoundReport& r, LogBase base) {
  const double k = base == LogBase::two ? 1.0 / std::numbers::ln2 : 1.0;
  std::vector<ReportField> f = {
      {"chi", r.chi * k},
      {"chi_plus", r.chi_plus * k},
      {"chi_minus", r.chi_minus * k},
      {"eps_av", r.eps_av},
      {"hbar", r.hbar * k},
      {"h_of_eps_av", r.h_of_eps_av * k},
      {"thm1_bound", r.thm1_bound * k},
      {"thm1_bound_hvariant", r.thm1_bound_hvariant * k},
      {"prop1_bound", r.prop1_bound * k},
      {"prop1_bound_hvariant", r.prop1_bound_hvariant * k},
      {"cor1_bound", r.cor1_bound * k},
      {"cor1_bound_hvariant", r.cor1_bound_hvariant * k},
      {"prop2_bound", r.prop2_bound * k},
      {"prop2_bound_hvariant", r.prop2_bound_hvariant * k},
      {"c_mu", r.c_mu},
      {"d_mu", r.d_mu * k},
      {"d_mu_aux_weighted", r.d_mu_aux_weighted * k},
      {"weights_entropy", r.weights_entropy * k},
      {"omega_residual", r.omega_residual},
  };
  for (const auto& [name, v] : r.slacks) f.push_back({"slack." + name, v * k});
  return f;
}

inline std::string log_base_name(LogBase base) { return base == LogBase::two ? "2" : "e"; }

inline json report_to_json(const BoundReport& r, LogBase base) {
  json values = json::object();
  json slacks = json::object();
  for (const auto& f : flatten(r, base)) {
    if (f.name.rfind("slack.", 0) == 0) {
      slacks[f.name.substr(6)] = f.value;
    } else {
      values[f.name] = f.value;
    }
  }
  values["slacks"] = std::move(slacks);
  values["log_base"] = log_base_name(base);
  return values;
}

/// Header row of field names followed by one row of values.
inline std::string report_to_csv(const BoundReport& r, LogBase base) {
  const auto fields = flatten(r, base);
  std::ostringstream os;
  for (std::size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << fields[i].name;
  os << '\n';
  for (std::size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << format_double(fields[i].value);
  os << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// Oscillator curve

struct CurveRow {
  double mean_photons;
  double chi;
  double chi_hat;
  double gap;
};

/// steps evenly spaced mean photon numbers from n_min to n_max inclusive.
inline std::vector<CurveRow> oscillator_curve(double n_min, double n_max, int steps) {
  if (!(n_min > 0.0) || !(n_max > n_min) || !std::isfinite(n_max)) {
    throw InputError("need 0 < n_min < n_max");
  }
  if (steps < 2) throw InputError("steps must be >= 2");
  std::vector<CurveRow> rows;
  for (int k = 0; k < steps; ++k) {
    const double n = k == steps - 1 ? n_max : n_min + (n_max - n_min) * k / (steps - 1);
    const auto cf = oscillator_closed_form(n);
    rows.push_back({n, cf.chi, cf.chi_hat, cf.chi_hat - cf.chi});
  }
  return rows;
}

inline std::string curve_to_csv(const std::vector<CurveRow>& rows) {
  std::ostringstream os;
  os << "N,chi,chi_hat,gap\n";
  for (const auto& r : rows) {
    os << format_double(r.mean_photons) << ',' << format_double(r.chi) << ',' << format_double(r.chi_hat)
       << ',' << format_double(r.gap) << '\n';
  }
  return os.str();
}

}  // namespace holevo::io

#include <algorithm>
#include <cmath>
#include <limits>
#include <filesystem>
#include <numbers>
#include <string>

#include <gtest/gtest.h>

#include "holevo/bounds.hpp"
#include "holevo/gallery.hpp"
#include "holevo/io.hpp"

using namespace holevo;
using io::json;

namespace {

const std::string kDataDir = HOLEVO_DATA_DIR;

json qubit_doc(double p0, double p1) {
  return json::parse(R"({"version": 1, "dim": 2, "members": [
      {"prob": )" + std::to_string(p0) + R"(, "state": [[[1, 0], [0, 0]], [[0, 0], [0, 0]]]},
      {"prob": )" + std::to_string(p1) + R"(, "state": [[[0, 0], [0, 0]], [[0, 0], [1, 0]]]}]})");
}

}  // namespace

TEST(FormatDouble, RoundTrips) {
  for (double v : {0.1, 1.0 / 3.0, std::numbers::ln2, 1e-300, -2.5}) EXPECT_EQ(std::stod(io::format_double(v)), v);
  EXPECT_EQ(io::format_double(std::numeric_limits<double>::infinity()), "inf");
}

TEST(EnsembleJson, RoundTripPreservesReport) {
  Rng rng(51);
  for (int t = 0; t < 20; ++t) {
    const auto mu = random_ensemble(2 + t % 4, 2 + t % 5, rng);
    const auto back = io::ensemble_from_json(json::parse(io::ensemble_to_json(mu).dump()));
    const auto a = full_report(mu);
    const auto b = full_report(back);
    const auto fa = io::flatten(a, io::LogBase::natural);
    const auto fb = io::flatten(b, io::LogBase::natural);
    ASSERT_EQ(fa.size(), fb.size());
    for (std::size_t k = 0; k < fa.size(); ++k) EXPECT_NEAR(fa[k].value, fb[k].value, 1e-12) << fa[k].name;
  }
}

TEST(EnsembleJson, FileRoundTripKeepsLabels) {
  const auto path = (std::filesystem::temp_directory_path() / "holevo_io_trine.json").string();
  io::write_ensemble_file(path, trine_ensemble());
  const auto mu = io::read_ensemble_file(path);
  std::filesystem::remove(path);
  EXPECT_EQ(mu.label(2).value_or(""), "psi3");
  EXPECT_NEAR(holevo_chi(mu).value(), std::numbers::ln2, 1e-12);
}

TEST(EnsembleJson, ReadsFixture) {
  const auto mu = io::read_ensemble_file(kDataDir + "/trine.json");
  EXPECT_EQ(mu.size(), 3u);
  EXPECT_NEAR(full_report(mu).prop1_bound, 0.5 * std::log(3.0) + std::numbers::ln2, 1e-9);
}

TEST(EnsembleJson, MalformedInputs) {
  EXPECT_NO_THROW(io::ensemble_from_json(qubit_doc(0.5, 0.5)));
  EXPECT_THROW(io::ensemble_from_json(qubit_doc(0.5, 0.4)), io::InputError);
  EXPECT_THROW(io::read_ensemble_file(kDataDir + "/bad_prob_sum.json"), io::InputError);
  EXPECT_THROW(io::read_ensemble_file(kDataDir + "/missing.json"), io::InputError);

  auto doc = qubit_doc(0.5, 0.5);
  doc["version"] = 2;
  EXPECT_THROW(io::ensemble_from_json(doc), io::InputError);

  doc = qubit_doc(0.5, 0.5);
  doc["members"][1]["state"][0][1] = json::array({0.3, 0.0});
  try {
    io::ensemble_from_json(doc);
    FAIL() << "non-Hermitian state accepted";
  } catch (const io::InputError& e) {
    EXPECT_NE(std::string(e.what()).find("member 1"), std::string::npos) << e.what();
  }

  doc = qubit_doc(0.5, 0.5);
  doc["members"][0]["state"][1] = json::array({json::array({0, 0})});
  EXPECT_THROW(io::ensemble_from_json(doc), io::InputError);

  doc = qubit_doc(0.5, 0.5);
  doc["members"][0]["state"][0][0] = "1";
  EXPECT_THROW(io::ensemble_from_json(doc), io::InputError);

  doc = qubit_doc(0.5, 0.5);
  doc["members"] = json::array();
  EXPECT_THROW(io::ensemble_from_json(doc), io::InputError);
  EXPECT_THROW(io::ensemble_from_json(json::array()), io::InputError);
}

TEST(ReportOutput, BaseTwo) {
  const auto rep = full_report(trine_ensemble());
  const auto doc = io::report_to_json(rep, io::LogBase::two);
  EXPECT_NEAR(doc["chi"].get<double>(), 1.0, 1e-12);
  EXPECT_NEAR(doc["prop1_bound"].get<double>(), 0.5 * std::log2(3.0) + 1.0, 1e-12);
  EXPECT_NEAR(doc["eps_av"].get<double>(), 0.5, 1e-12);
  EXPECT_NEAR(doc["c_mu"].get<double>(), std::sqrt(3.0) / 2.0, 1e-12);
  EXPECT_EQ(doc["log_base"], "2");
  EXPECT_TRUE(doc["slacks"].contains("thm1"));

  const auto nat = io::report_to_json(rep, io::LogBase::natural);
  EXPECT_NEAR(nat["chi"].get<double>(), std::numbers::ln2, 1e-12);
  EXPECT_EQ(nat["log_base"], "e");
}

TEST(ReportOutput, CsvIsDeterministic) {
  const auto a = io::report_to_csv(full_report(trine_ensemble()), io::LogBase::natural);
  const auto b = io::report_to_csv(full_report(trine_ensemble()), io::LogBase::natural);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.rfind("chi,chi_plus,chi_minus,eps_av,", 0), 0u);
  const auto header = a.substr(0, a.find('\n'));
  const auto values = a.substr(a.find('\n') + 1);
  EXPECT_EQ(std::count(header.begin(), header.end(), ','), std::count(values.begin(), values.end(), ','));
}

TEST(OscillatorCurve, Rows) {
  const auto rows = io::oscillator_curve(0.5, 2.0, 4);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows.front().mean_photons, 0.5);
  EXPECT_EQ(rows.back().mean_photons, 2.0);
  EXPECT_NEAR(rows[1].mean_photons, 1.0, 1e-15);
  for (const auto& r : rows) {
    EXPECT_GT(r.gap, 0.0);
    EXPECT_DOUBLE_EQ(r.gap, r.chi_hat - r.chi);
  }
  const auto csv = io::curve_to_csv(rows);
  EXPECT_EQ(csv.rfind("N,chi,chi_hat,gap\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);

  EXPECT_THROW(io::oscillator_curve(0.5, 2.0, 1), io::InputError);
  EXPECT_THROW(io::oscillator_curve(0.0, 2.0, 3), io::InputError);
  EXPECT_THROW(io::oscillator_curve(2.0, 1.0, 3), io::InputError);
}

#include <gtest/gtest.h>

#include "risnoma/run_config.hpp"

using namespace risnoma;
using nlohmann::json;

TEST(SweepRangeTest, InclusivePoints) {
  const auto p = SweepRange{}.points();
  ASSERT_EQ(p.size(), 11u);
  EXPECT_EQ(p.front(), 0.0);
  EXPECT_EQ(p.back(), 50.0);
  EXPECT_EQ((SweepRange{0.0, 1.0, 0.1}.points().size()), 11u);
  EXPECT_EQ((SweepRange{3.0, 3.0, 1.0}.points().size()), 1u);
}

TEST(RunConfigJson, RoundTrip) {
  RunConfig run = figure_preset(FigurePreset::Fig5);
  run.scenario.eve_model = EveModel::Composite;
  run.workers = 4;
  const RunConfig back = run_config_from_json(to_json(run));
  EXPECT_EQ(to_json(back), to_json(run));
  EXPECT_EQ(back.variations.snr_eve_db, (std::vector<double>{-5.0, 0.0, 5.0}));
  EXPECT_EQ(back.scenario.eve_model, EveModel::Composite);
}

TEST(RunConfigJson, GeometryRoundTripOmitsSnrKeys) {
  RunConfig run;
  run.scenario.geometry = Geometry{10.0, 20.0, 5.0, 30.0, 40.0, 3.0, 1e9, 1e6};
  const json doc = to_json(run);
  EXPECT_FALSE(doc["scenario"].contains("snr_legit_db"));
  const RunConfig back = run_config_from_json(doc);
  ASSERT_TRUE(back.scenario.geometry.has_value());
  EXPECT_EQ(back.scenario.geometry->d_re, 30.0);
  EXPECT_EQ(back.scenario.geometry->chi, 3.0);
}

TEST(RunConfigJson, StrictRejections) {
  EXPECT_THROW(run_config_from_json(json::array()), std::invalid_argument);
  EXPECT_THROW(run_config_from_json({{"bogus", 1}}), std::invalid_argument);
  EXPECT_THROW(run_config_from_json({{"scenario", {{"n_element", 4}}}}), std::invalid_argument);
  EXPECT_THROW(run_config_from_json({{"scenario", {{"n_elements", "four"}}}}),
               std::invalid_argument);
  EXPECT_THROW(run_config_from_json({{"scenario", {{"geometry", json::object()},
                                                    {"snr_legit_db", 10.0}}}}),
               std::invalid_argument);
  EXPECT_THROW(run_config_from_json({{"scenario", {{"c1_sq", 0.4}}}}), std::invalid_argument);
  EXPECT_THROW(run_config_from_json({{"sweep", {{"step_db", 0.0}}}}), std::invalid_argument);
  EXPECT_THROW(run_config_from_json({{"schemes", json::array()}}), std::invalid_argument);
  EXPECT_THROW(run_config_from_json({{"schemes", {"ris_noma", "carrier_pigeon"}}}),
               std::invalid_argument);
  EXPECT_THROW(run_config_from_json({{"variations", {{"n_elements", json::array()}}}}),
               std::invalid_argument);
}

TEST(Overrides, ScalarsAndLists) {
  json doc = to_json(RunConfig{});
  apply_override(doc, "scenario.n_elements", "16");
  apply_override(doc, "variations.target_rate", "0.1,0.3");
  apply_override(doc, "schemes", "ris_noma,ris_oma");
  apply_override(doc, "variations.n_groups", "3");
  apply_override(doc, "scenario.eve_model", "composite");
  apply_override(doc, "output_path", "out/a.csv");
  const RunConfig run = run_config_from_json(doc);
  EXPECT_EQ(run.scenario.n_elements, 16);
  EXPECT_EQ(run.variations.target_rate, (std::vector<double>{0.1, 0.3}));
  EXPECT_EQ(run.variations.n_groups, (std::vector<int>{3}));
  EXPECT_EQ(run.schemes, (std::vector<Scheme>{Scheme::RisNoma, Scheme::RisOma}));
  EXPECT_EQ(run.scenario.eve_model, EveModel::Composite);
  EXPECT_EQ(run.output_path, "out/a.csv");
}

TEST(Overrides, ParameterizationsAreExclusive) {
  json doc = to_json(RunConfig{});
  apply_override(doc, "scenario.geometry.d_sr", "12");
  EXPECT_FALSE(doc["scenario"].contains("snr_legit_db"));
  RunConfig run = run_config_from_json(doc);
  ASSERT_TRUE(run.scenario.geometry.has_value());
  EXPECT_EQ(run.scenario.geometry->d_sr, 12.0);
  EXPECT_EQ(run.scenario.geometry->d_re, 1.0);

  apply_override(doc, "scenario.snr_legit_db", "7");
  run = run_config_from_json(doc);
  EXPECT_FALSE(run.scenario.geometry.has_value());
  EXPECT_EQ(run.scenario.snr_legit_db, 7.0);
}

TEST(Overrides, UnknownKeyRejected) {
  json doc = to_json(RunConfig{});
  EXPECT_THROW(apply_override(doc, "scenario.n", "3"), std::invalid_argument);
}

TEST(Overrides, EveryKeyIsAccepted) {
  for (const std::string& key : override_keys()) {
    json doc = to_json(RunConfig{});
    EXPECT_NO_THROW(apply_override(doc, key, "1")) << key;
  }
}

TEST(Presets, NamesRoundTrip) {
  for (const char* name : {"fig2", "fig3", "fig4", "fig5", "fig6"})
    EXPECT_EQ(to_string(figure_preset_from_string(name)), name);
  EXPECT_THROW(figure_preset_from_string("fig7"), std::invalid_argument);
}

TEST(Presets, CommonSettings) {
  for (auto p : {FigurePreset::Fig2, FigurePreset::Fig3, FigurePreset::Fig4, FigurePreset::Fig5,
                 FigurePreset::Fig6}) {
    const RunConfig run = figure_preset(p);
    EXPECT_NO_THROW(validate(run));
    EXPECT_EQ(run.scenario.seed, 42u);
    EXPECT_EQ(run.scenario.trials, 1'000'000u);
    EXPECT_EQ(run.sweep.points().size(), 11u);
    EXPECT_EQ(run.output_path, std::string(to_string(p)) + ".csv");
  }
}

TEST(Presets, SeriesCounts) {
  EXPECT_EQ(expand_series(figure_preset(FigurePreset::Fig2)).size(), 3u);
  EXPECT_EQ(expand_series(figure_preset(FigurePreset::Fig3)).size(), 3u);
  EXPECT_EQ(expand_series(figure_preset(FigurePreset::Fig4)).size(), 2u);
  EXPECT_EQ(expand_series(figure_preset(FigurePreset::Fig5)).size(), 6u);
  EXPECT_EQ(expand_series(figure_preset(FigurePreset::Fig6)).size(), 3u);
}

TEST(Presets, ExpansionOrder) {
  const auto s = expand_series(figure_preset(FigurePreset::Fig5));
  EXPECT_EQ(s[0].config.target_rate, 0.1);
  EXPECT_EQ(s[0].config.snr_eve_db, -5.0);
  EXPECT_EQ(s[1].config.snr_eve_db, 0.0);
  EXPECT_EQ(s[3].config.target_rate, 0.3);
  const auto f2 = expand_series(figure_preset(FigurePreset::Fig2));
  EXPECT_EQ(f2[2].config.n_elements, 6);
  const auto f3 = expand_series(figure_preset(FigurePreset::Fig3));
  EXPECT_EQ(f3[1].scheme, Scheme::DirectNoma);
}

TEST(Presets, EveVariationNeedsSnrMode) {
  RunConfig run = figure_preset(FigurePreset::Fig5);
  run.scenario.geometry = Geometry{};
  EXPECT_THROW(expand_series(run), std::invalid_argument);
}

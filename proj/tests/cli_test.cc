// Copyright 2026 The idcoherence Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/commands.h"
#include "cli/config.h"
#include "cli/format.h"
#include "test_util.h"

using namespace idc;
using namespace idc::cli;
using nlohmann::json;
using idc::testing::Rng;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
   public:
    TempDir() {
        path_ = std::filesystem::temp_directory_path() /
                ("idc_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                 ::testing::UnitTest::GetInstance()->current_test_info()->name());
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }

    std::string write(const std::string &name, const std::string &text) const {
        auto file = path_ / name;
        std::ofstream(file) << text;
        return file.string();
    }
    std::string file(const std::string &name) const { return (path_ / name).string(); }

   private:
    std::filesystem::path path_;
};

json fig3a_doc() {
    return config_to_json(preset_config(Figure::Fig3a));
}

std::vector<std::string> csv_lines(const std::string &text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        lines.push_back(line);
    }
    return lines;
}

std::vector<std::string> split(const std::string &line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) {
        cells.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') {
        cells.emplace_back();
    }
    return cells;
}

ScenarioConfig random_config(Rng &rng) {
    ScenarioConfig config;
    switch (static_cast<int>(rng.uniform(0, 3))) {
        case 0: {
            MixedDiagonal m;
            m.weights = {0.125, 0.25, 0.5, 0.125};
            config.game.preparation = m;
            break;
        }
        case 1:
            config.game.preparation = PureProduct{rng.spin(), rng.spin()};
            break;
        default: {
            double angle = rng.uniform(0, 1.5);
            config.game.preparation =
                PureSpinSuperposition{std::polar(std::cos(angle), rng.uniform(-3, 3)), std::sin(angle)};
            break;
        }
    }
    config.game.overlaps = rng.overlaps();
    config.game.statistics = rng.coin() ? Statistics::Distinguishable : rng.identical();
    for (double &w : config.game.channel.omega) {
        w = rng.uniform(-5, 5);
    }
    config.game.channel.phi = {rng.uniform(-4, 4), rng.uniform(-4, 4)};
    double p1 = rng.uniform(0, 1);
    config.game.channel.priors = {p1, 1 - p1};
    if (rng.coin()) {
        config.sweep = SweepSection{Figure::Custom, {{"phi12", -1, rng.uniform(0, 7), 5}, {"p1", 0, 1, 3}}};
    }
    if (rng.coin()) {
        config.output = OutputSection{"out.csv", rng.coin() ? "csv" : "json"};
    }
    return config;
}

}  // namespace

TEST(format_number, shortest_round_trip) {
    EXPECT_EQ(format_number(0.5), "0.5");
    EXPECT_EQ(format_number(1.0 / 3), "0.333333333333333");
    EXPECT_EQ(format_number(0.1), "0.1");
    EXPECT_EQ(format_number(-0.0), "0");
    EXPECT_EQ(format_number(0), "0");
    EXPECT_EQ(format_number(361), "361");
    EXPECT_EQ(format_number(1e-20), "1e-20");
    EXPECT_EQ(format_number(std::sqrt(0.5)), "0.707106781186548");
    EXPECT_EQ(rounded(1.0 / 3), 0.333333333333333);
}

TEST(format_number, caps_at_fifteen_digits) {
    Rng rng;
    for (int i = 0; i < 1000; i++) {
        double x = rng.uniform(-1e6, 1e6);
        std::string s = format_number(x);
        size_t digits = 0;
        for (char c : s.substr(0, s.find('e'))) {
            digits += std::isdigit(static_cast<unsigned char>(c)) != 0;
        }
        EXPECT_LE(digits, 16u);  // a leading "0." adds one non-significant digit
        EXPECT_NEAR(std::stod(s), x, std::abs(x) * 1e-14);
        EXPECT_EQ(format_number(std::stod(s)), s);
    }
}

TEST(csv, rows_and_missing_cells) {
    EXPECT_EQ(csv_row({"a", "b", ""}), "a,b,\n");
    EXPECT_EQ(csv_cell(std::nullopt), "");
    EXPECT_EQ(csv_cell(0.25), "0.25");
}

TEST(config, round_trips_losslessly) {
    Rng rng;
    for (int trial = 0; trial < 300; trial++) {
        ScenarioConfig config = random_config(rng);
        json doc = config_to_json(config);
        EXPECT_EQ(config_from_json(doc), config);
        EXPECT_EQ(config_from_json(json::parse(doc.dump())), config);
        EXPECT_EQ(config_to_json(config_from_json(doc)), doc);
    }
}

TEST(config, rejects_unknown_keys_everywhere) {
    json base = fig3a_doc();
    for (const char *pointer : {"", "/preparation", "/overlaps", "/channel", "/channel/omega", "/sweep"}) {
        json doc = base;
        doc[json::json_pointer(pointer)]["extra"] = 1;
        EXPECT_THROW(config_from_json(doc), ConfigError) << pointer;
    }
}

TEST(config, rejects_malformed_sections) {
    json base = fig3a_doc();
    auto expect_error = [](json doc) { EXPECT_THROW(config_from_json(doc), ConfigError) << doc.dump(); };

    json doc = base;
    doc.erase("channel");
    expect_error(doc);
    doc = base;
    doc["statistics"] = "anyon";
    expect_error(doc);
    doc = base;
    doc["overlaps"]["l"] = 0.5;
    expect_error(doc);
    doc = base;
    doc["overlaps"]["l"] = {1, 0};
    doc["overlaps"]["r"] = {1, 0};
    expect_error(doc);
    doc = base;
    doc["channel"]["priors"] = {0.5, 0.6};
    expect_error(doc);
    doc = base;
    doc["preparation"] = {{"kind", "pure_product"}, {"spins", {"down", "sideways"}}};
    expect_error(doc);
    doc = base;
    doc["preparation"] = {{"kind", "mixed_diagonal"}, {"weights", {{"dd", 1}, {"du", 1}, {"ud", 0}, {"uu", 0}}}};
    expect_error(doc);
    doc = base;
    doc["preparation"] = {{"kind", "entangled"}};
    expect_error(doc);
    doc = base;
    doc["sweep"] = {{"figure", "custom"}};
    expect_error(doc);
    doc = base;
    doc["sweep"] = {{"figure", "fig9"}};
    expect_error(doc);
    doc = base;
    doc["sweep"] = {{"figure", "custom"}, {"axes", {{{"name", "phi12"}, {"min", 0}, {"max", 1}, {"points", -3}}}}};
    expect_error(doc);
    doc = base;
    doc["output"] = {{"format", "xml"}};
    expect_error(doc);
    EXPECT_THROW(config_from_json(json::array()), ConfigError);
}

TEST(config, presets_map_to_caption_parameters) {
    for (Figure f : {Figure::Fig3a, Figure::Fig3b, Figure::Fig4, Figure::Fig5}) {
        ScenarioConfig config = preset_config(f);
        EXPECT_EQ(config.game, preset_parameters(f));
        ASSERT_TRUE(config.sweep.has_value());
        EXPECT_EQ(config.sweep->figure, f);
        auto spec = sweep_spec_from(config);
        EXPECT_EQ(spec.axes, preset_sweep(f).axes);
    }
}

TEST(config, bad_sweep_axes_are_config_errors) {
    ScenarioConfig config = preset_config(Figure::Fig3a);
    config.sweep->axes = {{"phi12", 1, 0, 10}};
    EXPECT_THROW(sweep_spec_from(config), ConfigError);
    config.sweep.reset();
    EXPECT_THROW(sweep_spec_from(config), ConfigError);
}

TEST(cli_project, balanced_product_is_coherent) {
    auto r = run({"project", "--preset", "fig3a"});
    ASSERT_EQ(r.code, kExitSuccess) << r.err;
    json doc = json::parse(r.out);
    EXPECT_EQ(doc["kind"], "pure_state");
    EXPECT_EQ(doc["coherent"], true);
    size_t nonzero = 0;
    for (const auto &amp : doc["amplitudes"]) {
        double mag = std::hypot(amp[0].get<double>(), amp[1].get<double>());
        if (mag > 1e-12) {
            nonzero++;
            EXPECT_NEAR(mag, std::sqrt(0.5), 1e-12);
        }
    }
    EXPECT_EQ(nonzero, 2u);
}

TEST(cli_project, no_overlap_is_incoherent) {
    TempDir dir;
    json doc = fig3a_doc();
    doc["overlaps"]["l_prime"] = {0, 0};
    doc["overlaps"]["r"] = {0, 0};
    auto r = run({"project", "--config", dir.write("c.json", doc.dump())});
    ASSERT_EQ(r.code, kExitSuccess) << r.err;
    EXPECT_EQ(json::parse(r.out)["coherent"], false);
}

TEST(cli_project, mixed_preparation_dumps_a_matrix) {
    TempDir dir;
    json doc = fig3a_doc();
    doc["preparation"] = {{"kind", "mixed_diagonal"}, {"weights", {{"dd", 0}, {"du", 1}, {"ud", 0}, {"uu", 0}}}};
    auto r = run({"project", "--config", dir.write("c.json", doc.dump()), "--format", "csv"});
    ASSERT_EQ(r.code, kExitSuccess) << r.err;
    auto lines = csv_lines(r.out);
    ASSERT_EQ(lines.size(), 2u);
    auto header = split(lines[0]);
    auto row = split(lines[1]);
    ASSERT_EQ(header.size(), row.size());
    EXPECT_EQ(header.size(), 5u + 32u);
    auto at = [&](const std::string &name) {
        return row[std::find(header.begin(), header.end(), name) - header.begin()];
    };
    EXPECT_EQ(at("kind"), "density_matrix");
    EXPECT_EQ(at("coherent"), "true");
    EXPECT_EQ(at("rho_du_ud_re"), "0.5");
}

TEST(cli_project, fermions_same_spin_full_overlap_exit_3) {
    TempDir dir;
    json doc = fig3a_doc();
    doc["statistics"] = "fermion";
    doc["preparation"]["spins"] = {"up", "up"};
    auto r = run({"project", "--config", dir.write("c.json", doc.dump())});
    EXPECT_EQ(r.code, kExitDegenerate);
    EXPECT_NE(r.err.find("fermion"), std::string::npos) << r.err;
}

TEST(cli_discriminate, zero_error_point) {
    auto r = run({"discriminate", "--preset", "fig3a"});
    ASSERT_EQ(r.code, kExitSuccess) << r.err;
    json doc = json::parse(r.out);
    EXPECT_LE(doc["p_err_closed_form"].get<double>(), 1e-10);
    EXPECT_LE(doc["p_err_povm"].get<double>(), 1e-10);
    EXPECT_EQ(doc["povm"].size(), 2u);
    EXPECT_NEAR(doc["lambda_plus"].get<double>(), doc["lambda_plus_closed_form"].get<double>(), 1e-10);
}

TEST(cli_discriminate, no_overlap_and_equal_phases) {
    TempDir dir;
    json doc = fig3a_doc();
    doc["overlaps"]["l_prime"] = {0, 0};
    doc["overlaps"]["r"] = {0, 0};
    auto r = run({"discriminate", "--config", dir.write("a.json", doc.dump())});
    ASSERT_EQ(r.code, kExitSuccess) << r.err;
    EXPECT_NEAR(json::parse(r.out)["p_err_povm"].get<double>(), 1.0 / 3, 1e-12);

    doc = fig3a_doc();
    doc["channel"]["phases"] = {0.4, 0.4};
    doc["channel"]["priors"] = {0.75, 0.25};
    r = run({"discriminate", "--config", dir.write("b.json", doc.dump())});
    ASSERT_EQ(r.code, kExitSuccess) << r.err;
    json out = json::parse(r.out);
    EXPECT_NEAR(out["p_err_povm"].get<double>(), 0.25, 1e-12);
    EXPECT_NEAR(out["p_err_closed_form"].get<double>(), 0.25, 1e-12);
}

TEST(cli_discriminate, csv_has_one_row) {
    auto r = run({"discriminate", "--preset", "fig4", "--format", "csv"});
    ASSERT_EQ(r.code, kExitSuccess) << r.err;
    auto lines = csv_lines(r.out);
    ASSERT_EQ(lines.size(), 2u);
    EXPECT_EQ(split(lines[0]).size(), split(lines[1]).size());
}

TEST(cli_sweep, fig3a_csv) {
    auto r = run({"sweep", "--preset", "fig3a"});
    ASSERT_EQ(r.code, kExitSuccess) << r.err;
    auto lines = csv_lines(r.out);
    ASSERT_EQ(lines.size(), 362u);
    EXPECT_EQ(lines[0], "phi12,p_err_overlap,p_err_baseline,flag");
    double best = 1;
    for (size_t i = 1; i < lines.size(); i++) {
        best = std::min(best, std::stod(split(lines[i])[1]));
    }
    EXPECT_LE(best, 1e-10);
}

TEST(cli_sweep, fig3b_cardinality_and_fig4_columns) {
    auto r = run({"sweep", "--preset", "fig3b"});
    ASSERT_EQ(r.code, kExitSuccess) << r.err;
    EXPECT_EQ(csv_lines(r.out).size(), 10202u);
    r = run({"sweep", "--preset", "fig4"});
    ASSERT_EQ(r.code, kExitSuccess) << r.err;
    EXPECT_EQ(csv_lines(r.out)[0], "phi12,p_err_baseline,p_err_boson,p_err_fermion,flag");
}

TEST(cli_sweep, flagged_rows_keep_exit_zero) {
    TempDir dir;
    json doc = fig3a_doc();
    doc["overlaps"] = {{"l", {1, 0}}, {"r", {0, 0}}, {"l_prime", {0, 0}}, {"r_prime", {1, 0}}};
    doc["sweep"] = {{"figure", "custom"}, {"axes", {{{"name", "l"}, {"min", 0}, {"max", 1}, {"points", 3}}}}};
    auto r = run({"sweep", "--config", dir.write("c.json", doc.dump())});
    ASSERT_EQ(r.code, kExitSuccess) << r.err;
    auto lines = csv_lines(r.out);
    ASSERT_EQ(lines.size(), 4u);
    auto row = split(lines[1]);
    EXPECT_EQ(row[0], "0");
    EXPECT_EQ(row[1], "");
    EXPECT_NE(row.back().find("vanishing_projection"), std::string::npos);
    EXPECT_EQ(split(lines[2]).back(), "");
}

TEST(cli_sweep, json_output_and_file_destination) {
    TempDir dir;
    std::string path = dir.file("fig3a.json");
    auto r = run({"sweep", "--preset", "fig3a", "--format", "json", "--out", path});
    ASSERT_EQ(r.code, kExitSuccess) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    json doc = json::parse(in);
    EXPECT_EQ(doc["figure"], "fig3a");
    EXPECT_EQ(doc["records"].size(), 361u);
}

TEST(cli_sweep, config_output_section_selects_destination) {
    TempDir dir;
    json doc = fig3a_doc();
    doc["output"] = {{"path", dir.file("from_config.csv")}, {"format", "csv"}};
    auto r = run({"sweep", "--config", dir.write("c.json", doc.dump())});
    ASSERT_EQ(r.code, kExitSuccess) << r.err;
    EXPECT_TRUE(std::filesystem::exists(dir.file("from_config.csv")));
}

TEST(cli_sweep, byte_identical_reruns) {
    auto a = run({"sweep", "--preset", "fig5"});
    auto b = run({"sweep", "--preset", "fig5"});
    ASSERT_EQ(a.code, kExitSuccess);
    EXPECT_EQ(a.out, b.out);
}

TEST(cli_errors, config_problems_exit_2) {
    TempDir dir;
    EXPECT_EQ(run({"project"}).code, kExitConfigError);
    EXPECT_EQ(run({"project", "--preset", "fig9"}).code, kExitConfigError);
    EXPECT_EQ(run({"project", "--config", dir.file("missing.json")}).code, kExitConfigError);
    EXPECT_EQ(run({"project", "--config", dir.write("bad.json", "{not json")}).code, kExitConfigError);
    json doc = fig3a_doc();
    doc["surprise"] = true;
    EXPECT_EQ(run({"project", "--config", dir.write("unknown.json", doc.dump())}).code, kExitConfigError);
    EXPECT_EQ(run({"sweep", "--preset", "fig3a", "--format", "xml"}).code, kExitConfigError);
    EXPECT_EQ(run({"frobnicate"}).code, kExitConfigError);
    EXPECT_EQ(run({"check", "--n", "0"}).code, kExitConfigError);
    EXPECT_EQ(run({"project", "--preset", "fig3a", "--config", dir.write("c.json", fig3a_doc().dump())}).code,
              kExitConfigError);
}

TEST(cli_errors, help_exits_0) {
    auto r = run({"--help"});
    EXPECT_EQ(r.code, kExitSuccess);
    EXPECT_NE(r.out.find("sweep"), std::string::npos);
}

TEST(cli_check, default_run_passes_and_is_deterministic) {
    auto a = run({"check"});
    ASSERT_EQ(a.code, kExitSuccess) << a.out << a.err;
    EXPECT_NE(a.out.find("all 12 suites passed"), std::string::npos) << a.out;
    auto b = run({"check", "--seed", "20190514", "--n", "1000"});
    EXPECT_EQ(a.out, b.out);
}

TEST(cli_check, corrupted_tolerance_exits_1) {
    auto r = run({"check", "--n", "50", "--tolerance-scale", "-1"});
    EXPECT_EQ(r.code, kExitCheckFailure);
    EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

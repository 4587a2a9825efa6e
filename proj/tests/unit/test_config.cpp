// SPDX-License-Identifier: Apache-2.0
//
// risim: simulation library for RIS-assisted physical-layer secrecy
// Copyright (C) 2026 The risim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "risim/config.hpp"
#include "risim/errors.hpp"
#include "risim/report.hpp"

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using namespace risim;

namespace
{

std::size_t count_lines(const std::string &s)
{
    return std::size_t(std::count(s.begin(), s.end(), '\n'));
}

std::string read_file(const std::filesystem::path &p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::filesystem::path temp_path(const char *name)
{
    return std::filesystem::temp_directory_path() / name;
}

} // namespace

TEST_CASE("empty document yields the defaults")
{
    const ExperimentConfig cfg = parse_config("");
    CHECK(cfg.sweep == SweepConfig{SweepConfig::default_pt_grid()});
    CHECK(cfg.scenarios == default_scenarios());
    CHECK(cfg.scenarios.size() == 11);
    CHECK(parse_config("# only a comment\n\n   \n") == cfg);
}

TEST_CASE("default scenario set")
{
    const auto s = default_scenarios();
    std::set<std::string> names;
    for (const auto &sc : s)
    {
        names.insert(sc.name);
        CHECK_NOTHROW(sc.validate());
    }
    CHECK(names.size() == s.size());
    for (const char *p : {"bob-near", "eve-near", "comparable"})
    {
        CHECK(names.count(std::string(p) + "-ris-a1-direct"));
        CHECK(names.count(std::string(p) + "-no-ris-direct"));
        CHECK(names.count(std::string(p) + "-ris-a0-blocked"));
    }
    CHECK(names.count("bob-near-ris-a0-direct"));
    CHECK(names.count("bob-near-ris-a1-blocked"));
    CHECK(default_scenarios(2.5).front().geometry.chi == 2.5);
}

TEST_CASE("full document")
{
    const char *doc = R"(
# sweep
sweep.pt_dbw = -10:5:10
sweep.n_o = 2e-10
sweep.realizations = 500   # trailing comment
sweep.seed = 18446744073709551615
sweep.sweeps = 3
sweep.grid_points = 360
sweep.refine_tol = 1e-8
sweep.init = random
geometry.chi = 2.5
geometry.eve-near.d_bd = 41

scenario.mine.geometry = eve-near
scenario.mine.n_elements = 8
scenario.mine.alpha = 0.5
scenario.mine.direct_links = blocked
scenario.mine.phase_policy = random
scenario.base.n_elements = 0
scenario.base.d_re = 12.5
scenario.base.chi = 3.5
)";
    const ExperimentConfig cfg = parse_config(doc);
    CHECK(cfg.sweep.pt_dbw == std::vector<double>{-10, -5, 0, 5, 10});
    CHECK(cfg.sweep.n_o == 2e-10);
    CHECK(cfg.sweep.realizations == 500);
    CHECK(cfg.sweep.seed == 18446744073709551615ull);
    CHECK(cfg.sweep.optimizer.sweeps == 3);
    CHECK(cfg.sweep.optimizer.grid_points == 360);
    CHECK(cfg.sweep.optimizer.refine_tol == 1e-8);
    CHECK(cfg.sweep.optimizer.init == PhaseInit::random);
    REQUIRE(cfg.scenarios.size() == 2);
    const Scenario &mine = cfg.scenarios[0];
    CHECK(mine.name == "mine");
    CHECK(mine.geometry.d_bd == 41.0);
    CHECK(mine.geometry.d_be == find_geometry_preset("eve-near")->geometry.d_be);
    CHECK(mine.geometry.chi == 2.5);
    CHECK(mine.n_elements == 8);
    CHECK(mine.alpha == 0.5);
    CHECK(mine.direct_links == DirectLinks::blocked);
    CHECK(mine.phase_policy == PhasePolicy::random);
    const Scenario &base = cfg.scenarios[1];
    CHECK(base.geometry.d_br == find_geometry_preset("bob-near")->geometry.d_br);
    CHECK(base.geometry.d_re == 12.5);
    CHECK(base.geometry.chi == 3.5);
    CHECK(base.n_elements == 0);
}

TEST_CASE("power list forms")
{
    CHECK(parse_config("sweep.pt_dbw = 3").sweep.pt_dbw == std::vector<double>{3});
    CHECK(parse_config("sweep.pt_dbw = -1, 0.5 ,2").sweep.pt_dbw == std::vector<double>{-1, 0.5, 2});
    CHECK(parse_config("sweep.pt_dbw = -20:2:20").sweep.pt_dbw == SweepConfig::default_pt_grid());
    CHECK_THROWS_AS(parse_config("sweep.pt_dbw = 1, 0"), ConfigError);
    CHECK_THROWS_AS(parse_config("sweep.pt_dbw = 0:0:5"), ConfigError);
    CHECK_THROWS_AS(parse_config("sweep.pt_dbw = 0:-1:5"), ConfigError);
    CHECK_THROWS_AS(parse_config("sweep.pt_dbw = a,b"), ConfigError);
}

TEST_CASE("errors carry key and line")
{
    try
    {
        parse_config("sweep.seed = 3\n\nscenario.x.alpha = 1.5\n");
        FAIL("expected ConfigError");
    }
    catch (const ConfigError &e)
    {
        CHECK(e.key() == "scenario.x.alpha");
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).find("alpha") != std::string::npos);
        CHECK(std::string(e.what()).find("[0, 1]") != std::string::npos);
    }

    const auto key_of = [](const char *doc) {
        try
        {
            parse_config(doc);
        }
        catch (const ConfigError &e)
        {
            return e.key() + "@" + std::to_string(e.line());
        }
        return std::string("no error");
    };
    CHECK(key_of("sweep.bogus = 1") == "sweep.bogus@1");
    CHECK(key_of("sweep.seed = 1\nsweep.seed = 2") == "sweep.seed@2");
    CHECK(key_of("\nsweep.realizations = 0") == "sweep.realizations@2");
    CHECK(key_of("sweep.realizations = -4") == "sweep.realizations@1");
    CHECK(key_of("sweep.n_o = 0") == "sweep.n_o@1");
    CHECK(key_of("sweep.init = sideways") == "sweep.init@1");
    CHECK(key_of("geometry.chi = -2") == "geometry.chi@1");
    CHECK(key_of("geometry.mars.d_bd = 3") == "geometry.mars.d_bd@1");
    CHECK(key_of("scenario.a.geometry = mars") == "scenario.a.geometry@1");
    CHECK(key_of("scenario.a.d_bd = 0") == "scenario.a.d_bd@1");
    CHECK(key_of("scenario.a.colour = red") == "scenario.a.colour@1");
    CHECK(key_of("scenario.a b.alpha = 1") == "scenario.a b.alpha@1");
    CHECK(key_of("scenario.a.direct_links = maybe") == "scenario.a.direct_links@1");
    CHECK(key_of("no equals sign") == "@1");
    CHECK(key_of("sweep.seed =") == "sweep.seed@1");
}

TEST_CASE("serialize round-trips")
{
    ExperimentConfig cfg = parse_config("");
    cfg.sweep.seed = 987654321987654321ull;
    cfg.sweep.n_o = 1.0 / 3.0e10;
    cfg.sweep.optimizer.init = PhaseInit::random;
    cfg.scenarios[0].geometry.d_br = 0.1 + 0.2;
    cfg.scenarios[1].alpha = 1.0 / 7.0;
    cfg.scenarios[2].phase_policy = PhasePolicy::zero;
    CHECK(parse_config(serialize_config(cfg)) == cfg);
    CHECK(serialize_config(parse_config(serialize_config(cfg))) == serialize_config(cfg));
}

TEST_CASE("load_config")
{
    const auto path = temp_path("risim_test_config.cfg");
    {
        std::ofstream out(path);
        out << "sweep.realizations = 7\n";
    }
    CHECK(load_config(path).sweep.realizations == 7);
    std::filesystem::remove(path);
    CHECK_THROWS_WITH_AS(load_config(path), doctest::Contains("risim_test_config.cfg"), IoError);
}

TEST_CASE("shipped example config equals the defaults")
{
    CHECK(load_config(std::filesystem::path(RISIM_SOURCE_DIR) / "configs" / "default.cfg") == parse_config(""));
}

TEST_CASE("select_scenarios")
{
    ExperimentConfig cfg = parse_config("");
    select_scenarios(cfg, {"eve-near-no-ris-direct", "bob-near-ris-a1-direct"});
    REQUIRE(cfg.scenarios.size() == 2);
    CHECK(cfg.scenarios[0].name == "eve-near-no-ris-direct");
    CHECK(cfg.scenarios[1].name == "bob-near-ris-a1-direct");
    CHECK_THROWS_WITH_AS(select_scenarios(cfg, {"nope"}), doctest::Contains("nope"), ConfigError);
}

namespace
{

SweepRow row(const char *name, double pt, double mean)
{
    SweepRow r;
    r.scenario = name;
    r.alpha = 1.0;
    r.n_elements = 2;
    r.pt_dbw = pt;
    r.realizations = 10;
    r.mean_secrecy = mean;
    r.stderr_secrecy = mean / 10;
    return r;
}

} // namespace

TEST_CASE("csv: single row")
{
    SweepResult res;
    res.rows.push_back(row("solo", -2.0, 1.0 / 3.0));
    res.rows[0].direct_links = DirectLinks::blocked;
    const std::string csv = format_csv(res);
    CHECK(count_lines(csv) == 2);
    CHECK(csv == std::string(csv_header) + "\nsolo,1,blocked,2,-2,10,0.333333333333,0.0333333333333\n");
}

TEST_CASE("csv: ordering and reproducibility")
{
    SweepResult res;
    res.rows.push_back(row("b", 10.0, 1.0));
    res.rows.push_back(row("b", -10.0, 2.0));
    res.rows.push_back(row("a", 0.0, 3.0));
    const std::string csv = format_csv(res);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == csv_header);
    std::getline(in, line);
    CHECK(line.rfind("a,", 0) == 0);
    std::getline(in, line);
    CHECK(line.find(",-10,") != std::string::npos);
    std::getline(in, line);
    CHECK(line.find(",10,") != std::string::npos);

    const auto p1 = temp_path("risim_test_a.csv"), p2 = temp_path("risim_test_b.csv");
    emit_csv(res, p1);
    emit_csv(res, p2);
    CHECK(read_file(p1) == csv);
    CHECK(read_file(p1) == read_file(p2));
    std::filesystem::remove(p1);
    std::filesystem::remove(p2);

    CHECK_THROWS_AS(format_csv(SweepResult{}), DomainError);
    CHECK_THROWS_AS(emit_csv(res, "/nonexistent-dir/x.csv"), IoError);
}

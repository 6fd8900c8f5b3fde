/*
* Copyright (C) 2026 The t2dsim Authors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*     http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/
#include "support.hpp"

#include "t2dsim/errors.hpp"
#include "t2dsim/trajectory_io.hpp"

#include <doctest.h>

#include <filesystem>
#include <sstream>

using namespace t2d;
using namespace t2d::testing;

namespace
{

const char* kMinimal = "version = 1\nduration = 1440\n";

int error_line(const std::string& text)
{
    try {
        parse_scenario(text, "s.scn");
    }
    catch (const DocumentError& e) {
        return e.line();
    }
    return -1;
}

} // namespace

TEST_CASE("bundled cases")
{
    const auto paths = bundled_case_paths();
    REQUIRE(paths.size() == 3);
    CHECK(std::filesystem::path(paths[0]).stem() == "case1_insulin");
    CHECK(std::filesystem::path(paths[2]).stem() == "case3_metformin_exercise");

    SUBCASE("insulin case")
    {
        const auto s = load_case("case1_insulin");
        CHECK(s.events.size() == 15);
        CHECK(s.duration == 4320.0);
        CHECK(s.subject.HR_b == 40.0);
        CHECK(s.subject.basal_glucose == doctest::Approx(180.16).epsilon(1e-15));
        int meals = 0, longs = 0, fasts = 0;
        double meal_mass = 0.0;
        for (const auto& e : s.events) {
            if (e.kind == DoseKind::meal) {
                ++meals;
                meal_mass += e.amount;
            }
            if (e.kind == DoseKind::long_insulin) {
                ++longs;
                CHECK(e.amount == 30000.0);
            }
            if (e.kind == DoseKind::fast_insulin) {
                ++fasts;
                CHECK(e.amount == 500.0);
            }
        }
        CHECK(meals == 9);
        CHECK(longs == 3);
        CHECK(fasts == 3);
        CHECK(meal_mass == 3 * 60000.0);
    }
    SUBCASE("stress case")
    {
        const auto s = load_case("case2_metformin_stress");
        REQUIRE(s.stress.size() == 1);
        CHECK(s.stress[0] == SignalInterval{1440.0, 1440.0, 0.3});
        for (const auto& e : s.events) {
            if (e.kind == DoseKind::metformin) {
                CHECK(e.amount == 0.6e6);
            }
        }
    }
    SUBCASE("exercise case")
    {
        const auto s = load_case("case3_metformin_exercise");
        REQUIRE(s.exercise.size() == 3);
        for (const auto& iv : s.exercise) {
            CHECK(iv.duration == 60.0);
            CHECK(iv.value == 30.0);
            // three hours after the last meal of the day
            CHECK(std::fmod(iv.start, 1440.0) == 1080.0 + 180.0);
        }
    }
}

TEST_CASE("scenario schema")
{
    SUBCASE("minimal document")
    {
        const auto s = parse_scenario(kMinimal);
        CHECK(s.events.empty());
        CHECK(s.duration == 1440.0);
        CHECK(s.settings == SolverSettings{});
    }
    SUBCASE("full document")
    {
        const auto s = parse_scenario(R"(version = 1
name = demo
description = everything
duration = 600
[subject]
basal_glucose = 150 mg/dl
basal_I_PF = 1.2
HR_b = 55
[initial]
G_PC = 8 mmol/l
I_PF = 1.5
[solver]
method = fixed
fixed_step = 0.05
sample_interval = 2
[parameters]
k_abs = 0.06
[schedule]
meal = 10, 2500 mg
fast_insulin = 10, 800 mU
long_insulin = 20, 2 U
metformin = 30, 500 mg
metformin = 40, 400 ug
vildagliptin = 50, 100 nmol
exercise = 100, 30, 25
stress = 200, 100, 0.5
)");
        CHECK(s.name == "demo");
        CHECK(s.subject.basal_glucose == 150.0);
        CHECK(s.subject.basal_I_PF == 1.2);
        CHECK(s.subject.HR_b == 55.0);
        REQUIRE(s.initial.size() == 2);
        CHECK(s.initial[0].state == St::G_PC);
        CHECK(s.initial[0].value == doctest::Approx(8 * 18.016));
        CHECK(s.settings.method == Method::fixed_step);
        CHECK(s.settings.fixed_step == 0.05);
        CHECK(s.settings.sample_interval == 2.0);
        CHECK(s.params.k_abs == 0.06);
        CHECK(s.params.k_t == 0.06);
        REQUIRE(s.events.size() == 6);
        CHECK(s.events[0].amount == 2500.0);
        CHECK(s.events[1].amount == 800.0);
        CHECK(s.events[2].amount == 2000.0);
        CHECK(s.events[3].amount == 500000.0);
        CHECK(s.events[4].amount == 400.0);
        CHECK(s.events[5].amount == 100.0);
        CHECK(s.exercise[0] == SignalInterval{100.0, 30.0, 25.0});
        CHECK(s.stress[0] == SignalInterval{200.0, 100.0, 0.5});
        CHECK(simulate(s).size() == 301 + 6);
    }
    SUBCASE("diagnostics carry line numbers")
    {
        const std::string head = kMinimal;
        CHECK(error_line(head + "[schedule]\nstress = 10, 10, 1.5\n") == 4);
        CHECK(error_line(head + "[schedule]\nmeal = 10, 0 g\n") == 4);
        CHECK(error_line(head + "[schedule]\nmeal = 10, -5 g\n") == 4);
        CHECK(error_line(head + "[schedule]\nmeal = 10, 5\n") == 4);
        CHECK(error_line(head + "[schedule]\nmeal = 10, 5 U\n") == 4);
        CHECK(error_line(head + "[schedule]\nmeal = -1, 5 g\n") == 4);
        CHECK(error_line(head + "[schedule]\naspirin = 10, 5 g\n") == 4);
        CHECK(error_line(head + "[subject]\nbasal_glucose = 10\n") == 4);
        CHECK(error_line(head + "[subject]\nbasal_glucose = 10 mol\n") == 4);
        CHECK(error_line(head + "[subject]\nweight = 70\n") == 4);
        CHECK(error_line(head + "[initial]\nG_XX = 1\n") == 4);
        CHECK(error_line(head + "[initial]\nG_PC = 100\n") == 4);
        CHECK(error_line(head + "[solver]\nmethod = implicit\n") == 4);
        CHECK(error_line(head + "[solver]\nrtol = 0\n") == 4);
        CHECK(error_line(head + "[parameters]\nV_G_QQ = 1\n") == 4);
        CHECK(error_line(head + "[extras]\nfoo = 1\n") == 3);
        CHECK(error_line(head + "color = red\n") == 3);
        CHECK(error_line("duration = 100\n") >= 0);
        CHECK(error_line("version = 2\n") == 1);
    }
    SUBCASE("schedule bounds")
    {
        const std::string head = kMinimal;
        CHECK(error_line(head + "[schedule]\nmeal = 1500, 5 g\n") == 4);
        CHECK(error_line(head + "[schedule]\nexercise = 1430, 20, 30\n") == 4);
        CHECK_THROWS_AS(parse_scenario(head + "[schedule]\nstress = 0, 100, 0.2\nstress = 50, 100, 0.2\n"),
                        DocumentError);
        CHECK_NOTHROW(parse_scenario(head + "[schedule]\nstress = 0, 100, 0.2\nstress = 100, 100, 0.2\n"));
        CHECK_NOTHROW(parse_scenario(head + "[schedule]\nmeal = 1440, 5 g\n"));
    }
    SUBCASE("programmatic validation")
    {
        Scenario s;
        CHECK_NOTHROW(s.validate());
        s.stress = {{0.0, 10.0, 1.5}};
        CHECK_THROWS_AS(s.validate(), DomainError);
        s        = {};
        s.events = {{2000.0, DoseKind::meal, 1.0}};
        CHECK_THROWS_AS(s.validate(), ScheduleError);
    }
    SUBCASE("glucose units")
    {
        CHECK(parse_glucose("10 mmol/l", "x", 1, "g") == doctest::Approx(180.16));
        CHECK(parse_glucose("10mmol", "x", 1, "g") == doctest::Approx(180.16));
        CHECK(parse_glucose("180 mg/dl", "x", 1, "g") == 180.0);
        CHECK(parse_glucose("180mg/dL", "x", 1, "g") == 180.0);
        CHECK_THROWS_AS(parse_glucose("180", "x", 1, "g"), DocumentError);
        CHECK_THROWS_AS(parse_glucose("-1 mg/dl", "x", 1, "g"), DocumentError);
        CHECK_THROWS_AS(parse_glucose("mg/dl", "x", 1, "g"), DocumentError);
    }
}

TEST_CASE("trajectory serialization")
{
    auto sc     = load_case("case1_insulin");
    sc.duration = 1440.0;
    std::erase_if(sc.events, [](const DoseEvent& e) { return e.time > 1440.0; });
    const auto tr = simulate(sc);

    SUBCASE("csv layout")
    {
        std::ostringstream os;
        write_trajectory(tr, os, OutputFormat::csv);
        std::istringstream is(os.str());
        std::string header;
        std::getline(is, header);
        CHECK(header.rfind("t_min,G_BC,G_BF,G_H,", 0) == 0);
        CHECK(header.find(",E_2,Ra,r_Inj,S,r_PIR,r_HGP,r_PGU,k_empt") != std::string::npos);
        CHECK(std::count(header.begin(), header.end(), ',') == 56);
        std::size_t rows = 0;
        for (std::string line; std::getline(is, line);) {
            ++rows;
        }
        CHECK(rows == 1441 + 5);
    }
    for (auto format : {OutputFormat::csv, OutputFormat::jsonl}) {
        CAPTURE(static_cast<int>(format));
        std::stringstream ss;
        write_trajectory(tr, ss, format);
        const auto back = read_trajectory(ss, format);
        REQUIRE(back.size() == tr.size());
        for (std::size_t i = 0; i < tr.size(); ++i) {
            const auto& a = tr.samples[i];
            const auto& b = back.samples[i];
            CHECK(a.t == b.t);
            for (std::size_t k = 0; k < kStateCount; ++k) {
                REQUIRE(std::abs(a.x.values[k] - b.x.values[k]) <= 1e-9 * std::abs(a.x.values[k]));
            }
            const auto da = derived_values(a.derived);
            const auto db = derived_values(b.derived);
            for (std::size_t k = 0; k < kDerivedCount; ++k) {
                REQUIRE(std::abs(da[k] - db[k]) <= 1e-9 * std::abs(da[k]));
            }
        }
    }
    SUBCASE("errors")
    {
        std::ostringstream os;
        CHECK_THROWS_AS(write_trajectory(Trajectory{}, os, OutputFormat::csv), DomainError);
        std::istringstream bad_header("t,G\n1,2\n");
        CHECK_THROWS_AS(read_trajectory(bad_header, OutputFormat::csv), DocumentError);
        std::istringstream bad_json("{\"t_min\": 1}\n");
        CHECK_THROWS_AS(read_trajectory(bad_json, OutputFormat::jsonl), DocumentError);
        CHECK(output_format_from_name("csv") == OutputFormat::csv);
        CHECK(output_format_from_name("jsonl") == OutputFormat::jsonl);
        CHECK_FALSE(output_format_from_name("xml").has_value());
    }
}

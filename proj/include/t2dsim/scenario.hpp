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
#ifndef T2DSIM_SCENARIO_HPP
#define T2DSIM_SCENARIO_HPP

#include "t2dsim/effects.hpp"
#include "t2dsim/parameters.hpp"
#include "t2dsim/pharmacokinetics.hpp"
#include "t2dsim/solver.hpp"
#include "t2dsim/state.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace t2d
{

inline constexpr int kScenarioVersion = 1;

struct Subject
{
    double basal_glucose = 180.16; ///< heart compartment, mg/dl
    double basal_I_PF = 1.0;       ///< mU/dl
    double HR_b = 60.0;            ///< bpm
};

struct InitialOverride
{
    St state;
    double value; ///< native units
};

/**
 * @brief Subject, schedule and solver settings: the unit of simulation.
 *
 * All quantities are stored in internal units (mg/dl, mU, ug, nmol, min).
 */
struct Scenario
{
    int version = kScenarioVersion;
    std::string name;
    std::string description;
    Subject subject;
    std::vector<InitialOverride> initial;
    std::vector<DoseEvent> events;
    std::vector<SignalInterval> exercise; ///< value: heart-rate elevation over HR_b, bpm
    std::vector<SignalInterval> stress;   ///< value: severity alpha_s
    double duration = 1440.0;             ///< min
    SolverSettings settings;
    ParameterSet params;

    /// @throws DomainError / ScheduleError describing the first violation.
    void validate() const;
};

/**
 * Parse a scenario document. `base` supplies the parameters that the document's
 * [parameters] section overrides.
 *
 * @throws DocumentError with line and field for every schema or unit violation.
 */
Scenario parse_scenario(std::string_view text, const std::string& source = "<scenario>",
                        const ParameterSet& base = {});
Scenario load_scenario(const std::string& path, const ParameterSet& base = {});

/// Parse "<number> <unit>" glucose text such as "10 mmol/l" or "180 mg/dl" into mg/dl; negative values are rejected.
double parse_glucose(std::string_view text, const std::string& source, int line, const std::string& field);

/// Bundled scenario files, sorted by name.
std::vector<std::string> bundled_case_paths();

} // namespace t2d

#endif // T2DSIM_SCENARIO_HPP

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
#ifndef T2DSIM_BATCH_HPP
#define T2DSIM_BATCH_HPP

#include "t2dsim/scenario.hpp"
#include "t2dsim/solver.hpp"

#include <string>
#include <vector>

namespace t2d
{

enum class RunStatus
{
    ok,
    invalid_input, ///< DomainError or a subclass
    solver_failure ///< SolverError or BasalConvergenceError
};

struct BatchResult
{
    RunStatus status = RunStatus::ok;
    Trajectory trajectory;
    std::string message;
};

/// Run independent scenarios in parallel. Failures are reported per entry, never thrown.
std::vector<BatchResult> simulate_batch(const std::vector<Scenario>& scenarios);

/// Serial reference for simulate_batch; results are bit-identical.
std::vector<BatchResult> simulate_batch_serial(const std::vector<Scenario>& scenarios);

} // namespace t2d

#endif // T2DSIM_BATCH_HPP

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
#include "t2dsim/batch.hpp"
#include "t2dsim/errors.hpp"

namespace t2d
{
namespace
{

BatchResult run_one(const Scenario& scenario)
{
    BatchResult r;
    try {
        r.trajectory = simulate(scenario);
    }
    catch (const DomainError& e) {
        r.status  = RunStatus::invalid_input;
        r.message = e.what();
    }
    catch (const Error& e) {
        r.status  = RunStatus::solver_failure;
        r.message = e.what();
    }
    return r;
}

} // namespace

std::vector<BatchResult> simulate_batch(const std::vector<Scenario>& scenarios)
{
    std::vector<BatchResult> out(scenarios.size());
    const auto n = static_cast<long>(scenarios.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = run_one(scenarios[static_cast<std::size_t>(i)]);
    }
    return out;
}

std::vector<BatchResult> simulate_batch_serial(const std::vector<Scenario>& scenarios)
{
    std::vector<BatchResult> out;
    out.reserve(scenarios.size());
    for (const auto& s : scenarios) {
        out.push_back(run_one(s));
    }
    return out;
}

} // namespace t2d

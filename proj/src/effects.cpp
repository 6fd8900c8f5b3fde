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
#include "t2dsim/effects.hpp"
#include "t2dsim/errors.hpp"

#include <algorithm>
#include <cmath>

namespace t2d
{

ExogenousSignals::ExogenousSignals(double HR_b, std::vector<SignalInterval> exercise,
                                   std::vector<SignalInterval> stress)
    : m_HR_b(HR_b)
    , m_exercise(std::move(exercise))
    , m_stress(std::move(stress))
{
    if (!(HR_b > 0.0)) {
        throw DomainError("HR_b must be > 0");
    }
    for (const auto& s : m_stress) {
        stress_factors(s.value);
    }
    auto sorted = m_stress;
    std::sort(sorted.begin(), sorted.end(), [](auto& a, auto& b) { return a.start < b.start; });
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i].start < sorted[i - 1].end()) {
            throw ScheduleError("overlapping stress intervals");
        }
    }
    for (const auto& e : m_exercise) {
        if (!(HR_b + e.value > 0.0)) {
            throw DomainError("heart rate during exercise must stay > 0");
        }
    }
}

double ExogenousSignals::heart_rate(double t) const noexcept
{
    double hr = m_HR_b;
    for (const auto& e : m_exercise) {
        if (t >= e.start && t < e.end()) {
            hr += e.value;
        }
    }
    return hr;
}

double ExogenousSignals::stress(double t) const noexcept
{
    for (const auto& s : m_stress) {
        if (t >= s.start && t < s.end()) {
            return s.value;
        }
    }
    return 0.0;
}

std::vector<double> ExogenousSignals::breakpoints() const
{
    std::vector<double> out;
    for (const auto* list : {&m_exercise, &m_stress}) {
        for (const auto& i : *list) {
            out.push_back(i.start);
            out.push_back(i.end());
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

double exercise_activation(double E_1, double HR_b, const ParameterSet& p) noexcept
{
    // a heart rate below rest gives no activation (the Hill term needs a non-negative base)
    const double z = std::pow(std::max(E_1, 0.0) / (p.a_e * HR_b), p.n_e);
    return z / (1.0 + z);
}

std::array<double, 2> exercise_rhs(const StateVector& x, const ParameterSet& p, double HR, double HR_b) noexcept
{
    const double E_1 = x[St::E_1];
    const double E_2 = x[St::E_2];
    const double g = exercise_activation(E_1, HR_b, p);
    return {(-E_1 + (HR - HR_b)) / p.t_HR, -(g + 1.0 / p.tau_e) * E_2 + g};
}

StressFactors stress_factors(double alpha_s)
{
    if (!(alpha_s >= 0.0 && alpha_s <= 1.0)) {
        throw DomainError("stress severity must be in [0, 1], got " + std::to_string(alpha_s));
    }
    return {1.0 + alpha_s, 1.0 + alpha_s, 1.0 - alpha_s};
}

} // namespace t2d

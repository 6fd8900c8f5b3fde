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
#ifndef T2DSIM_EFFECTS_HPP
#define T2DSIM_EFFECTS_HPP

#include "t2dsim/model.hpp"

#include <array>
#include <vector>

namespace t2d
{

/// A value held on [start, start + duration).
struct SignalInterval
{
    double start = 0.0;
    double duration = 0.0;
    double value = 0.0;

    double end() const noexcept { return start + duration; }

    friend bool operator==(const SignalInterval&, const SignalInterval&) = default;
};

/**
 * @brief Piecewise-constant heart rate and stress schedule.
 *
 * Heart rate is HR_b plus the sum of active elevations; stress intervals may not overlap.
 */
class ExogenousSignals
{
public:
    ExogenousSignals() = default;
    ExogenousSignals(double HR_b, std::vector<SignalInterval> exercise, std::vector<SignalInterval> stress);

    double basal_heart_rate() const noexcept { return m_HR_b; }
    double heart_rate(double t) const noexcept;
    double stress(double t) const noexcept;

    /// Sorted, unique interval boundaries.
    std::vector<double> breakpoints() const;

    const std::vector<SignalInterval>& exercise() const noexcept { return m_exercise; }
    const std::vector<SignalInterval>& stress_intervals() const noexcept { return m_stress; }

private:
    double m_HR_b = 60.0;
    std::vector<SignalInterval> m_exercise;
    std::vector<SignalInterval> m_stress;
};

/// Hill activation of the long-lasting exercise state.
double exercise_activation(double E_1, double HR_b, const ParameterSet& p) noexcept;

/// (dE_1/dt, dE_2/dt)
std::array<double, 2> exercise_rhs(const StateVector& x, const ParameterSet& p, double HR, double HR_b) noexcept;

struct StressFactors
{
    double glucagon = 1.0;
    double hepatic_production = 1.0;
    double insulin_release = 1.0;
};

/// @throws DomainError when alpha_s is outside [0, 1].
StressFactors stress_factors(double alpha_s);

} // namespace t2d

#endif // T2DSIM_EFFECTS_HPP

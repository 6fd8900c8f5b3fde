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
#ifndef T2DSIM_SOLVER_HPP
#define T2DSIM_SOLVER_HPP

#include "t2dsim/effects.hpp"
#include "t2dsim/model.hpp"
#include "t2dsim/pharmacokinetics.hpp"
#include "t2dsim/system.hpp"

#include <string>
#include <vector>

namespace t2d
{

enum class Method
{
    adaptive,   ///< Dormand-Prince 5(4) with error control
    fixed_step, ///< classical 4th-order Runge-Kutta
};

struct SolverSettings
{
    Method method = Method::adaptive;
    double rtol = 1e-6;
    double atol = 1e-9;
    double max_step = 1.0;        ///< min
    double fixed_step = 0.1;      ///< min, used by Method::fixed_step
    double sample_interval = 1.0; ///< min

    /// @throws DomainError for non-positive tolerances or intervals.
    void validate() const;

    friend bool operator==(const SolverSettings&, const SolverSettings&) = default;
};

/// Smallest step the solver accepts before reporting failure, min.
inline constexpr double kMinStep = 1e-10;

struct Sample
{
    double t = 0.0;
    StateVector x;
    DerivedOutputs derived;
};

/**
 * @brief Sampled time series.
 *
 * Times are non-decreasing. Samples fall on multiples of the sample interval; an event
 * at time t adds one row per applied impulse after the pre-event row at t.
 */
struct Trajectory
{
    std::vector<Sample> samples;

    std::size_t size() const noexcept { return samples.size(); }
    bool empty() const noexcept { return samples.empty(); }
};

/// "t_min", the state names, then the derived output names.
std::vector<std::string> trajectory_columns();

struct IntegrationStats
{
    std::size_t accepted = 0;
    std::size_t rejected = 0;
    std::size_t rhs_evaluations = 0;
};

/**
 * @brief Advances the full system across event-free spans.
 *
 * Keeps the step-size proposal between calls so consecutive spans continue smoothly.
 * Steps that produce non-finite values or push a guarded state below -atol are rejected and
 * retried at half size; small negative excursions within atol are clipped to zero.
 */
class Integrator
{
public:
    Integrator(const Model& model, SolverSettings settings);

    /// Integrate from t0 to t1 with inputs held constant. @throws SolverError on step underflow.
    StateVector advance(StateVector x, const SegmentInputs& in, double t0, double t1);

    const IntegrationStats& stats() const noexcept { return m_stats; }

private:
    StateVector advance_adaptive(StateVector x, const SegmentInputs& in, double t0, double t1);
    StateVector advance_fixed(StateVector x, const SegmentInputs& in, double t0, double t1);
    bool fixed_step(StateVector& x, const SegmentInputs& in, double t, double h, int depth);

    const Model* m_model;
    SolverSettings m_settings;
    double m_h = 0.0;
    IntegrationStats m_stats;
};

/// Instantaneous state jump for one scheduled dose. @throws ScheduleError for a bad event.
StateVector apply_impulse(const StateVector& x, const DoseEvent& event, const ParameterSet& p);

/// One-shot integration of an event-free span, recording samples on the sample grid in (t0, t1].
StateVector integrate(const StateVector& x0, const Model& model, const SegmentInputs& in, double t0, double t1,
                      const SolverSettings& settings, Trajectory* out = nullptr);

/// A fully prepared run. Events need not be sorted; equal times keep declaration order.
struct SimulationInput
{
    Model model;
    StateVector initial;
    std::vector<DoseEvent> events;
    ExogenousSignals signals;
    double duration = 0.0;
    SolverSettings settings;
    /// > 0 replaces each impulse by a constant-rate pulse of this width (min) carrying the same jump.
    double pulse_width = 0.0;
};

Trajectory run_simulation(const SimulationInput& input);

struct Scenario;

/// Basal-initialize, apply initial overrides, and run the scenario's schedule.
Trajectory simulate(const Scenario& scenario);
SimulationInput prepare_simulation(const Scenario& scenario);

} // namespace t2d

#endif // T2DSIM_SOLVER_HPP

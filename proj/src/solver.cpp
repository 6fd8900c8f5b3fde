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
#include "t2dsim/solver.hpp"
#include "t2dsim/errors.hpp"
#include "t2dsim/scenario.hpp"

#include <algorithm>
#include <cmath>

namespace t2d
{
namespace
{

// Dormand-Prince 5(4) tableau. Inputs are constant within a segment, so the nodes c_i are not needed.
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0, a64 = 49.0 / 176.0,
                 a65 = -5103.0 / 18656.0;
constexpr double a71 = 35.0 / 384.0, a73 = 500.0 / 1113.0, a74 = 125.0 / 192.0, a75 = -2187.0 / 6784.0,
                 a76 = 11.0 / 84.0;
constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0, e5 = -17253.0 / 339200.0,
                 e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;

constexpr double kTimeEps = 1e-9;
constexpr int kMaxHalvings = 40;

/// Index of the first guarded state below -tol or non-finite state, or kStateCount.
std::size_t guard_violation(const StateVector& x, double tol)
{
    for (std::size_t i = 0; i < kStateCount; ++i) {
        const double v = x.values[i];
        if (!std::isfinite(v)) {
            return i;
        }
        if (is_guarded(static_cast<St>(i)) && v < -tol) {
            return i;
        }
    }
    return kStateCount;
}

bool clip_small_negatives(StateVector& x)
{
    bool clipped = false;
    for (std::size_t i = 0; i < kStateCount; ++i) {
        if (is_guarded(static_cast<St>(i)) && x.values[i] < 0.0) {
            x.values[i] = 0.0;
            clipped = true;
        }
    }
    return clipped;
}

bool on_grid(double t, double interval)
{
    const double k = std::round(t / interval);
    return std::abs(t - k * interval) <= kTimeEps * std::max(1.0, std::abs(t));
}

} // namespace

void SolverSettings::validate() const
{
    if (!(rtol > 0.0) || !(atol > 0.0)) {
        throw DomainError("solver tolerances must be > 0");
    }
    if (!(max_step > 0.0) || !(fixed_step > 0.0) || !(sample_interval > 0.0)) {
        throw DomainError("max_step, fixed_step and sample_interval must be > 0");
    }
}

std::vector<std::string> trajectory_columns()
{
    std::vector<std::string> cols{"t_min"};
    for (std::size_t i = 0; i < kStateCount; ++i) {
        cols.emplace_back(state_name(static_cast<St>(i)));
    }
    for (auto n : derived_names()) {
        cols.emplace_back(n);
    }
    return cols;
}

Integrator::Integrator(const Model& model, SolverSettings settings)
    : m_model(&model)
    , m_settings(settings)
{
    m_settings.validate();
    m_h = std::min(m_settings.max_step, 0.05);
}

StateVector Integrator::advance(StateVector x, const SegmentInputs& in, double t0, double t1)
{
    if (t1 <= t0) {
        return x;
    }
    return m_settings.method == Method::adaptive ? advance_adaptive(x, in, t0, t1) : advance_fixed(x, in, t0, t1);
}

StateVector Integrator::advance_adaptive(StateVector x, const SegmentInputs& in, double t0, double t1)
{
    const Model& m = *m_model;
    const double rtol = m_settings.rtol;
    const double atol = m_settings.atol;

    StateVector k1, k2, k3, k4, k5, k6, k7, y, y_new;
    auto stage = [&](StateVector& out, std::initializer_list<std::pair<double, const StateVector*>> terms, double h) {
        for (std::size_t i = 0; i < kStateCount; ++i) {
            double acc = 0.0;
            for (const auto& [a, k] : terms) {
                acc += a * k->values[i];
            }
            out.values[i] = x.values[i] + h * acc;
        }
    };

    system_rhs(x, m, in, k1);
    ++m_stats.rhs_evaluations;

    double t = t0;
    while (t1 - t > kTimeEps * std::max(1.0, std::abs(t1))) {
        double h = std::min({m_h, m_settings.max_step, t1 - t});
        const bool clipped_to_end = h >= t1 - t;
        if (clipped_to_end) {
            h = t1 - t;
        }

        stage(y, {{a21, &k1}}, h);
        system_rhs(y, m, in, k2);
        stage(y, {{a31, &k1}, {a32, &k2}}, h);
        system_rhs(y, m, in, k3);
        stage(y, {{a41, &k1}, {a42, &k2}, {a43, &k3}}, h);
        system_rhs(y, m, in, k4);
        stage(y, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}, h);
        system_rhs(y, m, in, k5);
        stage(y, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}, h);
        system_rhs(y, m, in, k6);
        stage(y_new, {{a71, &k1}, {a73, &k3}, {a74, &k4}, {a75, &k5}, {a76, &k6}}, h);
        system_rhs(y_new, m, in, k7);
        m_stats.rhs_evaluations += 6;

        double err_sq = 0.0;
        for (std::size_t i = 0; i < kStateCount; ++i) {
            const double e = h * (e1 * k1.values[i] + e3 * k3.values[i] + e4 * k4.values[i] + e5 * k5.values[i] +
                                  e6 * k6.values[i] + e7 * k7.values[i]);
            const double sc = atol + rtol * std::max(std::abs(x.values[i]), std::abs(y_new.values[i]));
            err_sq += (e / sc) * (e / sc);
        }
        const double err = std::sqrt(err_sq / static_cast<double>(kStateCount));
        const std::size_t bad = guard_violation(y_new, atol);

        if (bad == kStateCount && err <= 1.0) {
            ++m_stats.accepted;
            t = clipped_to_end ? t1 : t + h;
            x = y_new;
            const double fac = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
            const double proposal = std::min(h * fac, m_settings.max_step);
            m_h = clipped_to_end ? std::max(m_h, proposal) : proposal;
            if (clip_small_negatives(x)) {
                system_rhs(x, m, in, k1);
                ++m_stats.rhs_evaluations;
            }
            else {
                k1 = k7;
            }
        }
        else {
            ++m_stats.rejected;
            if (bad != kStateCount || !std::isfinite(err)) {
                m_h = 0.5 * h;
            }
            else {
                m_h = h * std::clamp(0.9 * std::pow(err, -0.2), 0.2, 1.0);
            }
            if (m_h < kMinStep) {
                std::string name = bad != kStateCount ? std::string(state_name(static_cast<St>(bad))) : "";
                if (name.empty()) {
                    double worst = -1.0;
                    for (std::size_t i = 0; i < kStateCount; ++i) {
                        const double sc = atol + rtol * std::abs(x.values[i]);
                        const double r = std::abs(y_new.values[i] - x.values[i]) / sc;
                        if (r > worst) {
                            worst = r;
                            name = std::string(state_name(static_cast<St>(i)));
                        }
                    }
                }
                throw SolverError("step size underflow", t, name);
            }
        }
    }
    return x;
}

bool Integrator::fixed_step(StateVector& x, const SegmentInputs& in, double t, double h, int depth)
{
    const Model& m = *m_model;
    StateVector k1, k2, k3, k4, y, y_new;
    system_rhs(x, m, in, k1);
    for (std::size_t i = 0; i < kStateCount; ++i) y.values[i] = x.values[i] + 0.5 * h * k1.values[i];
    system_rhs(y, m, in, k2);
    for (std::size_t i = 0; i < kStateCount; ++i) y.values[i] = x.values[i] + 0.5 * h * k2.values[i];
    system_rhs(y, m, in, k3);
    for (std::size_t i = 0; i < kStateCount; ++i) y.values[i] = x.values[i] + h * k3.values[i];
    system_rhs(y, m, in, k4);
    m_stats.rhs_evaluations += 4;
    for (std::size_t i = 0; i < kStateCount; ++i) {
        y_new.values[i] =
            x.values[i] + h / 6.0 * (k1.values[i] + 2.0 * k2.values[i] + 2.0 * k3.values[i] + k4.values[i]);
    }

    const std::size_t bad = guard_violation(y_new, m_settings.atol);
    if (bad == kStateCount) {
        ++m_stats.accepted;
        x = y_new;
        clip_small_negatives(x);
        return true;
    }
    ++m_stats.rejected;
    if (depth >= kMaxHalvings || 0.5 * h < kMinStep) {
        throw SolverError("step size underflow", t, std::string(state_name(static_cast<St>(bad))));
    }
    StateVector half = x;
    fixed_step(half, in, t, 0.5 * h, depth + 1);
    fixed_step(half, in, t + 0.5 * h, 0.5 * h, depth + 1);
    x = half;
    return false;
}

StateVector Integrator::advance_fixed(StateVector x, const SegmentInputs& in, double t0, double t1)
{
    const double span = t1 - t0;
    const auto n = static_cast<long>(std::ceil(span / m_settings.fixed_step - 1e-9));
    const double h = span / static_cast<double>(std::max(n, 1L));
    for (long i = 0; i < std::max(n, 1L); ++i) {
        fixed_step(x, in, t0 + static_cast<double>(i) * h, h, 0);
    }
    return x;
}

StateVector apply_impulse(const StateVector& x, const DoseEvent& event, const ParameterSet& p)
{
    if (!(event.amount > 0.0) || !std::isfinite(event.amount)) {
        throw ScheduleError("dose amount must be > 0");
    }
    StateVector y = x;
    switch (event.kind) {
    case DoseKind::meal:
        y[St::q_Ss] += event.amount;
        y[St::D_Nq] += x[St::D_t]; // pre-meal accumulated amount
        y[St::D_t] += event.amount;
        break;
    case DoseKind::fast_insulin:
        y[St::H_fa] += event.amount / p.V_I;
        break;
    case DoseKind::long_insulin:
        y[St::B_la] += event.amount / p.V_I;
        break;
    case DoseKind::metformin:
        y[St::M_O1] += event.amount;
        y[St::M_O2] += event.amount;
        break;
    case DoseKind::vildagliptin:
        y[St::A_G1] += p.f_v * event.amount;
        break;
    default:
        throw ScheduleError("unknown dose kind");
    }
    return y;
}

StateVector integrate(const StateVector& x0, const Model& model, const SegmentInputs& in, double t0, double t1,
                      const SolverSettings& settings, Trajectory* out)
{
    Integrator integ(model, settings);
    StateVector x = x0;
    double t = t0;
    const double dt = settings.sample_interval;
    auto k = static_cast<long>(std::floor(t0 / dt + kTimeEps)) + 1;
    while (true) {
        double next = static_cast<double>(k) * dt;
        const bool sample = next <= t1 + kTimeEps;
        if (!sample) {
            next = t1;
        }
        x = integ.advance(x, in, t, next);
        t = next;
        if (sample && out != nullptr) {
            out->samples.push_back({t, x, derived_outputs(x, model, in)});
        }
        if (!sample || std::abs(t - t1) <= kTimeEps) {
            break;
        }
        ++k;
    }
    return x;
}

Trajectory run_simulation(const SimulationInput& input)
{
    input.settings.validate();
    if (!(input.duration > 0.0)) {
        throw DomainError("simulation duration must be > 0");
    }
    const double dt = input.settings.sample_interval;
    const auto& p = input.model.params;
    const bool pulses = input.pulse_width > 0.0;

    auto events = input.events;
    std::stable_sort(events.begin(), events.end(), [](const DoseEvent& a, const DoseEvent& b) { return a.time < b.time; });
    for (const auto& e : events) {
        if (!(e.time >= 0.0 && e.time <= input.duration)) {
            throw ScheduleError("event time outside [0, duration]");
        }
        if (!(e.amount > 0.0)) {
            throw ScheduleError("dose amount must be > 0");
        }
    }

    // stop points: sample grid, signal boundaries, events, pulse ends, the end
    std::vector<double> stops;
    const auto n_samples = static_cast<long>(std::floor(input.duration / dt + kTimeEps));
    for (long k = 1; k <= n_samples; ++k) {
        stops.push_back(static_cast<double>(k) * dt);
    }
    stops.push_back(input.duration);
    for (double b : input.signals.breakpoints()) {
        if (b > 0.0 && b < input.duration) {
            stops.push_back(b);
        }
    }
    for (const auto& e : events) {
        stops.push_back(e.time);
        if (pulses && e.time + input.pulse_width < input.duration) {
            stops.push_back(e.time + input.pulse_width);
        }
    }
    std::sort(stops.begin(), stops.end());
    std::vector<double> unique_stops;
    for (double s : stops) {
        if (s <= kTimeEps) {
            continue;
        }
        if (unique_stops.empty() || s - unique_stops.back() > kTimeEps * std::max(1.0, s)) {
            unique_stops.push_back(s);
        }
    }

    struct Pulse
    {
        double end;
        StateVector rate;
    };
    std::vector<Pulse> active;

    Trajectory traj;
    traj.samples.reserve(unique_stops.size() + events.size() + 1);
    Integrator integ(input.model, input.settings);
    StateVector x = input.initial;
    double last_meal = 0.0;
    std::size_t next_event = 0;
    StateVector forcing;

    auto inputs_at = [&](double t_probe) {
        SegmentInputs in;
        in.heart_rate = input.signals.heart_rate(t_probe);
        in.heart_rate_basal = input.signals.basal_heart_rate();
        in.alpha_s = input.signals.stress(t_probe);
        in.last_meal = last_meal;
        forcing = StateVector{};
        bool any = false;
        for (const auto& pulse : active) {
            if (t_probe < pulse.end) {
                any = true;
                for (std::size_t i = 0; i < kStateCount; ++i) {
                    forcing.values[i] += pulse.rate.values[i];
                }
            }
        }
        in.forcing = any ? &forcing : nullptr;
        return in;
    };

    auto fire_events = [&](double t, const SegmentInputs& row_inputs) {
        while (next_event < events.size() && std::abs(events[next_event].time - t) <= kTimeEps * std::max(1.0, t)) {
            const auto& e = events[next_event++];
            StateVector jumped = apply_impulse(x, e, p);
            if (e.kind == DoseKind::meal) {
                last_meal = e.amount;
            }
            if (pulses) {
                Pulse pulse{t + input.pulse_width, {}};
                for (std::size_t i = 0; i < kStateCount; ++i) {
                    pulse.rate.values[i] = (jumped.values[i] - x.values[i]) / input.pulse_width;
                }
                active.push_back(pulse);
            }
            else {
                x = jumped;
                traj.samples.push_back({t, x, derived_outputs(x, input.model, row_inputs)});
            }
        }
    };

    try {
        auto in0 = inputs_at(0.0);
        traj.samples.push_back({0.0, x, derived_outputs(x, input.model, in0)});
        fire_events(0.0, in0);

        double t = 0.0;
        for (double stop : unique_stops) {
            const auto in = inputs_at(0.5 * (t + stop));
            x = integ.advance(x, in, t, stop);
            t = stop;
            std::erase_if(active, [&](const Pulse& pulse) { return pulse.end <= t + kTimeEps; });

            const bool has_event = next_event < events.size() &&
                                   std::abs(events[next_event].time - t) <= kTimeEps * std::max(1.0, t);
            const bool is_sample = on_grid(t, dt) || std::abs(t - input.duration) <= kTimeEps;
            if (is_sample || (has_event && !pulses)) {
                traj.samples.push_back({t, x, derived_outputs(x, input.model, in)});
            }
            if (has_event) {
                fire_events(t, in);
            }
        }
    }
    catch (const SolverError& e) {
        throw SolverError(std::string("simulation failed: ") + e.what(), e.time(), e.state());
    }
    return traj;
}

SimulationInput prepare_simulation(const Scenario& scenario)
{
    scenario.validate();
    auto basal = compute_basal_state(scenario.params, scenario.subject.basal_glucose, scenario.subject.basal_I_PF);
    SimulationInput input{basal.model, basal.state, scenario.events,
                          ExogenousSignals(scenario.subject.HR_b, scenario.exercise, scenario.stress),
                          scenario.duration, scenario.settings, 0.0};
    for (const auto& o : scenario.initial) {
        input.initial[o.state] = o.value;
    }
    return input;
}

Trajectory simulate(const Scenario& scenario)
{
    return run_simulation(prepare_simulation(scenario));
}

} // namespace t2d

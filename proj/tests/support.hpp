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
#ifndef T2DSIM_TESTS_SUPPORT_HPP
#define T2DSIM_TESTS_SUPPORT_HPP

#include "t2dsim/scenario.hpp"
#include "t2dsim/solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <string>

namespace t2d::testing
{

inline std::string case_path(const std::string& name)
{
    return std::string(T2DSIM_CASES_DIR) + "/" + name + ".scn";
}

inline Scenario load_case(const std::string& name)
{
    return load_scenario(case_path(name));
}

template <class Pred>
Scenario without_events(Scenario s, Pred drop)
{
    std::erase_if(s.events, drop);
    return s;
}

/// Value of a state column at every sample whose time satisfies `keep`; duplicate event rows included.
template <class Keep>
std::vector<double> column(const Trajectory& tr, St s, Keep keep)
{
    std::vector<double> out;
    for (const auto& row : tr.samples) {
        if (keep(row.t)) {
            out.push_back(row.x[s]);
        }
    }
    return out;
}

/// Last sample at or before t (the post-event row if t is an event time).
inline const Sample& at(const Trajectory& tr, double t)
{
    const Sample* best = &tr.samples.front();
    for (const auto& row : tr.samples) {
        if (row.t <= t + 1e-9) {
            best = &row;
        }
    }
    return *best;
}

/// Classical RK4 over a small autonomous system; used as an independent oracle integrator.
template <std::size_t N>
std::array<double, N> rk4(std::array<double, N> y, double t_end, double h,
                          const std::function<std::array<double, N>(const std::array<double, N>&)>& f)
{
    const auto n = static_cast<long>(std::ceil(t_end / h - 1e-12));
    h = t_end / static_cast<double>(n);
    for (long s = 0; s < n; ++s) {
        auto k1 = f(y);
        std::array<double, N> tmp;
        for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
        auto k2 = f(tmp);
        for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
        auto k3 = f(tmp);
        for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * k3[i];
        auto k4 = f(tmp);
        for (std::size_t i = 0; i < N; ++i) y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    return y;
}

/// Composite Simpson rule of the derived Ra over samples, restarting at duplicated event times.
inline double integrate_Ra(const Trajectory& tr)
{
    double total = 0.0;
    std::size_t begin = 0;
    auto close = [&](std::size_t end) {
        // samples [begin, end) form one smooth segment
        std::size_t n = end - begin;
        if (n < 2) {
            return;
        }
        std::size_t i = begin;
        if ((n - 1) % 2 == 1) { // odd interval count: one trapezoid-free 3/8 step at the start
            if (n >= 4) {
                const double h = tr.samples[i + 1].t - tr.samples[i].t;
                total += 3.0 * h / 8.0 *
                         (tr.samples[i].derived.Ra + 3.0 * tr.samples[i + 1].derived.Ra +
                          3.0 * tr.samples[i + 2].derived.Ra + tr.samples[i + 3].derived.Ra);
                i += 3;
            }
            else {
                total += 0.5 * (tr.samples[i + 1].t - tr.samples[i].t) *
                         (tr.samples[i].derived.Ra + tr.samples[i + 1].derived.Ra);
                i += 1;
            }
        }
        for (; i + 2 < end; i += 2) {
            const double h = tr.samples[i + 1].t - tr.samples[i].t;
            total += h / 3.0 *
                     (tr.samples[i].derived.Ra + 4.0 * tr.samples[i + 1].derived.Ra + tr.samples[i + 2].derived.Ra);
        }
    };
    for (std::size_t k = 1; k < tr.samples.size(); ++k) {
        if (tr.samples[k].t == tr.samples[k - 1].t) {
            close(k);
            begin = k;
        }
    }
    close(tr.samples.size());
    return total;
}

} // namespace t2d::testing

#endif // T2DSIM_TESTS_SUPPORT_HPP

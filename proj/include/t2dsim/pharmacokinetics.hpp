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
#ifndef T2DSIM_PHARMACOKINETICS_HPP
#define T2DSIM_PHARMACOKINETICS_HPP

#include "t2dsim/model.hpp"

#include <array>
#include <optional>
#include <string_view>

namespace t2d
{

enum class DoseKind
{
    meal,         ///< glucose, mg
    fast_insulin, ///< mU
    long_insulin, ///< mU
    metformin,    ///< ug
    vildagliptin, ///< nmol
};

std::string_view dose_kind_name(DoseKind k) noexcept;
std::optional<DoseKind> dose_kind_from_name(std::string_view name) noexcept;

/// A scheduled impulse. Amount is in the internal unit of its kind (see DoseKind).
struct DoseEvent
{
    double time = 0.0; ///< min
    DoseKind kind = DoseKind::meal;
    double amount = 0.0;

    friend bool operator==(const DoseEvent&, const DoseEvent&) = default;
};

struct AbsorptionOutput
{
    std::array<double, 5> d{}; ///< q_Ss, q_Sl, q_int, D_t, D_Nq
    double Ra = 0.0;           ///< mg/min
    double k_empt = 0.0;       ///< 1/min
};

/// Below this D_Nq (mg) the emptying rate is k_max.
inline constexpr double kMinMealForEmptying = 1.0;

/// Stomach emptying rate for stomach content q_Ss + q_Sl and reference meal D_Nq, in [k_min, k_max].
double gastric_emptying_rate(double stomach, double D_Nq, const ParameterSet& p) noexcept;

/// Meal absorption between events. last_meal is the most recent meal amount (0 before any meal).
AbsorptionOutput absorption_rhs(const StateVector& x, const ParameterSet& p, double last_meal) noexcept;

/// (dH_fa/dt, dD_fa/dt)
std::array<double, 2> fast_insulin_rhs(const StateVector& x, const ParameterSet& p) noexcept;

/// (dB_la/dt, dH_la/dt, dD_la/dt)
std::array<double, 3> long_insulin_rhs(const StateVector& x, const ParameterSet& p) noexcept;

/// Injected insulin reaching the periphery interstitial compartment, mU/min.
double injected_insulin_rate(const StateVector& x, const ParameterSet& p) noexcept;

struct MetforminEffects
{
    double E_GW = 0.0;
    double E_L  = 0.0;
    double E_P  = 0.0;
};

struct MetforminOutput
{
    std::array<double, 6> d{}; ///< M_GL, M_GW, M_L, M_P, M_O1, M_O2
    MetforminEffects effects;
    double M_O = 0.0; ///< oral inflow, ug/min
};

MetforminEffects metformin_effects(const StateVector& x, const ParameterSet& p) noexcept;
MetforminOutput metformin_rhs(const StateVector& x, const ParameterSet& p) noexcept;

/// (dA_G1, dA_G2, dA_c, dA_p, dDR_C, dDR_P), per minute.
std::array<double, 6> vildagliptin_rhs(const StateVector& x, const Model& m) noexcept;

} // namespace t2d

#endif // T2DSIM_PHARMACOKINETICS_HPP

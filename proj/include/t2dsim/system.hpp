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
#ifndef T2DSIM_SYSTEM_HPP
#define T2DSIM_SYSTEM_HPP

#include "t2dsim/model.hpp"

#include <array>
#include <string_view>

namespace t2d
{

/// Everything held constant over one integration segment.
struct SegmentInputs
{
    double heart_rate = 60.0;        ///< bpm
    double heart_rate_basal = 60.0;  ///< bpm
    double alpha_s = 0.0;
    double last_meal = 0.0;          ///< mg, most recent meal amount
    const StateVector* forcing = nullptr; ///< optional constant additive rate, per state per min
};

/// Rates reported alongside the state. Rates are as they enter the compartment balances.
struct DerivedOutputs
{
    double Ra = 0.0;     ///< mg/min
    double r_Inj = 0.0;  ///< mU/min
    double S = 0.0;      ///< pancreatic secretion, U/min
    double r_PIR = 0.0;  ///< insulin release into the liver after the stress multiplier, mU/min
    double r_HGP = 0.0;  ///< hepatic production after metformin and stress, mg/min
    double r_PGU = 0.0;  ///< peripheral uptake after metformin and exercise, mg/min
    double k_empt = 0.0; ///< 1/min
};

inline constexpr std::size_t kDerivedCount = 7;
std::array<std::string_view, kDerivedCount> derived_names() noexcept;
std::array<double, kDerivedCount> derived_values(const DerivedOutputs& d) noexcept;

/// Complete right-hand side of the coupled system.
void system_rhs(const StateVector& x, const Model& m, const SegmentInputs& in, StateVector& dxdt,
                DerivedOutputs* out = nullptr);

DerivedOutputs derived_outputs(const StateVector& x, const Model& m, const SegmentInputs& in);

} // namespace t2d

#endif // T2DSIM_SYSTEM_HPP

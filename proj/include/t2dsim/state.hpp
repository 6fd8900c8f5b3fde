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
#ifndef T2DSIM_STATE_HPP
#define T2DSIM_STATE_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

namespace t2d
{

/**
 * @brief Index of every continuous state, grouped by subsystem.
 *
 * The declaration order is the column order of serialized trajectories.
 */
enum class St : std::size_t
{
    // glucose, mg/dl
    G_BC,
    G_BF,
    G_H,
    G_G,
    G_L,
    G_K,
    G_PC,
    G_PF,
    // insulin, mU/dl
    I_B,
    I_H,
    I_G,
    I_L,
    I_K,
    I_PC,
    I_PF,
    // glucagon, normalized to basal
    Gamma,
    // dynamic multiplicative factors
    M_HGP_I,
    M_HGU_I,
    f,
    // pancreas
    m_s,
    m_l,
    P,
    R,
    // incretin (GLP-1)
    psi,
    Psi,
    // meal absorption, mg
    q_Ss,
    q_Sl,
    q_int,
    D_t,
    D_Nq,
    // fast acting insulin, mU/dl
    H_fa,
    D_fa,
    // long acting insulin, mU/dl
    B_la,
    H_la,
    D_la,
    // metformin, ug
    M_GL,
    M_GW,
    M_L,
    M_P,
    M_O1,
    M_O2,
    // vildagliptin, nmol
    A_G1,
    A_G2,
    A_c,
    A_p,
    DR_C,
    DR_P,
    // physical activity
    E_1,
    E_2,
    Count
};

inline constexpr std::size_t kStateCount = static_cast<std::size_t>(St::Count);

constexpr std::size_t idx(St s) noexcept
{
    return static_cast<std::size_t>(s);
}

/// Column name of a state, e.g. "G_PC".
std::string_view state_name(St s) noexcept;
std::optional<St> state_from_name(std::string_view name) noexcept;

/**
 * Whether the non-negativity guard applies. True for every concentration and mass;
 * false for f (negative fixed point below basal glucagon) and E_1 (negative when HR dips).
 */
constexpr bool is_guarded(St s) noexcept
{
    return s != St::f && s != St::E_1;
}

/// Full model state. Plain value type; the solver that owns it is the only mutator.
struct StateVector
{
    std::array<double, kStateCount> values{};

    double& operator[](St s) noexcept { return values[idx(s)]; }
    double operator[](St s) const noexcept { return values[idx(s)]; }

    std::span<double, kStateCount> span() noexcept { return values; }
    std::span<const double, kStateCount> span() const noexcept { return values; }

    friend bool operator==(const StateVector&, const StateVector&) = default;
};

} // namespace t2d

#endif // T2DSIM_STATE_HPP

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
#include "t2dsim/state.hpp"

#include <array>

namespace t2d
{
namespace
{

constexpr std::array<std::string_view, kStateCount> kNames = {
    "G_BC", "G_BF", "G_H",  "G_G",  "G_L",  "G_K",  "G_PC",    "G_PF",    "I_B", "I_H",  "I_G",  "I_L",  "I_K",
    "I_PC", "I_PF", "Gamma", "M_HGP_I", "M_HGU_I", "f", "m_s",  "m_l",  "P",   "R",    "psi",  "Psi",  "q_Ss",
    "q_Sl", "q_int", "D_t", "D_Nq", "H_fa", "D_fa", "B_la", "H_la", "D_la", "M_GL", "M_GW", "M_L",  "M_P",
    "M_O1", "M_O2", "A_G1", "A_G2", "A_c",  "A_p",  "DR_C", "DR_P", "E_1",  "E_2",
};

} // namespace

std::string_view state_name(St s) noexcept
{
    return kNames[idx(s)];
}

std::optional<St> state_from_name(std::string_view name) noexcept
{
    for (std::size_t i = 0; i < kStateCount; ++i) {
        if (kNames[i] == name) {
            return static_cast<St>(i);
        }
    }
    return std::nullopt;
}

} // namespace t2d

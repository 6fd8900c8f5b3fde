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
#include "t2dsim/pharmacokinetics.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace t2d
{
namespace
{

constexpr std::array<std::string_view, 5> kDoseNames = {"meal", "fast_insulin", "long_insulin", "metformin",
                                                        "vildagliptin"};

double hill(double max_effect, double amount, double half, double n) noexcept
{
    const double a = std::pow(std::max(amount, 0.0), n);
    return max_effect * a / (std::pow(half, n) + a);
}

} // namespace

std::string_view dose_kind_name(DoseKind k) noexcept
{
    return kDoseNames[static_cast<std::size_t>(k)];
}

std::optional<DoseKind> dose_kind_from_name(std::string_view name) noexcept
{
    for (std::size_t i = 0; i < kDoseNames.size(); ++i) {
        if (kDoseNames[i] == name) {
            return static_cast<DoseKind>(i);
        }
    }
    return std::nullopt;
}

double gastric_emptying_rate(double stomach, double D_Nq, const ParameterSet& p) noexcept
{
    if (D_Nq < kMinMealForEmptying) {
        return p.k_max;
    }
    const double phi1 = 5.0 / (2.0 * D_Nq * (1.0 - p.k_phi1));
    const double phi2 = 5.0 / (2.0 * D_Nq * p.k_phi2);
    const double bracket =
        std::tanh(phi1 * (stomach - p.k_phi1 * D_Nq)) - std::tanh(phi2 * (stomach - p.k_phi2 * D_Nq)) + 2.0;
    return std::clamp(p.k_min + (p.k_max - p.k_min) / 2.0 * bracket, p.k_min, p.k_max);
}

AbsorptionOutput absorption_rhs(const StateVector& x, const ParameterSet& p, double last_meal) noexcept
{
    AbsorptionOutput o;
    const double q_Ss = x[St::q_Ss], q_Sl = x[St::q_Sl], q_int = x[St::q_int];
    o.k_empt = gastric_emptying_rate(q_Ss + q_Sl, x[St::D_Nq], p);
    o.d[0] = -p.k_12q * q_Ss;
    o.d[1] = -o.k_empt * q_Sl + p.k_12q * q_Ss;
    o.d[2] = -p.k_abs * q_int + o.k_empt * q_Sl;
    o.d[3] = -p.k_t * x[St::D_t];
    o.d[4] = p.k_t * (last_meal - x[St::D_Nq]);
    o.Ra = p.f_q * p.k_abs * q_int;
    return o;
}

std::array<double, 2> fast_insulin_rhs(const StateVector& x, const ParameterSet& p) noexcept
{
    const double D = x[St::D_fa];
    const double dissociation = p.p_fa * (x[St::H_fa] - p.q_fa * D * D * D);
    return {-dissociation, dissociation - p.b_fa * D / (1.0 + x[St::I_PF])};
}

std::array<double, 3> long_insulin_rhs(const StateVector& x, const ParameterSet& p) noexcept
{
    const double D = x[St::D_la];
    const double release = p.k_la * x[St::B_la] * p.C_max / (1.0 + x[St::H_la]);
    const double dissociation = p.p_la * (x[St::H_la] - p.q_la * D * D * D);
    return {-release, release - dissociation, dissociation - p.b_la * D / (1.0 + x[St::I_PF])};
}

double injected_insulin_rate(const StateVector& x, const ParameterSet& p) noexcept
{
    return p.V_I_PF * (p.r_la * p.b_la * x[St::D_la] + p.r_fa * p.b_fa * x[St::D_fa]) / (1.0 + x[St::I_PF]);
}

MetforminEffects metformin_effects(const StateVector& x, const ParameterSet& p) noexcept
{
    return {hill(p.nu_GW_max, x[St::M_GW], p.phi_GW_50, p.n_GW), hill(p.nu_L_max, x[St::M_L], p.phi_L_50, p.n_L),
            hill(p.nu_P_max, x[St::M_P], p.phi_P_50, p.n_P)};
}

MetforminOutput metformin_rhs(const StateVector& x, const ParameterSet& p) noexcept
{
    MetforminOutput o;
    const double M_GL = x[St::M_GL], M_GW = x[St::M_GW], M_L = x[St::M_L], M_P = x[St::M_P];
    o.M_O = p.rho_alpha * x[St::M_O1] + p.rho_beta * x[St::M_O2];
    o.d[0] = -M_GL * (p.k_go + p.k_gg) + o.M_O;
    o.d[1] = M_GL * p.k_gg + M_P * p.k_pg - M_GW * p.k_gl;
    o.d[2] = M_GW * p.k_gl + M_P * p.k_pl - M_L * p.k_lp;
    o.d[3] = M_L * p.k_lp - M_P * (p.k_pl + p.k_pg + p.k_po) + M_GL * p.k_go;
    o.d[4] = -p.alpha_M * x[St::M_O1];
    o.d[5] = -p.beta_M * x[St::M_O2];
    o.effects = metformin_effects(x, p);
    return o;
}

std::array<double, 6> vildagliptin_rhs(const StateVector& x, const Model& m) noexcept
{
    const auto& p = m.params;
    const double A_G1 = x[St::A_G1], A_G2 = x[St::A_G2], A_c = x[St::A_c], A_p = x[St::A_p];
    const double DR_C = x[St::DR_C], DR_P = x[St::DR_P];
    const double C_c = A_c / p.V_c;
    const double C_p = A_p / p.V_p;

    const double bind_c = (p.R_maxC - DR_C) * m.k_v2_per_min * C_c / (p.K_vd + C_c);
    const double bind_p = (p.R_maxP - DR_P) * m.k_v2_per_min * C_p / (p.K_vd + C_p);
    const double loss   = m.k_off_per_min + m.k_deg_per_min;

    return {
        -p.k_a1 * A_G1,
        p.k_a1 * A_G1 - p.k_a2 * A_G2,
        p.k_a2 * A_G2 - (m.CL_per_min + m.CL_ic_per_min) / p.V_c * A_c + m.CL_ic_per_min / p.V_p * A_p - bind_c +
            m.k_off_per_min * DR_C,
        m.CL_ic_per_min * (C_c - C_p) - bind_p + m.k_off_per_min * DR_P,
        bind_c - loss * DR_C,
        bind_p - loss * DR_P,
    };
}

} // namespace t2d

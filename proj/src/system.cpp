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
#include "t2dsim/system.hpp"
#include "t2dsim/effects.hpp"
#include "t2dsim/metabolic.hpp"
#include "t2dsim/pharmacokinetics.hpp"

namespace t2d
{
namespace
{

template <std::size_t N>
void put(StateVector& dxdt, St first, const std::array<double, N>& block)
{
    for (std::size_t i = 0; i < N; ++i) {
        dxdt.values[idx(first) + i] = block[i];
    }
}

} // namespace

std::array<std::string_view, kDerivedCount> derived_names() noexcept
{
    return {"Ra", "r_Inj", "S", "r_PIR", "r_HGP", "r_PGU", "k_empt"};
}

std::array<double, kDerivedCount> derived_values(const DerivedOutputs& d) noexcept
{
    return {d.Ra, d.r_Inj, d.S, d.r_PIR, d.r_HGP, d.r_PGU, d.k_empt};
}

void system_rhs(const StateVector& x, const Model& m, const SegmentInputs& in, StateVector& dxdt, DerivedOutputs* out)
{
    const auto& p = m.params;

    const auto absorption = absorption_rhs(x, p, in.last_meal);
    const auto metformin  = metformin_rhs(x, p);

    EffectInputs e;
    e.E_1     = x[St::E_1];
    e.E_2     = x[St::E_2];
    e.alpha_s = in.alpha_s;
    e.E_GW    = metformin.effects.E_GW;
    e.E_L     = metformin.effects.E_L;
    e.E_P     = metformin.effects.E_P;
    e.Ra      = absorption.Ra;
    e.r_Inj   = injected_insulin_rate(x, p);

    const auto rates = glucose_metabolic_rates(x, m);
    put(dxdt, St::G_BC, glucose_rhs(x, m, e, rates));

    const auto pancreas = pancreas_rhs(x, m, x[St::Psi], x[St::G_H]);
    const double r_PIR  = pancreatic_insulin_release(pancreas.S, m);
    put(dxdt, St::I_B, insulin_rhs(x, m, e, insulin_rates(x, m, r_PIR, in.alpha_s)));

    dxdt[St::Gamma]   = glucagon_rhs(x, m, in.alpha_s);
    dxdt[St::M_HGP_I] = rates.dM_HGP_I;
    dxdt[St::M_HGU_I] = rates.dM_HGU_I;
    dxdt[St::f]       = rates.df;

    dxdt[St::m_s] = pancreas.dm_s;
    dxdt[St::m_l] = pancreas.dm_l;
    dxdt[St::P]   = pancreas.dP;
    dxdt[St::R]   = pancreas.dR;

    put(dxdt, St::psi, incretin_rhs(x, m, absorption.k_empt));
    put(dxdt, St::q_Ss, absorption.d);
    put(dxdt, St::H_fa, fast_insulin_rhs(x, p));
    put(dxdt, St::B_la, long_insulin_rhs(x, p));
    put(dxdt, St::M_GL, metformin.d);
    put(dxdt, St::A_G1, vildagliptin_rhs(x, m));
    put(dxdt, St::E_1, exercise_rhs(x, p, in.heart_rate, in.heart_rate_basal));

    if (in.forcing != nullptr) {
        for (std::size_t i = 0; i < kStateCount; ++i) {
            dxdt.values[i] += in.forcing->values[i];
        }
    }

    if (out != nullptr) {
        out->Ra     = absorption.Ra;
        out->r_Inj  = e.r_Inj;
        out->S      = pancreas.S;
        out->r_PIR  = (1.0 - in.alpha_s) * r_PIR;
        out->r_HGP  = (1.0 + in.alpha_s) * (1.0 - e.E_L) * rates.r_HGP;
        out->r_PGU  = (1.0 + p.alpha_e * e.E_2) * (1.0 + e.E_P) * rates.r_PGU;
        out->k_empt = absorption.k_empt;
    }
}

DerivedOutputs derived_outputs(const StateVector& x, const Model& m, const SegmentInputs& in)
{
    StateVector scratch;
    DerivedOutputs d;
    system_rhs(x, m, in, scratch, &d);
    return d;
}

} // namespace t2d

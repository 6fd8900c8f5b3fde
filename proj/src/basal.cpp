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
#include "t2dsim/errors.hpp"
#include "t2dsim/metabolic.hpp"
#include "t2dsim/model.hpp"
#include "t2dsim/system.hpp"

#include <cmath>

namespace t2d
{
namespace
{

// Q_K (G_H - G_K) = r_KGE(G_K); the left side falls and r_KGE rises with G_K.
double solve_kidney_glucose(const ParameterSet& p, double G_H)
{
    auto residual = [&](double G_K) { return p.Q_G_K * (G_H - G_K) - kidney_glucose_excretion(G_K); };
    double lo = 0.0;
    double hi = G_H;
    if (residual(lo) <= 0.0) {
        throw InvalidBasalError("kidney excretion exceeds arterial supply at basal glucose");
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (residual(mid) > 0.0) {
            lo = mid;
        }
        else {
            hi = mid;
        }
        if (hi - lo <= 1e-15 * G_H) {
            return 0.5 * (lo + hi);
        }
    }
    throw BasalConvergenceError("kidney glucose bisection did not converge", std::abs(residual(0.5 * (lo + hi))));
}

void require_positive(double v, const char* what)
{
    if (!(v > 0.0)) {
        throw InvalidBasalError(std::string("basal ") + what + " is not positive (" + std::to_string(v) +
                                "); basal glucose too low for the configured uptake rates");
    }
}

} // namespace

Model make_model(const ParameterSet& params, const BasalValues& basal)
{
    Model m;
    m.params = params;
    m.basal = basal;
    m.CL_per_min    = params.CL / 60.0;
    m.CL_ic_per_min = params.CL_ic / 60.0;
    m.k_off_per_min = params.k_off / 60.0;
    m.k_deg_per_min = params.k_deg / 60.0;
    m.k_v2_per_min  = params.k_v2 / 60.0;
    return m;
}

BasalSolution compute_basal_state(const ParameterSet& p, double G_H_basal, double I_PF_basal)
{
    if (!(G_H_basal > 0.0) || !std::isfinite(G_H_basal)) {
        throw InvalidBasalError("basal heart glucose must be > 0 mg/dl");
    }
    if (!(I_PF_basal > 0.0) || !std::isfinite(I_PF_basal)) {
        throw InvalidBasalError("basal I_PF must be > 0 mU/dl");
    }
    validate(p);

    BasalValues b;

    // glucose: every factor is 1, so each balance is linear given G_H
    b.G_H  = G_H_basal;
    b.G_BC = b.G_H - p.r_BGU / p.Q_G_B;
    b.G_BF = b.G_BC - p.r_BGU * p.T_G_B / p.V_G_BF;
    b.G_G  = b.G_H - p.r_GGU / p.Q_G_G;
    b.G_PC = b.G_H - p.r_b_PGU / p.Q_G_P;
    b.G_PF = b.G_PC - p.r_b_PGU * p.T_G_P / p.V_G_PF;
    b.G_K  = solve_kidney_glucose(p, b.G_H);
    b.G_L  = (p.Q_G_H * b.G_H + p.r_RBCU - p.Q_G_B * b.G_BC - p.Q_G_K * b.G_K - p.Q_G_P * b.G_PC) / p.Q_G_L;
    for (auto [v, name] : {std::pair{b.G_BC, "G_BC"}, {b.G_BF, "G_BF"}, {b.G_G, "G_G"}, {b.G_PC, "G_PC"},
                           {b.G_PF, "G_PF"}, {b.G_L, "G_L"}}) {
        require_positive(v, name);
    }

    // hepatic production closes the liver balance
    const double f_inf = glucagon_f_fixed_point(1.0);
    const double M_HGP_Gamma = 2.7 * std::tanh(0.39) - f_inf;
    const double r_HGP = p.Q_G_L * b.G_L - p.Q_G_A * b.G_H - p.Q_G_G * b.G_G + p.r_b_HGU;
    require_positive(r_HGP, "hepatic glucose production");
    b.r_HGP = r_HGP / M_HGP_Gamma;

    // insulin: backwards from the periphery; liver clearance vanishes at steady state
    const double pic_denominator = (1.0 - 0.15) / (0.15 * p.Q_I_P) - 20.0 / p.V_I_PF;
    if (!(pic_denominator > 0.0)) {
        throw ParameterDomainError("peripheral insulin clearance denominator must be > 0");
    }
    b.I_PF = I_PF_basal;
    const double r_PIC = b.I_PF / pic_denominator;
    const double I_PC  = b.I_PF + r_PIC * p.T_I_P / p.V_I_PF;
    b.I_H = I_PC + r_PIC / p.Q_I_P;
    const double I_K = b.I_H / 1.3;
    b.I_L = (p.Q_I_H * b.I_H - p.Q_I_B * b.I_H - p.Q_I_K * I_K - p.Q_I_P * I_PC) / p.Q_I_L;
    require_positive(b.I_L, "I_L");
    b.r_PIR = p.Q_I_L * b.I_L - (p.Q_I_A + p.Q_I_G) * b.I_H;
    require_positive(b.r_PIR, "pancreatic insulin release");

    // pancreas: storage held at K_l m_l0 / K_s, labile pool stationary
    const double X     = pancreas_excitation(b.G_H);
    const double P_inf = std::pow(X, 1.11);
    const double m_s   = p.K_l * p.m_l0 / p.K_s;
    const double m_l   = (p.K_s * m_s + p.gamma * P_inf) / (p.K_l + p.N_1 * P_inf);
    b.S = p.N_1 * P_inf * m_l;
    require_positive(b.S, "pancreatic secretion");

    b.glucagon_release = (1.31 - 0.61 * std::tanh(1.06 * (1.0 - 0.47))) * (2.93 - 2.09 * std::tanh(4.18 * (1.0 - 0.62)));
    b.Gamma = 1.0;

    StateVector x;
    x[St::G_BC] = b.G_BC;
    x[St::G_BF] = b.G_BF;
    x[St::G_H]  = b.G_H;
    x[St::G_G]  = b.G_G;
    x[St::G_L]  = b.G_L;
    x[St::G_K]  = b.G_K;
    x[St::G_PC] = b.G_PC;
    x[St::G_PF] = b.G_PF;
    x[St::I_B]  = b.I_H;
    x[St::I_H]  = b.I_H;
    x[St::I_G]  = b.I_H;
    x[St::I_L]  = b.I_L;
    x[St::I_K]  = I_K;
    x[St::I_PC] = I_PC;
    x[St::I_PF] = b.I_PF;
    x[St::Gamma]   = 1.0;
    x[St::M_HGP_I] = 1.0;
    x[St::M_HGU_I] = 1.0;
    x[St::f]       = f_inf;
    x[St::m_s] = m_s;
    x[St::m_l] = m_l;
    x[St::P]   = P_inf;
    x[St::R]   = X;

    BasalSolution sol{x, make_model(p, b)};

    SegmentInputs rest;
    StateVector dxdt;
    system_rhs(x, sol.model, rest, dxdt);
    double worst = 0.0;
    St worst_state = St::G_BC;
    for (std::size_t i = 0; i < kStateCount; ++i) {
        const auto s = static_cast<St>(i);
        if (s == St::m_s && p.pancreas_dynamic_storage != 0.0) {
            continue;
        }
        if (!(std::abs(dxdt.values[i]) <= worst)) {
            worst = std::abs(dxdt.values[i]);
            worst_state = s;
        }
    }
    if (!(worst <= kBasalTolerance)) {
        throw BasalConvergenceError("basal state is not stationary in " + std::string(state_name(worst_state)), worst);
    }
    return sol;
}

} // namespace t2d

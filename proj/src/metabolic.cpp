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
#include "t2dsim/metabolic.hpp"
#include "t2dsim/errors.hpp"

#include <algorithm>
#include <cmath>

namespace t2d
{

double kidney_glucose_excretion(double G_K) noexcept
{
    // The branches meet at 71 vs 71.12 mg/min; the threshold itself takes the tanh branch.
    if (G_K <= 460.0) {
        return 71.0 + 71.0 * std::tanh(0.11 * (G_K - 460.0));
    }
    return -330.0 + 0.872 * G_K;
}

double pancreas_excitation(double G_H) noexcept
{
    const double g = std::max(G_H, 0.0);
    return std::pow(g, 3.27) / (std::pow(132.0, 3.27) + 5.93 * std::pow(g, 3.02));
}

double glucagon_f_fixed_point(double gamma_ratio) noexcept
{
    return (2.7 * std::tanh(0.39 * gamma_ratio) - 1.0) / 2.0;
}

GlucoseRates glucose_metabolic_rates(const StateVector& x, const Model& m)
{
    const auto& p = m.params;
    const auto& b = m.basal;
    GlucoseRates r;

    r.r_BGU  = p.r_BGU;
    r.r_RBCU = p.r_RBCU;
    r.r_GGU  = p.r_GGU;

    const double M_PGU_I = multiplicative_factor(7.03, 6.52, p.c_I_PGU, p.d_I_PGU, x[St::I_PF], b.I_PF);
    if (!(b.G_PF > 0.0)) {
        throw InvalidBasalError("basal G_PF must be > 0");
    }
    const double M_PGU_G = x[St::G_PF] / b.G_PF;
    r.r_PGU = M_PGU_I * M_PGU_G * p.r_b_PGU;

    const double gamma_ratio = x[St::Gamma] / b.Gamma;
    const double M_HGP_Gamma = 2.7 * std::tanh(0.39 * gamma_ratio) - x[St::f];
    const double M_HGP_G     = multiplicative_factor(1.42, -1.41, p.c_G_HGP, p.d_G_HGP, x[St::G_L], b.G_L);
    r.r_HGP = x[St::M_HGP_I] * M_HGP_G * M_HGP_Gamma * b.r_HGP;

    const double M_HGU_G = multiplicative_factor(5.66, 5.66, p.c_G_HGU, p.d_G_HGU, x[St::G_L], b.G_L);
    r.r_HGU = x[St::M_HGU_I] * M_HGU_G * p.r_b_HGU;

    r.r_KGE = kidney_glucose_excretion(x[St::G_K]);

    const double M_HGP_I_inf = multiplicative_factor(1.21, -1.14, p.c_I_HGPinf, p.d_I_HGPinf, x[St::I_L], b.I_L);
    const double M_HGU_I_inf = multiplicative_factor(0.0, 2.0, p.c_I_HGUinf, p.d_I_HGUinf, x[St::I_L], b.I_L);
    r.dM_HGP_I = 0.04 * (M_HGP_I_inf - x[St::M_HGP_I]);
    r.dM_HGU_I = 0.04 * (M_HGU_I_inf - x[St::M_HGU_I]);
    r.df       = 0.0154 * (glucagon_f_fixed_point(gamma_ratio) - x[St::f]);
    return r;
}

std::array<double, 8> glucose_rhs(const StateVector& x, const Model& m, const EffectInputs& e, const GlucoseRates& r)
{
    const auto& p = m.params;
    const double G_BC = x[St::G_BC], G_BF = x[St::G_BF], G_H = x[St::G_H], G_G = x[St::G_G];
    const double G_L = x[St::G_L], G_K = x[St::G_K], G_PC = x[St::G_PC], G_PF = x[St::G_PF];

    const double r_GGU_m = (1.0 + e.E_GW) * r.r_GGU;
    const double r_HGP_m = (1.0 - e.E_L) * r.r_HGP;
    const double r_PGU_m = (1.0 + e.E_P) * r.r_PGU;
    const double exercise_uptake = 1.0 + p.alpha_e * e.E_2;

    const double brain_exchange = p.V_G_BF / p.T_G_B * (G_BC - G_BF);
    const double periph_exchange = p.V_G_PF / p.T_G_P * (G_PC - (1.0 + p.beta_e * e.E_1) * G_PF);
    const double periph_capillary_loss = p.V_G_PF / p.T_G_P * (G_PC - G_PF);

    std::array<double, 8> d{};
    d[0] = (p.Q_G_B * (G_H - G_BC) - brain_exchange) / p.V_G_BC;
    d[1] = (brain_exchange - r.r_BGU) / p.V_G_BF;
    // heart/lung node: outflow -Q_G_H * G_H closes the mass balance
    d[2] = (p.Q_G_B * G_BC + p.Q_G_L * G_L + p.Q_G_K * G_K + p.Q_G_P * G_PC - p.Q_G_H * G_H - r.r_RBCU) / p.V_G_H;
    d[3] = (p.Q_G_G * (G_H - G_G) - r_GGU_m + e.Ra) / p.V_G_G;
    d[4] = (p.Q_G_A * G_H + p.Q_G_G * G_G - p.Q_G_L * G_L + (1.0 + e.alpha_s) * r_HGP_m - exercise_uptake * r.r_HGU) /
           p.V_G_L;
    d[5] = (p.Q_G_K * (G_H - G_K) - r.r_KGE) / p.V_G_K;
    d[6] = (p.Q_G_P * (G_H - G_PC) - periph_capillary_loss) / p.V_G_PC;
    d[7] = (periph_exchange - exercise_uptake * r_PGU_m) / p.V_G_PF;
    return d;
}

std::array<double, 8> glucose_rhs(const StateVector& x, const Model& m, const EffectInputs& e)
{
    return glucose_rhs(x, m, e, glucose_metabolic_rates(x, m));
}

InsulinRates insulin_rates(const StateVector& x, const Model& m, double r_PIR, double alpha_s)
{
    const auto& p = m.params;
    InsulinRates r;
    r.r_PIR = r_PIR;
    r.r_LIC = 0.4 * (p.Q_I_A * x[St::I_H] + p.Q_I_G * x[St::I_G] - p.Q_I_L * x[St::I_L] + (1.0 - alpha_s) * r_PIR);
    r.r_KIC = 0.3 * p.Q_I_K * x[St::I_K];
    r.r_PIC = x[St::I_PF] / ((1.0 - 0.15) / (0.15 * p.Q_I_P) - 20.0 / p.V_I_PF);
    return r;
}

std::array<double, 7> insulin_rhs(const StateVector& x, const Model& m, const EffectInputs& e, const InsulinRates& r)
{
    const auto& p = m.params;
    const double I_B = x[St::I_B], I_H = x[St::I_H], I_G = x[St::I_G], I_L = x[St::I_L];
    const double I_K = x[St::I_K], I_PC = x[St::I_PC], I_PF = x[St::I_PF];
    const double periph_exchange = p.V_I_PF / p.T_I_P * (I_PC - I_PF);

    std::array<double, 7> d{};
    d[0] = p.Q_I_B * (I_H - I_B) / p.V_I_B;
    d[1] = (p.Q_I_B * I_B + p.Q_I_L * I_L + p.Q_I_K * I_K + p.Q_I_P * I_PC - p.Q_I_H * I_H) / p.V_I_H;
    d[2] = p.Q_I_G * (I_H - I_G) / p.V_I_G;
    d[3] = (p.Q_I_A * I_H + p.Q_I_G * I_G - p.Q_I_L * I_L + (1.0 - e.alpha_s) * r.r_PIR - r.r_LIC) / p.V_I_L;
    d[4] = (p.Q_I_K * (I_H - I_K) - r.r_KIC) / p.V_I_K;
    d[5] = (p.Q_I_P * (I_H - I_PC) - periph_exchange) / p.V_I_PC;
    d[6] = (periph_exchange - r.r_PIC + e.r_Inj) / p.V_I_PF;
    return d;
}

double pancreatic_insulin_release(double S, const Model& m) noexcept
{
    return S / m.basal.S * m.basal.r_PIR;
}

double glucagon_release(const StateVector& x, const Model& m)
{
    const auto& b = m.basal;
    const double M_G = 1.31 - 0.61 * std::tanh(1.06 * (x[St::G_H] / b.G_H - 0.47));
    const double M_I = 2.93 - 2.09 * std::tanh(4.18 * (x[St::I_H] / b.I_H - 0.62));
    return M_G * M_I * 9.1 / b.glucagon_release;
}

double glucagon_rhs(const StateVector& x, const Model& m, double alpha_s)
{
    return ((1.0 + alpha_s) * glucagon_release(x, m) - 9.1 * x[St::Gamma]) / m.params.V_Gamma;
}

std::array<double, 2> incretin_rhs(const StateVector& x, const Model& m, double k_empt) noexcept
{
    const auto& p = m.params;
    const double release = x[St::psi] / p.t_psi;
    const double active_dpp4 = p.R_maxC - x[St::DR_C];
    return {p.zeta * k_empt * x[St::q_Sl] - release,
            (release - (p.K_out + active_dpp4 * p.Cf_2) * x[St::Psi]) / p.V_Psi};
}

PancreasOutput pancreas_rhs(const StateVector& x, const Model& m, double Psi, double G_H) noexcept
{
    const auto& p = m.params;
    PancreasOutput o;
    o.X     = pancreas_excitation(G_H);
    o.P_inf = std::pow(o.X, 1.11) + p.zeta_1 * Psi;

    const double m_l = std::max(x[St::m_l], 0.0);
    const double R   = x[St::R];
    if (o.X > R) {
        o.S = (p.N_1 * o.P_inf + p.N_2 * (o.X - R) + p.zeta_2 * Psi) * m_l;
    }
    else {
        o.S = (p.N_1 * o.P_inf + p.zeta_2 * Psi) * m_l;
    }

    const double exchange = p.K_s * x[St::m_s] - p.K_l * x[St::m_l] + p.gamma * x[St::P];
    o.dm_s = p.pancreas_dynamic_storage != 0.0 ? -exchange : 0.0;
    o.dm_l = exchange - o.S;
    o.dP   = p.alpha * (o.P_inf - x[St::P]);
    o.dR   = p.beta * (o.X - R);
    return o;
}

} // namespace t2d

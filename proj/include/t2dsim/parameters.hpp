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
#ifndef T2DSIM_PARAMETERS_HPP
#define T2DSIM_PARAMETERS_HPP

#include <span>
#include <string>
#include <string_view>

namespace t2d
{

/**
 * @brief Model constants with their default values.
 *
 * Values are stored in their conventional units (vildagliptin clearances in l/h and
 * rate constants in 1/h); conversion to per-minute rates happens when a Model is built.
 * Volumes dl, flows dl/min, time constants min, first-order rates 1/min unless noted.
 */
struct ParameterSet
{
    // glucose volumes
    double V_G_BC = 3.5;
    double V_G_BF = 4.5;
    double V_G_H  = 3.5;
    double V_G_L  = 25.1;
    double V_G_G  = 11.2;
    double V_G_K  = 6.6;
    double V_G_PC = 10.4;
    double V_G_PF = 67.4;
    // insulin volumes
    double V_I_B  = 0.26;
    double V_I_H  = 0.99;
    double V_I_G  = 0.94;
    double V_I_L  = 1.14;
    double V_I_K  = 0.51;
    double V_I_PC = 0.74;
    double V_I_PF = 6.74;
    double V_Gamma = 6.74;
    // glucose flows
    double Q_G_B = 5.9;
    double Q_G_H = 43.7;
    double Q_G_A = 2.5;
    double Q_G_L = 12.6;
    double Q_G_G = 10.1;
    double Q_G_K = 10.1;
    double Q_G_P = 15.1; // closes the heart outflow balance
    // insulin flows
    double Q_I_B = 0.45;
    double Q_I_H = 3.12;
    double Q_I_A = 0.18;
    double Q_I_K = 0.72;
    double Q_I_P = 1.05;
    double Q_I_G = 0.72;
    double Q_I_L = 0.9;
    // transcapillary diffusion time constants
    double T_G_B = 2.1;
    double T_G_P = 5.0;
    double T_I_P = 20.0;
    // meal absorption
    double f_q    = 0.9;
    double k_phi1 = 0.68;
    double k_phi2 = 0.00236;
    double k_12q  = 0.08;
    double k_min  = 0.005;
    double k_max  = 0.05;
    double k_abs  = 0.08;
    double k_t    = 0.08; // follows k_abs when absent from a parameter file
    // multiplicative factor shape constants
    double c_I_PGU    = 0.067;
    double c_I_HGPinf = 1.59;
    double c_G_HGP    = 0.62;
    double c_I_HGUinf = 1.72;
    double c_G_HGU    = 2.03;
    double d_I_PGU    = 1.126;
    double d_I_HGPinf = 0.683;
    double d_G_HGP    = 0.14;
    double d_I_HGUinf = 0.023;
    double d_G_HGU    = 1.59;
    // basal metabolic rates, mg/min
    double r_BGU   = 70.0;
    double r_RBCU  = 10.0;
    double r_GGU   = 20.0;
    double r_b_PGU = 35.0;
    double r_b_HGU = 20.0;
    // pancreas
    double m_l0   = 6.33;
    double zeta_1 = 0.0026;
    double zeta_2 = 0.99e-4;
    double K_l    = 0.3621;
    double K_s    = 0.0572;
    double gamma  = 2.366;
    double alpha  = 0.615;
    double beta   = 0.931;
    double N_1    = 0.0499;
    double N_2    = 0.00015;
    double pancreas_dynamic_storage = 0.0; // 1: integrate dm_s/dt, 0: storage held constant
    // incretin
    double V_Psi  = 11.31;
    double K_out  = 68.3041;
    double Cf_2   = 21.1512;
    double t_psi  = 35.1;
    double R_maxC = 5.0;
    double zeta   = 8.248;
    // vildagliptin (CL, CL_ic l/h; V_c, V_p l; k_off, k_deg, k_v2 1/h; K_vd nmol/l)
    double f_v    = 0.772;
    double k_a1   = 0.021;
    double k_a2   = 0.0175;
    double CL     = 0.6067;
    double CL_ic  = 0.6683;
    double V_p    = 97.3;
    double k_off  = 0.0102;
    double R_maxP = 13.0;
    double k_deg  = 0.0018;
    double V_c    = 22.2;
    double K_vd   = 71.9;
    double k_v2   = 0.39;
    // metformin
    double k_go      = 1.88e-4;
    double k_gg      = 1.85e-4;
    double k_pg      = 4.13;
    double k_gl      = 0.46;
    double k_pl      = 0.00101;
    double k_lp      = 0.91;
    double k_po      = 0.51;
    double nu_GW_max = 0.486;
    double nu_L_max  = 0.378;
    double nu_P_max  = 0.148;
    double n_GW      = 2.0;
    double n_L       = 2.0;
    double n_P       = 5.0;
    double phi_GW_50 = 431.0;
    double phi_L_50  = 521.0;
    double phi_P_50  = 1024.0;
    double rho_alpha = 54.0;
    double rho_beta  = 54.0;
    double alpha_M   = 0.06;
    double beta_M    = 0.1;
    // long acting insulin
    double p_la  = 0.5;
    double r_la  = 0.2143;
    double q_la  = 3.04e-10;
    double b_la  = 0.025;
    double C_max = 15.0;
    double k_la  = 2.35e-5;
    // fast acting insulin
    double p_fa = 0.5;
    double r_fa = 0.2143;
    double q_fa = 1.3e-11;
    double b_fa = 0.0068;
    double V_I  = 6.74; // injection distribution volume, dl; follows V_I_PF when absent
    // physical activity
    double t_HR    = 5.0;
    double n_e     = 4.0;
    double a_e     = 0.1;
    double tau_e   = 600.0;
    double alpha_e = 2.974;
    double beta_e  = 3.39e-4;

    friend bool operator==(const ParameterSet&, const ParameterSet&) = default;
};

struct ParameterField
{
    std::string_view name;
    double ParameterSet::*member;
};

/// Every configurable constant, in file order.
std::span<const ParameterField> parameter_fields() noexcept;

/// Pointer to the named field or nullptr.
double* find_parameter(ParameterSet& p, std::string_view name) noexcept;

/**
 * @brief Check positivity, fraction bounds, k_min < k_max and flow balance.
 * @throws ParameterDomainError naming the first offending constant.
 */
void validate(const ParameterSet& p);

/**
 * Parse a parameter document (`name = value` lines, `#` comments, optional `[section]`
 * headers which are ignored). Unknown names are an error, missing names keep defaults.
 * The result is validated; @throws ParameterDomainError for out-of-range values.
 */
ParameterSet parse_parameters(std::string_view text, const std::string& source = "<parameters>");
ParameterSet load_parameters(const std::string& path);

/// Serialize every field with shortest round-trip formatting.
std::string format_parameters(const ParameterSet& p);

/// Generic tanh-shaped metabolic factor, normalized to 1 at X = X_b.
double multiplicative_factor(double a, double b, double c, double d, double x, double x_b);

inline constexpr double kGlucoseMgPerDlPerMmolPerL = 18.016;

double mmol_per_l_to_mg_per_dl(double g);

/// Shortest decimal text that parses back to the same double.
std::string format_double(double v);

} // namespace t2d

#endif // T2DSIM_PARAMETERS_HPP

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
#include "t2dsim/parameters.hpp"
#include "t2dsim/errors.hpp"
#include "t2dsim/kv_document.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <set>

namespace t2d
{
namespace
{

#define T2D_FIELD(name) ParameterField{#name, &ParameterSet::name}

constexpr std::array kFields = {
    T2D_FIELD(V_G_BC), T2D_FIELD(V_G_BF), T2D_FIELD(V_G_H), T2D_FIELD(V_G_L), T2D_FIELD(V_G_G),
    T2D_FIELD(V_G_K), T2D_FIELD(V_G_PC), T2D_FIELD(V_G_PF), T2D_FIELD(V_I_B), T2D_FIELD(V_I_H),
    T2D_FIELD(V_I_G), T2D_FIELD(V_I_L), T2D_FIELD(V_I_K), T2D_FIELD(V_I_PC), T2D_FIELD(V_I_PF),
    T2D_FIELD(V_Gamma), T2D_FIELD(Q_G_B), T2D_FIELD(Q_G_H), T2D_FIELD(Q_G_A), T2D_FIELD(Q_G_L),
    T2D_FIELD(Q_G_G), T2D_FIELD(Q_G_K), T2D_FIELD(Q_G_P), T2D_FIELD(Q_I_B), T2D_FIELD(Q_I_H),
    T2D_FIELD(Q_I_A), T2D_FIELD(Q_I_K), T2D_FIELD(Q_I_P), T2D_FIELD(Q_I_G), T2D_FIELD(Q_I_L),
    T2D_FIELD(T_G_B), T2D_FIELD(T_G_P), T2D_FIELD(T_I_P), T2D_FIELD(f_q), T2D_FIELD(k_phi1),
    T2D_FIELD(k_phi2), T2D_FIELD(k_12q), T2D_FIELD(k_min), T2D_FIELD(k_max), T2D_FIELD(k_abs),
    T2D_FIELD(k_t), T2D_FIELD(c_I_PGU), T2D_FIELD(c_I_HGPinf), T2D_FIELD(c_G_HGP), T2D_FIELD(c_I_HGUinf),
    T2D_FIELD(c_G_HGU), T2D_FIELD(d_I_PGU), T2D_FIELD(d_I_HGPinf), T2D_FIELD(d_G_HGP), T2D_FIELD(d_I_HGUinf),
    T2D_FIELD(d_G_HGU), T2D_FIELD(r_BGU), T2D_FIELD(r_RBCU), T2D_FIELD(r_GGU), T2D_FIELD(r_b_PGU),
    T2D_FIELD(r_b_HGU), T2D_FIELD(m_l0), T2D_FIELD(zeta_1), T2D_FIELD(zeta_2), T2D_FIELD(K_l),
    T2D_FIELD(K_s), T2D_FIELD(gamma), T2D_FIELD(alpha), T2D_FIELD(beta), T2D_FIELD(N_1),
    T2D_FIELD(N_2), T2D_FIELD(pancreas_dynamic_storage), T2D_FIELD(V_Psi), T2D_FIELD(K_out), T2D_FIELD(Cf_2),
    T2D_FIELD(t_psi), T2D_FIELD(R_maxC), T2D_FIELD(zeta), T2D_FIELD(f_v), T2D_FIELD(k_a1),
    T2D_FIELD(k_a2), T2D_FIELD(CL), T2D_FIELD(CL_ic), T2D_FIELD(V_p), T2D_FIELD(k_off),
    T2D_FIELD(R_maxP), T2D_FIELD(k_deg), T2D_FIELD(V_c), T2D_FIELD(K_vd), T2D_FIELD(k_v2),
    T2D_FIELD(k_go), T2D_FIELD(k_gg), T2D_FIELD(k_pg), T2D_FIELD(k_gl), T2D_FIELD(k_pl),
    T2D_FIELD(k_lp), T2D_FIELD(k_po), T2D_FIELD(nu_GW_max), T2D_FIELD(nu_L_max), T2D_FIELD(nu_P_max),
    T2D_FIELD(n_GW), T2D_FIELD(n_L), T2D_FIELD(n_P), T2D_FIELD(phi_GW_50), T2D_FIELD(phi_L_50),
    T2D_FIELD(phi_P_50), T2D_FIELD(rho_alpha), T2D_FIELD(rho_beta), T2D_FIELD(alpha_M), T2D_FIELD(beta_M),
    T2D_FIELD(p_la), T2D_FIELD(r_la), T2D_FIELD(q_la), T2D_FIELD(b_la), T2D_FIELD(C_max),
    T2D_FIELD(k_la), T2D_FIELD(p_fa), T2D_FIELD(r_fa), T2D_FIELD(q_fa), T2D_FIELD(b_fa),
    T2D_FIELD(V_I), T2D_FIELD(t_HR), T2D_FIELD(n_e), T2D_FIELD(a_e), T2D_FIELD(tau_e),
    T2D_FIELD(alpha_e), T2D_FIELD(beta_e),
};

#undef T2D_FIELD

// volumes, flows, time constants and first-order rates
bool must_be_positive(std::string_view name)
{
    static const std::set<std::string_view> extra = {"t_psi", "t_HR", "tau_e", "alpha", "beta", "alpha_M",
                                                     "beta_M", "p_la", "p_fa", "b_la", "b_fa", "f_q", "f_v",
                                                     "m_l0", "a_e", "n_e", "n_GW", "n_L", "n_P", "phi_GW_50",
                                                     "phi_L_50", "phi_P_50"};
    for (auto prefix : {"V_", "Q_", "T_", "k_", "K_"}) {
        if (name.starts_with(prefix)) {
            return true;
        }
    }
    return extra.contains(name);
}

void check_balance(double total, double sum, const char* what)
{
    if (std::abs(total - sum) > 1e-9 * std::abs(total)) {
        throw ParameterDomainError(std::string("flow balance violated: ") + what + " (" + format_double(total) +
                                   " vs " + format_double(sum) + ")");
    }
}

} // namespace

std::span<const ParameterField> parameter_fields() noexcept
{
    return kFields;
}

double* find_parameter(ParameterSet& p, std::string_view name) noexcept
{
    for (const auto& f : kFields) {
        if (f.name == name) {
            return &(p.*f.member);
        }
    }
    return nullptr;
}

void validate(const ParameterSet& p)
{
    for (const auto& f : kFields) {
        const double v = p.*f.member;
        if (!std::isfinite(v)) {
            throw ParameterDomainError(std::string(f.name) + " must be finite");
        }
        if (must_be_positive(f.name) ? !(v > 0.0) : v < 0.0) {
            throw ParameterDomainError(std::string(f.name) + (must_be_positive(f.name) ? " must be > 0" : " must be >= 0") +
                                       ", got " + format_double(v));
        }
    }
    if (!(p.k_min < p.k_max)) {
        throw ParameterDomainError("k_min must be < k_max");
    }
    if (p.r_la > 1.0 || p.r_fa > 1.0) {
        throw ParameterDomainError("r_la and r_fa are fractions and must be <= 1");
    }
    if (p.f_q > 1.0 || p.f_v > 1.0) {
        throw ParameterDomainError("f_q and f_v are fractions and must be <= 1");
    }
    if (p.k_phi1 >= 1.0) {
        throw ParameterDomainError("k_phi1 must be < 1");
    }
    if (p.pancreas_dynamic_storage != 0.0 && p.pancreas_dynamic_storage != 1.0) {
        throw ParameterDomainError("pancreas_dynamic_storage must be 0 or 1");
    }
    check_balance(p.Q_G_H, p.Q_G_B + p.Q_G_A + p.Q_G_G + p.Q_G_K + p.Q_G_P, "Q_G_H = Q_G_B + Q_G_A + Q_G_G + Q_G_K + Q_G_P");
    check_balance(p.Q_G_L, p.Q_G_A + p.Q_G_G, "Q_G_L = Q_G_A + Q_G_G");
    check_balance(p.Q_I_H, p.Q_I_B + p.Q_I_A + p.Q_I_G + p.Q_I_K + p.Q_I_P, "Q_I_H = Q_I_B + Q_I_A + Q_I_G + Q_I_K + Q_I_P");
    check_balance(p.Q_I_L, p.Q_I_A + p.Q_I_G, "Q_I_L = Q_I_A + Q_I_G");
}

ParameterSet parse_parameters(std::string_view text, const std::string& source)
{
    const auto doc = parse_kv_document(text, source);
    ParameterSet p;
    std::set<std::string> seen;
    for (const auto& section : doc.sections) {
        for (const auto& e : section.entries) {
            double* slot = find_parameter(p, e.key);
            if (slot == nullptr) {
                throw DocumentError(source, e.line, e.key, "unknown parameter");
            }
            if (!seen.insert(e.key).second) {
                throw DocumentError(source, e.line, e.key, "parameter given twice");
            }
            *slot = parse_number(e.value, source, e.line, e.key);
        }
    }
    if (!seen.contains("k_t")) {
        p.k_t = p.k_abs;
    }
    if (!seen.contains("V_I")) {
        p.V_I = p.V_I_PF;
    }
    validate(p);
    return p;
}

ParameterSet load_parameters(const std::string& path)
{
    return parse_parameters(read_text_file(path), path);
}

std::string format_parameters(const ParameterSet& p)
{
    std::string out = "# t2dsim parameter file\n";
    for (const auto& f : kFields) {
        out += std::string(f.name) + " = " + format_double(p.*f.member) + "\n";
    }
    return out;
}

double multiplicative_factor(double a, double b, double c, double d, double x, double x_b)
{
    if (!(x_b > 0.0)) {
        throw InvalidBasalError("basal concentration must be > 0, got " + format_double(x_b));
    }
    const double denom = a + b * std::tanh(c * (1.0 - d));
    if (denom == 0.0) {
        throw ParameterDomainError("multiplicative factor denominator is zero");
    }
    return (a + b * std::tanh(c * (x / x_b - d))) / denom;
}

double mmol_per_l_to_mg_per_dl(double g)
{
    if (!(g >= 0.0)) {
        throw DomainError("glucose concentration must be >= 0, got " + format_double(g));
    }
    return g * kGlucoseMgPerDlPerMmolPerL;
}

std::string format_double(double v)
{
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    (void)ec;
    return std::string(buf.data(), ptr);
}

} // namespace t2d

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
#ifndef T2DSIM_METABOLIC_HPP
#define T2DSIM_METABOLIC_HPP

#include "t2dsim/model.hpp"

#include <array>

namespace t2d
{

/// Glucose metabolic rates before drug, stress and exercise modifiers, mg/min.
struct GlucoseRates
{
    double r_BGU  = 0.0;
    double r_RBCU = 0.0;
    double r_GGU  = 0.0;
    double r_HGP  = 0.0;
    double r_HGU  = 0.0;
    double r_KGE  = 0.0;
    double r_PGU  = 0.0;
    // factor dynamics, 1/min
    double dM_HGP_I = 0.0;
    double dM_HGU_I = 0.0;
    double df       = 0.0;
};

/// Insulin release and clearance rates, mU/min.
struct InsulinRates
{
    double r_PIR = 0.0; ///< pancreatic release before the stress multiplier
    double r_LIC = 0.0;
    double r_KIC = 0.0;
    double r_PIC = 0.0;
};

struct PancreasOutput
{
    double dm_s = 0.0;
    double dm_l = 0.0;
    double dP   = 0.0;
    double dR   = 0.0;
    double S    = 0.0; ///< secretion, U/min
    double X    = 0.0;
    double P_inf = 0.0;
};

/// Kidney excretion, piecewise in G_K with threshold 460 mg/dl.
double kidney_glucose_excretion(double G_K) noexcept;

/// Glucose-enhanced excitation factor of the pancreas.
double pancreas_excitation(double G_H) noexcept;

/// Fixed point of f for a given normalized glucagon.
double glucagon_f_fixed_point(double gamma_ratio) noexcept;

GlucoseRates glucose_metabolic_rates(const StateVector& x, const Model& m);

/// dG/dt for G_BC..G_PF in declaration order, with the rates supplied explicitly.
std::array<double, 8> glucose_rhs(const StateVector& x, const Model& m, const EffectInputs& e, const GlucoseRates& r);
std::array<double, 8> glucose_rhs(const StateVector& x, const Model& m, const EffectInputs& e);

/// Clearances for the given pancreatic release r_PIR.
InsulinRates insulin_rates(const StateVector& x, const Model& m, double r_PIR, double alpha_s);

/// dI/dt for I_B..I_PF in declaration order.
std::array<double, 7> insulin_rhs(const StateVector& x, const Model& m, const EffectInputs& e, const InsulinRates& r);

/// Pancreatic release from secretion: (S / S^b) r_PIR^b.
double pancreatic_insulin_release(double S, const Model& m) noexcept;

/// Glucagon release rate before the stress multiplier.
double glucagon_release(const StateVector& x, const Model& m);
double glucagon_rhs(const StateVector& x, const Model& m, double alpha_s);

/// (dpsi/dt, dPsi/dt) for the gastric emptying rate k_empt.
std::array<double, 2> incretin_rhs(const StateVector& x, const Model& m, double k_empt) noexcept;

PancreasOutput pancreas_rhs(const StateVector& x, const Model& m, double Psi, double G_H) noexcept;

} // namespace t2d

#endif // T2DSIM_METABOLIC_HPP

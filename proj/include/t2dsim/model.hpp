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
#ifndef T2DSIM_MODEL_HPP
#define T2DSIM_MODEL_HPP

#include "t2dsim/parameters.hpp"
#include "t2dsim/state.hpp"

namespace t2d
{

/**
 * @brief Subject-specific reference values the metabolic factors normalize against.
 *
 * Produced by compute_basal_state. r_PIR, S, r_HGP and glucagon_release close the
 * steady state: they are computed, never configured.
 */
struct BasalValues
{
    // glucose, mg/dl
    double G_BC = 0.0;
    double G_BF = 0.0;
    double G_H  = 0.0;
    double G_G  = 0.0;
    double G_L  = 0.0;
    double G_K  = 0.0;
    double G_PC = 0.0;
    double G_PF = 0.0;
    // insulin, mU/dl
    double I_H  = 0.0;
    double I_L  = 0.0;
    double I_PF = 0.0;
    double Gamma = 1.0;
    double r_PIR = 0.0;  ///< pancreatic insulin release, mU/min
    double S     = 0.0;  ///< pancreatic secretion, U/min
    double r_HGP = 35.0; ///< hepatic glucose production before factors, mg/min
    /// Glucagon release factor product M^G * M^I at basal; 1 leaves the release unnormalized.
    double glucagon_release = 1.0;
};

/// Parameters in internal units plus the basal reference. Immutable; share freely across threads.
struct Model
{
    ParameterSet params;
    BasalValues basal;

    // vildagliptin constants in 1/min (configured in 1/h)
    double CL_per_min    = 0.0;
    double CL_ic_per_min = 0.0;
    double k_off_per_min = 0.0;
    double k_deg_per_min = 0.0;
    double k_v2_per_min  = 0.0;
};

Model make_model(const ParameterSet& params, const BasalValues& basal);

/// Inputs the metabolic right-hand sides take from the drug, meal and activity sub-models.
struct EffectInputs
{
    double E_1     = 0.0;
    double E_2     = 0.0;
    double alpha_s = 0.0; ///< stress severity in [0, 1]
    double E_GW    = 0.0;
    double E_L     = 0.0;
    double E_P     = 0.0;
    double Ra      = 0.0; ///< glucose appearance, mg/min
    double r_Inj   = 0.0; ///< injected insulin entering periphery, mU/min
};

struct BasalSolution
{
    StateVector state;
    Model model;
};

/**
 * @brief Stationary state with no exogenous inputs at heart glucose G_H_basal (mg/dl).
 *
 * Glucose concentrations follow from the compartment balances at unit factors, the kidney
 * compartment from a scalar root solve, r_HGP from the heart/liver balance. The insulin
 * subsystem is solved backwards from I_PF_basal for the remaining concentrations and r_PIR.
 * The returned state is checked against the full right-hand side.
 *
 * @throws InvalidBasalError for non-positive inputs, BasalConvergenceError if the residual check fails.
 */
BasalSolution compute_basal_state(const ParameterSet& params, double G_H_basal, double I_PF_basal = 1.0);

/// Residual tolerance of the basal solve, native units per minute.
inline constexpr double kBasalTolerance = 1e-9;

} // namespace t2d

#endif // T2DSIM_MODEL_HPP

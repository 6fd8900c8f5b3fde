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
#include "t2dsim/parameters.hpp"
#include "t2dsim/system.hpp"

#include <doctest.h>

#include <cmath>

using namespace t2d;

namespace
{

long double factor_ld(long double a, long double b, long double c, long double d, long double x, long double xb)
{
    return (a + b * std::tanh(c * (x / xb - d))) / (a + b * std::tanh(c * (1.0L - d)));
}

} // namespace

TEST_CASE("state names round trip in declaration order")
{
    CHECK(kStateCount == 49);
    CHECK(state_name(St::G_BC) == "G_BC");
    CHECK(state_name(St::E_2) == "E_2");
    for (std::size_t i = 0; i < kStateCount; ++i) {
        const auto s = static_cast<St>(i);
        REQUIRE(state_from_name(state_name(s)).has_value());
        CHECK(*state_from_name(state_name(s)) == s);
    }
    CHECK_FALSE(state_from_name("G_X").has_value());
    CHECK_FALSE(is_guarded(St::f));
    CHECK_FALSE(is_guarded(St::E_1));
    CHECK(is_guarded(St::m_l));
}

TEST_CASE("multiplicative factor")
{
    SUBCASE("unity at basal")
    {
        CHECK(multiplicative_factor(7.03, 6.52, 0.067, 1.126, 3.7, 3.7) == 1.0);
        CHECK(multiplicative_factor(1.42, -1.41, 0.62, 0.14, 0.01, 0.01) == 1.0);
    }
    SUBCASE("matches extended precision away from basal")
    {
        for (double r : {0.0, 0.3, 0.9, 1.7, 4.0, 25.0}) {
            const double got = multiplicative_factor(7.03, 6.52, 0.067, 1.126, r * 2.0, 2.0);
            const auto want  = factor_ld(7.03L, 6.52L, 0.067L, 1.126L, r * 2.0L, 2.0L);
            CHECK(got == doctest::Approx(static_cast<double>(want)).epsilon(1e-14));
        }
    }
    SUBCASE("large argument limit")
    {
        const long double lim = (7.03L + 6.52L) / (7.03L + 6.52L * std::tanh(0.067L * (1.0L - 1.126L)));
        CHECK(multiplicative_factor(7.03, 6.52, 0.067, 1.126, 1e6, 1.0) ==
              doctest::Approx(static_cast<double>(lim)).epsilon(1e-13));
    }
    SUBCASE("b = 0 is constant")
    {
        for (double x : {0.0, 1.0, 50.0}) {
            CHECK(multiplicative_factor(2.0, 0.0, 1.0, 0.5, x, 3.0) == 1.0);
        }
    }
    SUBCASE("monotone with the sign of b c")
    {
        double prev_up = -1.0, prev_down = 1e9;
        for (int i = 0; i <= 100; ++i) {
            const double x  = 0.05 * i;
            const double up = multiplicative_factor(7.03, 6.52, 0.067, 1.126, x, 1.0);
            const double dn = multiplicative_factor(1.42, -1.41, 0.62, 0.14, x, 1.0);
            CHECK(up >= prev_up);
            CHECK(dn <= prev_down);
            prev_up   = up;
            prev_down = dn;
        }
    }
    SUBCASE("errors")
    {
        CHECK_THROWS_AS(multiplicative_factor(1, 1, 1, 1, 1.0, 0.0), InvalidBasalError);
        CHECK_THROWS_AS(multiplicative_factor(1, 1, 1, 1, 1.0, -2.0), InvalidBasalError);
        // a + b tanh(c(1 - d)) = 0 with d = 1
        CHECK_THROWS_AS(multiplicative_factor(0.0, 2.0, 1.0, 1.0, 1.0, 1.0), ParameterDomainError);
    }
}

TEST_CASE("glucose unit conversion")
{
    CHECK(mmol_per_l_to_mg_per_dl(10.0) == doctest::Approx(180.16).epsilon(1e-15));
    CHECK(mmol_per_l_to_mg_per_dl(0.0) == 0.0);
    CHECK(mmol_per_l_to_mg_per_dl(5.551) == doctest::Approx(100.01).epsilon(1e-4));
    CHECK_THROWS_AS(mmol_per_l_to_mg_per_dl(-1.0), DomainError);
}

TEST_CASE("parameter defaults validate and round trip")
{
    const ParameterSet p;
    CHECK_NOTHROW(validate(p));
    CHECK(p.k_t == p.k_abs);
    CHECK(p.V_I == p.V_I_PF);
    // heart outflow equals the sum of the organ inflows
    CHECK(p.Q_G_H == doctest::Approx(p.Q_G_B + p.Q_G_A + p.Q_G_G + p.Q_G_K + p.Q_G_P).epsilon(1e-15));
    CHECK(p.Q_I_H == doctest::Approx(p.Q_I_B + p.Q_I_A + p.Q_I_G + p.Q_I_K + p.Q_I_P).epsilon(1e-15));

    ParameterSet q;
    q.V_G_BC = 3.5000000000000004;
    q.k_la   = 2.3456789012345678e-5;
    const auto text = format_parameters(q);
    CHECK(parse_parameters(text) == q);
    CHECK(parse_parameters(format_parameters(p)) == p);
}

TEST_CASE("parameter documents")
{
    SUBCASE("overrides and derived defaults")
    {
        const auto p = parse_parameters("# tuned\nk_abs = 0.05\n[pancreas]\nm_l0 = 7\n");
        CHECK(p.k_abs == 0.05);
        CHECK(p.k_t == 0.05);
        CHECK(p.m_l0 == 7.0);
        CHECK(parse_parameters("k_abs = 0.05\nk_t = 0.02\n").k_t == 0.02);
        CHECK(parse_parameters("V_I_PF = 7.0\n").V_I == 7.0);
    }
    SUBCASE("unknown key reports the line")
    {
        try {
            parse_parameters("V_G_BC = 3.5\nV_G_XX = 1\n", "p.txt");
            FAIL("expected an error");
        }
        catch (const DocumentError& e) {
            CHECK(e.line() == 2);
            CHECK(e.field() == "V_G_XX");
            CHECK(e.source() == "p.txt");
        }
    }
    SUBCASE("invalid values")
    {
        CHECK_THROWS_AS(parse_parameters("V_G_BC = abc\n"), DocumentError);
        CHECK_THROWS_AS(parse_parameters("V_G_BC = 1\nV_G_BC = 2\n"), DocumentError);
        CHECK_THROWS_AS(parse_parameters("V_G_BC = 0\n"), ParameterDomainError);
        CHECK_THROWS_AS(parse_parameters("k_min = 0.06\n"), ParameterDomainError);
        CHECK_THROWS_AS(parse_parameters("r_la = 1.5\n"), ParameterDomainError);
        CHECK_THROWS_AS(parse_parameters("Q_G_P = 12.6\n"), ParameterDomainError);
        CHECK_THROWS_AS(parse_parameters("V_G_BC = nan\n"), DocumentError);
    }
}

TEST_CASE("basal state")
{
    const ParameterSet p;
    const double GH = 180.16;
    const auto sol  = compute_basal_state(p, GH);
    const auto& x   = sol.state;
    const auto& b   = sol.model.basal;

    SUBCASE("closed-form glucose distribution")
    {
        // brain: capillary supplies the uptake, interstitium diffuses it
        const double G_BC = GH - p.r_BGU / p.Q_G_B;
        CHECK(x[St::G_BC] == doctest::Approx(G_BC).epsilon(1e-13));
        CHECK(x[St::G_BF] == doctest::Approx(G_BC - p.r_BGU * p.T_G_B / p.V_G_BF).epsilon(1e-13));
        CHECK(x[St::G_G] == doctest::Approx(GH - p.r_GGU / p.Q_G_G).epsilon(1e-13));
        const double G_PC = GH - p.r_b_PGU / p.Q_G_P;
        CHECK(x[St::G_PC] == doctest::Approx(G_PC).epsilon(1e-13));
        CHECK(x[St::G_PF] == doctest::Approx(G_PC - p.r_b_PGU * p.T_G_P / p.V_G_PF).epsilon(1e-13));
        CHECK(x[St::G_BC] == doctest::Approx(168.3).epsilon(1e-3));
        CHECK(x[St::G_L] == doctest::Approx(189.3).epsilon(1e-3));
        // uptake total must be produced by the liver: 70 + 10 + 20 + 35 + 20 + kidney
        const double uptake = p.r_BGU + p.r_RBCU + p.r_GGU + p.r_b_PGU + p.r_b_HGU + kidney_glucose_excretion(x[St::G_K]);
        const double M_gamma = 2.7 * std::tanh(0.39) - x[St::f];
        CHECK(b.r_HGP * M_gamma == doctest::Approx(uptake).epsilon(1e-12));
    }
    SUBCASE("fixed points and zero inputs")
    {
        CHECK(x[St::Gamma] == 1.0);
        CHECK(x[St::I_PF] == 1.0);
        CHECK(x[St::M_HGP_I] == 1.0);
        CHECK(x[St::M_HGU_I] == 1.0);
        CHECK(x[St::f] == doctest::Approx((2.7 * std::tanh(0.39) - 1.0) / 2.0).epsilon(1e-15));
        for (auto s : {St::q_Ss, St::q_Sl, St::q_int, St::D_t, St::D_Nq, St::H_fa, St::D_fa, St::B_la, St::H_la,
                       St::D_la, St::M_GL, St::M_GW, St::M_L, St::M_P, St::M_O1, St::M_O2, St::A_G1, St::A_G2,
                       St::A_c, St::A_p, St::DR_C, St::DR_P, St::E_1, St::E_2, St::psi, St::Psi}) {
            CHECK(x[s] == 0.0);
        }
        CHECK(b.r_PIR == doctest::Approx(0.84).epsilon(0.02));
        CHECK(x[St::R] == doctest::Approx(pancreas_excitation(GH)).epsilon(1e-15));
        CHECK(x[St::m_s] * p.K_s == doctest::Approx(p.K_l * p.m_l0).epsilon(1e-15));
    }
    SUBCASE("stationary over a range of subjects")
    {
        for (double g : {90.0, 120.0, 180.16, 250.0}) {
            for (double ipf : {0.5, 1.0, 2.0}) {
                const auto s = compute_basal_state(p, g, ipf);
                StateVector d;
                system_rhs(s.state, s.model, SegmentInputs{}, d);
                for (std::size_t i = 0; i < kStateCount; ++i) {
                    INFO(state_name(static_cast<St>(i)) << " at G_H " << g);
                    CHECK(std::abs(d.values[i]) < kBasalTolerance);
                }
            }
        }
    }
    SUBCASE("invalid inputs")
    {
        CHECK_THROWS_AS(compute_basal_state(p, 0.0), InvalidBasalError);
        CHECK_THROWS_AS(compute_basal_state(p, -5.0), InvalidBasalError);
        CHECK_THROWS_AS(compute_basal_state(p, 180.0, 0.0), InvalidBasalError);
        // brain uptake larger than the capillary can deliver leaves no positive interstitial glucose
        CHECK_THROWS_AS(compute_basal_state(p, 20.0), InvalidBasalError);
    }
}

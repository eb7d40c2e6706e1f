// Copyright 2026 The spinmotion Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "spinmotion/constants.hpp"
#include "spinmotion/params.hpp"

using namespace spinmotion;
using constants::two_pi;

namespace {

const IonSpecies kYb = IonSpecies::yb171();
const double kNuZ = two_pi * 268e3;

double rel_err(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

// Independent route for the two-ion spacing: golden-section minimization of
// the axial potential V(d) = m nu^2 d^2 / 4 + e^2 / (4 pi eps0 d). Extended
// precision in the potential, since ordering comparisons near a quadratic
// minimum saturate at sqrt(machine epsilon).
double separation_by_minimization(double nu_z)
{
    const long double m = kYb.mass_kg();
    const long double k =
        static_cast<long double>(constants::elementary_charge) * constants::elementary_charge /
        (2.0L * constants::two_pi * constants::vacuum_permittivity);
    const long double w2 = static_cast<long double>(nu_z) * nu_z;
    auto potential = [&](long double d) { return 0.25L * m * w2 * d * d + k / d; };
    long double a = 1e-8L, b = 1e-3L;
    const long double ratio = (std::sqrt(5.0L) - 1.0L) / 2.0L;
    long double c = b - ratio * (b - a);
    long double d = a + ratio * (b - a);
    while ((b - a) > 1e-13L * (a + b)) {
        if (potential(c) < potential(d)) {
            b = d;
        } else {
            a = c;
        }
        c = b - ratio * (b - a);
        d = a + ratio * (b - a);
    }
    return static_cast<double>(0.5L * (a + b));
}

} // namespace

TEST_SUITE_BEGIN("params");

TEST_CASE("yb171 preset carries the nuclide mass and a one-magneton slope")
{
    CHECK(kYb.label == "171Yb+");
    CHECK(kYb.mass_amu == doctest::Approx(170.9363302).epsilon(1e-9));
    CHECK(std::lround(kYb.mass_amu) == 171);
    CHECK(kYb.zeeman_slope ==
          doctest::Approx(constants::bohr_magneton / constants::hbar).epsilon(1e-15));
    // about 2 pi x 14 GHz per tesla
    CHECK(kYb.zeeman_slope == doctest::Approx(8.7941000538e10).epsilon(1e-9));
}

TEST_CASE("effective Lamb-Dicke parameter against frozen reference values")
{
    const TrapEnvironment trap{kNuZ, 23.3, 0.0};
    const double eta = effective_lamb_dicke(kYb, trap);
    // reference value from independent constant arithmetic
    CHECK(rel_err(eta, 0.012780759889677721) < 1e-12);
    CHECK(std::abs(eta - 0.013) < 0.0005);

    SUBCASE("zero gradient gives zero coupling")
    {
        CHECK(effective_lamb_dicke(kYb, TrapEnvironment{kNuZ, 0.0, 0.0}) == 0.0);
    }
    SUBCASE("23.6 T/m value and linear scaling in the gradient")
    {
        const double eta236 = effective_lamb_dicke(kYb, TrapEnvironment{kNuZ, 23.6, 0.0});
        CHECK(rel_err(eta236, 0.012945319029888163) < 1e-12);
        CHECK(rel_err(eta236 / eta, 23.6 / 23.3) < 1e-12);
    }
    SUBCASE("domain errors")
    {
        CHECK_THROWS_AS(effective_lamb_dicke(kYb, TrapEnvironment{0.0, 23.3, 0.0}),
                        std::domain_error);
        CHECK_THROWS_AS(effective_lamb_dicke(kYb, TrapEnvironment{-1.0, 23.3, 0.0}),
                        std::domain_error);
        CHECK_THROWS_AS(effective_lamb_dicke(kYb, TrapEnvironment{std::nan(""), 23.3, 0.0}),
                        std::domain_error);
        CHECK_THROWS_AS(effective_lamb_dicke(kYb, TrapEnvironment{kNuZ, -1.0, 0.0}),
                        std::domain_error);
    }
}

TEST_CASE("both algebraic forms of the coupling agree to 1e-12")
{
    std::mt19937_64 rng(11);
    auto uniform = [&rng](double lo, double hi) {
        return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };
    for (int k = 0; k < 1000; ++k) {
        IonSpecies species = kYb;
        species.mass_amu = uniform(1.0, 300.0);
        const double nu = two_pi * uniform(50e3, 5e6);
        const double grad = uniform(0.001, 200.0);
        const double form1 = effective_lamb_dicke(species, TrapEnvironment{nu, grad, 0.0});
        const double form2 =
            constants::bohr_magneton * grad /
            (std::sqrt(2.0 * species.mass_kg() * constants::hbar) * std::pow(nu, 1.5));
        CHECK(rel_err(form1, form2) < 1e-12);
    }
}

TEST_CASE("scaling laws under parameter doubling")
{
    const TrapEnvironment trap{kNuZ, 23.3, 0.0};
    const double eta = effective_lamb_dicke(kYb, trap);

    TrapEnvironment g2 = trap;
    g2.gradient *= 2.0;
    CHECK(rel_err(effective_lamb_dicke(kYb, g2), 2.0 * eta) < 1e-12);

    TrapEnvironment n2 = trap;
    n2.nu_z *= 2.0;
    CHECK(rel_err(effective_lamb_dicke(kYb, n2), eta / std::pow(2.0, 1.5)) < 1e-12);

    IonSpecies heavy = kYb;
    heavy.mass_amu *= 2.0;
    CHECK(rel_err(effective_lamb_dicke(heavy, trap), eta / std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("optical Lamb-Dicke comparison")
{
    const TrapEnvironment trap{kNuZ, 23.3, 0.0};
    const double eta = laser_lamb_dicke(kYb, trap, 369.5e-9, true);
    CHECK(rel_err(eta, 0.35720656831892561) < 1e-12);
    CHECK(std::abs(eta - 0.36) < 0.01);

    CHECK(rel_err(laser_lamb_dicke(kYb, trap, 369.5e-9, false), 0.5 * eta) < 1e-15);
    CHECK(laser_lamb_dicke(kYb, trap, 1e6, true) < 1e-12); // wavelength -> infinity
    CHECK_THROWS_AS(laser_lamb_dicke(kYb, trap, 0.0, true), std::domain_error);
    CHECK_THROWS_AS(laser_lamb_dicke(kYb, trap, -1.0, true), std::domain_error);
}

TEST_CASE("two-ion separation closed form")
{
    const double d = two_ion_separation(kYb, kNuZ);
    CHECK(rel_err(d, 8.3072981382790794e-06) < 1e-12);
    CHECK(std::abs(d - 8.3e-6) < 0.05e-6);

    SUBCASE("nu -> 8 nu shrinks the spacing by 4")
    {
        CHECK(rel_err(two_ion_separation(kYb, 8.0 * kNuZ), d / 4.0) < 1e-12);
    }
    SUBCASE("500 kHz against the potential minimizer")
    {
        const double d500 = two_ion_separation(kYb, two_pi * 500e3);
        CHECK(rel_err(d500, 5.4815450808387371e-06) < 1e-12);
        CHECK(rel_err(d500, separation_by_minimization(two_pi * 500e3)) < 1e-9);
    }
    SUBCASE("100 random frequencies against the potential minimizer")
    {
        std::mt19937_64 rng(23);
        auto uniform = [&rng](double lo, double hi) {
            return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
        };
        for (int k = 0; k < 100; ++k) {
            const double nu = two_pi * uniform(80e3, 3e6);
            CHECK(rel_err(two_ion_separation(kYb, nu), separation_by_minimization(nu)) < 1e-9);
        }
    }
    SUBCASE("domain error") { CHECK_THROWS_AS(two_ion_separation(kYb, 0.0), std::domain_error); }
}

TEST_CASE("gradient from splitting")
{
    const double d = two_ion_separation(kYb, kNuZ);
    const double grad = gradient_from_splitting(kYb, two_pi * 2.71e6, d);
    CHECK(rel_err(grad, 23.307621658009662) < 1e-12);
    CHECK(std::abs(grad - 23.3) < 0.6);

    CHECK(gradient_from_splitting(kYb, 0.0, d) == 0.0);

    SUBCASE("the 23.6 T/m figure implies a 2.744 MHz splitting at this spacing")
    {
        const double implied = splitting_from_gradient(kYb, 23.6, d);
        CHECK(rel_err(implied, 17241029.797130026) < 1e-12);
        CHECK(implied / two_pi == doctest::Approx(2.7439951e6).epsilon(1e-6));
        CHECK(rel_err(gradient_from_splitting(kYb, implied, d), 23.6) < 1e-12);
    }
    SUBCASE("forward/inverse round trip over random inputs")
    {
        std::mt19937_64 rng(37);
        auto uniform = [&rng](double lo, double hi) {
            return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
        };
        for (int k = 0; k < 200; ++k) {
            const double g = uniform(0.01, 200.0);
            const double sep = uniform(1e-6, 30e-6);
            CHECK(rel_err(gradient_from_splitting(kYb, splitting_from_gradient(kYb, g, sep), sep),
                          g) < 1e-12);
        }
    }
    SUBCASE("domain errors")
    {
        CHECK_THROWS_AS(gradient_from_splitting(kYb, 1.0, 0.0), std::domain_error);
        CHECK_THROWS_AS(splitting_from_gradient(kYb, 23.3, 0.0), std::domain_error);
    }
}

TEST_CASE("crosstalk bound")
{
    const double p = crosstalk_bound(two_pi * 40e3, two_pi * 2.71e6);
    // evaluates to 2.18e-4; one significant figure rounds it to 2e-4
    CHECK(rel_err(p, 2.1786195721735813e-4) < 1e-12);
    CHECK(crosstalk_bound(0.0, two_pi * 2.71e6) == 0.0);
    CHECK(crosstalk_bound(two_pi * 2.71e6, two_pi * 2.71e6) == 1.0);
    CHECK_THROWS_AS(crosstalk_bound(two_pi * 40e3, 0.0), std::domain_error);
}

TEST_CASE("derived-quantity bundle is consistent with the individual calls")
{
    const TrapEnvironment trap{kNuZ, 23.3, 0.0};
    const DerivedQuantities q = derive_quantities(kYb, trap, 369.5e-9, true);
    CHECK(q.z0 == ground_state_extent(kYb, trap.nu_z));
    CHECK(q.eta_eff == effective_lamb_dicke(kYb, trap));
    REQUIRE(q.eta_laser.has_value());
    CHECK(*q.eta_laser == laser_lamb_dicke(kYb, trap, 369.5e-9, true));
    CHECK(q.ion_separation == two_ion_separation(kYb, trap.nu_z));
    CHECK_FALSE(derive_quantities(kYb, trap).eta_laser.has_value());
}

TEST_SUITE_END();

#include "doctest.h"

#include <random>

#include "losdof/errors.hpp"
#include "losdof/landau.hpp"
#include "losdof/sampling.hpp"
#include "losdof/spectra.hpp"

using namespace losdof;

namespace {

Link ula_link(double wavelength, double distance, double length = 0.2) {
    return Link::from_wavelength(wavelength, distance, ArrayAperture::interval(length),
                                 ArrayAperture::interval(length));
}

} // namespace

TEST_CASE("NLOS Nyquist densities") {
    CHECK(nyquist_density_nlos(isotropic_wavenumber_measure(1, 0.01)) ==
          doctest::Approx(200.0).epsilon(1e-14));
    CHECK(nyquist_density_nlos(isotropic_wavenumber_measure(2, 0.01)) ==
          doctest::Approx(31415.926535897932).epsilon(1e-14));
    CHECK(nyquist_density_nlos(0.0) == 0.0);
    CHECK_THROWS_AS(nyquist_density_nlos(-1.0), invalid_parameter_error);
    CHECK_THROWS_AS(isotropic_wavenumber_measure(3, 0.01), invalid_parameter_error);
}

TEST_CASE("LOS Nyquist density and its range inversion") {
    const Link link = ula_link(0.001, 2.0);  // m(S) = 0.2
    CHECK(nyquist_density_los(link) == doctest::Approx(100.0).epsilon(1e-14));

    // doubling the range halves the 1-D density
    const Link twice = ula_link(0.001, 4.0);
    CHECK(nyquist_density_los(twice) ==
          doctest::Approx(0.5 * nyquist_density_los(link)).epsilon(1e-14));

    // demanding half-wavelength sampling forces D = L_s / 2
    const double ls = 0.2, lambda = 0.001;
    const double demanded = 2.0 / lambda;
    CHECK(los_range_for_density(ls, lambda, demanded, 1) ==
          doctest::Approx(ls / 2.0).epsilon(1e-14));
    // and the returned range indeed reproduces the demanded density
    const Link solved = ula_link(lambda, ls / 2.0);
    CHECK(nyquist_density_los(solved) == doctest::Approx(demanded).epsilon(1e-14));
}

TEST_CASE("LOS density times receive measure is the closed-form DOF") {
    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> len(0.05, 0.5);
    std::uniform_real_distribution<double> dist(0.5, 20.0);
    std::uniform_real_distribution<double> wl(1e-4, 5e-3);
    for (int trial = 0; trial < 100; ++trial) {
        const Link link = Link::from_wavelength(wl(rng), dist(rng),
                                                ArrayAperture::interval(len(rng)),
                                                ArrayAperture::interval(len(rng)));
        // bitwise: the closed form is computed through this product
        CHECK(nyquist_density_los(link) * measure(link.receive) == dof_los_paraxial(link));
    }
}

TEST_CASE("Rayleigh and alias-free spacing products") {
    const Link link = ula_link(0.001, 2.0);
    CHECK(rayleigh_spacing_product(link, 20) == doctest::Approx(1e-4).epsilon(1e-14));
    CHECK(alias_free_spacing_product(link, 2) ==
          doctest::Approx(0.001 * 2.0).epsilon(1e-14));
    CHECK(rayleigh_spacing_product(link, 2) ==
          doctest::Approx(0.001 * 2.0 / 2.0).epsilon(1e-14));

    // ratio of the two forms tends to one as arrays grow
    double previous_ratio = 2.5;
    for (int n_max : {2, 4, 16, 64, 1024}) {
        const double ratio = alias_free_spacing_product(link, n_max) /
                             rayleigh_spacing_product(link, n_max);
        CHECK(ratio == doctest::Approx(n_max / (n_max - 1.0)).epsilon(1e-13));
        CHECK(ratio < previous_ratio);
        previous_ratio = ratio;
    }

    CHECK_THROWS_AS(rayleigh_spacing_product(link, 0), invalid_parameter_error);
    CHECK_THROWS_AS(alias_free_spacing_product(link, 1), invalid_parameter_error);
}

TEST_CASE("spacing plan depends only on the larger antenna count") {
    const Link link = ula_link(0.001, 2.0);
    const SpacingPlan a = symmetric_spacing_plan(link, 8, 16);
    const SpacingPlan b = symmetric_spacing_plan(link, 16, 8);
    CHECK(a.n_max() == 16);
    CHECK(a.delta_s == b.delta_s);
    CHECK(a.delta_s == doctest::Approx(std::sqrt(0.001 * 2.0 / 16.0)).epsilon(1e-14));
    CHECK(rayleigh_spacing_product(link, a.n_max()) ==
          rayleigh_spacing_product(link, b.n_max()));
}

TEST_CASE("Rayleigh-spaced arrays attain full DOF") {
    // 16 antennas per side at the full-DOF spacing, 300 GHz scale
    const double lambda = 0.0009993081933333333, distance = 2.0;
    const int n_max = 16;
    const double spacing = std::sqrt(lambda * distance / n_max);
    const double length = (n_max - 1) * spacing;
    const Link link = ula_link(lambda, distance, length);
    const SampledGrid grid = sample_grid(link.source, {n_max});
    CHECK(grid.spacing[0] == doctest::Approx(spacing).epsilon(1e-12));

    const ChannelMatrix h =
        build_channel_matrix(link, grid, grid, KernelKind::ParaxialFresnel);
    const int count = empirical_dof(eigen_spectrum(h), 0.5);
    CHECK(count >= n_max - 2);
    CHECK(count <= n_max);
}

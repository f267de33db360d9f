#ifndef LOSDOF_SAMPLING_HPP
#define LOSDOF_SAMPLING_HPP

#include "losdof/kernels.hpp"

namespace losdof {

/// Uniform antenna spacing design for a 1-D LOS link.
struct SpacingPlan {
    double delta_s = 0.0;  // m/sample at the source
    double delta_r = 0.0;  // m/sample at the receiver
    int n_s = 0;
    int n_r = 0;

    int n_max() const { return n_s > n_r ? n_s : n_r; }
};

/// NLOS Nyquist density at the receiver equals the wavenumber-support
/// measure m(K_r) directly (samples/m^n).
double nyquist_density_nlos(double wavenumber_support_measure);

/// Wavenumber-support measure of isotropic scattering: 2/lambda for n=1
/// (half-wavelength sampling), pi/lambda^2 for n=2 (hexagonal density).
double isotropic_wavenumber_measure(int n, double wavelength);

enum class LinkEnd { Receive, Source };

/// LOS Nyquist density: m(S)/(lambda D)^n at the receiver; the source-side
/// density swaps the apertures by reciprocity.
double nyquist_density_los(const Link& link, LinkEnd end = LinkEnd::Receive);

/// Range at which a 1-D or 2-D LOS link hits a target receive-side
/// sampling density, inverting the density formula for D.
double los_range_for_density(double source_measure, double wavelength,
                             double density, int n);

/// Rayleigh spacing product d_s * d_r = lambda D / N_max (full-DOF
/// spacing). Requires n_max >= 1.
double rayleigh_spacing_product(const Link& link, int n_max);

/// Anti-aliasing spacing product delta_s * delta_r = lambda D / (N_max - 1).
/// Requires n_max >= 2. Coincides with the Rayleigh form as N_max grows.
double alias_free_spacing_product(const Link& link, int n_max);

/// Symmetric-split spacing plan sqrt(product) at both ends, a reporting
/// convention: the theory fixes only the product.
SpacingPlan symmetric_spacing_plan(const Link& link, int n_s, int n_r);

} // namespace losdof

#endif

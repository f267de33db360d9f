#include "losdof/sampling.hpp"

#include <cmath>
#include <numbers>

#include "losdof/errors.hpp"

namespace losdof {

namespace {

double lambda_d_pow(const Link& link) {
    const double ld = link.wavelength * link.distance;
    return link.dimension() == 1 ? ld : ld * ld;
}

} // namespace

double nyquist_density_nlos(double wavenumber_support_measure) {
    if (wavenumber_support_measure < 0.0)
        throw invalid_parameter_error("wavenumber support measure must be nonnegative");
    return wavenumber_support_measure;
}

double isotropic_wavenumber_measure(int n, double wavelength) {
    if (!(wavelength > 0.0))
        throw invalid_parameter_error("wavelength must be positive");
    if (n == 1)
        return 2.0 / wavelength;
    if (n == 2)
        return std::numbers::pi / (wavelength * wavelength);
    throw invalid_parameter_error("dimension must be 1 or 2");
}

double nyquist_density_los(const Link& link, LinkEnd end) {
    link.validate();
    const double m = measure(end == LinkEnd::Receive ? link.source : link.receive);
    return m / lambda_d_pow(link);
}

double los_range_for_density(double source_measure, double wavelength,
                             double density, int n) {
    if (!(source_measure > 0.0) || !(wavelength > 0.0) || !(density > 0.0))
        throw invalid_parameter_error("measure, wavelength, and density must be positive");
    if (n == 1)
        return source_measure / (wavelength * density);
    if (n == 2)
        return std::sqrt(source_measure / density) / wavelength;
    throw invalid_parameter_error("dimension must be 1 or 2");
}

double rayleigh_spacing_product(const Link& link, int n_max) {
    link.validate();
    if (n_max < 1)
        throw invalid_parameter_error("n_max must be at least 1");
    return link.wavelength * link.distance / n_max;
}

double alias_free_spacing_product(const Link& link, int n_max) {
    link.validate();
    if (n_max < 2)
        throw invalid_parameter_error("the alias-free form needs n_max >= 2");
    return link.wavelength * link.distance / (n_max - 1);
}

SpacingPlan symmetric_spacing_plan(const Link& link, int n_s, int n_r) {
    const int n_max = n_s > n_r ? n_s : n_r;
    const double spacing = std::sqrt(rayleigh_spacing_product(link, n_max));
    SpacingPlan plan;
    plan.delta_s = spacing;
    plan.delta_r = spacing;
    plan.n_s = n_s;
    plan.n_r = n_r;
    return plan;
}

} // namespace losdof

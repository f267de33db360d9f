#include "losdof/landau.hpp"

#include <cmath>
#include <numbers>

#include "losdof/errors.hpp"
#include "losdof/sampling.hpp"

namespace losdof {

using std::numbers::pi;

double dof_los_paraxial(const Link& link) {
    link.validate();
    // density-times-measure form, bitwise consistent with the sampling module
    return nyquist_density_los(link, LinkEnd::Receive) * measure(link.receive);
}

double los_concentration_scale_log(const Link& link) {
    return -link.dimension() * std::log(link.wavelength * link.distance);
}

DofEstimate estimate_dof(const Link& link, const Spectrum& spectrum, double sigma) {
    DofEstimate est;
    est.closed_form = dof_los_paraxial(link);
    est.sigma = sigma;
    est.empirical = empirical_dof(spectrum, sigma);
    est.landau_corrected =
        landau_dof_sigma(est.closed_form, sigma, los_concentration_scale_log(link));
    return est;
}

double dof_nlos_general(double m_k_receive, double m_c_receive,
                        double m_k_source, double m_c_source) {
    if (m_k_receive < 0.0 || m_c_receive < 0.0 || m_k_source < 0.0 || m_c_source < 0.0)
        throw invalid_parameter_error("measures must be nonnegative");
    return std::min(m_k_receive * m_c_receive, m_k_source * m_c_source);
}

double dof_nlos_isotropic_1d(double source_length, double receive_length,
                             double wavelength) {
    if (!(source_length > 0.0) || !(receive_length > 0.0) || !(wavelength > 0.0))
        throw invalid_parameter_error("lengths and wavelength must be positive");
    const double m_k = isotropic_wavenumber_measure(1, wavelength);
    return dof_nlos_general(m_k, receive_length, m_k, source_length);
}

double landau_dof_sigma(double dof, double sigma, double scale_log) {
    if (!(sigma > 0.0) || !(sigma < 1.0))
        throw invalid_parameter_error("sigma must lie in (0,1)");
    return dof + landau_slope_constant(sigma) * scale_log;
}

double landau_slope_constant(double sigma) {
    return std::log((1.0 - sigma) / sigma) / (pi * pi);
}

void ConcentrationSpec::validate() const {
    if (!(observation_time > 0.0))
        throw invalid_parameter_error("observation time must be positive");
    if (!(bandwidth > 0.0))
        throw invalid_parameter_error("bandwidth must be positive");
    const int min_points = 8 * static_cast<int>(std::ceil(time_bandwidth()));
    if (grid_points < min_points)
        throw invalid_parameter_error("grid must hold at least 8*ceil(2BT) points");
}

int concentration_grid_points(double bandwidth, double observation_time) {
    const int resolved = 16 * static_cast<int>(std::ceil(2.0 * bandwidth * observation_time));
    return std::max(512, resolved);
}

Spectrum concentration_eigs(const ConcentrationSpec& spec) {
    spec.validate();
    const int n = spec.grid_points;
    const double dt = spec.observation_time / (n - 1);
    const double two_b = 2.0 * spec.bandwidth;

    // K(t,t') = 2B sinc(2B (t-t')); entries depend on the index gap only
    Eigen::VectorXd row(n);
    for (int d = 0; d < n; ++d) {
        const double x = two_b * d * dt;
        row[d] = (d == 0 ? two_b : two_b * std::sin(pi * x) / (pi * x)) * dt;
    }
    Eigen::MatrixXd kernel(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            kernel(i, j) = row[std::abs(i - j)];

    Spectrum spec_out = eigen_spectrum_symmetric(kernel, NormalizerRule::RawValue);
    // projection-product spectrum lives in [0,1]; allow eigensolver noise above
    for (Eigen::Index i = 0; i < spec_out.eigenvalues.size(); ++i) {
        if (spec_out.eigenvalues[i] > 1.0 + 1e-6)
            throw numerical_failure_error("concentration eigenvalue above the unit bound");
        spec_out.eigenvalues[i] = std::clamp(spec_out.eigenvalues[i], 0.0, 1.0 + 1e-6);
    }
    return spec_out;
}

ParaxialRatios paraxial_ratios(const Link& link) {
    link.validate();
    const int n = link.dimension();
    const Eigen::VectorXd source_spans = offset_augmented_spans(link.source);
    const Eigen::VectorXd receive_spans = offset_augmented_spans(link.receive);

    double product = 1.0;  // prod_i L_s,i/lambda * prod_i L_r,i/lambda
    double max_span = 0.0;
    for (int i = 0; i < n; ++i) {
        product *= (source_spans[i] / link.wavelength) * (receive_spans[i] / link.wavelength);
        max_span = std::max({max_span, source_spans[i], receive_spans[i]});
    }
    const double g = n == 1 ? product : std::sqrt(product);
    const double electric_distance = link.distance / link.wavelength;

    ParaxialRatios ratios;
    ratios.concentration = g / electric_distance;
    ratios.paraxial = electric_distance / (max_span / link.wavelength);
    return ratios;
}

double paraxial_margin(const Link& link, double concentration_factor) {
    const ParaxialRatios ratios = paraxial_ratios(link);
    return std::min(ratios.concentration, ratios.paraxial) - concentration_factor;
}

double regression_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw invalid_parameter_error("regression needs two or more paired samples");
    const double n = static_cast<double>(x.size());
    double mean_x = 0.0, mean_y = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        mean_x += x[i];
        mean_y += y[i];
    }
    mean_x /= n;
    mean_y /= n;
    double cov = 0.0, var = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        cov += (x[i] - mean_x) * (y[i] - mean_y);
        var += (x[i] - mean_x) * (x[i] - mean_x);
    }
    if (var == 0.0)
        throw invalid_parameter_error("regression abscissae are all equal");
    return cov / var;
}

} // namespace losdof

#include "losdof/kernels.hpp"

#include <cmath>
#include <numbers>

#include "losdof/errors.hpp"

namespace losdof {

using std::numbers::pi;
using cd = std::complex<double>;

Link Link::from_wavelength(double wavelength, double distance,
                           ArrayAperture source, ArrayAperture receive) {
    Link link;
    link.wavelength = wavelength;
    link.distance = distance;
    link.source = std::move(source);
    link.receive = std::move(receive);
    link.validate();
    return link;
}

Link Link::from_frequency(double frequency_hz, double distance,
                          ArrayAperture source, ArrayAperture receive) {
    if (!(frequency_hz > 0.0))
        throw invalid_parameter_error("frequency must be positive");
    return from_wavelength(kSpeedOfLight / frequency_hz, distance,
                           std::move(source), std::move(receive));
}

void Link::validate() const {
    if (!(wavelength > 0.0))
        throw invalid_parameter_error("wavelength must be positive");
    if (!(distance > 0.0))
        throw invalid_parameter_error("link distance must be positive");
    if (!(impedance > 0.0))
        throw invalid_parameter_error("impedance must be positive");
    source.validate();
    receive.validate();
    if (source.n != receive.n)
        throw dimension_mismatch_error("source and receive apertures must share dimension");
}

std::complex<double> kappa_z(double k_norm, double wavelength) {
    if (!(wavelength > 0.0))
        throw invalid_parameter_error("wavelength must be positive");
    k_norm = std::abs(k_norm);
    const double inv_lambda = 1.0 / wavelength;
    if (k_norm <= inv_lambda)
        return cd(std::sqrt((inv_lambda - k_norm) * (inv_lambda + k_norm)), 0.0);
    return cd(0.0, std::sqrt((k_norm - inv_lambda) * (k_norm + inv_lambda)));
}

std::complex<double> kappa_z(const Eigen::VectorXd& k, double wavelength) {
    return kappa_z(k.norm(), wavelength);
}

WaveVector WaveVector::from_transverse(const Eigen::VectorXd& k, double wavelength) {
    return WaveVector{k, kappa_z(k, wavelength)};
}

const char* kernel_kind_name(KernelKind kind) {
    switch (kind) {
        case KernelKind::ExactGreen: return "exact";
        case KernelKind::ParaxialFresnel: return "fresnel";
        case KernelKind::ReducedFourier: return "fourier";
    }
    return "unknown";
}

KernelKind kernel_kind_from_name(const std::string& name) {
    if (name == "exact" || name == "green") return KernelKind::ExactGreen;
    if (name == "fresnel" || name == "paraxial") return KernelKind::ParaxialFresnel;
    if (name == "fourier" || name == "reduced") return KernelKind::ReducedFourier;
    throw invalid_parameter_error("unknown kernel kind: " + name);
}

bool is_paraxial(KernelKind kind) {
    return kind == KernelKind::ParaxialFresnel || kind == KernelKind::ReducedFourier;
}

// All kernels follow the convention of the paraxial reduction chain, where
// propagation over D carries the phase exp(-i 2 pi D / lambda). The exact
// and paraxial variants then share their quadratic phase sign and stay
// comparable under the agreement metric.
std::complex<double> green_kernel(const Eigen::VectorXd& r, const Eigen::VectorXd& s,
                                  const Link& link) {
    const double transverse2 = (r - s).squaredNorm();
    const double separation = std::sqrt(transverse2 + link.distance * link.distance);
    if (separation == 0.0)
        throw singular_kernel_error("coincident source and receive points");
    const double phase = -2.0 * pi * separation / link.wavelength;
    return std::polar(1.0 / (4.0 * pi * separation), phase);
}

std::complex<double> fresnel_kernel(const Eigen::VectorXd& r, const Eigen::VectorXd& s,
                                    const Link& link) {
    const double phase = -pi * (r - s).squaredNorm() / (link.wavelength * link.distance);
    return std::polar(1.0, phase);
}

std::complex<double> compensate_phases(std::complex<double> value,
                                       const Eigen::VectorXd& r, const Eigen::VectorXd& s,
                                       const Link& link) {
    const double inv_ld = 1.0 / (link.wavelength * link.distance);
    const cd phi_r = std::polar(1.0, -pi * r.squaredNorm() * inv_ld);
    const cd phi_s = std::polar(1.0, -pi * s.squaredNorm() * inv_ld);
    return value / (phi_r * phi_s);
}

std::complex<double> fourier_kernel(const Eigen::VectorXd& r, const Eigen::VectorXd& s,
                                    const Link& link) {
    const double phase = 2.0 * pi * s.dot(r) / (link.wavelength * link.distance);
    return std::polar(1.0, phase);
}

std::complex<double> evaluate_kernel(KernelKind kind, const Eigen::VectorXd& r,
                                     const Eigen::VectorXd& s, const Link& link) {
    switch (kind) {
        case KernelKind::ExactGreen: return green_kernel(r, s, link);
        case KernelKind::ParaxialFresnel: return fresnel_kernel(r, s, link);
        case KernelKind::ReducedFourier: return fourier_kernel(r, s, link);
    }
    throw invalid_parameter_error("unknown kernel kind");
}

std::complex<double> dropped_prefactor(KernelKind kind, const Link& link) {
    const double lambda = link.wavelength;
    if (kind == KernelKind::ExactGreen) {
        // h = -i 2 pi eta / lambda * G
        return cd(0.0, -2.0 * pi * link.impedance / lambda);
    }
    // eta/(2 lambda) e^{-i 2 pi D/lambda} times the Gaussian-integral
    // constant (e^{i pi/4}/sqrt(lambda D)) per axis
    const double ld = lambda * link.distance;
    cd axis = std::polar(1.0 / std::sqrt(ld), pi / 4.0);
    cd c = std::polar(link.impedance / (2.0 * lambda), -2.0 * pi * link.distance / lambda);
    for (int i = 0; i < link.dimension(); ++i)
        c *= axis;
    return c;
}

double kernel_agreement(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw dimension_mismatch_error("agreement requires equal matrix dimensions");
    const double na = a.norm();
    const double nb = b.norm();
    if (na == 0.0 || nb == 0.0)
        throw undefined_agreement_error("agreement undefined for a zero matrix");
    const cd inner = (a.array().conjugate() * b.array()).sum();
    return std::abs(inner) / (na * nb);
}

} // namespace losdof

#ifndef LOSDOF_KERNELS_HPP
#define LOSDOF_KERNELS_HPP

#include <complex>
#include <string>

#include <Eigen/Dense>

#include "losdof/geometry.hpp"

namespace losdof {

inline constexpr double kSpeedOfLight = 299792458.0;       // m/s
inline constexpr double kFreeSpaceImpedance = 376.730;     // ohm

/// A point-to-point LOS scenario: two apertures facing each other across a
/// centroid distance D along the z-axis.
struct Link {
    double wavelength = 0.0;  // m
    double distance = 0.0;    // centroid-to-centroid along z [m]
    ArrayAperture source;
    ArrayAperture receive;
    double impedance = kFreeSpaceImpedance;  // ohm

    static Link from_wavelength(double wavelength, double distance,
                                ArrayAperture source, ArrayAperture receive);
    static Link from_frequency(double frequency_hz, double distance,
                               ArrayAperture source, ArrayAperture receive);

    int dimension() const { return source.n; }
    void validate() const;
};

/// Axial spatial frequency for a transverse wave vector k (in 1/m):
/// real for propagating waves (|k| <= 1/lambda), +i * real for evanescent
/// ones, zero exactly at the cutoff.
std::complex<double> kappa_z(const Eigen::VectorXd& k, double wavelength);
std::complex<double> kappa_z(double k_norm, double wavelength);

/// A plane-wave direction: transverse spatial frequency plus the derived
/// axial component, tied by |k|^2 + kappa_z^2 = 1/lambda^2.
struct WaveVector {
    Eigen::VectorXd transverse;      // 1/m
    std::complex<double> axial;      // kappa_z, 1/m

    static WaveVector from_transverse(const Eigen::VectorXd& k, double wavelength);
    bool propagating() const { return axial.imag() == 0.0; }
    /// sin of the angle with the z-axis, lambda * |k|; exceeds 1 in the
    /// evanescent region.
    double sin_angle(double wavelength) const { return wavelength * transverse.norm(); }
};

enum class KernelKind { ExactGreen, ParaxialFresnel, ReducedFourier };

const char* kernel_kind_name(KernelKind kind);
KernelKind kernel_kind_from_name(const std::string& name);
bool is_paraxial(KernelKind kind);

/// Scalar free-space Green's function between source point s and receive
/// point r separated axially by the link distance. Magnitude is exactly
/// 1/(4*pi*separation). The -i*2*pi*eta/lambda prefactor that turns G into
/// the channel kernel h is tracked as matrix metadata, not multiplied in.
std::complex<double> green_kernel(const Eigen::VectorXd& r, const Eigen::VectorXd& s,
                                  const Link& link);

/// Paraxial (Fresnel) kernel: unit magnitude, quadratic phase
/// -pi*|r-s|^2/(lambda*D). Constant factors are omitted.
std::complex<double> fresnel_kernel(const Eigen::VectorXd& r, const Eigen::VectorXd& s,
                                    const Link& link);

/// Divides the separable quadratic phases phi(r)*phi(s) out of a Fresnel
/// kernel value, leaving the reduced Fourier kernel.
std::complex<double> compensate_phases(std::complex<double> value,
                                       const Eigen::VectorXd& r, const Eigen::VectorXd& s,
                                       const Link& link);

/// Reduced Fourier kernel exp(i*2*pi*s.r/(lambda*D)); identical to
/// compensate_phases(fresnel_kernel(r,s), r, s).
std::complex<double> fourier_kernel(const Eigen::VectorXd& r, const Eigen::VectorXd& s,
                                    const Link& link);

std::complex<double> evaluate_kernel(KernelKind kind, const Eigen::VectorXd& r,
                                     const Eigen::VectorXd& s, const Link& link);

/// Constant prefactor excluded from matrix entries for the given kernel
/// kind, recorded as metadata on channel matrices.
std::complex<double> dropped_prefactor(KernelKind kind, const Link& link);

/// Global-phase-invariant normalized Frobenius inner product,
/// |<A,B>_F| / (|A|_F * |B|_F), in [0,1]. Quantifies how well two kernel
/// variants agree on the same grids.
double kernel_agreement(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

} // namespace losdof

#endif

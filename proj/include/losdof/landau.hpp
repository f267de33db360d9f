#ifndef LOSDOF_LANDAU_HPP
#define LOSDOF_LANDAU_HPP

#include "losdof/kernels.hpp"
#include "losdof/spectra.hpp"

namespace losdof {

/// Closed-form DOF of a paraxial LOS link: m(S) m(R) / (lambda D)^n.
double dof_los_paraxial(const Link& link);

/// DOF summary at one accuracy level: the closed form, the threshold count
/// from a computed spectrum, and the second-order corrected prediction.
struct DofEstimate {
    double closed_form = 0.0;
    double sigma = 0.5;
    int empirical = 0;
    double landau_corrected = 0.0;  // equals closed_form at sigma = 1/2
};

/// Assembles a DofEstimate for a link and its computed spectrum; the
/// correction scale is ln det(A) of the Fourier-route receive transform,
/// -n ln(lambda D).
DofEstimate estimate_dof(const Link& link, const Spectrum& spectrum, double sigma);

/// ln det(A) for the LOS concentration transform A = I/(lambda D).
double los_concentration_scale_log(const Link& link);

/// General NLOS DOF: min of wavenumber-support measure times aperture
/// measure at each link end.
double dof_nlos_general(double m_k_receive, double m_c_receive,
                        double m_k_source, double m_c_source);

/// 1-D isotropic-scattering NLOS DOF, min(2 Ls / lambda, 2 Lr / lambda).
/// Computed through dof_nlos_general so the reduction is an identity.
double dof_nlos_isotropic_1d(double source_length, double receive_length,
                             double wavelength);

/// Landau second-order DOF_sigma: dof + (1/pi^2) ln((1-sigma)/sigma) *
/// scale_log, with scale_log = ln T for waveforms or ln det(A) for fields.
/// Natural logarithms throughout; the o(.) remainder is excluded.
double landau_dof_sigma(double dof, double sigma, double scale_log);

/// One-dimensional time/band concentration setup: time-limiting to T/2 and
/// band-limiting to B, discretized on an N-point uniform grid.
struct ConcentrationSpec {
    double observation_time = 0.0;  // T [s]
    double bandwidth = 0.0;         // one-sided B [Hz]
    int grid_points = 0;            // N

    double time_bandwidth() const { return 2.0 * bandwidth * observation_time; }
    void validate() const;  // T > 0, B > 0, N >= 8 * ceil(2BT)
};

/// Grid size heuristic that keeps the plunge region resolved:
/// max(512, 16 * ceil(2BT)).
int concentration_grid_points(double bandwidth, double observation_time);

/// Eigenvalues of the Nystrom discretization of the time/band
/// concentration operator with kernel 2B sinc(2B(t-t')) on the endpoint
/// grid over [-T/2, T/2], entries weighted by dt = T/(N-1). Eigenvalues
/// are clamped to [0, 1 + 1e-6] and returned descending, unnormalized.
Spectrum concentration_eigs(const ConcentrationSpec& spec);

/// Validity margin of the paraxial DOF theory for a link: positive when
/// both the spectral-concentration and the paraxial inequality hold with
/// the given slack factor. The concentration side compares the geometric
/// mean of the electric aperture products against D/lambda; the paraxial
/// side compares D/lambda against the largest electric aperture span.
/// Offset-augmented spans are used so off-axis apertures tighten the check.
double paraxial_margin(const Link& link, double concentration_factor = 1.0);

/// The two Eq-ratio building blocks of the margin, for reporting.
struct ParaxialRatios {
    double concentration;  // g / (D/lambda)
    double paraxial;       // (D/lambda) / max_i(L_i/lambda)
};
ParaxialRatios paraxial_ratios(const Link& link);

/// Simple least-squares slope of y against x.
double regression_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Slope constant of the Landau plunge at accuracy sigma,
/// (1/pi^2) ln((1-sigma)/sigma).
double landau_slope_constant(double sigma);

} // namespace losdof

#endif

#ifndef LOSDOF_SPECTRA_HPP
#define LOSDOF_SPECTRA_HPP

#include <complex>

#include <Eigen/Dense>

#include "losdof/geometry.hpp"
#include "losdof/kernels.hpp"

namespace losdof {

/// Dense complex channel matrix sampled from a kernel: entry (i,j) is the
/// kernel at (receive point i, source point j), rows/cols ordered
/// lexicographically over the grid axes.
struct ChannelMatrix {
    Eigen::MatrixXcd entries;  // N_r x N_s
    KernelKind kind = KernelKind::ExactGreen;
    Link link;
    SampledGrid source_grid;
    SampledGrid receive_grid;
    std::complex<double> prefactor;  // dropped constant, metadata only

    Eigen::Index rows() const { return entries.rows(); }
    Eigen::Index cols() const { return entries.cols(); }
};

/// Builds the channel matrix for a link on the given grids. Paraxial kernel
/// kinds require a nonnegative paraxial margin unless enforce_paraxial is
/// cleared; violations raise paraxial_violation_error carrying the margin.
ChannelMatrix build_channel_matrix(const Link& link, const SampledGrid& source_grid,
                                   const SampledGrid& receive_grid, KernelKind kind,
                                   bool enforce_paraxial = true);

double kernel_agreement(const ChannelMatrix& a, const ChannelMatrix& b);

/// Complex field samples on grid positions.
struct SampledField {
    std::vector<Eigen::VectorXd> points;
    Eigen::VectorXcd values;
};

/// Discrete image of a source density: e = H j scaled by the per-sample
/// quadrature weight (product of source spacings), approximating the
/// integral over the source aperture.
SampledField apply_channel(const ChannelMatrix& h, const SampledField& j,
                           double quadrature_weight);

enum class NormalizerRule { MaxEig, RawValue };

/// Descending real eigenvalues of H H^* plus the constant used to
/// normalize them for reporting (lambda_max under MaxEig, 1 otherwise).
struct Spectrum {
    Eigen::VectorXd eigenvalues;  // descending, tiny negatives clamped to 0
    double normalizer = 1.0;

    Eigen::VectorXd normalized() const { return eigenvalues / normalizer; }
    Eigen::Index size() const { return eigenvalues.size(); }
};

/// Eigen-spectrum of the Hermitian product H H^*, symmetrized before
/// decomposition so the solver sees an exactly self-adjoint matrix.
Spectrum eigen_spectrum(const Eigen::MatrixXcd& h,
                        NormalizerRule rule = NormalizerRule::MaxEig);
Spectrum eigen_spectrum(const ChannelMatrix& h,
                        NormalizerRule rule = NormalizerRule::MaxEig);

/// Spectrum of an already-Hermitian real matrix (concentration operators).
Spectrum eigen_spectrum_symmetric(const Eigen::MatrixXd& m,
                                  NormalizerRule rule = NormalizerRule::RawValue);

/// Number of normalized eigenvalues strictly greater than sigma,
/// sigma in (0,1). Monotone nonincreasing in sigma.
int empirical_dof(const Spectrum& spectrum, double sigma);

/// Real-valued index at which the normalized spectrum crosses sigma,
/// interpolated in the logit domain log(x/(1-x)) where the Landau plunge
/// is linear in the index. Returns empirical_dof's integer count when the
/// crossing is not bracketed (all above or all below sigma).
double plunge_crossing(const Spectrum& spectrum, double sigma);

/// Eigenvalue count in the open plunge band (lo, hi], i.e. count above lo
/// minus count above hi. With lo = 0.1, hi = 0.9 this is the plunge width.
int plunge_width(const Spectrum& spectrum, double lo = 0.1, double hi = 0.9);

} // namespace losdof

#endif

#include "losdof/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "losdof/errors.hpp"
#include "losdof/landau.hpp"

namespace losdof {

namespace {

// Grid points must lie inside the axis-aligned bounding box of their own
// aperture (offset-centered), with a little float slack.
void check_grid_in_aperture(const SampledGrid& grid, const char* which) {
    const Eigen::VectorXd half = axis_spans(grid.aperture) * 0.5;
    for (const auto& p : grid.points)
        for (int i = 0; i < grid.aperture.n; ++i)
            if (std::abs(p[i] - grid.aperture.centroid_offset[i]) > half[i] * (1.0 + 1e-9))
                throw invalid_geometry_error(std::string(which) +
                                             " grid extends outside its aperture");
}

Spectrum spectrum_from_eigenvalues(Eigen::VectorXd descending, NormalizerRule rule) {
    const double max_eig = descending.size() > 0 ? descending[0] : 0.0;
    if (!(max_eig > 0.0))
        throw invalid_parameter_error("spectrum of a zero matrix is degenerate");
    // tiny negative values are eigensolver noise
    const double floor = -1e-10 * max_eig;
    for (Eigen::Index i = 0; i < descending.size(); ++i) {
        if (descending[i] < floor) {
            std::ostringstream msg;
            msg << "eigenvalue " << descending[i] << " below the PSD noise floor";
            throw numerical_failure_error(msg.str());
        }
        if (descending[i] < 0.0) descending[i] = 0.0;
    }
    Spectrum spec;
    spec.eigenvalues = std::move(descending);
    spec.normalizer = rule == NormalizerRule::MaxEig ? max_eig : 1.0;
    return spec;
}

} // namespace

ChannelMatrix build_channel_matrix(const Link& link, const SampledGrid& source_grid,
                                   const SampledGrid& receive_grid, KernelKind kind,
                                   bool enforce_paraxial) {
    link.validate();
    if (source_grid.aperture.n != link.dimension() ||
        receive_grid.aperture.n != link.dimension())
        throw dimension_mismatch_error("grid dimension does not match the link");
    check_grid_in_aperture(source_grid, "source");
    check_grid_in_aperture(receive_grid, "receive");
    if (source_grid.total() < 1 || receive_grid.total() < 1)
        throw invalid_sampling_error("empty grid");
    const double entry_count =
        static_cast<double>(source_grid.total()) * receive_grid.total();
    if (entry_count > 5e7)
        throw invalid_sampling_error("channel matrix would exceed 5e7 entries; reduce counts");

    if (is_paraxial(kind) && enforce_paraxial) {
        const double margin = paraxial_margin(link);
        if (margin < 0.0) {
            std::ostringstream msg;
            msg << "paraxial kernel requested outside validity (margin " << margin << ")";
            throw paraxial_violation_error(msg.str(), margin);
        }
    }

    ChannelMatrix h;
    h.kind = kind;
    h.link = link;
    h.source_grid = source_grid;
    h.receive_grid = receive_grid;
    h.prefactor = dropped_prefactor(kind, link);
    h.entries.resize(receive_grid.total(), source_grid.total());
    for (int i = 0; i < receive_grid.total(); ++i)
        for (int j = 0; j < source_grid.total(); ++j)
            h.entries(i, j) = evaluate_kernel(kind, receive_grid.points[i],
                                              source_grid.points[j], link);
    if (!h.entries.allFinite())
        throw numerical_failure_error("channel matrix contains non-finite entries");
    return h;
}

double kernel_agreement(const ChannelMatrix& a, const ChannelMatrix& b) {
    return kernel_agreement(a.entries, b.entries);
}

SampledField apply_channel(const ChannelMatrix& h, const SampledField& j,
                           double quadrature_weight) {
    if (j.values.size() != h.cols())
        throw dimension_mismatch_error("source field does not match the source grid");
    SampledField e;
    e.points = h.receive_grid.points;
    e.values = (h.entries * j.values) * quadrature_weight;
    return e;
}

Spectrum eigen_spectrum(const Eigen::MatrixXcd& h, NormalizerRule rule) {
    Eigen::MatrixXcd gram = h * h.adjoint();
    // purge float asymmetry so the solver sees an exactly Hermitian matrix
    gram = 0.5 * (gram + gram.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw numerical_failure_error("Hermitian eigensolver did not converge");
    return spectrum_from_eigenvalues(solver.eigenvalues().reverse(), rule);
}

Spectrum eigen_spectrum(const ChannelMatrix& h, NormalizerRule rule) {
    return eigen_spectrum(h.entries, rule);
}

Spectrum eigen_spectrum_symmetric(const Eigen::MatrixXd& m, NormalizerRule rule) {
    const Eigen::MatrixXd sym = 0.5 * (m + m.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw numerical_failure_error("symmetric eigensolver did not converge");
    return spectrum_from_eigenvalues(solver.eigenvalues().reverse(), rule);
}

int empirical_dof(const Spectrum& spectrum, double sigma) {
    if (!(sigma > 0.0) || !(sigma < 1.0))
        throw invalid_parameter_error("sigma must lie in (0,1)");
    const Eigen::VectorXd normalized = spectrum.normalized();
    int count = 0;
    for (Eigen::Index i = 0; i < normalized.size(); ++i)
        if (normalized[i] > sigma) ++count;
    return count;
}

double plunge_crossing(const Spectrum& spectrum, double sigma) {
    if (!(sigma > 0.0) || !(sigma < 1.0))
        throw invalid_parameter_error("sigma must lie in (0,1)");
    const Eigen::VectorXd normalized = spectrum.normalized();
    const int count = empirical_dof(spectrum, sigma);
    if (count == 0 || count == normalized.size())
        return static_cast<double>(count);

    auto logit = [](double x) {
        x = std::clamp(x, 1e-300, 1.0 - 1e-16);
        return std::log(x / (1.0 - x));
    };
    // eigenvalues[count-1] > sigma >= eigenvalues[count]
    const double hi = logit(normalized[count - 1]);
    const double lo = logit(normalized[count]);
    const double target = logit(sigma);
    if (!(hi > lo))
        return static_cast<double>(count);
    return count + (hi - target) / (hi - lo);
}

int plunge_width(const Spectrum& spectrum, double lo, double hi) {
    return empirical_dof(spectrum, lo) - empirical_dof(spectrum, hi);
}

} // namespace losdof

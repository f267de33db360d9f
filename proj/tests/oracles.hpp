// Test-only reference computations. Each oracle reaches the expected value
// through a route the library does not use, so agreement is evidence, not
// tautology.
#ifndef LOSDOF_TEST_ORACLES_HPP
#define LOSDOF_TEST_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracles {

/// Eigenvalues of a 2x2 Hermitian matrix from the quadratic formula on its
/// characteristic polynomial, descending.
inline std::vector<double> charpoly_eigs_2x2(const Eigen::Matrix2cd& g) {
    const double tr = g.trace().real();
    const double det = g.determinant().real();
    const double disc = std::sqrt(std::max(tr * tr / 4.0 - det, 0.0));
    return {tr / 2.0 + disc, tr / 2.0 - disc};
}

/// Eigenvalues of a 3x3 Hermitian matrix via the trigonometric solution of
/// the depressed characteristic cubic, descending.
inline std::vector<double> charpoly_eigs_3x3(const Eigen::Matrix3cd& g) {
    using std::numbers::pi;
    const double c2 = g.trace().real();
    const double c1 = 0.5 * (c2 * c2 - (g * g).trace().real());
    const double c0 = g.determinant().real();
    const double p = c1 - c2 * c2 / 3.0;
    const double q = -2.0 * c2 * c2 * c2 / 27.0 + c1 * c2 / 3.0 - c0;
    if (!(p < 0.0))  // triple root up to rounding
        return {c2 / 3.0, c2 / 3.0, c2 / 3.0};
    const double m = 2.0 * std::sqrt(-p / 3.0);
    const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
    const double phi = std::acos(arg) / 3.0;
    std::vector<double> roots = {m * std::cos(phi) + c2 / 3.0,
                                 m * std::cos(phi - 2.0 * pi / 3.0) + c2 / 3.0,
                                 m * std::cos(phi - 4.0 * pi / 3.0) + c2 / 3.0};
    std::sort(roots.rbegin(), roots.rend());
    return roots;
}

/// Nystrom sinc kernel matrix of the time/band concentration operator,
/// assembled here so the oracle does not share library code.
inline Eigen::MatrixXd sinc_kernel_matrix(double bandwidth, double duration, int n) {
    using std::numbers::pi;
    const double dt = duration / (n - 1);
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double x = 2.0 * bandwidth * (i - j) * dt;
            m(i, j) = (i == j ? 2.0 * bandwidth : 2.0 * bandwidth * std::sin(pi * x) / (pi * x)) * dt;
        }
    return m;
}

/// Top concentration eigenvalues through the Slepian commuting-tridiagonal
/// route: eigenvectors of the tridiagonal matrix are the discrete prolate
/// sequences; their Rayleigh quotients against the sinc kernel give the
/// concentration values without ever diagonalizing the sinc matrix.
inline std::vector<double> dpss_concentration_eigs(double bandwidth, double duration,
                                                   int n, int k_top) {
    using std::numbers::pi;
    const double w = bandwidth * duration / (n - 1);  // half-bandwidth per sample
    Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        const double d = (n - 1 - 2.0 * i) / 2.0;
        tri(i, i) = d * d * std::cos(2.0 * pi * w);
    }
    for (int i = 1; i < n; ++i) {
        const double e = i * (n - i) / 2.0;
        tri(i, i - 1) = e;
        tri(i - 1, i) = e;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(tri);
    const Eigen::MatrixXd kernel = sinc_kernel_matrix(bandwidth, duration, n);

    std::vector<double> eigs;
    eigs.reserve(k_top);
    for (int k = 0; k < k_top; ++k) {
        // solver sorts ascending; the largest tridiagonal eigenvalue pairs
        // with the most concentrated sequence
        const Eigen::VectorXd v = solver.eigenvectors().col(n - 1 - k);
        eigs.push_back(v.dot(kernel * v));
    }
    return eigs;
}

/// |sum_{k=0}^{n-1} exp(i (k - (n-1)/2) u)|, the centered exponential-sum
/// magnitude.
inline double dirichlet_magnitude(int n, double u) {
    if (std::abs(std::sin(u / 2.0)) < 1e-14) return static_cast<double>(n);
    return std::abs(std::sin(n * u / 2.0) / std::sin(u / 2.0));
}

inline Eigen::MatrixXcd random_complex_matrix(int rows, int cols, std::mt19937_64& rng) {
    std::normal_distribution<double> dist(0.0, 1.0);
    Eigen::MatrixXcd m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = std::complex<double>(dist(rng), dist(rng));
    return m;
}

} // namespace oracles

#endif

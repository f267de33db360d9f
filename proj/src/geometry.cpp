#include "losdof/geometry.hpp"

#include <cmath>
#include <numbers>

#include "losdof/errors.hpp"

namespace losdof {

namespace {

// Full linear map applied to the unit-measure base set: the extents scale
// first, any extra transform acts on top. Disks carry the radius
// separately, so only the extra transform appears in their map.
Eigen::MatrixXd base_map(const ArrayAperture& ap) {
    if (ap.shape == ApertureShape::Disk)
        return ap.transform;
    return ap.transform * ap.extents.asDiagonal();
}

} // namespace

ArrayAperture ArrayAperture::interval(double length, double offset) {
    ArrayAperture ap;
    ap.n = 1;
    ap.shape = ApertureShape::Interval;
    ap.extents = Eigen::VectorXd::Constant(1, length);
    ap.transform = Eigen::MatrixXd::Identity(1, 1);
    ap.centroid_offset = Eigen::VectorXd::Constant(1, offset);
    ap.validate();
    return ap;
}

ArrayAperture ArrayAperture::rectangle(double lx, double ly, const Eigen::Vector2d& offset) {
    ArrayAperture ap;
    ap.n = 2;
    ap.shape = ApertureShape::Rectangle;
    ap.extents = Eigen::Vector2d(lx, ly);
    ap.transform = Eigen::MatrixXd::Identity(2, 2);
    ap.centroid_offset = offset;
    ap.validate();
    return ap;
}

ArrayAperture ArrayAperture::disk(double radius, const Eigen::Vector2d& offset) {
    ArrayAperture ap;
    ap.n = 2;
    ap.shape = ApertureShape::Disk;
    ap.extents = Eigen::VectorXd::Constant(1, radius);
    ap.transform = Eigen::MatrixXd::Identity(2, 2);
    ap.centroid_offset = offset;
    ap.validate();
    return ap;
}

ArrayAperture ArrayAperture::transformed(const Eigen::MatrixXd& a) const {
    if (a.rows() != n || a.cols() != n)
        throw dimension_mismatch_error("transform must be n x n");
    ArrayAperture out = *this;
    out.transform = a * transform;
    out.validate();
    return out;
}

void ArrayAperture::validate() const {
    if (n != 1 && n != 2)
        throw invalid_geometry_error("aperture dimension must be 1 or 2");
    if (shape == ApertureShape::Interval && n != 1)
        throw invalid_geometry_error("interval apertures are one-dimensional");
    if ((shape == ApertureShape::Rectangle || shape == ApertureShape::Disk) && n != 2)
        throw invalid_geometry_error("rectangle/disk apertures are two-dimensional");
    const int n_extents = shape == ApertureShape::Disk ? 1 : n;
    if (extents.size() != n_extents)
        throw invalid_geometry_error("wrong number of extents for shape");
    for (Eigen::Index i = 0; i < extents.size(); ++i)
        if (!(extents[i] > 0.0))
            throw invalid_geometry_error("extents must be positive");
    if (transform.rows() != n || transform.cols() != n)
        throw invalid_geometry_error("transform must be n x n");
    if (centroid_offset.size() != n)
        throw invalid_geometry_error("centroid offset must be an n-vector");
    if (std::abs(transform.determinant()) <= 0.0)
        throw invalid_geometry_error("aperture transform is not invertible");
}

double measure(const ArrayAperture& ap) {
    ap.validate();
    const double det = std::abs(ap.transform.determinant());
    switch (ap.shape) {
        case ApertureShape::Interval:
            return det * ap.extents[0];
        case ApertureShape::Rectangle:
            return det * ap.extents[0] * ap.extents[1];
        case ApertureShape::Disk:
            return det * std::numbers::pi * ap.extents[0] * ap.extents[0];
    }
    throw invalid_geometry_error("unknown aperture shape");
}

Eigen::VectorXd axis_spans(const ArrayAperture& ap) {
    ap.validate();
    const Eigen::MatrixXd m = base_map(ap);
    Eigen::VectorXd spans(ap.n);
    if (ap.shape == ApertureShape::Disk) {
        // image of a radius-r disk: span along axis i is 2 r |row_i|
        for (int i = 0; i < ap.n; ++i)
            spans[i] = 2.0 * ap.extents[0] * m.row(i).norm();
    } else {
        // image of the centered unit cube: support function of the box
        for (int i = 0; i < ap.n; ++i)
            spans[i] = m.row(i).cwiseAbs().sum();
    }
    return spans;
}

Eigen::VectorXd offset_augmented_spans(const ArrayAperture& ap) {
    Eigen::VectorXd spans = axis_spans(ap);
    for (int i = 0; i < ap.n; ++i)
        spans[i] += 2.0 * std::abs(ap.centroid_offset[i]);
    return spans;
}

SampledGrid sample_grid(const ArrayAperture& ap, const std::vector<int>& counts) {
    ap.validate();
    if (ap.shape == ApertureShape::Disk)
        throw invalid_sampling_error("uniform grids are defined for intervals and rectangles");
    if (static_cast<int>(counts.size()) != ap.n)
        throw invalid_sampling_error("one count per aperture axis required");
    for (int c : counts)
        if (c < 2)
            throw invalid_sampling_error("at least 2 samples per axis required");

    const Eigen::MatrixXd m = base_map(ap);
    SampledGrid grid;
    grid.aperture = ap;
    grid.counts = counts;
    grid.spacing.resize(ap.n);
    for (int i = 0; i < ap.n; ++i)
        grid.spacing[i] = m.col(i).norm() / (counts[i] - 1);

    // integer numerators keep the grid exactly symmetric about the centroid
    auto unit_coord = [](int k, int count) {
        return static_cast<double>(2 * k - (count - 1)) / (2.0 * (count - 1));
    };

    if (ap.n == 1) {
        grid.points.reserve(counts[0]);
        for (int k = 0; k < counts[0]; ++k) {
            const double u = unit_coord(k, counts[0]);
            grid.points.push_back(m * Eigen::VectorXd::Constant(1, u) + ap.centroid_offset);
        }
    } else {
        grid.points.reserve(static_cast<size_t>(counts[0]) * counts[1]);
        for (int k0 = 0; k0 < counts[0]; ++k0) {
            const double u0 = unit_coord(k0, counts[0]);
            for (int k1 = 0; k1 < counts[1]; ++k1) {
                const double u1 = unit_coord(k1, counts[1]);
                grid.points.push_back(m * Eigen::Vector2d(u0, u1) + ap.centroid_offset);
            }
        }
    }
    return grid;
}

} // namespace losdof

#ifndef LOSDOF_GEOMETRY_HPP
#define LOSDOF_GEOMETRY_HPP

#include <Eigen/Dense>
#include <vector>

namespace losdof {

enum class ApertureShape { Interval, Rectangle, Disk };

/// An n-dimensional (n = 1 or 2) source or receive region: a unit-measure
/// base set scaled to the given extents, optionally distorted by an
/// invertible linear transform and shifted off the boresight axis.
///
/// The base set is the centered unit interval/square; disks are specified
/// directly by their radius. The set measure scales with |det(transform)|.
struct ArrayAperture {
    int n = 1;
    ApertureShape shape = ApertureShape::Interval;
    Eigen::VectorXd extents;          // per-axis lengths [m]; radius for Disk
    Eigen::MatrixXd transform;        // n x n, invertible
    Eigen::VectorXd centroid_offset;  // transverse offset from the z-axis [m]

    static ArrayAperture interval(double length, double offset = 0.0);
    static ArrayAperture rectangle(double lx, double ly,
                                   const Eigen::Vector2d& offset = Eigen::Vector2d::Zero());
    static ArrayAperture disk(double radius,
                              const Eigen::Vector2d& offset = Eigen::Vector2d::Zero());

    /// Composes an extra linear transform on top of the existing one.
    ArrayAperture transformed(const Eigen::MatrixXd& a) const;

    /// Throws invalid_geometry_error on non-invertible transform or
    /// nonpositive extents.
    void validate() const;
};

/// Lebesgue measure of the aperture set in m^n.
double measure(const ArrayAperture& aperture);

/// Per-axis span of the aperture set (width of its axis-aligned bounding
/// box), transform included, centroid offset excluded.
Eigen::VectorXd axis_spans(const ArrayAperture& aperture);

/// Per-axis span augmented by twice the centroid offset, which is the
/// transverse extent seen from the boresight axis. Paraxial validity
/// checks use this.
Eigen::VectorXd offset_augmented_spans(const ArrayAperture& aperture);

/// Uniform endpoint-inclusive antenna grid over an aperture, so that the
/// span per axis is (count-1) * spacing.
struct SampledGrid {
    ArrayAperture aperture;
    std::vector<int> counts;               // antennas per axis
    std::vector<double> spacing;           // m per sample per axis
    std::vector<Eigen::VectorXd> points;   // lexicographic over grid axes

    int total() const { return static_cast<int>(points.size()); }
};

/// Samples the aperture on a uniform grid centered on the centroid,
/// endpoints included. Counts must be >= 2 per axis; disks cannot be
/// gridded this way and raise invalid_sampling_error.
SampledGrid sample_grid(const ArrayAperture& aperture, const std::vector<int>& counts);

} // namespace losdof

#endif

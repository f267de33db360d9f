#ifndef LOSDOF_SCENARIO_HPP
#define LOSDOF_SCENARIO_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "losdof/config.hpp"
#include "losdof/landau.hpp"
#include "losdof/spectra.hpp"

namespace losdof {

enum class SweepAxis { None, Frequency, Distance, Aperture, LandauTime };

const char* sweep_axis_name(SweepAxis axis);

/// Time/band concentration study parameters ([landau] section).
struct LandauStudy {
    double bandwidth = 1.0;        // B [Hz]
    std::vector<double> times;     // T values [s]
    int grid_points = 0;           // 0 = auto: max(512, 16 ceil(2BT))
    std::vector<double> sigmas{0.5, 0.1};

    ConcentrationSpec spec_for(double observation_time) const;
};

/// A fully parsed scenario file: base link and grids, kernel and sigma
/// choices, and the sweep to run. One scenario per file.
struct Scenario {
    // link (absent for landau-only scenarios)
    double wavelength = 0.0;  // m
    double distance = 0.0;    // m
    double impedance = kFreeSpaceImpedance;
    ArrayAperture source;
    ArrayAperture receive;
    std::vector<int> source_counts;
    std::vector<int> receive_counts;

    KernelKind kernel = KernelKind::ParaxialFresnel;
    std::optional<KernelKind> compare_kernel;
    std::vector<double> sigmas{0.5};
    NormalizerRule normalizer = NormalizerRule::MaxEig;
    bool override_paraxial = false;

    SweepAxis axis = SweepAxis::None;
    std::vector<double> sweep_values;

    std::optional<LandauStudy> landau;

    std::string config_text;  // verbatim file content, hashed for the report
    std::string config_name;

    static Scenario from_config(const ConfigFile& cfg);

    bool has_link() const { return wavelength > 0.0; }
    std::string config_hash() const { return fnv1a_hex(config_text); }

    /// Link and grids at one sweep point (throws for the landau axis).
    struct Point {
        Link link;
        SampledGrid source_grid;
        SampledGrid receive_grid;
    };
    Point materialize(double sweep_value) const;
    Point materialize_base() const;
};

struct SigmaResult {
    double sigma = 0.0;
    int empirical_dof = 0;
    double landau_corrected = 0.0;
    double plunge_crossing = 0.0;
};

struct SweepPointRecord {
    double sweep_value = 0.0;  // NaN when the scenario has no sweep
    bool failed = false;
    std::string error;

    double wavelength = 0.0;
    double distance = 0.0;
    int grid_points = 0;  // landau-axis points only
    double closed_form_dof = 0.0;
    double paraxial_margin = 0.0;  // NaN for landau-axis points
    std::vector<SigmaResult> sigma_results;
    std::optional<double> agreement;
    int plunge_width_count = 0;
    double relative_plunge_width = 0.0;
    std::string spectrum_csv;

    Spectrum spectrum;  // kept for plot emission and tests
};

struct RunReport {
    Scenario scenario;
    std::vector<SweepPointRecord> points;
    std::string timestamp;  // excluded from any determinism comparison
    std::string config_hash;

    bool any_failed() const;
    nlohmann::ordered_json to_json() const;
};

/// Executes build -> eigen -> count per sweep point, writing one spectrum
/// CSV per point plus report.json under out_dir. Paraxial violations
/// abort before any point runs unless the scenario overrides them;
/// eigensolver failures mark the point failed and the run continues.
RunReport run_scenario(const Scenario& scenario, const std::filesystem::path& out_dir);

/// Rewrites each referenced spectrum CSV as a plot-ready CSV with
/// `index_over_dof, eigenvalue_normalized` columns. Reads the spectra back
/// from disk; a missing file is an error.
std::vector<std::string> emit_plotdata(const RunReport& report,
                                       const std::filesystem::path& out_dir);

/// Spectrum CSV layout: index, index_over_dof, eigenvalue,
/// eigenvalue_normalized; full round-trip precision.
void write_spectrum_csv(const std::filesystem::path& path, const Spectrum& spectrum,
                        double closed_form_dof);

/// Concentration study + per-sigma regression of the count excess over
/// 2BT against ln T (the landau CLI payload).
nlohmann::ordered_json run_landau_study(const LandauStudy& study);

std::string format_double(double value);  // %.17g
std::string sigma_key(double sigma);      // shortest round-trip, for JSON keys
std::string utc_timestamp();

} // namespace losdof

#endif

#include "losdof/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <limits>
#include <sstream>

#include "losdof/errors.hpp"
#include "losdof/version.hpp"

namespace losdof {

namespace fs = std::filesystem;

const char* sweep_axis_name(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::None: return "none";
        case SweepAxis::Frequency: return "frequency";
        case SweepAxis::Distance: return "distance";
        case SweepAxis::Aperture: return "aperture";
        case SweepAxis::LandauTime: return "landau_time";
    }
    return "unknown";
}

namespace {

SweepAxis sweep_axis_from_name(const std::string& name, int line) {
    if (name == "frequency") return SweepAxis::Frequency;
    if (name == "distance") return SweepAxis::Distance;
    if (name == "aperture") return SweepAxis::Aperture;
    if (name == "landau_time") return SweepAxis::LandauTime;
    throw config_error("unknown sweep axis '" + name + "'", line, "axis");
}

void check_positive_increasing(const std::vector<double>& values, const std::string& what,
                               int line) {
    for (size_t i = 0; i < values.size(); ++i) {
        if (!(values[i] > 0.0))
            throw config_error(what + " must be positive", line, what);
        if (i > 0 && !(values[i] > values[i - 1]))
            throw config_error(what + " must be strictly increasing", line, what);
    }
}

ArrayAperture parse_aperture(const ConfigFile& cfg, const std::string& section) {
    const std::string shape = cfg.get_string(section, "shape", "interval");
    const std::vector<double> extents = cfg.get_double_list(section, "extents_m");
    const int line = cfg.line_of(section, "extents_m");

    ArrayAperture ap;
    try {
        if (shape == "interval") {
            if (extents.size() != 1)
                throw config_error("interval takes one extent", line, "extents_m");
            ap = ArrayAperture::interval(extents[0]);
        } else if (shape == "rectangle") {
            if (extents.size() != 2)
                throw config_error("rectangle takes two extents", line, "extents_m");
            ap = ArrayAperture::rectangle(extents[0], extents[1]);
        } else if (shape == "disk") {
            if (extents.size() != 1)
                throw config_error("disk takes one radius", line, "extents_m");
            ap = ArrayAperture::disk(extents[0]);
        } else {
            throw config_error("unknown shape '" + shape + "'",
                               cfg.line_of(section, "shape"), "shape");
        }
    } catch (const invalid_geometry_error& e) {
        throw config_error(std::string(e.what()) + " in [" + section + "]", line, "extents_m");
    }

    if (cfg.has(section, "offset_m")) {
        const auto offset = cfg.get_double_list(section, "offset_m");
        if (static_cast<int>(offset.size()) != ap.n)
            throw config_error("offset needs one value per axis",
                               cfg.line_of(section, "offset_m"), "offset_m");
        for (int i = 0; i < ap.n; ++i) ap.centroid_offset[i] = offset[i];
    }
    if (cfg.has(section, "transform")) {
        const auto t = cfg.get_double_list(section, "transform");
        if (static_cast<int>(t.size()) != ap.n * ap.n)
            throw config_error("transform needs n*n row-major entries",
                               cfg.line_of(section, "transform"), "transform");
        for (int i = 0; i < ap.n; ++i)
            for (int j = 0; j < ap.n; ++j) ap.transform(i, j) = t[i * ap.n + j];
        try {
            ap.validate();
        } catch (const invalid_geometry_error& e) {
            throw config_error(e.what(), cfg.line_of(section, "transform"), "transform");
        }
    }
    return ap;
}

std::vector<int> parse_counts(const ConfigFile& cfg, const std::string& section, int n) {
    // N >> DOF default for smooth spectra; per-axis 200 is only viable in 1-D
    if (!cfg.has(section, "counts"))
        return std::vector<int>(n, n == 1 ? 200 : 40);
    auto counts = cfg.get_int_list(section, "counts");
    if (counts.size() == 1 && n == 2) counts.push_back(counts[0]);
    if (static_cast<int>(counts.size()) != n)
        throw config_error("counts needs one value per axis",
                           cfg.line_of(section, "counts"), "counts");
    for (int c : counts)
        if (c < 2)
            throw config_error("counts must be at least 2",
                               cfg.line_of(section, "counts"), "counts");
    return counts;
}

std::string spectrum_csv_name(size_t index) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "spectrum_%03zu.csv", index);
    return std::string(buf);
}

std::string plot_csv_name(size_t index) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "plot_%03zu.csv", index);
    return std::string(buf);
}

nlohmann::ordered_json aperture_json(const ArrayAperture& ap, const std::vector<int>& counts) {
    nlohmann::ordered_json j;
    switch (ap.shape) {
        case ApertureShape::Interval: j["shape"] = "interval"; break;
        case ApertureShape::Rectangle: j["shape"] = "rectangle"; break;
        case ApertureShape::Disk: j["shape"] = "disk"; break;
    }
    j["extents_m"] = std::vector<double>(ap.extents.begin(), ap.extents.end());
    j["offset_m"] = std::vector<double>(ap.centroid_offset.begin(), ap.centroid_offset.end());
    j["measure"] = measure(ap);
    if (!counts.empty()) j["counts"] = counts;
    return j;
}

} // namespace

ConcentrationSpec LandauStudy::spec_for(double observation_time) const {
    ConcentrationSpec spec;
    spec.observation_time = observation_time;
    spec.bandwidth = bandwidth;
    spec.grid_points = grid_points > 0 ? grid_points
                                       : concentration_grid_points(bandwidth, observation_time);
    return spec;
}

Scenario Scenario::from_config(const ConfigFile& cfg) {
    Scenario sc;
    sc.config_text = cfg.text();
    sc.config_name = cfg.name();

    if (cfg.has_section("link")) {
        const bool has_ghz = cfg.has("link", "frequency_ghz");
        const bool has_hz = cfg.has("link", "frequency_hz");
        const bool has_wl = cfg.has("link", "wavelength_m");
        if (has_ghz + has_hz + has_wl != 1)
            throw config_error(
                "[link] needs exactly one of frequency_ghz, frequency_hz, wavelength_m");
        if (has_wl)
            sc.wavelength = cfg.get_double("link", "wavelength_m");
        else if (has_hz)
            sc.wavelength = kSpeedOfLight / cfg.get_double("link", "frequency_hz");
        else
            sc.wavelength = kSpeedOfLight / (cfg.get_double("link", "frequency_ghz") * 1e9);
        if (!(sc.wavelength > 0.0))
            throw config_error("wavelength must be positive",
                               cfg.line_of("link", has_wl ? "wavelength_m"
                                                  : has_hz ? "frequency_hz" : "frequency_ghz"));
        sc.distance = cfg.get_double("link", "distance_m");
        if (!(sc.distance > 0.0))
            throw config_error("distance must be positive", cfg.line_of("link", "distance_m"),
                               "distance_m");
        sc.impedance = cfg.get_double("link", "impedance_ohm", kFreeSpaceImpedance);

        sc.source = parse_aperture(cfg, "source");
        sc.receive = parse_aperture(cfg, "receive");
        if (sc.source.n != sc.receive.n)
            throw config_error("source and receive apertures must share dimension");
        sc.source_counts = parse_counts(cfg, "source", sc.source.n);
        sc.receive_counts = parse_counts(cfg, "receive", sc.receive.n);
    }

    if (cfg.has_section("analysis")) {
        try {
            sc.kernel = kernel_kind_from_name(cfg.get_string("analysis", "kernel", "fresnel"));
            if (cfg.has("analysis", "compare_kernel"))
                sc.compare_kernel =
                    kernel_kind_from_name(cfg.get_string("analysis", "compare_kernel"));
        } catch (const invalid_parameter_error& e) {
            throw config_error(e.what(), 0, "kernel");
        }
        if (cfg.has("analysis", "sigma"))
            sc.sigmas = cfg.get_double_list("analysis", "sigma");
        const std::string norm = cfg.get_string("analysis", "normalizer", "max_eig");
        if (norm == "max_eig")
            sc.normalizer = NormalizerRule::MaxEig;
        else if (norm == "raw")
            sc.normalizer = NormalizerRule::RawValue;
        else
            throw config_error("normalizer must be max_eig or raw",
                               cfg.line_of("analysis", "normalizer"), "normalizer");
        sc.override_paraxial = cfg.get_bool("analysis", "override_paraxial", false);
    }
    for (double s : sc.sigmas)
        if (!(s > 0.0) || !(s < 1.0))
            throw config_error("sigma values must lie in (0,1)",
                               cfg.has("analysis", "sigma") ? cfg.line_of("analysis", "sigma") : 0,
                               "sigma");

    if (cfg.has_section("landau")) {
        LandauStudy study;
        study.bandwidth = cfg.get_double("landau", "bandwidth_hz", 1.0);
        if (!(study.bandwidth > 0.0))
            throw config_error("bandwidth must be positive",
                               cfg.line_of("landau", "bandwidth_hz"), "bandwidth_hz");
        study.times = cfg.get_double_list("landau", "time_values_s");
        check_positive_increasing(study.times, "time_values_s",
                                  cfg.line_of("landau", "time_values_s"));
        study.grid_points = cfg.get_int("landau", "grid_points", 0);
        if (cfg.has("landau", "sigma"))
            study.sigmas = cfg.get_double_list("landau", "sigma");
        else if (cfg.has("analysis", "sigma"))
            study.sigmas = sc.sigmas;
        for (double s : study.sigmas)
            if (!(s > 0.0) || !(s < 1.0))
                throw config_error("sigma values must lie in (0,1)", 0, "sigma");
        sc.landau = std::move(study);
    }

    if (cfg.has_section("sweep")) {
        sc.axis = sweep_axis_from_name(cfg.get_string("sweep", "axis"),
                                       cfg.line_of("sweep", "axis"));
        std::string values_key;
        switch (sc.axis) {
            case SweepAxis::Frequency: values_key = "values_ghz"; break;
            case SweepAxis::Distance: values_key = "values_m"; break;
            case SweepAxis::Aperture: values_key = "values_scale"; break;
            case SweepAxis::LandauTime: values_key = "values_s"; break;
            case SweepAxis::None: break;
        }
        if (sc.axis == SweepAxis::LandauTime && !cfg.has("sweep", values_key)) {
            if (!sc.landau)
                throw config_error("landau_time sweep needs a [landau] section");
            sc.sweep_values = sc.landau->times;
        } else {
            sc.sweep_values = cfg.get_double_list("sweep", values_key);
            check_positive_increasing(sc.sweep_values, values_key,
                                      cfg.line_of("sweep", values_key));
            if (sc.axis == SweepAxis::Frequency)
                for (double& v : sc.sweep_values) v *= 1e9;
            if (sc.axis == SweepAxis::LandauTime && sc.landau)
                sc.landau->times = sc.sweep_values;
        }
    }

    if (sc.axis == SweepAxis::LandauTime && !sc.landau)
        throw config_error("landau_time sweep needs a [landau] section");
    if ((sc.axis == SweepAxis::Frequency || sc.axis == SweepAxis::Distance ||
         sc.axis == SweepAxis::Aperture) &&
        !sc.has_link())
        throw config_error("channel sweeps need [link], [source], and [receive] sections");

    return sc;
}

Scenario::Point Scenario::materialize(double sweep_value) const {
    if (!has_link())
        throw invalid_parameter_error("scenario has no link configuration");
    double wl = wavelength;
    double dist = distance;
    ArrayAperture src = source;
    ArrayAperture rcv = receive;
    switch (axis) {
        case SweepAxis::Frequency:
            wl = kSpeedOfLight / sweep_value;
            break;
        case SweepAxis::Distance:
            dist = sweep_value;
            break;
        case SweepAxis::Aperture:
            src.extents *= sweep_value;
            rcv.extents *= sweep_value;
            break;
        case SweepAxis::None:
            break;
        case SweepAxis::LandauTime:
            throw invalid_parameter_error("landau sweeps have no channel link");
    }
    Point point;
    point.link = Link::from_wavelength(wl, dist, src, rcv);
    point.link.impedance = impedance;
    point.source_grid = sample_grid(src, source_counts);
    point.receive_grid = sample_grid(rcv, receive_counts);
    return point;
}

Scenario::Point Scenario::materialize_base() const {
    Scenario base = *this;
    base.axis = SweepAxis::None;
    return base.materialize(0.0);
}

bool RunReport::any_failed() const {
    for (const auto& p : points)
        if (p.failed) return true;
    return false;
}

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return std::string(buf);
}

std::string sigma_key(double sigma) {
    return nlohmann::json(sigma).dump();
}

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return std::string(buf);
}

void write_spectrum_csv(const std::filesystem::path& path, const Spectrum& spectrum,
                        double closed_form_dof) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw error("cannot write spectrum file: " + path.string());
    out << "index,index_over_dof,eigenvalue,eigenvalue_normalized\n";
    const Eigen::VectorXd normalized = spectrum.normalized();
    for (Eigen::Index i = 0; i < spectrum.size(); ++i) {
        const long index = static_cast<long>(i) + 1;
        out << index << ',' << format_double(index / closed_form_dof) << ','
            << format_double(spectrum.eigenvalues[i]) << ','
            << format_double(normalized[i]) << '\n';
    }
}

namespace {

SweepPointRecord run_channel_point(const Scenario& sc, double sweep_value) {
    SweepPointRecord rec;
    rec.sweep_value = sweep_value;
    const Scenario::Point point = sc.axis == SweepAxis::None
                                      ? sc.materialize_base()
                                      : sc.materialize(sweep_value);
    rec.wavelength = point.link.wavelength;
    rec.distance = point.link.distance;
    rec.closed_form_dof = dof_los_paraxial(point.link);
    rec.paraxial_margin = paraxial_margin(point.link);

    const ChannelMatrix h = build_channel_matrix(point.link, point.source_grid,
                                                 point.receive_grid, sc.kernel,
                                                 /*enforce_paraxial=*/false);
    rec.spectrum = eigen_spectrum(h, sc.normalizer);
    if (sc.compare_kernel) {
        const ChannelMatrix other = build_channel_matrix(point.link, point.source_grid,
                                                         point.receive_grid, *sc.compare_kernel,
                                                         /*enforce_paraxial=*/false);
        rec.agreement = kernel_agreement(h, other);
    }

    for (double sigma : sc.sigmas) {
        const DofEstimate est = estimate_dof(point.link, rec.spectrum, sigma);
        SigmaResult r;
        r.sigma = sigma;
        r.empirical_dof = est.empirical;
        r.landau_corrected = est.landau_corrected;
        r.plunge_crossing = plunge_crossing(rec.spectrum, sigma);
        rec.sigma_results.push_back(r);
    }
    rec.plunge_width_count = plunge_width(rec.spectrum);
    rec.relative_plunge_width = rec.plunge_width_count / rec.closed_form_dof;
    return rec;
}

SweepPointRecord run_landau_point(const LandauStudy& study, double observation_time) {
    SweepPointRecord rec;
    rec.sweep_value = observation_time;
    const ConcentrationSpec spec = study.spec_for(observation_time);
    rec.grid_points = spec.grid_points;
    rec.closed_form_dof = spec.time_bandwidth();
    rec.paraxial_margin = std::numeric_limits<double>::quiet_NaN();
    rec.spectrum = concentration_eigs(spec);

    for (double sigma : study.sigmas) {
        SigmaResult r;
        r.sigma = sigma;
        r.empirical_dof = empirical_dof(rec.spectrum, sigma);
        r.landau_corrected =
            landau_dof_sigma(rec.closed_form_dof, sigma, std::log(observation_time));
        r.plunge_crossing = plunge_crossing(rec.spectrum, sigma);
        rec.sigma_results.push_back(r);
    }
    rec.plunge_width_count = plunge_width(rec.spectrum);
    rec.relative_plunge_width = rec.plunge_width_count / rec.closed_form_dof;
    return rec;
}

} // namespace

RunReport run_scenario(const Scenario& scenario, const std::filesystem::path& out_dir) {
    std::vector<double> values = scenario.sweep_values;
    if (scenario.axis == SweepAxis::None) {
        if (scenario.has_link())
            values = {std::numeric_limits<double>::quiet_NaN()};
        else if (scenario.landau)
            values = scenario.landau->times;  // landau-only file: treat as T sweep
        else
            throw config_error("scenario defines neither a link nor a landau study");
    }
    if (values.empty())
        throw config_error("sweep value list is empty");

    const bool landau_axis = scenario.axis == SweepAxis::LandauTime ||
                             (scenario.axis == SweepAxis::None && !scenario.has_link());

    // fail fast on paraxial violations before any heavy work
    if (!landau_axis && !scenario.override_paraxial) {
        bool needs_margin = is_paraxial(scenario.kernel) ||
                            (scenario.compare_kernel && is_paraxial(*scenario.compare_kernel));
        if (needs_margin) {
            for (double v : values) {
                const Scenario::Point point = scenario.axis == SweepAxis::None
                                                  ? scenario.materialize_base()
                                                  : scenario.materialize(v);
                const double margin = paraxial_margin(point.link);
                if (margin < 0.0) {
                    std::ostringstream msg;
                    msg << "paraxial kernel outside validity at sweep value " << v
                        << " (margin " << margin << "); set override_paraxial to force";
                    throw paraxial_violation_error(msg.str(), margin);
                }
            }
        }
    }

    fs::create_directories(out_dir);
    RunReport report;
    report.scenario = scenario;
    report.config_hash = scenario.config_hash();
    report.timestamp = utc_timestamp();

    for (size_t i = 0; i < values.size(); ++i) {
        SweepPointRecord rec;
        try {
            rec = landau_axis ? run_landau_point(*scenario.landau, values[i])
                              : run_channel_point(scenario, values[i]);
            rec.spectrum_csv = spectrum_csv_name(i);
            write_spectrum_csv(out_dir / rec.spectrum_csv, rec.spectrum, rec.closed_form_dof);
        } catch (const numerical_failure_error& e) {
            rec.sweep_value = values[i];
            rec.failed = true;
            rec.error = e.what();
        }
        report.points.push_back(std::move(rec));
    }

    std::ofstream out(out_dir / "report.json", std::ios::binary);
    if (!out)
        throw error("cannot write report.json under " + out_dir.string());
    out << report.to_json().dump(2) << '\n';
    return report;
}

nlohmann::ordered_json RunReport::to_json() const {
    nlohmann::ordered_json j;
    j["artifact"] = {{"name", "losdof"},
                     {"version", kVersion},
                     {"config_hash", config_hash},
                     {"timestamp", timestamp}};

    nlohmann::ordered_json sj;
    sj["config_file"] = scenario.config_name;
    sj["sweep_axis"] = sweep_axis_name(scenario.axis);
    sj["sigmas"] = scenario.sigmas;
    if (scenario.has_link()) {
        sj["wavelength_m"] = scenario.wavelength;
        sj["distance_m"] = scenario.distance;
        sj["kernel"] = kernel_kind_name(scenario.kernel);
        if (scenario.compare_kernel)
            sj["compare_kernel"] = kernel_kind_name(*scenario.compare_kernel);
        sj["normalizer"] =
            scenario.normalizer == NormalizerRule::MaxEig ? "max_eig" : "raw";
        sj["override_paraxial"] = scenario.override_paraxial;
        sj["source"] = aperture_json(scenario.source, scenario.source_counts);
        sj["receive"] = aperture_json(scenario.receive, scenario.receive_counts);
    }
    if (scenario.landau) {
        sj["landau"] = {{"bandwidth_hz", scenario.landau->bandwidth},
                        {"time_values_s", scenario.landau->times},
                        {"grid_points", scenario.landau->grid_points},
                        {"sigmas", scenario.landau->sigmas}};
    }
    j["scenario"] = sj;

    nlohmann::ordered_json point_array = nlohmann::ordered_json::array();
    for (const auto& p : points) {
        nlohmann::ordered_json pj;
        pj["sweep_value"] = p.sweep_value;  // NaN dumps as null
        pj["failed"] = p.failed;
        if (p.failed) {
            pj["error"] = p.error;
            point_array.push_back(pj);
            continue;
        }
        if (p.wavelength > 0.0) {
            pj["wavelength_m"] = p.wavelength;
            pj["distance_m"] = p.distance;
        }
        if (p.grid_points > 0) pj["grid_points"] = p.grid_points;
        pj["closed_form_dof"] = p.closed_form_dof;
        if (!std::isnan(p.paraxial_margin)) pj["paraxial_margin"] = p.paraxial_margin;
        nlohmann::ordered_json sigma_results = nlohmann::ordered_json::array();
        for (const auto& r : p.sigma_results) {
            sigma_results.push_back({{"sigma", r.sigma},
                                     {"empirical_dof", r.empirical_dof},
                                     {"landau_corrected", r.landau_corrected},
                                     {"plunge_crossing", r.plunge_crossing}});
        }
        pj["sigma_results"] = sigma_results;
        if (p.agreement) pj["agreement"] = *p.agreement;
        pj["plunge_width"] = p.plunge_width_count;
        pj["relative_plunge_width"] = p.relative_plunge_width;
        pj["spectrum_csv"] = p.spectrum_csv;
        point_array.push_back(pj);
    }
    j["points"] = point_array;
    return j;
}

std::vector<std::string> emit_plotdata(const RunReport& report,
                                       const std::filesystem::path& out_dir) {
    std::vector<std::string> written;
    for (size_t i = 0; i < report.points.size(); ++i) {
        const auto& p = report.points[i];
        if (p.failed) continue;
        const fs::path spectrum_path = out_dir / p.spectrum_csv;
        std::ifstream in(spectrum_path, std::ios::binary);
        if (!in)
            throw error("missing spectrum file: " + spectrum_path.string());

        const std::string plot_name = plot_csv_name(i);
        std::ofstream out(out_dir / plot_name, std::ios::binary);
        if (!out)
            throw error("cannot write plot file: " + (out_dir / plot_name).string());
        out << "index_over_dof,eigenvalue_normalized\n";

        std::string line;
        std::getline(in, line);  // header
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            // columns: index, index_over_dof, eigenvalue, eigenvalue_normalized
            const auto c1 = line.find(',');
            const auto c2 = line.find(',', c1 + 1);
            const auto c3 = line.find(',', c2 + 1);
            if (c1 == std::string::npos || c2 == std::string::npos || c3 == std::string::npos)
                throw error("malformed spectrum row in " + spectrum_path.string());
            out << line.substr(c1 + 1, c2 - c1 - 1) << ',' << line.substr(c3 + 1) << '\n';
        }
        written.push_back(plot_name);
    }
    return written;
}

nlohmann::ordered_json run_landau_study(const LandauStudy& study) {
    nlohmann::ordered_json j;
    j["bandwidth_hz"] = study.bandwidth;
    j["sigmas"] = study.sigmas;

    std::vector<double> log_times;
    std::map<std::string, std::vector<double>> count_excess;
    std::map<std::string, std::vector<double>> crossing_excess;

    nlohmann::ordered_json points = nlohmann::ordered_json::array();
    for (double t : study.times) {
        const ConcentrationSpec spec = study.spec_for(t);
        const Spectrum spectrum = concentration_eigs(spec);
        const double two_bt = spec.time_bandwidth();

        nlohmann::ordered_json pj;
        pj["T_s"] = t;
        pj["two_bt"] = two_bt;
        pj["grid_points"] = spec.grid_points;
        nlohmann::ordered_json counts, crossings, corrected;
        for (double sigma : study.sigmas) {
            const std::string key = sigma_key(sigma);
            const int count = empirical_dof(spectrum, sigma);
            const double crossing = plunge_crossing(spectrum, sigma);
            counts[key] = count;
            crossings[key] = crossing;
            corrected[key] = landau_dof_sigma(two_bt, sigma, std::log(t));
            count_excess[key].push_back(count - two_bt);
            crossing_excess[key].push_back(crossing - two_bt);
        }
        pj["counts"] = counts;
        pj["plunge_crossings"] = crossings;
        pj["landau_corrected"] = corrected;
        points.push_back(pj);
        log_times.push_back(std::log(t));
    }
    j["points"] = points;

    if (study.times.size() >= 2) {
        nlohmann::ordered_json reg;
        for (double sigma : study.sigmas) {
            const std::string key = sigma_key(sigma);
            reg[key] = {{"slope_constant", landau_slope_constant(sigma)},
                        {"slope_from_counts", regression_slope(log_times, count_excess[key])},
                        {"slope_from_crossings",
                         regression_slope(log_times, crossing_excess[key])}};
        }
        j["regression"] = reg;
    }
    return j;
}

} // namespace losdof

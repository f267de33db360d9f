#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "losdof/errors.hpp"
#include "losdof/sampling.hpp"
#include "losdof/scenario.hpp"
#include "losdof/version.hpp"

namespace {

using losdof::Scenario;
using ordered_json = nlohmann::ordered_json;

struct CommonOpts {
    std::string config;
    std::string out = "out";
    bool override_paraxial = false;
    std::vector<double> sigmas;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool needs_out) {
    cmd->add_option("-c,--config", opts.config, "scenario file")->required();
    if (needs_out)
        cmd->add_option("-o,--out", opts.out, "output directory");
    cmd->add_flag("--override-paraxial", opts.override_paraxial,
                  "run paraxial kernels even when the validity margin is negative");
    cmd->add_option("--sigma", opts.sigmas, "accuracy levels, overrides the scenario list")
        ->delimiter(',');
}

Scenario load_scenario(const CommonOpts& opts) {
    Scenario sc = Scenario::from_config(losdof::ConfigFile::parse_file(opts.config));
    if (opts.override_paraxial) sc.override_paraxial = true;
    if (!opts.sigmas.empty()) {
        for (double s : opts.sigmas)
            if (!(s > 0.0) || !(s < 1.0))
                throw losdof::config_error("--sigma values must lie in (0,1)");
        sc.sigmas = opts.sigmas;
        if (sc.landau) sc.landau->sigmas = opts.sigmas;
    }
    return sc;
}

std::vector<double> point_values(const Scenario& sc) {
    if (sc.axis == losdof::SweepAxis::None || sc.sweep_values.empty())
        return {std::numeric_limits<double>::quiet_NaN()};
    return sc.sweep_values;
}

Scenario::Point materialize_at(const Scenario& sc, double value) {
    return std::isnan(value) ? sc.materialize_base() : sc.materialize(value);
}

int cmd_dof(const CommonOpts& opts) {
    const Scenario sc = load_scenario(opts);
    ordered_json out = ordered_json::array();
    for (double value : point_values(sc)) {
        const Scenario::Point point = materialize_at(sc, value);
        const double dof = losdof::dof_los_paraxial(point.link);
        ordered_json j;
        j["sweep_value"] = value;
        j["wavelength_m"] = point.link.wavelength;
        j["distance_m"] = point.link.distance;
        j["closed_form_dof"] = dof;
        j["paraxial_margin"] = losdof::paraxial_margin(point.link);
        ordered_json corrected;
        const double scale_log = losdof::los_concentration_scale_log(point.link);
        for (double sigma : sc.sigmas)
            corrected[losdof::sigma_key(sigma)] =
                losdof::landau_dof_sigma(dof, sigma, scale_log);
        j["landau_corrected"] = corrected;
        out.push_back(j);
    }
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_spectrum(const CommonOpts& opts) {
    Scenario sc = load_scenario(opts);
    sc.axis = losdof::SweepAxis::None;
    sc.sweep_values.clear();
    const losdof::RunReport report = losdof::run_scenario(sc, opts.out);
    std::cout << report.to_json()["points"][0].dump(2) << '\n';
    return report.any_failed() ? 2 : 0;
}

int cmd_sweep(const CommonOpts& opts) {
    const Scenario sc = load_scenario(opts);
    const losdof::RunReport report = losdof::run_scenario(sc, opts.out);
    const auto plots = losdof::emit_plotdata(report, opts.out);
    ordered_json j;
    j["report"] = (std::filesystem::path(opts.out) / "report.json").string();
    j["points"] = report.points.size();
    j["plot_files"] = plots;
    j["failed_points"] = [&] {
        int n = 0;
        for (const auto& p : report.points) n += p.failed ? 1 : 0;
        return n;
    }();
    std::cout << j.dump(2) << '\n';
    return report.any_failed() ? 2 : 0;
}

int cmd_landau(const CommonOpts& opts) {
    const Scenario sc = load_scenario(opts);
    if (!sc.landau)
        throw losdof::config_error("the landau command needs a [landau] section");
    std::cout << losdof::run_landau_study(*sc.landau).dump(2) << '\n';
    return 0;
}

int cmd_sampling(const CommonOpts& opts) {
    const Scenario sc = load_scenario(opts);
    const Scenario::Point point = materialize_at(sc, point_values(sc).front());
    const losdof::Link& link = point.link;
    const int n = link.dimension();

    ordered_json j;
    j["wavelength_m"] = link.wavelength;
    j["distance_m"] = link.distance;
    j["dimension"] = n;

    const double mu_r = losdof::nyquist_density_los(link, losdof::LinkEnd::Receive);
    const double mu_s = losdof::nyquist_density_los(link, losdof::LinkEnd::Source);
    j["los"] = {{"receive_density", mu_r},
                {"source_density", mu_s},
                {"receive_spacing_m", std::pow(1.0 / mu_r, 1.0 / n)},
                {"source_spacing_m", std::pow(1.0 / mu_s, 1.0 / n)}};

    const double iso = losdof::isotropic_wavenumber_measure(n, link.wavelength);
    ordered_json nlos;
    nlos["isotropic_density"] = losdof::nyquist_density_nlos(iso);
    if (n == 1) nlos["isotropic_spacing_m"] = 1.0 / iso;
    j["nlos"] = nlos;

    if (n == 1) {
        const int n_s = point.source_grid.counts[0];
        const int n_r = point.receive_grid.counts[0];
        const losdof::SpacingPlan plan = losdof::symmetric_spacing_plan(link, n_s, n_r);
        j["rayleigh"] = {
            {"n_s", n_s},
            {"n_r", n_r},
            {"n_max", plan.n_max()},
            {"spacing_product_m2", losdof::rayleigh_spacing_product(link, plan.n_max())},
            {"alias_free_product_m2", losdof::alias_free_spacing_product(link, plan.n_max())},
            {"symmetric_spacing_m", plan.delta_s}};
    }
    std::cout << j.dump(2) << '\n';
    return 0;
}

int cmd_validate(const CommonOpts& opts) {
    const Scenario sc = load_scenario(opts);
    ordered_json out = ordered_json::array();
    bool violated = false;
    for (double value : point_values(sc)) {
        const Scenario::Point point = materialize_at(sc, value);
        const losdof::ParaxialRatios ratios = losdof::paraxial_ratios(point.link);
        const double margin = losdof::paraxial_margin(point.link);
        violated = violated || margin < 0.0;
        out.push_back({{"sweep_value", value},
                       {"wavelength_m", point.link.wavelength},
                       {"distance_m", point.link.distance},
                       {"concentration_ratio", ratios.concentration},
                       {"paraxial_ratio", ratios.paraxial},
                       {"margin", margin},
                       {"valid", margin >= 0.0}});
    }
    std::cout << out.dump(2) << '\n';
    return violated ? 3 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spatial degrees of freedom of line-of-sight MIMO channels"};
    app.set_version_flag("--version", losdof::kVersion);
    app.require_subcommand(1);

    CommonOpts opts;
    auto* dof = app.add_subcommand("dof", "closed-form DOF for a scenario");
    add_common(dof, opts, false);
    auto* spectrum = app.add_subcommand("spectrum", "single-point eigen analysis");
    add_common(spectrum, opts, true);
    auto* sweep = app.add_subcommand("sweep", "run the scenario sweep and emit plot data");
    add_common(sweep, opts, true);
    auto* landau = app.add_subcommand("landau", "time/band concentration study");
    add_common(landau, opts, false);
    auto* sampling = app.add_subcommand("sampling", "Nyquist densities and Rayleigh spacings");
    add_common(sampling, opts, false);
    auto* validate = app.add_subcommand("validate", "paraxial validity margins");
    add_common(validate, opts, false);

    try {
        app.parse(argc, argv);
        if (dof->parsed()) return cmd_dof(opts);
        if (spectrum->parsed()) return cmd_spectrum(opts);
        if (sweep->parsed()) return cmd_sweep(opts);
        if (landau->parsed()) return cmd_landau(opts);
        if (sampling->parsed()) return cmd_sampling(opts);
        if (validate->parsed()) return cmd_validate(opts);
        return 1;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    } catch (const losdof::config_error& e) {
        std::cerr << "config error";
        if (e.line() > 0) std::cerr << " (line " << e.line() << ")";
        if (!e.field().empty()) std::cerr << " [" << e.field() << "]";
        std::cerr << ": " << e.what() << '\n';
        return 1;
    } catch (const losdof::paraxial_violation_error& e) {
        std::cerr << "validity violation: " << e.what() << '\n';
        return 3;
    } catch (const losdof::numerical_failure_error& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 2;
    } catch (const losdof::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << '\n';
        return 2;
    }
}

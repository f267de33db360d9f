#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "losdof/errors.hpp"
#include "losdof/scenario.hpp"

using namespace losdof;
namespace fs = std::filesystem;

namespace {

const char* kFigScenario = R"(
# eigenvalue polarization sweep, small grids for test speed
[link]
frequency_ghz = 300
distance_m = 2.0

[source]
shape = interval
extents_m = 0.2
counts = 48

[receive]
shape = interval
extents_m = 0.2
counts = 48

[analysis]
kernel = fresnel
sigma = 0.5, 0.1

[sweep]
axis = frequency
values_ghz = 60, 100, 300
)";

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag)
        : path(fs::temp_directory_path() / ("losdof_test_" + tag)) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("config parsing essentials") {
    const ConfigFile cfg = ConfigFile::parse_string(kFigScenario, "fig.cfg");
    CHECK(cfg.get_double("link", "frequency_ghz") == 300.0);
    CHECK(cfg.get_int("source", "counts") == 48);
    CHECK(cfg.get_double_list("sweep", "values_ghz") ==
          std::vector<double>{60.0, 100.0, 300.0});
    CHECK(cfg.get_string("missing", "key", "fallback") == "fallback");
    CHECK_THROWS_AS(cfg.get_string("missing", "key"), config_error);
}

TEST_CASE("config syntax errors carry line numbers") {
    try {
        ConfigFile::parse_string("[link]\nfrequency_ghz 300\n");
        FAIL("expected a parse error");
    } catch (const config_error& e) {
        CHECK(e.line() == 2);
    }
    try {
        ConfigFile::parse_string("key = 1\n");
        FAIL("expected a parse error");
    } catch (const config_error& e) {
        CHECK(e.line() == 1);
    }
    CHECK_THROWS_AS(ConfigFile::parse_string("[link]\na = 1\na = 2\n"), config_error);
    try {
        ConfigFile::parse_string("[link]\ndistance_m = fast\n").get_double("link", "distance_m");
        FAIL("expected a number error");
    } catch (const config_error& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("scenario validation rules") {
    auto parse = [](const std::string& text) {
        return Scenario::from_config(ConfigFile::parse_string(text));
    };
    // sigma outside (0,1)
    CHECK_THROWS_AS(parse("[link]\nfrequency_ghz = 100\ndistance_m = 1\n"
                          "[source]\nextents_m = 0.1\n[receive]\nextents_m = 0.1\n"
                          "[analysis]\nsigma = 1.5\n"),
                    config_error);
    // sweep values must increase
    CHECK_THROWS_AS(parse("[link]\nfrequency_ghz = 100\ndistance_m = 1\n"
                          "[source]\nextents_m = 0.1\n[receive]\nextents_m = 0.1\n"
                          "[sweep]\naxis = frequency\nvalues_ghz = 100, 60\n"),
                    config_error);
    // empty sweep list
    CHECK_THROWS_AS(parse("[link]\nfrequency_ghz = 100\ndistance_m = 1\n"
                          "[source]\nextents_m = 0.1\n[receive]\nextents_m = 0.1\n"
                          "[sweep]\naxis = frequency\nvalues_ghz =\n"),
                    config_error);
    // landau sweep without a landau section
    CHECK_THROWS_AS(parse("[sweep]\naxis = landau_time\nvalues_s = 1, 2\n"), config_error);
    // negative extent surfaces as a config error
    CHECK_THROWS_AS(parse("[link]\nfrequency_ghz = 100\ndistance_m = 1\n"
                          "[source]\nextents_m = -0.1\n[receive]\nextents_m = 0.1\n"),
                    config_error);
}

TEST_CASE("scenario materializes links per sweep point") {
    const Scenario sc = Scenario::from_config(ConfigFile::parse_string(kFigScenario));
    REQUIRE(sc.sweep_values.size() == 3);
    CHECK(sc.sweep_values[0] == 60e9);

    const Scenario::Point p60 = sc.materialize(60e9);
    CHECK(p60.link.wavelength == doctest::Approx(0.004996540966666667).epsilon(1e-15));
    CHECK(p60.link.distance == 2.0);
    CHECK(p60.source_grid.total() == 48);

    const Scenario::Point base = sc.materialize_base();
    CHECK(base.link.wavelength == doctest::Approx(0.0009993081933333333).epsilon(1e-15));
}

TEST_CASE("run_scenario writes spectra, plots, and a deterministic report") {
    const Scenario sc = Scenario::from_config(ConfigFile::parse_string(kFigScenario, "fig.cfg"));
    TempDir dir_a("run_a");
    TempDir dir_b("run_b");

    const RunReport report_a = run_scenario(sc, dir_a.path);
    const RunReport report_b = run_scenario(sc, dir_b.path);
    REQUIRE(report_a.points.size() == 3);
    CHECK_FALSE(report_a.any_failed());

    for (int i = 0; i < 3; ++i) {
        const fs::path csv = dir_a.path / report_a.points[i].spectrum_csv;
        REQUIRE(fs::exists(csv));
        // byte-identical across reruns
        CHECK(slurp(csv) == slurp(dir_b.path / report_b.points[i].spectrum_csv));
    }

    // reports identical once the timestamp is ignored
    nlohmann::ordered_json ja = report_a.to_json();
    nlohmann::ordered_json jb = report_b.to_json();
    ja["artifact"].erase("timestamp");
    jb["artifact"].erase("timestamp");
    CHECK(ja == jb);
    CHECK(report_a.config_hash == report_b.config_hash);

    // counts ride the closed form upward with frequency
    CHECK(report_a.points[0].sigma_results[0].empirical_dof <
          report_a.points[2].sigma_results[0].empirical_dof);

    // spectra polarize as frequency grows: relative plunge width nonincreasing
    CHECK(report_a.points[1].relative_plunge_width <=
          report_a.points[0].relative_plunge_width);
    CHECK(report_a.points[2].relative_plunge_width <=
          report_a.points[1].relative_plunge_width);

    // spectrum CSV round-trips full precision
    const std::string csv_text = slurp(dir_a.path / report_a.points[2].spectrum_csv);
    std::istringstream lines(csv_text);
    std::string header, first_row;
    std::getline(lines, header);
    std::getline(lines, first_row);
    CHECK(header == "index,index_over_dof,eigenvalue,eigenvalue_normalized");
    const auto last_comma = first_row.rfind(',');
    CHECK(std::stod(first_row.substr(last_comma + 1)) == 1.0);  // top normalized eigenvalue

    const auto plots = emit_plotdata(report_a, dir_a.path);
    REQUIRE(plots.size() == 3);
    const std::string plot_text = slurp(dir_a.path / plots[0]);
    CHECK(plot_text.rfind("index_over_dof,eigenvalue_normalized\n", 0) == 0);
    // one row per eigenvalue plus the header line
    CHECK(std::count(plot_text.begin(), plot_text.end(), '\n') == 49);

    {  // at 300 GHz the curve crosses 0.5 near index_over_dof = 1, and the
       // index axis tops out at N / closed_form_dof
        std::istringstream rows(slurp(dir_a.path / plots[2]));
        std::string row;
        std::getline(rows, row);  // header
        double crossing = 0.0, last_index = 0.0;
        double previous_index = 0.0;
        while (std::getline(rows, row)) {
            const auto comma = row.find(',');
            const double index_over_dof = std::stod(row.substr(0, comma));
            const double value = std::stod(row.substr(comma + 1));
            if (crossing == 0.0 && value <= 0.5) crossing = previous_index;
            previous_index = index_over_dof;
            last_index = index_over_dof;
        }
        CHECK(crossing == doctest::Approx(1.0).epsilon(0.1));
        const double dof = report_a.points[2].closed_form_dof;
        CHECK(last_index == doctest::Approx(48.0 / dof).epsilon(1e-12));
    }

    {  // a single-eigenvalue spectrum writes one data row
        Spectrum lone;
        lone.eigenvalues = Eigen::VectorXd::Constant(1, 2.0);
        lone.normalizer = 2.0;
        write_spectrum_csv(dir_a.path / "lone.csv", lone, 1.0);
        const std::string lone_text = slurp(dir_a.path / "lone.csv");
        CHECK(std::count(lone_text.begin(), lone_text.end(), '\n') == 2);
    }

    // plot emission reads from disk; a missing spectrum is an error
    fs::remove(dir_a.path / report_a.points[0].spectrum_csv);
    CHECK_THROWS_AS(emit_plotdata(report_a, dir_a.path), error);
}

TEST_CASE("paraxial violations abort unless overridden") {
    std::string text(kFigScenario);
    text.replace(text.find("distance_m = 2.0"), 16, "distance_m = 0.1");
    text.replace(text.find("[sweep]"), 7, "[unused]");
    Scenario sc = Scenario::from_config(ConfigFile::parse_string(text));
    TempDir dir("paraxial");
    CHECK_THROWS_AS(run_scenario(sc, dir.path), paraxial_violation_error);

    sc.override_paraxial = true;
    const RunReport report = run_scenario(sc, dir.path);
    CHECK_FALSE(report.any_failed());
    CHECK(report.points[0].paraxial_margin < 0.0);
}

TEST_CASE("landau scenarios run as time sweeps") {
    const char* text = R"(
[landau]
bandwidth_hz = 1.0
time_values_s = 1, 3
grid_points = 512
sigma = 0.5
)";
    const Scenario sc = Scenario::from_config(ConfigFile::parse_string(text));
    REQUIRE(sc.landau.has_value());
    TempDir dir("landau");
    const RunReport report = run_scenario(sc, dir.path);
    REQUIRE(report.points.size() == 2);
    CHECK(report.points[0].closed_form_dof == 2.0);
    CHECK(report.points[1].closed_form_dof == 6.0);
    CHECK(report.points[0].sigma_results[0].empirical_dof == 2);
    CHECK(report.points[1].sigma_results[0].empirical_dof == 6);

    const nlohmann::ordered_json study = run_landau_study(*sc.landau);
    REQUIRE(study["points"].size() == 2);
    CHECK(study["points"][0]["two_bt"] == 2.0);
    CHECK(study["points"][0]["counts"]["0.5"] == 2);
    CHECK(study.contains("regression"));
    CHECK(study["regression"]["0.5"].contains("slope_from_crossings"));
}

TEST_CASE("config hash tracks content") {
    const Scenario a = Scenario::from_config(ConfigFile::parse_string(kFigScenario));
    const Scenario b = Scenario::from_config(ConfigFile::parse_string(kFigScenario));
    CHECK(a.config_hash() == b.config_hash());
    std::string text(kFigScenario);
    text.replace(text.find("counts = 48"), 11, "counts = 32");
    const Scenario c = Scenario::from_config(ConfigFile::parse_string(text));
    CHECK(a.config_hash() != c.config_hash());
}

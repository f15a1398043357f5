#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cylshell/cli_io.hpp"

using namespace cylshell;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) {
        path = (std::filesystem::temp_directory_path() / name).string();
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("presets encode the benchmark setups") {
    const RunConfig t1 = preset_config("table1");
    CHECK(t1.geometry.h == doctest::Approx(0.2));
    CHECK(t1.geometry.L == doctest::Approx(5.0 * 3.14159265358979323846));
    CHECK(t1.material.nu == doctest::Approx(0.3));
    CHECK(t1.n_elements == 21);
    REQUIRE(t1.crack.has_value());
    CHECK(t1.crack->a == doctest::Approx(0.5 * t1.geometry.h));
    CHECK(t1.crack->x_c == doctest::Approx(0.5 * t1.geometry.L));
    // the radius makes the shell parameter exactly one
    const DerivedParams p = derived_params(t1.geometry, t1.material);
    CHECK(p.m_param == doctest::Approx(1.0).epsilon(1e-12));

    const RunConfig exp = preset_config("table2-experimental");
    CHECK(exp.geometry.R == doctest::Approx(0.115));
    CHECK(exp.geometry.h == doctest::Approx(0.001));
    CHECK(exp.geometry.L == doctest::Approx(0.100));
    CHECK(exp.analysis.n_last == 25);

    CHECK_NOTHROW(preset_config("table4"));
    CHECK_NOTHROW(preset_config("table5"));
    CHECK_THROWS_AS(preset_config("table99"), std::invalid_argument);
}

TEST_CASE("config JSON round trip preserves every field") {
    RunConfig config = preset_config("table1");
    config.technique = Technique::spring_set;
    config.bc = BoundaryCondition::clamped;
    config.gauss_points = 4;
    config.penalty_alpha = 1e7;
    config.analysis.kind = "sweep";
    config.analysis.sweep_by = "position";
    config.analysis.position_grid = {0.1, 0.3, 0.5};
    config.analysis.n_first = 2;
    config.analysis.n_last = 9;
    const std::string text = config_to_json_string(config);
    const RunConfig back = config_from_json_string(text);
    CHECK(back.technique == Technique::spring_set);
    CHECK(back.bc == BoundaryCondition::clamped);
    CHECK(back.gauss_points == 4);
    CHECK(back.penalty_alpha == doctest::Approx(1e7));
    CHECK(back.analysis.sweep_by == "position");
    CHECK(back.analysis.position_grid == config.analysis.position_grid);
    CHECK(back.analysis.n_first == 2);
    CHECK(back.analysis.n_last == 9);
    CHECK(back.geometry.R == doctest::Approx(config.geometry.R).epsilon(1e-15));
    REQUIRE(back.crack.has_value());
    CHECK(back.crack->a == doctest::Approx(config.crack->a).epsilon(1e-15));
    // canonical serialization is stable, so the hash is too
    CHECK(config_hash(back) == config_hash(config));
}

TEST_CASE("config hash distinguishes physically different runs") {
    const RunConfig a = preset_config("table1");
    RunConfig b = a;
    b.crack->a *= 1.00001;
    CHECK(config_hash(a) != config_hash(b));
    RunConfig c = a;
    c.technique = Technique::spring_set;
    CHECK(config_hash(a) != config_hash(c));
}

TEST_CASE("parse_config names the offending field") {
    TempFile f("cylshell_bad_config.json");
    {
        std::ofstream out(f.path);
        out << R"({"geometry": {"R": 1.0, "h": 0.1, "L": 2.0},
                   "material": {"E": 200e9, "nu": 0.3, "rho": 7850.0},
                   "crack": {"a": 0.2, "x_c": 1.0}})";
    }
    // a >= h violates the depth invariant; the message must name the field
    try {
        parse_config(f.path);
        FAIL("expected a validation error");
    } catch (const std::invalid_argument& e) {
        const std::string msg = e.what();
        CHECK(msg.find("a") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_config("/nonexistent/path.json"), std::invalid_argument);
}

TEST_CASE("parse_config round trips through a file") {
    TempFile f("cylshell_roundtrip.json");
    const RunConfig config = preset_config("table4");
    {
        std::ofstream out(f.path);
        out << config_to_json_string(config);
    }
    const RunConfig back = parse_config(f.path);
    CHECK(config_hash(back) == config_hash(config));
}

TEST_CASE("write_table emits provenance headers and six significant digits") {
    TempFile f("cylshell_table.csv");
    ResultTable table;
    table.columns = {"n", "value"};
    table.rows = {{1.0, 1.23456789}, {2.0, 0.000123456789}};
    write_table(table, f.path, {"what: a test table", "setting: x"});
    const std::string text = slurp(f.path);
    CHECK(text.find("# what: a test table") != std::string::npos);
    CHECK(text.find("# setting: x") != std::string::npos);
    CHECK(text.find("n,value") != std::string::npos);
    CHECK(text.find("1.23457") != std::string::npos);       // 6 significant digits
    CHECK(text.find("0.000123457") != std::string::npos);
    // rewriting the same table produces byte-identical output
    TempFile g("cylshell_table2.csv");
    write_table(table, g.path, {"what: a test table", "setting: x"});
    CHECK(slurp(g.path) == text);
    // empty tables are an error and leave no file behind
    TempFile h("cylshell_empty.csv");
    CHECK_THROWS_AS(write_table(ResultTable{{"n"}, {}}, h.path, {}),
                    std::invalid_argument);
    CHECK_FALSE(std::filesystem::exists(h.path));
}

TEST_CASE("mode shape surface covers the cylinder and scales displacements") {
    const RunConfig config = preset_config("table1");
    const ShellModel model = config.model();
    const Mesh mesh = config.mesh();
    const auto sweep = critical_load(model, mesh, 2, 2, config.solve_options());
    const int ntheta = 24;
    const ResultTable surf =
        modeshape_surface(model, mesh, 2, sweep.minimum_mode, 3, ntheta, 10.0);
    REQUIRE(surf.columns.size() == 5);  // x, theta, u, v, w
    CHECK(surf.rows.size() % ntheta == 0);
    double x_min = 1e300, x_max = -1e300, w_max = 0.0;
    for (const auto& row : surf.rows) {
        x_min = std::min(x_min, row[0]);
        x_max = std::max(x_max, row[0]);
        w_max = std::max(w_max, std::abs(row[4]));
        CHECK(row[1] >= 0.0);
        CHECK(row[1] < 2.0 * 3.14159265358979323846);
    }
    CHECK(x_min == doctest::Approx(0.0));
    CHECK(x_max == doctest::Approx(config.geometry.L));
    // the nodal amplitudes are normalized to one; sampling between nodes may
    // overshoot slightly but the scale factor dominates the magnitude
    CHECK(w_max >= 10.0 * (1.0 - 1e-9));
    CHECK(w_max < 15.0);
    // displacements are proportional to the scale factor
    const ResultTable half =
        modeshape_surface(model, mesh, 2, sweep.minimum_mode, 3, ntheta, 5.0);
    for (size_t i = 0; i < surf.rows.size(); i += 97)
        CHECK(surf.rows[i][4] == doctest::Approx(2.0 * half.rows[i][4]).epsilon(1e-10));
    // n = 2: at the axial station of peak |w| the deflection changes sign exactly
    // 4 times around the circumference
    size_t peak = 0;
    for (size_t i = 0; i < surf.rows.size(); ++i)
        if (std::abs(surf.rows[i][4]) > std::abs(surf.rows[peak][4])) peak = i;
    // rows come in contiguous blocks of ntheta sharing one axial station
    const size_t block = (peak / ntheta) * ntheta;
    std::vector<double> ring;
    for (int j = 0; j < ntheta; ++j) {
        CHECK(surf.rows[block + j][0] == doctest::Approx(surf.rows[block][0]));
        ring.push_back(surf.rows[block + j][4]);
    }
    int sign_changes = 0;
    for (int j = 0; j < ntheta; ++j)
        if (ring[j] * ring[(j + 1) % ntheta] < 0.0) ++sign_changes;
    CHECK(sign_changes == 4);
    // scale zero keeps the undeformed coordinates only
    const ResultTable flat =
        modeshape_surface(model, mesh, 2, sweep.minimum_mode, 3, ntheta, 0.0);
    for (const auto& row : flat.rows) {
        CHECK(row[2] == 0.0);
        CHECK(row[3] == 0.0);
        CHECK(row[4] == 0.0);
    }
}

TEST_CASE("conversion comparison grid reports agreement") {
    const RunConfig config = preset_config("table1");
    double worst = 1.0;
    const auto entries = conversion_comparison(config.model(), worst);
    CHECK(worst < 1e-8);
    CHECK(entries.empty());
}

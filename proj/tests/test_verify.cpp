#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gammamedian/json_io.hpp>
#include <gammamedian/verify.hpp>

using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;
using gammamedian::CheckEntry;
using gammamedian::VerifyConfig;

namespace {

const CheckEntry& find(const std::vector<CheckEntry>& v, const std::string& name) {
    for (const auto& c : v) {
        if (c.name == name) return c;
    }
    FAIL("no check named " << name);
    return v.front();
}

std::vector<std::string> read_lines(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::vector<std::string> out;
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

} // namespace

TEST_CASE("config parsing", "[verify][config]") {
    std::istringstream in(R"(# comment
suite = coeffs, theta
grid_min = 0.5
grid_max=20
grid_points = 10
grid_spacing = linear

residual_orders = 2,3
theta_cross_n = 1, 2
key_identity_tol = 1e-9
)");
    const auto cfg = VerifyConfig::from_stream(in);
    CHECK(cfg.suite == "coeffs, theta");
    CHECK(cfg.bounds.grid.xmin == 0.5);
    CHECK(cfg.bounds.grid.xmax == 20.0);
    CHECK(cfg.bounds.grid.points == 10);
    CHECK(cfg.bounds.grid.spacing == gammamedian::Spacing::linear);
    CHECK(cfg.residual_orders == std::vector<std::size_t>{2, 3});
    CHECK(cfg.theta_cross_n == std::vector<int>{1, 2});
    CHECK(cfg.key_identity_tol == 1e-9);
    // untouched keys keep their defaults
    CHECK(cfg.theta_n_max == 100);
    CHECK(cfg.to_json()["grid_spacing"] == "linear");
}

TEST_CASE("config errors", "[verify][config]") {
    VerifyConfig cfg;
    CHECK_THROWS_WITH(cfg.set("nonsense", "1"), ContainsSubstring("unknown key"));
    CHECK_THROWS_WITH(cfg.set("grid_points", "ten"), ContainsSubstring("expects a number"));
    CHECK_THROWS_WITH(cfg.set("grid_points", "2.5"), ContainsSubstring("expects an integer"));
    CHECK_THROWS_WITH(cfg.set("grid_spacing", "cubic"), ContainsSubstring("log or linear"));
    CHECK_THROWS_AS(cfg.set("residual_x", ""), std::invalid_argument);
    std::istringstream bad("grid_min 3\n");
    CHECK_THROWS_WITH(VerifyConfig::from_stream(bad), ContainsSubstring("line 1"));
    CHECK_THROWS_AS(VerifyConfig::from_file("/nonexistent/verify.conf"), std::runtime_error);
}

TEST_CASE("grid nodes", "[verify]") {
    gammamedian::Grid g{0.05, 100.0, 400, gammamedian::Spacing::log};
    const auto xs = g.nodes();
    REQUIRE(xs.size() == 400);
    CHECK(xs.front() == 0.05);
    CHECK(xs.back() == 100.0);
    CHECK_THAT(xs[1] / xs[0], WithinAbs(xs[399] / xs[398], 1e-12));
    const auto lin = gammamedian::Grid{1.0, 3.0, 3, gammamedian::Spacing::linear}.nodes();
    CHECK(lin == std::vector<double>{1.0, 2.0, 3.0});
}

TEST_CASE("CheckSpec validation", "[verify]") {
    gammamedian::CheckSpec spec;
    CHECK(spec.validate().empty());
    spec.tolerance = 0.0;
    CHECK_FALSE(spec.validate().empty());
    spec = {};
    spec.grid.points = 1;
    CHECK_FALSE(spec.validate().empty());
    spec = {};
    spec.grid.xmin = spec.grid.xmax;
    CHECK_FALSE(spec.validate().empty());
    spec = {};
    spec.grid.xmin = -1.0;
    spec.grid.spacing = gammamedian::Spacing::linear;
    CHECK_FALSE(spec.validate().empty());
}

TEST_CASE("check_bounds on small grids", "[verify][bounds]") {
    SECTION("degenerate grid next to 1") {
        gammamedian::CheckSpec spec;
        spec.grid = {1.0, 1.0 + 1e-6, 2, gammamedian::Spacing::log};
        const auto entries = gammamedian::check_bounds(spec);
        for (const auto& e : entries) {
            INFO(e.name << ": " << e.detail);
            CHECK(e.pass);
        }
        // m(1) = log 2 sits 1 - log 2 below x
        CHECK_THAT(find(entries, "chen_rubin_upper").worst_violation, WithinAbs(-(1.0 - std::numbers::ln2), 1e-5));
    }
    SECTION("grid crossing 1/3") {
        gammamedian::CheckSpec spec;
        spec.grid = {0.1, 1.0, 20, gammamedian::Spacing::linear};
        const auto entries = gammamedian::check_bounds(spec, 0.2);
        const auto& lower = find(entries, "chen_rubin_lower");
        CHECK(lower.pass);
        CHECK(lower.worst_x > 1.0 / 3.0);
        CHECK_THAT(lower.detail, ContainsSubstring("over 15 points"));
    }
    SECTION("invalid CheckSpec is a failed entry") {
        gammamedian::CheckSpec spec;
        spec.tolerance = 0.0;
        const auto entries = gammamedian::check_bounds(spec);
        REQUIRE(entries.size() == 1);
        CHECK_FALSE(entries[0].pass);
        CHECK_THAT(entries[0].detail, ContainsSubstring("tolerance"));
    }
}

TEST_CASE("key identity examples", "[verify][identity]") {
    CHECK_THAT(gammamedian::key_identity_lhs(1.0), WithinAbs(0.26424111765711536, 1e-12));
    CHECK_THAT(gammamedian::key_identity_lhs(1.0), WithinAbs(gammamedian::key_identity_rhs(1.0), 1e-9));
    CHECK_THAT(gammamedian::key_identity_lhs(5.0), WithinAbs(gammamedian::key_identity_rhs(5.0), 1e-10));
    CHECK_THAT(gammamedian::key_identity_lhs(0.5), WithinAbs(gammamedian::key_identity_rhs(0.5), 1e-8));
    CHECK(gammamedian::check_key_identity({0.5, 1.0, 2.0, 5.0}, 1e-8).pass);
    CHECK_FALSE(gammamedian::check_key_identity({1.0}, 0.0).pass);
    CHECK_FALSE(gammamedian::check_key_identity({-1.0}, 1e-8).pass);
}

TEST_CASE("expansion residual checks", "[verify][residuals]") {
    const auto entries = gammamedian::check_expansion_residuals({3, 9}, {10.0, 20.0, 40.0, 80.0});
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].name == "expansion_residual_3");
    CHECK(entries[0].pass);
    CHECK(entries[1].pass);
    const auto bad = gammamedian::check_expansion_residuals({11}, {10.0, 20.0});
    REQUIRE(bad.size() == 1);
    CHECK_FALSE(bad[0].pass);
    // x - 1/3 alone leaves about m_1 / x
    const double m10 = gammamedian::median(10.0).m;
    CHECK_THAT(std::abs(m10 - (10.0 - 1.0 / 3.0)) * 10.0, WithinAbs(8.0 / 405.0, 1e-3));
    CHECK(gammamedian::check_mprime_expansion({10.0, 20.0, 40.0}, 5e-6).pass);
}

TEST_CASE("coefficient and theta suites", "[verify]") {
    const auto coeffs = gammamedian::check_coefficients(24);
    CHECK(coeffs.size() == 6);
    for (const auto& c : coeffs) {
        INFO(c.name << ": " << c.detail);
        CHECK(c.pass);
    }
    const auto theta = gammamedian::check_theta(100, {1, 2, 5, 10, 20}, 1e-7);
    for (const auto& c : theta) {
        INFO(c.name << ": " << c.detail);
        CHECK(c.pass);
    }
    CHECK(find(theta, "theta_at_one").pass);
}

TEST_CASE("run_all selects suites in fixed order", "[verify][report]") {
    VerifyConfig cfg;
    cfg.set("suite", "theta, coeffs");
    const auto report = gammamedian::run_all(cfg);
    CHECK(report.all_pass());
    REQUIRE(report.checks.size() == 10);
    CHECK(report.checks.front().name == "golden_xi_derivatives");
    CHECK(report.checks.back().name == "choi_identity");
    cfg.set("suite", "coeffs,unknown");
    CHECK_THROWS_WITH(gammamedian::run_all(cfg), ContainsSubstring("unknown suite"));
}

TEST_CASE("tolerance 0 fails the bounds suite", "[verify][report]") {
    VerifyConfig cfg;
    cfg.set("suite", "bounds");
    cfg.set("tolerance", "0");
    cfg.set("grid_points", "5");
    const auto report = gammamedian::run_all(cfg);
    CHECK_FALSE(report.all_pass());
    CHECK(report.to_json()["pass"] == false);
}

TEST_CASE("reports are deterministic and well formed", "[verify][report]") {
    VerifyConfig cfg;
    cfg.set("suite", "coeffs,identity,theta");
    const auto a = gammamedian::run_all(cfg).to_json().dump(2);
    const auto b = gammamedian::run_all(cfg).to_json().dump(2);
    CHECK(a == b);
    const auto j = nlohmann::json::parse(a);
    for (const char* key : {"suite", "pass", "checks", "params", "observations"}) CHECK(j.contains(key));
    CHECK(j["params"]["version"] == gammamedian::kVersion);
    for (const auto& c : j["checks"]) {
        for (const char* key : {"name", "pass", "worst_violation", "worst_x", "tolerance", "detail"}) {
            CHECK(c.contains(key));
        }
    }
}

TEST_CASE("json for exact values", "[verify][json]") {
    nlohmann::json j = gammamedian::Rational(-16, 2835);
    CHECK(j == "-16/2835");
    CHECK(j.get<gammamedian::Rational>() == gammamedian::Rational(-16, 2835));
    nlohmann::json e = gammamedian::asymp_m(2);
    CHECK(e["linear"] == "1/1");
    CHECK(e["constant"] == "-1/3");
    CHECK(e["inverse"] == nlohmann::json::array({"8/405"}));
}

TEST_CASE("csv tables", "[verify][csv]") {
    VerifyConfig cfg;
    cfg.set("grid_points", "6");
    cfg.set("grid_min", "1");
    cfg.set("grid_max", "50");
    cfg.set("residual_orders", "2,3");
    cfg.set("xi_csv_points", "11");
    const auto dir = std::filesystem::temp_directory_path() / "gammamedian_csv_test";
    std::filesystem::remove_all(dir);
    gammamedian::write_csv_tables(cfg, dir);
    const auto grid = read_lines(dir / "grid.csv");
    REQUIRE(grid.size() == 7);
    CHECK(grid[0] == "x,m,m_prime,phi,x_phi,m_expansion_2,residual_2,m_expansion_3,residual_3");
    CHECK(grid[1].rfind("1,0.69314718055994", 0) == 0);
    for (std::size_t i = 1; i < grid.size(); ++i) CHECK(std::count(grid[i].begin(), grid[i].end(), ',') == 8);
    const auto xi = read_lines(dir / "xi.csv");
    REQUIRE(xi.size() == 12);
    CHECK(xi[0] == "t,xi");
    CHECK(xi[1].rfind("1,0.66666666666666", 0) == 0);
    std::filesystem::remove_all(dir);
}

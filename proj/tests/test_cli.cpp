#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "hecke/errors.hpp"
#include "hecke/report.hpp"

using namespace hecke;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "hecke_eis");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

json strip_times(json j) {
    for (auto& r : j) r.erase("wallTimeMs");
    return j;
}

// Structural equality with a relative tolerance on floating-point leaves.
bool close(const json& a, const json& b, double rel) {
    if (a.is_number_float() || b.is_number_float()) {
        if (!a.is_number() || !b.is_number()) return false;
        double x = a.get<double>(), y = b.get<double>();
        return std::abs(x - y) <= rel * std::max({1.0, std::abs(x), std::abs(y)});
    }
    if (a.type() != b.type()) return false;
    if (a.is_object()) {
        if (a.size() != b.size()) return false;
        for (auto it = a.begin(); it != a.end(); ++it)
            if (!b.contains(it.key()) || !close(it.value(), b.at(it.key()), rel)) return false;
        return true;
    }
    if (a.is_array()) {
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!close(a[i], b[i], rel)) return false;
        return true;
    }
    return a == b;
}

}  // namespace

TEST_CASE("report JSON") {
    VerificationReport r;
    r.command = "fe";
    r.fields = "Q(sqrt-1)";
    r.parameters = {{"s", "0.3"}, {"lattice", "1,0:0:1:0,1"}};
    r.lhs = {0.1 + 0.2, -1.0 / 3.0};
    r.rhs = {0.30000000000000004, 1e-300};
    r.tolerance = 1e-9;
    r.wall_time_ms = 12;
    r.finalize();
    CHECK(r.pass == (r.abs_error <= r.tolerance));
    std::string text = to_json(r);
    VerificationReport back = report_from_json(text);
    CHECK(back.command == r.command);
    CHECK(back.fields == r.fields);
    CHECK(back.parameters == r.parameters);
    CHECK(back.lhs == r.lhs);
    CHECK(back.rhs == r.rhs);
    CHECK(back.abs_error == r.abs_error);
    CHECK(back.tolerance == r.tolerance);
    CHECK(back.pass == r.pass);
    CHECK(back.wall_time_ms == 12);
    CHECK(to_json(back) == text);
    CHECK(text.find("0.30000000000000004") != std::string::npos);
    CHECK(format_number(0.1) == "0.10000000000000001");

    json j = json::parse(text);
    for (const char* key : {"command", "fields", "parameters", "lhs", "rhs", "absError", "tolerance", "pass", "wallTimeMs"})
        CHECK(j.contains(key));
    CHECK(j["lhs"].contains("re"));
    CHECK(j["lhs"].contains("im"));

    r.lhs = 1.0;
    r.rhs = 1.0 + 2e-9;
    r.finalize();
    CHECK_FALSE(r.pass);
    auto many = reports_from_json(to_json(std::vector<VerificationReport>{r, back}));
    CHECK(many.size() == 2);
    CHECK_THROWS_AS(report_from_json("{\"command\": 3}"), InvalidInput);
}

TEST_CASE("argument parsing") {
    auto Q = make_rational_field();
    auto L = cli::parse_lattice(Q, "1,0.0+1.0,1");
    CHECK(L.y()[0].real() == 1.0);
    auto M = cli::parse_lattice(Q, "1/2,-0.25:1.5e-1,3");
    CHECK(M.x()[0].real() == -0.25);
    CHECK(M.y()[0].real() == doctest::Approx(0.15));
    CHECK(M.norm_a() == 0.5);
    auto Fi = make_quadratic_field(-1, FieldRole::Base);
    auto N = cli::parse_lattice(Fi, "1:1,0.1:0.2:1:-0.5,2");
    CHECK(N.ideal_a() == Fi.element(1, 1));
    CHECK(N.y()[0] == cplx(1.0, -0.5));
    CHECK(cli::parse_complex("0.5,0.9", "s") == cplx(0.5, 0.9));
    CHECK_THROWS_AS(cli::parse_lattice(Q, "1,0.0+1.0"), InvalidInput);
    CHECK_THROWS_AS(cli::parse_lattice(Q, "x,0.0+1.0,1"), InvalidInput);
    CHECK_THROWS_AS(cli::parse_lattice(Q, "1,0.0+0.0,1"), InvalidInput);
    CHECK_THROWS_AS(cli::parse_lattice(Fi, "1,0.1:0.2,1"), InvalidInput);
    CHECK_THROWS_AS(cli::parse_complex("1,2,3", "s"), InvalidInput);
}

TEST_CASE("eval-eisenstein") {
    auto r = run({"eval-eisenstein", "--base-field", "Q", "--lattice", "1,0.0+1.0,1", "--s", "2", "--method", "direct"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["uncompleted"]["re"].get<double>() == doctest::Approx(3.0134060198459696).epsilon(1e-12));
    CHECK(j["method"] == "direct");

    auto a = run({"eval-eisenstein", "--lattice", "1,0.0+1.0,1", "--s", "0.3", "--method", "auto"});
    auto b = run({"eval-eisenstein", "--lattice", "1,0.0+1.0,1", "--s", "0.7", "--method", "expansion"});
    CHECK(a.code == 0);
    json ja = json::parse(a.out), jb = json::parse(b.out);
    CHECK(ja["method"] == "expansion");
    CHECK(ja["completed"]["re"].get<double>() == doctest::Approx(jb["completed"]["re"].get<double>()).epsilon(1e-11));

    auto bad = run({"eval-eisenstein", "--lattice", "1,0.0+abc,1", "--s", "2"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("'z'") != std::string::npos);
    CHECK(run({"eval-eisenstein", "--lattice", "1,0.0+1.0,1", "--s", "two"}).code == 2);
    CHECK(run({"eval-eisenstein", "--lattice", "1,0.0+1.0,1", "--s", "2", "--method", "magic"}).code == 2);
    CHECK(run({"eval-eisenstein", "--base-field", "Q(sqrt-5)", "--lattice", "1,0:0:1:0,1", "--s", "2"}).code == 2);

    auto direct_low = run({"eval-eisenstein", "--lattice", "1,0.0+1.0,1", "--s", "0.5", "--method", "direct"});
    CHECK(direct_low.code == 3);
    CHECK(direct_low.err.find("expansion") != std::string::npos);
    CHECK(run({"eval-eisenstein", "--lattice", "1,0.0+1.0,1", "--s", "1"}).code == 3);

    auto gi = run({"eval-eisenstein", "--base-field", "Q(sqrt-1)", "--lattice", "1,0:0:1:0,1", "--s", "1.5"});
    CHECK(gi.code == 0);
}

TEST_CASE("precision from the environment") {
    setenv("HECKE_EIS_PRECISION", "1e-10", 1);
    auto r = run({"eval-eisenstein", "--lattice", "1,0.0+1.0,1", "--s", "2"});
    CHECK(json::parse(r.out)["tolerance"].get<double>() == 1e-10);
    setenv("HECKE_EIS_PRECISION", "lots", 1);
    CHECK(run({"eval-eisenstein", "--lattice", "1,0.0+1.0,1", "--s", "2"}).code == 2);
    setenv("HECKE_EIS_PRECISION", "1e-30", 1);
    CHECK(run({"eval-eisenstein", "--lattice", "1,0.0+1.0,1", "--s", "2"}).code == 2);
    unsetenv("HECKE_EIS_PRECISION");
}

TEST_CASE("verify") {
    CHECK(run({"verify", "--suite", "nonsense"}).code == 2);
    CHECK(run({"verify"}).code == 2);

    auto a = run({"verify", "--suite", "fe", "--seed", "7", "--jobs", "2"});
    auto b = run({"verify", "--suite", "fe", "--seed", "7", "--jobs", "3"});
    CHECK(a.code == 0);
    json ja = json::parse(a.out), jb = json::parse(b.out);
    CHECK(ja.size() == 21);
    for (const auto& r : ja) CHECK(r["pass"].get<bool>());
    // bit-identical apart from timings
    CHECK(strip_times(ja).dump() == strip_times(jb).dump());
    auto c = run({"verify", "--suite", "fe", "--seed", "8", "--jobs", "2"});
    CHECK(strip_times(json::parse(c.out)).dump() != strip_times(ja).dump());

    std::ifstream golden(std::string(HECKE_GOLDEN_DIR) + "/verify_fe_seed7.json");
    REQUIRE(golden.good());
    json jg = json::parse(golden);
    CHECK(close(strip_times(ja), strip_times(jg), 1e-11));

    std::string path = "verify_out_test.json";
    auto d = run({"verify", "--suite", "theta", "--seed", "3", "--out", path});
    CHECK(d.code == 0);
    std::ifstream f(path);
    std::stringstream text;
    text << f.rdbuf();
    CHECK(text.str() == d.out);
    CHECK(reports_from_json(text.str()).size() == 40);
    std::remove(path.c_str());
}

TEST_CASE("limit-formula") {
    CHECK(run({"limit-formula", "--K", "Q(sqrt-1)"}).code == 2);
    auto r = run({"limit-formula", "--K", "Q(sqrt5)", "--ideal", "O"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j[0]["pass"].get<bool>());
    CHECK(j[0]["parameters"].contains("quadratureTerm"));
    CHECK(run({"limit-formula", "--K", "Q(sqrt2)"}).code == 0);
    CHECK(run({"limit-formula", "--K", "Q(sqrt5)", "--ideal", "1,x,1"}).code == 2);
}

/*
   Copyright 2026 The raysweep Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "raysweep/errors.hpp"
#include "raysweep/io.hpp"

using namespace raysweep;
using io::json;

namespace {

const std::string kGolden = RAYSWEEP_GOLDEN_DIR;

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run_cli(const std::vector<std::string>& args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

// Structural equality with a relative tolerance on numbers.
bool same_json(const json& a, const json& b, double tol = 1e-12)
{
    if (a.is_number() && b.is_number()) {
        const double x = a.get<double>();
        const double y = b.get<double>();
        return std::fabs(x - y) <= tol * std::max({1.0, std::fabs(x), std::fabs(y)});
    }
    if (a.type() != b.type()) {
        return false;
    }
    if (a.is_object()) {
        if (a.size() != b.size()) {
            return false;
        }
        for (auto it = a.begin(); it != a.end(); ++it) {
            if (!b.contains(it.key()) || !same_json(it.value(), b.at(it.key()), tol)) {
                return false;
            }
        }
        return true;
    }
    if (a.is_array()) {
        if (a.size() != b.size()) {
            return false;
        }
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!same_json(a[i], b[i], tol)) {
                return false;
            }
        }
        return true;
    }
    return a == b;
}

std::string temp_file(const std::string& name, const std::string& content)
{
    const std::string path = std::string(RAYSWEEP_TEST_TMP) + "/" + name;
    std::ofstream(path) << content;
    return path;
}

json without_manifest(const std::string& text)
{
    json j = json::parse(text);
    REQUIRE(j.contains("manifest"));
    const json& m = j.at("manifest");
    CHECK(m.contains("command"));
    CHECK(m.contains("parameters"));
    CHECK(m.contains("version"));
    CHECK(m.contains("seeds"));
    CHECK(m.contains("timestamp"));
    j.erase("manifest");
    return j;
}

} // namespace

TEST_CASE("complex number parsing")
{
    CHECK(io::parse_complex("0+1i") == complex(0, 1));
    CHECK(io::parse_complex("1.5-2i") == complex(1.5, -2));
    CHECK(io::parse_complex("-3") == complex(-3, 0));
    CHECK(io::parse_complex("i") == complex(0, 1));
    CHECK(io::parse_complex("-i") == complex(0, -1));
    CHECK(io::parse_complex("2.5i") == complex(0, 2.5));
    CHECK(io::parse_complex("1e-3+2e+2i") == complex(1e-3, 200));
    CHECK(io::parse_complex(" 1 - 2 i ") == complex(1, -2));
    CHECK_THROWS_AS(io::parse_complex(""), InputError);
    CHECK_THROWS_AS(io::parse_complex("1+xi"), InputError);
    CHECK_THROWS_AS(io::parse_complex("abc"), InputError);
}

TEST_CASE("radius specifications")
{
    const auto g = io::parse_radii("geometric:1,100,10");
    REQUIRE(g.size() == 3);
    CHECK(g[1] == doctest::Approx(10.0));
    CHECK(g[2] == 100.0);
    CHECK(io::parse_radii("1,2.5,4") == std::vector<double>{1, 2.5, 4});
    CHECK_THROWS_AS(io::parse_radii("geometric:1,2"), InputError);
    CHECK_THROWS_AS(io::parse_pair("1"), InputError);
}

TEST_CASE("ray systems and measures round-trip through JSON")
{
    const RaySystem s({0.0, 2.0, 4.0});
    const RaySystem back = io::ray_system_from_json(json::parse(io::to_json(s).dump()));
    CHECK(back.directions() == s.directions());
    const RaySystem deg = io::ray_system_from_json(json{{"directions_deg", {0, 90}}});
    CHECK(deg.directions()[1] == doctest::Approx(kPi / 2));

    const AtomicMeasure m({{complex(1, 2), 0.5}, {complex(-3, 0.25), -2.0}});
    const AtomicMeasure mb = io::measure_from_json(json::parse(io::to_json(m).dump()));
    REQUIRE(mb.size() == 2);
    CHECK(mb.atoms()[1].z == m.atoms()[1].z);
    CHECK(mb.atoms()[1].w == m.atoms()[1].w);

    const AtomicMeasure z = io::measure_from_json(json::parse(R"({"zeros": [[1, 0], [0, 2]]})"));
    CHECK(z.total_mass() == 2.0);
    CHECK_THROWS_AS(io::measure_from_json(json::parse(R"({"atoms": [{"re": 1}]})")), InputError);
    CHECK_THROWS_AS(io::measure_from_json(json::parse(R"({"points": []})")), InputError);
    CHECK_THROWS_AS(io::ray_system_from_json(json::parse(R"({"directions_rad": ["x"]})")), InputError);
}

TEST_CASE("CSV readers")
{
    const auto zeros = io::zeros_from_csv(temp_file("zeros.csv", "re,im\n1,0\n-1,0\n0,2\n"));
    CHECK(zeros.points.size() == 3);
    const auto prof = io::profile_from_csv(temp_file("prof.csv", "r,value\n1,1\n2,3\n"));
    CHECK(prof.values[1] == 3.0);
    const auto bd = io::boundary_from_csv(temp_file("bd.csv", "ray_index,radius,value\n0,1,2\n0,2,3\n1,1,0\n1,2,0\n"),
                                          2, 0.0);
    CHECK(bd.value(0, 1.5) == doctest::Approx(2.5));
    CHECK_THROWS_AS(io::boundary_from_csv(temp_file("bad.csv", "0,1,2\n5,1,2\n"), 2, 0.0), InputError);
    CHECK_THROWS_AS(io::zeros_from_csv(temp_file("bad2.csv", "re,im\n1,0\n1,zz\n")), InputError);
    CHECK_THROWS_AS(io::zeros_from_csv("/nonexistent/file.csv"), InputError);
}

TEST_CASE("golden: semicircle")
{
    const Run r = run_cli({"hm", "--z", "0+1i", "--interval", "-1,1"});
    REQUIRE(r.code == 0);
    const json golden = io::read_json_file(kGolden + "/hm_semicircle.json");
    CHECK(same_json(without_manifest(r.out), golden));
}

TEST_CASE("golden: dipole")
{
    const Run r = run_cli({"sweep", "--measure", kGolden + "/dipole_measure.json", "--rays",
                           kGolden + "/real_axis.json", "--interval", "-1,1", "--variation", "signed"});
    REQUIRE(r.code == 0);
    const json golden = io::read_json_file(kGolden + "/sweep_dipole.json");
    const json got = without_manifest(r.out);
    CHECK(same_json(got, golden));
    CHECK(std::fabs(got.at("mass").get<double>()) < 1e-12);
}

TEST_CASE("exit codes")
{
    const std::string bad = temp_file("bad.json", "{\"atoms\": [");
    CHECK(run_cli({"sweep", "--measure", bad, "--rays", kGolden + "/real_axis.json"}).code == 2);
    CHECK(run_cli({"hm", "--z", "0+1i"}).code == 2);
    CHECK(run_cli({"nonsense"}).code == 2);
    CHECK(run_cli({"hm", "--z", "0-1i", "--interval", "-1,1"}).code == 2);
    // a quadratic tail of one sign has no convergent Poisson integral on the real axis
    const std::string bd = temp_file("bd_tail.csv", "ray_index,radius,value\n0,1,1\n0,2,1\n1,1,1\n1,2,1\n");
    const Run g = run_cli({"extend", "--rays", kGolden + "/real_axis.json", "--boundary", bd, "--tail", "2", "--at",
                           "0+1i"});
    CHECK(g.code == 3);
    CHECK_FALSE(g.err.empty());
    // too short a profile for an order estimate: the report leaves the order out
    const std::string prof = temp_file("short.csv", "r,value\n1,1\n2,2\n4,4\n");
    const Run s = run_cli({"growth", "--profile", prof, "--p", "1"});
    REQUIRE(s.code == 0);
    CHECK(json::parse(s.out).at("order").is_null());
    CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("every subcommand emits parseable JSON with a manifest")
{
    const std::string rays = kGolden + "/real_axis.json";
    const std::string meas = kGolden + "/dipole_measure.json";
    std::string prof_csv = "r,value\n";
    for (int k = 0; k <= 60; ++k) {
        const double r = std::pow(10.0, k / 10.0);
        prof_csv += std::to_string(r) + "," + std::to_string(r * r) + "\n";
    }
    const std::string prof = temp_file("prof_growth.csv", prof_csv);
    const std::string bd = temp_file("bd_extend.csv", "ray_index,radius,value\n0,1e-9,1\n0,10,1\n1,1e-9,1\n1,10,1\n");
    const std::string zeros = temp_file("zeros_e1.csv", "re,im\n1,0\n-1,0\n2,0\n-2,0\n3,0\n-3,0\n");
    const std::string nk = temp_file("nk.csv", "r,value\n0.001,0.001\n1000,1000\n");
    const std::vector<std::vector<std::string>> commands = {
        {"hm", "--z", "0.5+2i", "--interval", "1,2", "--sector", "0,90", "--deg", "--side", "alpha"},
        {"sweep", "--measure", meas, "--rays", rays, "--variation", "total"},
        {"check", "--kind", "blaschke", "--measure", meas, "--rays", rays},
        {"check", "--kind", "lindelof", "--measure", meas, "--p", "1"},
        {"check", "--kind", "admissible", "--measure", meas, "--rays", rays, "--p", "1"},
        {"growth", "--profile", prof, "--p", "2", "--at", "inf"},
        {"extend", "--rays", rays, "--boundary", bd, "--tail", "0", "--at", "0.3+0.4i"},
        {"crg", "example1", "--zeros", zeros, "--radii", "geometric:1,3,1.2"},
        {"crg", "example2", "--nk", nk + "," + nk + "," + nk + "," + nk, "--radii", "1,2,4"},
        {"oracle", "--z", "0+1i", "--interval", "-1,1", "--walks", "1e4", "--seed", "5"},
    };
    for (const auto& c : commands) {
        CAPTURE(c[0]);
        const Run r = run_cli(c);
        CHECK(r.code == 0);
        if (r.code != 0) {
            MESSAGE(r.err);
            continue;
        }
        const json j = without_manifest(r.out);
        CHECK(j.is_object());
    }
    const Run e = run_cli({"extend", "--rays", rays, "--boundary", bd, "--tail", "0", "--at", "0.3+0.4i"});
    CHECK(json::parse(e.out).at("value").get<double>() == doctest::Approx(1.0).epsilon(1e-8));
    const Run o = run_cli({"oracle", "--z", "0+1i", "--interval", "-1,1", "--walks", "1e4", "--seed", "5"});
    const json oj = json::parse(o.out);
    CHECK(oj.at("manifest").at("seeds")[0] == 5);
    CHECK(oj.at("mean").get<double>() == doctest::Approx(0.5).epsilon(0.05));
}

TEST_CASE("density export")
{
    const std::string grid = temp_file("grid.csv", "ray_index,radius\n0,0.5\n1,2\n");
    const Run r = run_cli({"sweep", "--measure", kGolden + "/dipole_measure.json", "--rays",
                           kGolden + "/real_axis.json", "--emit-density", grid});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line.rfind("# manifest: ", 0) == 0);
    std::getline(in, line);
    CHECK(line == "ray_index,radius,density_total,density_signed");
    std::getline(in, line);
    double ray = 0, rad = 0, dt = 0, ds = 0;
    REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &ray, &rad, &dt, &ds) == 4);
    CHECK(dt == doctest::Approx(2.0 / (kPi * 1.25)).epsilon(1e-9));
    CHECK(std::fabs(ds) < 1e-9);
}

// Copyright 2026 tritwirl contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "tritwirl/tilde_dual.hpp"
#include "tritwirl/werner.hpp"

using json = nlohmann::json;
using namespace tritwirl;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::filesystem::path scratch_dir() {
    static const auto dir = [] {
        auto p = std::filesystem::temp_directory_path() / "tritwirl_cli_test";
        std::filesystem::create_directories(p);
        return p;
    }();
    return dir;
}

RunResult run(const std::string& args) {
    const auto out_file = scratch_dir() / "out.txt";
    const std::string cmd = std::string(TRITWIRL_CLI_PATH) + " " + args + " > " + out_file.string() + " 2> " +
                            (scratch_dir() / "err.txt").string();
    const int raw = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(raw);
    std::ifstream in(out_file);
    std::ostringstream buf;
    buf << in.rdbuf();
    r.out = buf.str();
    return r;
}

}  // namespace

TEST_CASE("classify reports all memberships for point G") {
    const auto r = run("classify --point 0.2,0,0,0,0");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("valid") == true);
    CHECK(j.at("triseparable") == false);
    for (const char* p : {"p1", "p2", "p3"}) {
        CHECK(j.at("biseparable").at(p) == true);
        CHECK(j.at("ppt").at(p) == true);
    }
}

TEST_CASE("classify flags invalid tuples without failing") {
    const auto r = run("classify --point 0.5,0.5,0.1,0,0");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("valid") == false);
    CHECK_FALSE(j.contains("triseparable"));
}

TEST_CASE("distance prints the scalar") {
    const auto r = run("distance --from 1,0,0,0,0 --to " + format_rpoint(special_point("A")) + " --metric trace");
    REQUIRE(r.exit_code == 0);
    CHECK(std::abs(std::stod(r.out) - 5.0 / 3.0) < 1e-12);
    CHECK(r.out.find("1.666666666667") == 0);

    const auto inf = run("distance --from " + format_rpoint(special_point("A")) + " --to 1,0,0,0,0 --metric relent");
    REQUIRE(inf.exit_code == 0);
    CHECK(inf.out == "inf\n");
}

TEST_CASE("monotone reports value and argmin") {
    const auto r = run("monotone --point 0.2,0,0,0,0 --metric trace --starts 8");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("value").get<double>() > 1e-4);
    CHECK(j.at("converged") == true);
    CHECK(j.at("argmin").size() == 5);
}

TEST_CASE("points catalog and twirl round-trip") {
    const auto r = run("points --name B --d 3");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    REQUIRE(j.size() == 1);
    CHECK(j[0].at("name") == "B");
    CHECK(j[0].at("r")[0].get<double>() == 1.0);
    CHECK(j[0].at("r_exact")[0] == "1");
    CHECK(j[0].at("tilde_s_exact")[0] == "1/2");

    // reconstruct B, dump as matrix JSON, twirl it back through the CLI
    const CMat rho = reconstruct(special_point("B"), 3);
    json m;
    m["d"] = 3;
    json re = json::array(), im = json::array();
    for (int i = 0; i < 27; ++i) {
        json row_re = json::array(), row_im = json::array();
        for (int k = 0; k < 27; ++k) {
            row_re.push_back(rho(i, k).real());
            row_im.push_back(rho(i, k).imag());
        }
        re.push_back(row_re);
        im.push_back(row_im);
    }
    m["re"] = re;
    m["im"] = im;
    const auto mat_file = scratch_dir() / "b.json";
    std::ofstream(mat_file) << m.dump();

    const auto tw = run("twirl --matrix " + mat_file.string());
    REQUIRE(tw.exit_code == 0);
    const json jr = json::parse(tw.out).at("r");
    CHECK(std::abs(jr[0].get<double>() - 1.0) < 1e-10);
    for (int k = 1; k < 5; ++k) CHECK(std::abs(jr[k].get<double>()) < 1e-10);

    const auto td = run("twirl --matrix " + mat_file.string() + " --tilde");
    REQUIRE(td.exit_code == 0);
    const json js = json::parse(td.out).at("s");
    const SPoint want = tilde_twirl(rho);
    CHECK(std::abs(js[0].get<double>() - want.s_plus) < 1e-10);
    CHECK(std::abs(js[2].get<double>() - want.s1) < 1e-10);
    // the dual average of the partial transpose lands on the catalog value
    const SPoint cat = tilde_twirl(oracle::partial_transpose_1(rho));
    CHECK(std::abs(cat.s_plus - 0.5) < 1e-10);
    CHECK(std::abs(cat.s1 - 0.5) < 1e-10);
}

TEST_CASE("full catalog dump covers the named points") {
    const auto r = run("points");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j.size() == special_point_names().size());
}

TEST_CASE("sampler emits deterministic JSON lines") {
    const auto a = run("sample --set werner --count 3 --seed 5");
    const auto b = run("sample --set werner --count 3 --seed 5");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
    std::istringstream lines(a.out);
    std::string line;
    int n = 0;
    while (std::getline(lines, line)) {
        const json j = json::parse(line);
        CHECK(j.at("point").size() == 5);
        ++n;
    }
    CHECK(n == 3);

    const auto bad = run("sample --set bogus --count 1 --seed 1");
    CHECK(bad.exit_code == 1);
}

TEST_CASE("verify runs a suite end to end") {
    const auto r = run("verify --suite iota --samples 7 --seed 1");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("suite") == "iota");
    CHECK(j.at("pass") == true);

    const auto bad = run("verify --suite nonsense --samples 1 --seed 1");
    CHECK(bad.exit_code == 1);
}

TEST_CASE("contour subcommand writes CSV") {
    const auto csv_file = scratch_dir() / "grid.csv";
    const auto r = run("contour --region wp --step 0.1 --out " + csv_file.string() + " --starts 4");
    REQUIRE(r.exit_code == 0);
    std::ifstream in(csv_file);
    std::string header;
    REQUIRE(std::getline(in, header));
    CHECK(header == "x,y,E1,ES,tsp");
    int rows = 0;
    std::string line;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 66);  // triangular grid at step 0.1
}

TEST_CASE("usage errors exit with code 1, help with 0") {
    CHECK(run("--help").exit_code == 0);
    CHECK(run("classify").exit_code == 1);       // missing --point
    CHECK(run("frobnicate").exit_code == 1);     // unknown verb
    CHECK(run("distance --from 1,2 --to 0,0,0,0,0 --metric trace").exit_code == 1);
}

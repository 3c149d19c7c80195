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

#include <cmath>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tritwirl/monotones.hpp"
#include "tritwirl/sampling.hpp"
#include "tritwirl/separability.hpp"
#include "tritwirl/suites.hpp"
#include "tritwirl/tilde_dual.hpp"
#include "tritwirl/werner.hpp"

using json = nlohmann::json;
using namespace tritwirl;

namespace {

json point_to_json(const RPoint& r) {
    return json::array({r.r_plus, r.r_minus, r.r1, r.r2, r.r3});
}

json spoint_to_json(const SPoint& s) {
    return json::array({s.s_plus, s.s_minus, s.s1, s.s2, s.s3});
}

std::string rat_str(const Rat& q) {
    if (q.den == 1) return std::to_string(q.num);
    return std::to_string(q.num) + "/" + std::to_string(q.den);
}

/// Matrix file format: {"d": int, "re": [[...]], "im": [[...]]} with d^3
/// rows and columns; "im" may be omitted for a real matrix.
CMat read_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open matrix file '" + path + "'");
    const json j = json::parse(in);
    const int d = j.at("d").get<int>();
    if (d < 2) throw std::runtime_error("matrix file: d must be >= 2");
    const int n = d * d * d;
    const auto& re = j.at("re");
    if (static_cast<int>(re.size()) != n) throw std::runtime_error("matrix file: expected d^3 rows");
    CMat m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(re[i].size()) != n) throw std::runtime_error("matrix file: expected d^3 columns");
        for (int k = 0; k < n; ++k) m(i, k) = cplx(re[i][k].get<double>(), 0.0);
    }
    if (j.contains("im")) {
        const auto& im = j.at("im");
        if (static_cast<int>(im.size()) != n) throw std::runtime_error("matrix file: expected d^3 rows in im");
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) m(i, k) += cplx(0.0, im[i][k].get<double>());
    }
    return m;
}

json catalog_entry(const std::string& name, int d) {
    json e;
    e["name"] = name;
    const auto exact = special_point_exact(name, d);
    e["r"] = point_to_json(special_point(name, d));
    json rx = json::array();
    for (const auto& q : exact) rx.push_back(rat_str(q));
    e["r_exact"] = rx;
    const bool has_tilde = name.size() == 1 && name[0] >= 'A' && name[0] <= 'G';
    if (has_tilde) {
        e["tilde_s"] = spoint_to_json(tilde_special_point(name, d));
        json sx = json::array();
        for (const auto& q : tilde_special_point_exact(name, d)) sx.push_back(rat_str(q));
        e["tilde_s_exact"] = sx;
    }
    return e;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tritwirl: invariant tripartite states, separability geometry, and entanglement monotones"};
    app.require_subcommand(1);

    std::string point_str, from_str, to_str, metric = "trace", matrix_file, region_str = "wp";
    std::string out_file, name, set_str, suite_name;
    int d = 3, starts = 16, count = 10, samples = 1000;
    double tol = 1e-9, step = 0.01, mono_tol = 1e-6;
    uint64_t seed = 1;
    bool tilde = false;

    auto* classify = app.add_subcommand("classify", "membership tests for a coordinate tuple");
    classify->add_option("--point", point_str, "r+,r-,r1,r2,r3")->required();
    classify->add_option("--d", d, "local dimension");
    classify->add_option("--tol", tol, "membership tolerance");

    auto* twirl_cmd = app.add_subcommand("twirl", "project a density matrix onto the invariant family");
    twirl_cmd->add_option("--matrix", matrix_file, "JSON matrix file")->required();
    twirl_cmd->add_flag("--tilde", tilde, "use the conjugated-invariant (dual) average");

    auto* distance_cmd = app.add_subcommand("distance", "distance between two invariant states");
    distance_cmd->add_option("--from", from_str, "r+,r-,r1,r2,r3")->required();
    distance_cmd->add_option("--to", to_str, "r+,r-,r1,r2,r3")->required();
    distance_cmd->add_option("--metric", metric, "trace|relent");

    auto* monotone_cmd = app.add_subcommand("monotone", "distance to the triseparable set");
    monotone_cmd->add_option("--point", point_str, "r+,r-,r1,r2,r3")->required();
    monotone_cmd->add_option("--metric", metric, "trace|relent");
    monotone_cmd->add_option("--starts", starts, "multistart count");
    monotone_cmd->add_option("--tol", mono_tol, "optimality slack");

    auto* contour_cmd = app.add_subcommand("contour", "monotone values on a grid, written as CSV");
    contour_cmd->add_option("--region", region_str, "wp|qubit");
    contour_cmd->add_option("--step", step, "grid step in (0, 0.1]")->required();
    contour_cmd->add_option("--out", out_file, "output CSV file")->required();
    contour_cmd->add_option("--starts", starts, "multistart count per node");
    contour_cmd->add_option("--seed", seed, "multistart seed");

    auto* points_cmd = app.add_subcommand("points", "named point catalog");
    points_cmd->add_option("--name", name, "single point name");
    points_cmd->add_option("--d", d, "local dimension");

    auto* sample_cmd = app.add_subcommand("sample", "random points from the named sets, one JSON per line");
    sample_cmd->add_option("--set", set_str, "tsp-extreme|bsp-extreme|ppt-extreme|werner")->required();
    sample_cmd->add_option("--count", count, "number of samples");
    sample_cmd->add_option("--seed", seed, "sampling seed");

    auto* verify_cmd = app.add_subcommand("verify", "run a cross-validation suite");
    verify_cmd->add_option("--suite", suite_name, "suite name")->required();
    verify_cmd->add_option("--samples", samples, "sample count");
    verify_cmd->add_option("--seed", seed, "suite seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            std::cout << app.help();
            return 0;
        }
        std::cerr << e.what() << "\n" << app.help();
        return 1;
    }

    try {
        if (*classify) {
            const RPoint r = parse_rpoint(point_str);
            json out;
            const bool valid = validate_rpoint(r, d, tol);
            out["valid"] = valid;
            if (valid) {
                out["triseparable"] = is_triseparable(r, tol);
                json bisep, ppt;
                for (int p = 1; p <= 3; ++p) {
                    const std::string key = "p" + std::to_string(p);
                    bisep[key] = is_biseparable(r, Partition(p), tol);
                    ppt[key] = is_ppt(r, Partition(p), tol);
                }
                out["biseparable"] = bisep;
                out["ppt"] = ppt;
            }
            std::cout << out.dump() << "\n";
            return 0;
        }
        if (*twirl_cmd) {
            const CMat rho = read_matrix(matrix_file);
            json out;
            if (tilde)
                out["s"] = spoint_to_json(tilde_twirl(rho));
            else
                out["r"] = point_to_json(twirl(rho));
            std::cout << out.dump() << "\n";
            return 0;
        }
        if (*distance_cmd) {
            const RPoint a = parse_rpoint(from_str);
            const RPoint b = parse_rpoint(to_str);
            if (metric != "trace" && metric != "relent") throw std::invalid_argument("metric must be trace|relent");
            const double v = distance(a, b, metric == "trace" ? DistanceKind::Trace : DistanceKind::Relent);
            if (std::isinf(v)) {
                std::cout << "inf\n";
            } else {
                std::cout.precision(13);
                std::cout << v << "\n";
            }
            return 0;
        }
        if (*monotone_cmd) {
            const RPoint r = parse_rpoint(point_str);
            if (metric != "trace" && metric != "relent") throw std::invalid_argument("metric must be trace|relent");
            MonotoneOptions opts;
            opts.starts = starts;
            opts.tol = mono_tol;
            const auto res = monotone(r, metric == "trace" ? DistanceKind::Trace : DistanceKind::Relent, opts);
            json out;
            out["value"] = res.value;
            out["argmin"] = point_to_json(res.argmin);
            out["converged"] = res.converged;
            std::cout << out.dump() << "\n";
            return 0;
        }
        if (*contour_cmd) {
            ContourRegion region;
            if (region_str == "wp")
                region = ContourRegion::WpTriangle;
            else if (region_str == "qubit")
                region = ContourRegion::QubitPlane;
            else
                throw std::invalid_argument("region must be wp|qubit");
            MonotoneOptions opts;
            opts.starts = starts;
            opts.seed = seed;
            const ContourGrid g = contour_grid(region, step, opts);
            std::ofstream out(out_file);
            if (!out) throw std::runtime_error("cannot open output file '" + out_file + "'");
            write_contour_csv(g, out);
            return 0;
        }
        if (*points_cmd) {
            json out = json::array();
            if (!name.empty()) {
                out.push_back(catalog_entry(name, d));
            } else {
                for (const auto& n : special_point_names()) out.push_back(catalog_entry(n, d));
            }
            std::cout << out.dump() << "\n";
            return 0;
        }
        if (*sample_cmd) {
            for (int i = 0; i < count; ++i) {
                CounterRng rng(seed, static_cast<uint64_t>(i));
                json line;
                line["kind"] = set_str;
                if (set_str == "tsp-extreme") {
                    line["point"] = point_to_json(oracle::random_tsp_rpoint(rng, d));
                } else if (set_str == "bsp-extreme") {
                    const BspExtreme e = bsp_extreme(rng.uniform(0.0, M_PI), rng.uniform(0.0, 2.0 * M_PI));
                    line["point"] = point_to_json(e.point);
                    line["non_extreme"] = e.non_extreme;
                } else if (set_str == "ppt-extreme") {
                    for (;;) {
                        const double rp = rng.uniform(0.0, 0.7);
                        const double rm = rng.uniform(0.0, 0.5);
                        const auto branch = rng.uniform() < 0.5 ? MStarBranch::Upper : MStarBranch::Lower;
                        if (const auto p = ppt_extreme_mstar(rp, rm, branch)) {
                            line["point"] = point_to_json(*p);
                            break;
                        }
                    }
                } else if (set_str == "werner") {
                    line["point"] = point_to_json(oracle::random_rpoint(rng, d));
                } else {
                    throw std::invalid_argument("unknown sample set '" + set_str + "'");
                }
                std::cout << line.dump() << "\n";
            }
            return 0;
        }
        if (*verify_cmd) {
            const auto rep = oracle::run_suite(suite_name, samples, seed);
            std::cout << rep.to_json() << "\n";
            return rep.pass() ? 0 : 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

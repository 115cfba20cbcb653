#include <algorithm>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "symdist/distance.hpp"
#include "symdist/errors.hpp"
#include "symdist/matrix_io.hpp"

namespace {

using nlohmann::json;
using namespace symdist;

Algorithm parse_algorithm(const std::string& name) {
    if (name == "auto") return Algorithm::auto_select;
    if (name == "1gamma") return Algorithm::saved_1_gamma;
    if (name == "2gamma") return Algorithm::saved_2_gamma;
    if (name == "isometry") return Algorithm::saved_isometry;
    if (name == "brute") return Algorithm::brute_force;
    throw CLI::ValidationError("--alg", "unknown algorithm '" + name + "'");
}

json report_to_json(const DistanceReport& rep, const StabilizerInstance& inst) {
    json trace = json::array();
    for (const BoundsTraceEntry& entry : rep.bounds_trace) {
        trace.push_back({{"g", entry.g}, {"L", entry.lower}, {"U", entry.upper}});
    }
    return json{{"distance", rep.distance},
                {"algorithm", algorithm_name(rep.algorithm)},
                {"generations", rep.generations},
                {"candidates_enumerated", rep.candidates_enumerated},
                {"elapsed_seconds", rep.elapsed_seconds},
                {"workers", rep.workers},
                {"n", inst.n},
                {"k", inst.k},
                {"bounds_trace", trace}};
}

int cmd_compute(const std::string& file, const std::string& alg_name, int threads,
                bool emit_json, bool emit_trace, bool no_validate, bool no_dual_filter) {
    const StabilizerInstance inst = parse_matrix_file(file);
    RunOptions opts;
    opts.workers = threads;
    opts.validate = !no_validate;
    opts.dual_filter = !no_dual_filter;
    const DistanceReport rep = compute_distance(inst, parse_algorithm(alg_name), opts);
    if (emit_trace) {
        for (const BoundsTraceEntry& entry : rep.bounds_trace) {
            std::cout << "g=" << entry.g << " L=" << entry.lower << " U=" << entry.upper
                      << '\n';
        }
    }
    std::cout << "distance " << rep.distance << '\n';
    if (emit_json) std::cout << report_to_json(rep, inst).dump(2) << '\n';
    return 0;
}

int cmd_verify(const std::string& file, int threads) {
    const StabilizerInstance inst = parse_matrix_file(file);
    RunOptions opts;
    opts.workers = threads;

    std::vector<std::pair<Algorithm, int>> results;
    for (Algorithm alg : {Algorithm::saved_1_gamma, Algorithm::saved_2_gamma,
                          Algorithm::saved_isometry}) {
        results.emplace_back(alg, compute_distance(inst, alg, opts).distance);
    }
    if (inst.a.n_rows() <= 28) {
        results.emplace_back(Algorithm::brute_force, brute_force_distance(inst, opts).distance);
    } else {
        std::cout << "note: n+k > 28, oracle skipped\n";
    }

    const int d = results.front().second;
    const bool agree = std::all_of(results.begin(), results.end(),
                                   [d](const auto& r) { return r.second == d; });
    if (agree) {
        std::cout << "AGREE d=" << d << '\n';
        return 0;
    }
    std::cout << "DISAGREE\n";
    for (const auto& [alg, dist] : results) {
        std::cout << "  " << algorithm_name(alg) << ": " << dist << '\n';
    }
    throw InternalError("algorithms disagree on the distance");
}

double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

double mean_of(const std::vector<double>& v) {
    double sum = 0;
    for (double x : v) sum += x;
    return v.empty() ? 0.0 : sum / static_cast<double>(v.size());
}

int cmd_bench(int n, int k, int count, std::uint64_t seed, int threads) {
    RunOptions opts;
    opts.workers = threads;
    opts.validate = false;  // instances are valid by construction

    const std::vector<Algorithm> algs = {Algorithm::saved_1_gamma, Algorithm::saved_2_gamma,
                                         Algorithm::saved_isometry};
    std::vector<std::vector<double>> times(algs.size());

    std::printf("instance  n  k  distance");
    for (Algorithm alg : algs) std::printf("  %14s_s", algorithm_name(alg));
    std::printf("\n");
    for (int i = 0; i < count; ++i) {
        const StabilizerInstance inst = random_stabilizer(n, k, seed + static_cast<std::uint64_t>(i));
        std::printf("%8d %2d %2d", i, inst.n, inst.k);
        int distance = -1;
        std::vector<double> row;
        for (std::size_t a = 0; a < algs.size(); ++a) {
            const DistanceReport rep = compute_distance(inst, algs[a], opts);
            if (distance < 0) {
                distance = rep.distance;
                std::printf("  %8d", distance);
            } else if (rep.distance != distance) {
                throw InternalError("bench: algorithms disagree on instance " + std::to_string(i));
            }
            times[a].push_back(rep.elapsed_seconds);
            row.push_back(rep.elapsed_seconds);
        }
        for (double t : row) std::printf("  %16.6f", t);
        std::printf("\n");
    }

    std::printf("\nalgorithm         runs    median_s      mean_s       min_s       max_s\n");
    for (std::size_t a = 0; a < algs.size(); ++a) {
        const std::vector<double>& t = times[a];
        std::printf("%-16s %5zu  %10.6f  %10.6f  %10.6f  %10.6f\n", algorithm_name(algs[a]),
                    t.size(), median_of(t), mean_of(t),
                    *std::min_element(t.begin(), t.end()),
                    *std::max_element(t.begin(), t.end()));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symplectic minimum distance of qubit stabilizer codes"};
    app.require_subcommand(1);

    std::string file;
    std::string alg = "auto";
    int threads = 1;
    bool emit_json = false;
    bool emit_trace = false;
    bool no_validate = false;
    bool no_dual_filter = false;

    CLI::App* compute = app.add_subcommand("compute", "compute the distance of a matrix file");
    compute->add_option("file", file, "normalizer matrix file")->required();
    compute->add_option("--alg", alg, "auto|1gamma|2gamma|isometry|brute")
        ->default_val("auto");
    compute->add_option("--threads", threads, "worker threads")->default_val(1);
    compute->add_flag("--json", emit_json, "print a JSON report");
    compute->add_flag("--trace", emit_trace, "print the L/U trace per generation");
    compute->add_flag("--no-validate", no_validate, "skip the stabilizer validity check");
    compute->add_flag("--no-dual-filter", no_dual_filter,
                      "minimum weight over the whole rowspace, no dual-minus-code filter");

    CLI::App* verify = app.add_subcommand("verify", "run all algorithms and compare");
    verify->add_option("file", file, "normalizer matrix file")->required();
    verify->add_option("--threads", threads, "worker threads")->default_val(1);

    int bench_n = 10;
    int bench_k = 2;
    int bench_count = 5;
    std::uint64_t bench_seed = 1;
    CLI::App* bench = app.add_subcommand("bench", "time the algorithms on random instances");
    bench->add_option("--n", bench_n, "qubit count")->default_val(10);
    bench->add_option("--k", bench_k, "logical qubit count")->default_val(2);
    bench->add_option("--count", bench_count, "number of instances")->default_val(5);
    bench->add_option("--seed", bench_seed, "base seed")->default_val(1);
    bench->add_option("--threads", threads, "worker threads")->default_val(1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) {
            return cmd_compute(file, alg, threads, emit_json, emit_trace, no_validate,
                               no_dual_filter);
        }
        if (verify->parsed()) return cmd_verify(file, threads);
        if (bench->parsed()) return cmd_bench(bench_n, bench_k, bench_count, bench_seed, threads);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}

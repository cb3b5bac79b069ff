#include <CLI11.hpp>

#include <planeflow/error.hpp>
#include <planeflow/generator.hpp>
#include <planeflow/oracle.hpp>
#include <planeflow/pfn_io.hpp>
#include <planeflow/transform.hpp>
#include <planeflow/typing.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "report.hpp"

namespace {

using namespace planeflow;
using pftool::Json;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) reject(ErrorCode::InvalidParams, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) reject(ErrorCode::InvalidParams, "cannot write '" + out_path + "'");
    out << text;
}

void emit_json(const Json& j, const std::string& out_path = "") {
    emit(j.dump(2) + "\n", out_path);
}

long long time_once_us(const FlowNetwork& n) {
    const auto t = std::chrono::steady_clock::now();
    const Rat v = max_flow_value(n);
    (void)v;
    return std::chrono::duration_cast<std::chrono::microseconds>(
               std::chrono::steady_clock::now() - t)
        .count();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"planar flow network toolkit"};
    app.require_subcommand(1);

    std::string path, out_path, family = "nested-cycles";
    int k = 2, ell = 8;
    std::uint64_t seed = 1;
    bool verify = false, layers = false, tree = false, extended = false, json_out = false;
    std::vector<int> ells;
    int reps = 3;

    auto* validate = app.add_subcommand("validate", "parse and structurally check a file");
    validate->add_option("file", path)->required();
    validate->callback([&] {
        const PfnFile f = parse_pfn(slurp(path));
        validate_network(to_extended_network(f));
        std::size_t lo = f.g.vertex_count() ? ~0ull : 0, hi = 0;
        std::vector<std::size_t> deg(f.g.vertex_count(), 0);
        for (const auto& e : f.g.edges) {
            ++deg[e.tail];
            ++deg[e.head];
        }
        for (const std::size_t d : deg) {
            lo = std::min(lo, d);
            hi = std::max(hi, d);
        }
        Json j;
        j["n"] = f.g.vertex_count();
        j["m"] = f.g.edge_count();
        j["min_degree"] = lo;
        j["max_degree"] = hi;
        j["cubic"] = lo == 3 && hi == 3;
        j["has_lower"] = f.has_lower;
        j["terminals"] = f.sources.size() + f.sinks.size();
        emit_json(j);
    });

    auto* preprocess = app.add_subcommand("preprocess", "normalize into pipeline segments");
    preprocess->add_option("file", path)->required();
    preprocess->callback([&] { emit_json(pftool::preprocess_report(parse_pfn(slurp(path)))); });

    auto* transform = app.add_subcommand("transform", "expand to a cubic plane network");
    transform->add_option("file", path)->required();
    transform->add_option("-o,--output", out_path);
    transform->callback([&] {
        const CubicResult cr = to_cubic(to_network(parse_pfn(slurp(path))));
        emit(print_pfn(to_pfn(cr.net)), out_path);
    });

    auto* outer = app.add_subcommand("outerplanarity", "peel and report k_E and k_V");
    outer->add_option("file", path)->required();
    outer->add_flag("--layers", layers, "include per-edge and per-vertex rounds");
    outer->callback(
        [&] { emit_json(pftool::outerplanarity_report(parse_pfn(slurp(path)), layers)); });

    auto* reasm = app.add_subcommand("reassemble", "build the merge tree and measure alpha");
    reasm->add_option("file", path)->required();
    reasm->add_flag("--tree", tree, "include the node-by-node tree dump");
    reasm->callback([&] { emit_json(pftool::reassemble_report(parse_pfn(slurp(path)), tree)); });

    auto* maxflow = app.add_subcommand("maxflow", "run the full single-pair pipeline");
    maxflow->add_option("file", path)->required();
    maxflow->add_flag("--verify", verify, "also run the reference solver and compare");
    maxflow->callback([&] {
        pftool::PipelineOptions opt;
        opt.verify = verify;
        emit_json(pftool::run_pipeline(parse_pfn(slurp(path)), opt));
    });

    auto* ext = app.add_subcommand("extended", "interval typing over source/sink subsets");
    ext->add_option("file", path)->required();
    ext->add_flag("--verify", verify, "compare every interval against the reference");
    ext->callback([&] {
        pftool::PipelineOptions opt;
        opt.extended = true;
        opt.verify = verify;
        emit_json(pftool::run_pipeline(parse_pfn(slurp(path)), opt));
    });

    auto* oracle = app.add_subcommand("oracle-check", "diff the pipeline against the oracle");
    oracle->add_option("file", path)->required();
    oracle->add_flag("--extended", extended, "compare interval typings instead of the value");
    oracle->callback([&] {
        pftool::PipelineOptions opt;
        opt.extended = extended;
        opt.verify = true;
        const Json full = pftool::run_pipeline(parse_pfn(slurp(path)), opt);
        Json diff;
        diff["mode"] = full["mode"];
        if (!extended) {
            diff["value"] = full["value"];
            diff["oracle_value"] = full["oracle"]["value"];
        }
        diff["agree"] = full["oracle"]["agree"];
        if (full["oracle"].contains("diffs")) diff["diffs"] = full["oracle"]["diffs"];
        emit_json(diff);
        if (!full["oracle"]["agree"].get<bool>())
            reject(ErrorCode::InvalidParams, "pipeline and oracle disagree");
    });

    auto* gen = app.add_subcommand("gen", "generate an instance with known peel depth");
    gen->add_option("--family", family, "nested-cycles | nested-prisms | random-cubic-plane");
    gen->add_option("--k", k, "target peel depth parameter")->check(CLI::PositiveNumber);
    gen->add_option("--ell", ell, "ring length")->check(CLI::Range(3, 10'000'000));
    gen->add_option("--seed", seed);
    gen->add_option("-o,--output", out_path);
    gen->callback([&] {
        emit(print_pfn(generate_instance(parse_family(family), k, ell, seed)), out_path);
    });

    auto* bench = app.add_subcommand("bench", "time the pipeline over an instance sweep");
    bench->add_option("--family", family);
    bench->add_option("--k", k)->check(CLI::PositiveNumber);
    bench->add_option("--ell", ells, "ring lengths to sweep")->delimiter(',');
    bench->add_option("--reps", reps)->check(CLI::PositiveNumber);
    bench->add_option("--seed", seed);
    bench->add_flag("--json", json_out);
    bench->callback([&] {
        Json rows = Json::array();
        std::vector<double> lx, ly;
        for (const int e : ells) {
            const PfnFile f = generate_instance(parse_family(family), k, e, seed);
            const FlowNetwork n = to_network(f);
            std::vector<long long> times;
            for (int r = 0; r < reps; ++r) times.push_back(time_once_us(n));
            std::sort(times.begin(), times.end());
            const long long med = times[times.size() / 2];
            Json row;
            row["ell"] = e;
            row["n"] = n.g.vertex_count();
            row["median_us"] = med;
            rows.push_back(std::move(row));
            lx.push_back(std::log(static_cast<double>(n.g.vertex_count())));
            ly.push_back(std::log(static_cast<double>(std::max<long long>(med, 1))));
        }
        double slope = 0.0;
        if (lx.size() >= 2) {
            double sx = 0, sy = 0, sxx = 0, sxy = 0;
            for (std::size_t i = 0; i < lx.size(); ++i) {
                sx += lx[i];
                sy += ly[i];
                sxx += lx[i] * lx[i];
                sxy += lx[i] * ly[i];
            }
            const double d = lx.size() * sxx - sx * sx;
            slope = d == 0 ? 0.0 : (lx.size() * sxy - sx * sy) / d;
        }
        if (json_out) {
            Json j;
            j["family"] = family;
            j["k"] = k;
            j["rows"] = std::move(rows);
            if (lx.size() >= 2) j["exponent"] = slope;
            emit_json(j);
            return;
        }
        std::printf("family %s k %d\n", family.c_str(), k);
        std::printf("%8s %10s %12s\n", "ell", "n", "median_us");
        for (const auto& row : rows)
            std::printf("%8d %10llu %12lld\n", row["ell"].get<int>(),
                        row["n"].get<unsigned long long>(), row["median_us"].get<long long>());
        if (lx.size() >= 2) std::printf("fitted exponent: %.3f\n", slope);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const planeflow::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 2;
    }
    return 0;
}

#include <benchmark/benchmark.h>

#include <planeflow/faces.hpp>
#include <planeflow/plane_graph.hpp>

// Ring-of-rings instances are generated inline here; the heavier pipeline
// benchmarks live beside the modules they measure.

namespace {

// k+1 concentric directed rings of length len, consecutive rings joined by
// all radial edges. Same shape as the `all` generator family.
planeflow::PlaneDiGraph rings(int k, int len) {
    using namespace planeflow;
    int rows = k + 1;
    auto vid = [len](int r, int i) { return VertexId(r * len + i); };
    std::vector<PlaneDiGraph::Edge> edges;
    std::vector<std::vector<EdgeId>> rot(rows * len);
    // ring edges first: ring r edge i connects (r,i) -> (r,i+1)
    for (int r = 0; r < rows; ++r)
        for (int i = 0; i < len; ++i)
            edges.push_back({vid(r, i), vid(r, (i + 1) % len)});
    auto ring_edge = [len](int r, int i) { return EdgeId(r * len + i); };
    std::vector<EdgeId> radial(std::size_t(rows) * len, kNone);
    for (int r = 0; r + 1 < rows; ++r)
        for (int i = 0; i < len; ++i) {
            radial[std::size_t(r) * len + i] = EdgeId(edges.size());
            edges.push_back({vid(r, i), vid(r + 1, i)});
        }
    // Ring 0 outermost, position index increasing clockwise. Clockwise order
    // at (r,i): prev-ring-edge, outward radial, next-ring-edge, inward radial.
    for (int r = 0; r < rows; ++r)
        for (int i = 0; i < len; ++i) {
            auto& o = rot[vid(r, i)];
            o.push_back(ring_edge(r, (i + len - 1) % len));
            if (r > 0) o.push_back(radial[std::size_t(r - 1) * len + i]);
            o.push_back(ring_edge(r, i));
            if (r + 1 < rows) o.push_back(radial[std::size_t(r) * len + i]);
        }
    return build_plane_graph(edges, rot, ring_edge(0, 0));
}

void bm_build_and_trace(benchmark::State& state) {
    int k = int(state.range(0));
    int len = int(state.range(1));
    for (auto _ : state) {
        auto g = rings(k, len);
        auto u = planeflow::undirect(g);
        auto fs = planeflow::trace_faces(u, g);
        benchmark::DoNotOptimize(fs.faces.size());
    }
}

} // namespace

BENCHMARK(bm_build_and_trace)->Args({2, 64})->Args({2, 1024})->Args({4, 1024});

BENCHMARK_MAIN();

#include "planeflow/faces.hpp"

namespace planeflow {

Dart face_next(const UndirectedView& u, Dart d) {
    VertexId v = dart_to(u, d);
    const auto& rec = u.uedges[dart_uedge(d)];
    std::uint32_t pos = (rec.a == v) ? rec.slot_a : rec.slot_b;
    const auto& rot = u.rotation[v];
    std::uint32_t nxt = u.rotation[v][(pos + 1) % rot.size()];
    return make_dart(nxt, u.uedges[nxt].a == v);
}

FaceSet trace_faces(const UndirectedView& u, const PlaneDiGraph& g) {
    FaceSet fs;
    const std::size_t darts = 2 * u.uedge_count();
    fs.face_of_dart.assign(darts, kNone);
    if (darts == 0) {
        fs.faces.push_back({});
        fs.outer = 0;
        return fs;
    }
    for (Dart d0 = 0; d0 < darts; ++d0) {
        if (fs.face_of_dart[d0] != kNone) continue;
        FaceId f = static_cast<FaceId>(fs.faces.size());
        fs.faces.push_back({});
        Dart d = d0;
        do {
            fs.face_of_dart[d] = f;
            fs.faces[f].push_back(d);
            d = face_next(u, d);
        } while (d != d0);
    }
    if (g.outer_edge != kNone) {
        Dart w = make_dart(u.uedge_of_edge[g.outer_edge], u.edge_is_forward[g.outer_edge]);
        if (g.outer_flip) w = dart_reverse(w);
        fs.outer = fs.face_of_dart[w];
    }
    return fs;
}

} // namespace planeflow

#pragma once

#include <vector>

#include "planeflow/plane_graph.hpp"

namespace planeflow {

using FaceId = std::uint32_t;

// Faces of the embedded undirected view. Each dart belongs to exactly one
// face: the region on the left of the dart. next(d) leaves the head of d
// along the clockwise successor of d's edge in the head's rotation.
struct FaceSet {
    std::vector<std::vector<Dart>> faces;
    std::vector<FaceId> face_of_dart; // indexed by dart
    FaceId outer = kNone;

    std::size_t face_count() const { return faces.size(); }
};

FaceSet trace_faces(const UndirectedView& u, const PlaneDiGraph& g);

// The dart following d inside the same face.
Dart face_next(const UndirectedView& u, Dart d);

} // namespace planeflow

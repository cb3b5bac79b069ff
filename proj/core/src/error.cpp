#include "planeflow/error.hpp"

namespace planeflow {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateDirectedEdge: return "DuplicateDirectedEdge";
    case ErrorCode::RotationMismatch: return "RotationMismatch";
    case ErrorCode::EmbeddingNotPlanar: return "EmbeddingNotPlanar";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NoPath: return "NoPath";
    case ErrorCode::ForbiddenConfig: return "ForbiddenConfig";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::NotCubic: return "NotCubic";
    case ErrorCode::NotPlane: return "NotPlane";
    case ErrorCode::InvalidTree: return "InvalidTree";
    case ErrorCode::InfeasibleComponent: return "InfeasibleComponent";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::DeltaTooLarge: return "DeltaTooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidParams: return "InvalidParams";
    }
    return "Unknown";
}

} // namespace planeflow

#pragma once

#include <json.hpp>

#include <planeflow/pfn_io.hpp>

namespace pftool {

// Insertion-ordered so reports serialize with a stable key order.
using Json = nlohmann::ordered_json;

struct PipelineOptions {
    bool extended = false; // interval mode over source/sink sets
    bool verify = false;   // run the reference solver and compare exactly
};

// Full pipeline over a parsed file: normalization, cubic transform, peeling,
// reassembling, typing. Rationals are serialized as strings; timings are in
// microseconds and are the only nondeterministic fields.
Json run_pipeline(const planeflow::PfnFile& f, const PipelineOptions& opt);

Json preprocess_report(const planeflow::PfnFile& f);
Json outerplanarity_report(const planeflow::PfnFile& f, bool layers);
Json reassemble_report(const planeflow::PfnFile& f, bool tree);

} // namespace pftool

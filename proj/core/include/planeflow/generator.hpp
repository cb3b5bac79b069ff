#pragma once

#include <cstdint>
#include <string>

#include "planeflow/pfn_io.hpp"

namespace planeflow {

enum class GenFamily { NestedCycles, NestedPrisms, RandomCubicPlane };

// Accepts "nested-cycles", "nested-prisms", "random-cubic-plane".
GenFamily parse_family(const std::string& name);
const char* family_name(GenFamily f);

// Deterministic per (family, k, ell, seed). All families are concentric
// ell-rings joined by radial spokes, drawn with ring 0 outermost:
//   nested-cycles      max(2, k) rings, full spokes; peels in about k rounds
//   nested-prisms      2k rings paired into prisms; peels in 2k rounds
//   random-cubic-plane k+1 rings with random spoke twists, sparse random
//                      spoke deletion and random edge directions
// Vertices of degree 4 are expanded into rings afterwards, which keeps the
// peel depth, so the output is always cubic, biconnected, two-edge-cycle
// free, and of minimum degree 3. Capacities are rationals with numerator
// 0..12 and denominator in {1,2,4,8} drawn from the seed. The source sits
// on the outer ring, the sink on the innermost one.
PfnFile generate_instance(GenFamily family, int k, int ell, std::uint64_t seed);

} // namespace planeflow

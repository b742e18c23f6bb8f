#pragma once

#include "varieties.hpp"

namespace gmld {

struct CountOptions {
    uint64_t seed = 1;
    uint64_t prime = 32003;
    int trials = 3;
    Budget* budget = nullptr;
};

struct MultidegreeVector {
    std::vector<long> entries;
    std::vector<uint64_t> seeds;  // per-trial seeds actually used
};

// One seeded point count of a sliced system over Z/p.
//   gens          generators over Z/p (already reduced)
//   slice_blocks  {variable-index block, how many random hyperplanes}
//   chart_blocks  blocks that get one random affine chart (form == 1)
//   avoid_groups  groups whose vanishing locus is cut away, each through one
//                 Rabinowitsch variable on a random linear combination
// Returns the standard-monomial count; -1 signals a positive-dimensional slice.
long sliced_count_once(const RingP& zp_ring, const std::vector<ZpPoly>& gens,
                       const std::vector<std::pair<std::vector<int>, int>>& slice_blocks,
                       const std::vector<std::vector<int>>& chart_blocks,
                       const std::vector<std::vector<ZpPoly>>& avoid_groups, Rng& rng,
                       Budget* budget);

// Agreement wrapper: all trials must return the same finite count.
long sliced_count(const RingP& zp_ring, const std::vector<ZpPoly>& gens,
                  const std::vector<std::pair<std::vector<int>, int>>& slice_blocks,
                  const std::vector<std::vector<int>>& chart_blocks,
                  const std::vector<std::vector<ZpPoly>>& avoid_groups, const CountOptions& opt,
                  std::vector<uint64_t>* seeds_out);

// Conormal multidegrees delta_i = #(W(X) cut by i x-planes and n-1-i y-planes).
MultidegreeVector polar_degrees(const VarietySpec& X, const RingP& dual, const CountOptions& opt);

// Gradient-graph multidegrees; entry j counts the graph cut by n-j x-planes
// and j y-planes, so a linear form gives (1,0,...,0).
MultidegreeVector gradient_multidegrees(const RatFn& F, const RingP& dual, const CountOptions& opt);

// Emptiness probe over Z/p for large ambient spaces: random charts plus the
// construction's avoid groups, no saturation. Empty on all trials => true.
bool f_general_emptiness_modp(const VarietySpec& X, const RatFn& F, const RingP& dual,
                              const CountOptions& opt);

}  // namespace gmld

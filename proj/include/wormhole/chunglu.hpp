#pragma once

#include <cstdint>
#include <vector>

#include "wormhole/graph.hpp"

namespace wormhole {

/// Parameters of a power-law expected-degree random graph: each pair (i, j)
/// is an edge independently with probability w_i * w_j / W, W = sum of
/// weights. Requires beta in (2, 3) and average degree > 1; the weight
/// sequence is capped so that max(w)^2 <= W, keeping every pair probability
/// at most 1.
struct ChungLuParams {
    std::uint64_t n = 0;
    double beta = 2.5;
    double avg_degree = 10.0;
    std::uint64_t rng_seed = 0;
};

/// Non-increasing weights w_i = c * (i + i0)^(-1/(beta-1)), with c and the
/// offset i0 solved numerically so that mean(w) == avg_degree exactly and
/// w_0^2 <= W. Throws std::invalid_argument on domain violations or when no
/// offset satisfies the cap.
std::vector<double> expected_weights(const ChungLuParams& params);

enum class SampleMethod {
    automatic,  // exact pairwise up to the threshold, skip sampling above
    pairwise,   // O(n^2) independent Bernoulli draws
    skipping,   // geometric skips with per-block upper bounds + rejection
};

inline constexpr std::uint64_t kPairwiseLimit = 30'000;

/// Draws a graph from the model; deterministic given rng_seed. Both sampling
/// methods realize the exact pairwise edge probabilities; skip sampling runs
/// in O(n + m) expected time instead of O(n^2). Isolated nodes are kept.
Graph chunglu_generate(const ChungLuParams& params,
                       SampleMethod method = SampleMethod::automatic);

namespace detail {

/// Raw edge sampler over an explicit non-increasing weight sequence;
/// every pair (i, j) appears with probability min(w_i * w_j / W, 1).
std::vector<std::pair<NodeId, NodeId>> chunglu_sample(
    const std::vector<double>& weights, double total_weight,
    std::uint64_t rng_seed, SampleMethod method);

}  // namespace detail

}  // namespace wormhole

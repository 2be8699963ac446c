#include "wormhole/chunglu.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace wormhole {

namespace {

void validate(const ChungLuParams& p) {
    if (p.n < 2) throw std::invalid_argument("chunglu: n must be at least 2");
    if (!(p.beta > 2.0 && p.beta < 3.0))
        throw std::invalid_argument("chunglu: beta must be in (2,3)");
    if (!(p.avg_degree > 1.0))
        throw std::invalid_argument("chunglu: average degree must exceed 1");
    if (p.avg_degree >= static_cast<double>(p.n))
        throw std::invalid_argument("chunglu: average degree must be below n");
}

// h(i0) = sum_i (1 + i/i0)^(-alpha), increasing in i0. The cap w_0^2 <= W
// is equivalent to h(i0) >= sqrt(W) with W = n * d.
double cap_margin(double i0, double alpha, std::uint64_t n, double W) {
    double h = 0.0;
    for (std::uint64_t i = 0; i < n; ++i)
        h += std::pow(1.0 + static_cast<double>(i) / i0, -alpha);
    return h - std::sqrt(W);
}

}  // namespace

std::vector<double> expected_weights(const ChungLuParams& params) {
    validate(params);
    const std::uint64_t n = params.n;
    const double alpha = 1.0 / (params.beta - 1.0);
    const double W = static_cast<double>(n) * params.avg_degree;

    double lo = 1e-9, hi = 1.0;
    while (cap_margin(hi, alpha, n, W) < 0.0) {
        hi *= 2.0;
        if (hi > 1e18) throw std::invalid_argument("chunglu: weight cap infeasible");
    }
    if (cap_margin(lo, alpha, n, W) < 0.0) {
        for (int iter = 0; iter < 200 && (hi - lo) / hi > 1e-13; ++iter) {
            double mid = 0.5 * (lo + hi);
            (cap_margin(mid, alpha, n, W) < 0.0 ? lo : hi) = mid;
        }
    } else {
        hi = lo;  // even the smallest offset satisfies the cap
    }
    const double i0 = hi;

    std::vector<double> weights(n);
    double sum = 0.0;
    for (std::uint64_t i = 0; i < n; ++i) {
        weights[i] = std::pow(static_cast<double>(i) + i0, -alpha);
        sum += weights[i];
    }
    const double c = W / sum;
    for (double& w : weights) w *= c;
    return weights;
}

namespace {

using EdgeVec = std::vector<std::pair<NodeId, NodeId>>;

EdgeVec sample_pairwise(const std::vector<double>& w, double W,
                        std::mt19937_64& rng) {
    EdgeVec edges;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const std::uint64_t n = w.size();
    for (std::uint64_t i = 0; i + 1 < n; ++i) {
        for (std::uint64_t j = i + 1; j < n; ++j) {
            double p = std::min(1.0, w[i] * w[j] / W);
            if (unit(rng) < p)
                edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(j));
        }
    }
    return edges;
}

// Weights are non-increasing, so for a fixed row i the true probability
// only falls as j grows. Jump ahead geometrically under the upper bound
// taken at the current position, then accept with the exact/upper ratio;
// the realized distribution is identical to independent pairwise draws.
EdgeVec sample_skipping(const std::vector<double>& w, double W,
                        std::mt19937_64& rng) {
    EdgeVec edges;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const std::uint64_t n = w.size();
    for (std::uint64_t i = 0; i + 1 < n; ++i) {
        std::uint64_t j = i + 1;
        double p_bound = std::min(1.0, w[i] * w[j] / W);
        while (j < n && p_bound > 0.0) {
            if (p_bound < 1.0) {
                double u = unit(rng);
                double skip = std::floor(std::log1p(-u) / std::log1p(-p_bound));
                if (skip >= static_cast<double>(n - j)) break;
                j += static_cast<std::uint64_t>(skip);
            }
            double p = std::min(1.0, w[i] * w[j] / W);
            if (unit(rng) < p / p_bound)
                edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(j));
            p_bound = p;
            ++j;
        }
    }
    return edges;
}

}  // namespace

namespace detail {

EdgeVec chunglu_sample(const std::vector<double>& weights, double total_weight,
                       std::uint64_t rng_seed, SampleMethod method) {
    if (method == SampleMethod::automatic)
        method = weights.size() > kPairwiseLimit ? SampleMethod::skipping
                                                 : SampleMethod::pairwise;
    std::mt19937_64 rng(rng_seed);
    return method == SampleMethod::pairwise
               ? sample_pairwise(weights, total_weight, rng)
               : sample_skipping(weights, total_weight, rng);
}

}  // namespace detail

Graph chunglu_generate(const ChungLuParams& params, SampleMethod method) {
    std::vector<double> w = expected_weights(params);
    const double W = static_cast<double>(params.n) * params.avg_degree;
    EdgeVec edges = detail::chunglu_sample(w, W, params.rng_seed, method);
    return Graph::from_edges(params.n, std::move(edges));
}

}  // namespace wormhole

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wormhole/access.hpp"
#include "wormhole/bitset.hpp"
#include "wormhole/graph.hpp"

namespace wormhole {

/// Core-periphery decomposition: the inner ring l0 (grown greedily from a
/// seed), the outer ring l1 = neighbors(l0) \ l0, and the subgraph induced
/// on l0 with a dense relabeling. Immutable once built; share-safe.
struct CoreDecomposition {
    Bitset l0;
    Bitset l1;
    Graph core_graph;
    std::vector<NodeId> core_to_global;  // ascending
    std::vector<NodeId> global_to_core;  // kInvalidNode outside l0
    NodeId seed = 0;
    double target_fraction = 0.0;
    std::uint64_t rng_seed = 0;
    bool truncated = false;

    std::uint64_t l0_size() const { return core_to_global.size(); }
    std::uint64_t l1_size() const { return l1.count(); }

    bool in_l0(NodeId v) const { return l0.test(v); }
    bool in_l1(NodeId v) const { return l1.test(v); }
};

struct Promotion {
    NodeId node;
    std::uint32_t l0_degree;  // neighbors already inside l0 at promotion time
};

/// Grows the inner ring to ceil(target_fraction * n) nodes: starting from
/// the seed, repeatedly promotes the outer-ring vertex with the most
/// neighbors in l0 (ties broken by a PRNG seeded with rng_seed). Every
/// promoted vertex is queried through the session, so the preprocessing
/// query cost is exactly |l0|. If the seed's component is smaller than the
/// target the result is truncated and covers the whole component.
///
/// The promotion heap uses lazy deletion: promotions only ever raise the
/// l0-degree of outer-ring vertices, so stale entries are discarded on pop.
CoreDecomposition core_gen(AccessSession& session, NodeId seed,
                           double target_fraction, std::uint64_t rng_seed,
                           std::vector<Promotion>* trace = nullptr);

/// Rebuilds the induced core graph and relabeling from the l0 bitmap.
void rebuild_core_graph(CoreDecomposition& dec, const Graph& g);

/// Decomposition file: magic "WHDEC1\0", n (u64), seed (u64),
/// fraction (f64), prng seed (u64), truncation flag (u8),
/// l0 bitmap (ceil(n/8) bytes), l1 bitmap (ceil(n/8) bytes); little-endian.
void save_decomposition(const CoreDecomposition& dec, const std::string& path);
CoreDecomposition load_decomposition(const std::string& path, const Graph& g);

/// Exact on-disk size of a decomposition over an n-node graph.
std::uint64_t decomposition_file_bytes(std::uint64_t n);

struct FractionThresholds {
    std::uint64_t small_max_edges = 12'000'000;    // up to ~1.2e7 edges
    std::uint64_t medium_max_edges = 150'000'000;  // up to ~1.5e8 edges
    double small_fraction = 0.06;
    double medium_fraction = 0.04;
    double large_fraction = 0.01;
};

/// Default inner-ring fraction by graph size class.
double default_fraction(std::uint64_t n, std::uint64_t m,
                        const FractionThresholds& t = {});

/// Replays the preprocessing cost into a session: queries every l0 node
/// (the same set CoreGen queried) and marks the "preprocessing" phase.
/// Needed when a decomposition is loaded from disk into a fresh session.
void charge_preprocessing(AccessSession& session, const CoreDecomposition& dec);

}  // namespace wormhole

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wormhole/coregen.hpp"
#include "wormhole/graph.hpp"

namespace wormhole {

/// Shortest-path oracle over the induced core graph. Node ids on this
/// interface are core-graph ids (dec.global_to_core / core_to_global map
/// between them). Implementations are immutable and concurrently readable.
class InnerRingOracle {
public:
    virtual ~InnerRingOracle() = default;

    /// A shortest core path from any source to any target, or nullopt when
    /// no core path exists. Sources and targets must be nonempty.
    virtual std::optional<std::vector<NodeId>> core_path(
        std::span<const NodeId> sources, std::span<const NodeId> targets) const = 0;
};

/// Multi-source bidirectional BFS inside the core, alternating the smaller
/// frontier. The returned path is exactly shortest between the given sets.
std::optional<std::vector<NodeId>> bibfs_core(const CoreDecomposition& dec,
                                              std::span<const NodeId> sources,
                                              std::span<const NodeId> targets);

class BiBfsCoreOracle : public InnerRingOracle {
public:
    explicit BiBfsCoreOracle(const CoreDecomposition& dec) : dec_(&dec) {}
    std::optional<std::vector<NodeId>> core_path(
        std::span<const NodeId> sources,
        std::span<const NodeId> targets) const override {
        return bibfs_core(*dec_, sources, targets);
    }

private:
    const CoreDecomposition* dec_;
};

/// 2-hop cover over the core: every core node stores (hub, distance) labels
/// from pruned BFS runs, hubs processed in descending core-degree order
/// (ties by id). For every connected core pair the minimum over common hubs
/// of the two label distances equals the true core distance, and no entry
/// is kept if an earlier hub already certifies a distance <= it.
class CoreLabelIndex {
public:
    struct Entry {
        NodeId hub;          // core-graph id
        std::uint16_t dist;
    };

    static CoreLabelIndex build(const CoreDecomposition& dec);

    /// Indexed core distance, or nullopt when no common hub connects u, v.
    std::optional<std::uint32_t> distance(NodeId u, NodeId v) const;

    /// Label lists in hub-rank order, one per core node.
    const std::vector<std::vector<Entry>>& labels() const { return labels_; }
    const std::vector<NodeId>& hub_order() const { return hub_order_; }
    std::uint64_t core_size() const { return labels_.size(); }
    std::uint64_t label_entries() const;
    std::uint64_t file_bytes() const;

    /// Index file: magic "WHPLL1\0", core size (u64), per-node label counts
    /// (u32 each), then per node its (hub u32, dist u16) pairs; little-endian.
    void save(const std::string& path) const;
    static CoreLabelIndex load(const std::string& path, const CoreDecomposition& dec);

private:
    std::vector<std::vector<Entry>> labels_;
    std::vector<NodeId> hub_order_;           // rank -> core id
    std::vector<std::uint32_t> rank_of_;      // core id -> rank
};

CoreLabelIndex build_core_index(const CoreDecomposition& dec);

/// A shortest core path recovered from the index by greedy descent: from x,
/// step to the lowest-id core neighbor w with distance(w, v) == distance(x, v) - 1.
std::optional<std::vector<NodeId>> index_core_path(const CoreLabelIndex& index,
                                                   const CoreDecomposition& dec,
                                                   NodeId u, NodeId v);

/// Oracle over a built label index; minimizes over all source/target pairs.
class IndexCoreOracle : public InnerRingOracle {
public:
    IndexCoreOracle(const CoreDecomposition& dec, const CoreLabelIndex& index)
        : dec_(&dec), index_(&index) {}
    std::optional<std::vector<NodeId>> core_path(
        std::span<const NodeId> sources,
        std::span<const NodeId> targets) const override;

private:
    const CoreDecomposition* dec_;
    const CoreLabelIndex* index_;
};

}  // namespace wormhole

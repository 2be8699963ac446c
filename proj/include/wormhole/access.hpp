#pragma once

#include <atomic>
#include <cstdint>
#include <mutex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wormhole/graph.hpp"

namespace wormhole {

/// Query-counting wrapper enforcing the node-query access model: retrieving
/// a node's neighbor list costs one query the first time and is free after.
/// query_count() always equals the number of distinct nodes seen.
///
/// Inserts are atomic, so concurrent inquiries over a shared session keep the
/// count exact; the count and the seen bits converge at quiescent points.
class AccessSession {
public:
    explicit AccessSession(const Graph& g)
        : graph_(&g), seen_(g.num_nodes(), 0) {}

    AccessSession(const AccessSession&) = delete;
    AccessSession& operator=(const AccessSession&) = delete;

    const Graph& graph() const { return *graph_; }

    /// Reveals the neighbor list of v, charging one query if v is new.
    std::span<const NodeId> query(NodeId v) {
        if (v >= graph_->num_nodes())
            throw std::out_of_range("query: node id out of range");
        std::atomic_ref<std::uint8_t> flag(seen_[v]);
        if (flag.exchange(1) == 0)
            count_.fetch_add(1);
        return graph_->neighbors(v);
    }

    bool seen(NodeId v) const {
        return std::atomic_ref<const std::uint8_t>(seen_[v]).load() != 0;
    }

    std::uint64_t query_count() const { return count_.load(); }

    double fraction_seen() const {
        auto n = graph_->num_nodes();
        return n == 0 ? 0.0 : static_cast<double>(count_.load()) / static_cast<double>(n);
    }

    /// Appends a (label, query_count) checkpoint; diffing consecutive marks
    /// yields per-phase query costs.
    void mark_phase(std::string label) {
        std::lock_guard<std::mutex> lock(marks_mutex_);
        phase_marks_.emplace_back(std::move(label), count_.load());
    }

    std::vector<std::pair<std::string, std::uint64_t>> phase_marks() const {
        std::lock_guard<std::mutex> lock(marks_mutex_);
        return phase_marks_;
    }

private:
    const Graph* graph_;
    std::vector<std::uint8_t> seen_;
    std::atomic<std::uint64_t> count_{0};
    mutable std::mutex marks_mutex_;
    std::vector<std::pair<std::string, std::uint64_t>> phase_marks_;
};

}  // namespace wormhole

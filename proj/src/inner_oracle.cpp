#include "wormhole/inner_oracle.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <queue>

#include "binary_io.hpp"
#include "wormhole/baseline.hpp"

namespace wormhole {

namespace {

struct CoreSide {
    std::vector<std::uint32_t> dist;
    std::vector<NodeId> parent;
    std::vector<NodeId> frontier;
    std::uint32_t completed_depth = 0;
};

void seed_side(CoreSide& side, std::span<const NodeId> seeds, std::uint64_t n) {
    side.dist.assign(n, kUnreachable);
    side.parent.assign(n, kInvalidNode);
    std::vector<NodeId> sorted(seeds.begin(), seeds.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (NodeId v : sorted) {
        side.dist[v] = 0;
        side.frontier.push_back(v);
    }
}

}  // namespace

std::optional<std::vector<NodeId>> bibfs_core(const CoreDecomposition& dec,
                                              std::span<const NodeId> sources,
                                              std::span<const NodeId> targets) {
    if (sources.empty() || targets.empty())
        throw std::invalid_argument("bibfs_core: empty source or target set");
    const Graph& core = dec.core_graph;
    const std::uint64_t n = core.num_nodes();
    for (NodeId v : sources)
        if (v >= n) throw std::out_of_range("bibfs_core: source out of core");
    for (NodeId v : targets)
        if (v >= n) throw std::out_of_range("bibfs_core: target out of core");

    CoreSide side_s, side_t;
    seed_side(side_s, sources, n);
    seed_side(side_t, targets, n);

    std::uint32_t best = kUnreachable;
    NodeId best_node = kInvalidNode;
    // Overlapping sets meet at distance 0.
    for (NodeId v : side_s.frontier) {
        if (side_t.dist[v] == 0) {
            best = 0;
            best_node = v;
            break;
        }
    }

    while (best != 0 && !side_s.frontier.empty() && !side_t.frontier.empty()) {
        if (best != kUnreachable &&
            best <= side_s.completed_depth + side_t.completed_depth)
            break;
        CoreSide& grow =
            side_s.frontier.size() <= side_t.frontier.size() ? side_s : side_t;
        CoreSide& other = (&grow == &side_s) ? side_t : side_s;

        std::vector<NodeId> next;
        for (NodeId u : grow.frontier) {
            for (NodeId w : core.neighbors(u)) {
                if (grow.dist[w] != kUnreachable) continue;
                grow.dist[w] = grow.dist[u] + 1;
                grow.parent[w] = u;
                next.push_back(w);
                if (other.dist[w] != kUnreachable) {
                    std::uint32_t total = grow.dist[w] + other.dist[w];
                    if (total < best) {
                        best = total;
                        best_node = w;
                    }
                }
            }
        }
        grow.frontier = std::move(next);
        ++grow.completed_depth;
    }
    if (best == kUnreachable) return std::nullopt;

    std::vector<NodeId> path;
    for (NodeId v = best_node; v != kInvalidNode; v = side_s.parent[v])
        path.push_back(v);
    std::reverse(path.begin(), path.end());
    for (NodeId v = side_t.parent[best_node]; v != kInvalidNode; v = side_t.parent[v])
        path.push_back(v);
    return path;
}

CoreLabelIndex CoreLabelIndex::build(const CoreDecomposition& dec) {
    const Graph& core = dec.core_graph;
    const std::uint64_t n = core.num_nodes();

    CoreLabelIndex index;
    index.labels_.assign(n, {});
    index.hub_order_.resize(n);
    for (std::uint64_t i = 0; i < n; ++i) index.hub_order_[i] = static_cast<NodeId>(i);
    std::sort(index.hub_order_.begin(), index.hub_order_.end(),
              [&](NodeId a, NodeId b) {
                  auto da = core.degree(a), db = core.degree(b);
                  if (da != db) return da > db;
                  return a < b;
              });
    index.rank_of_.assign(n, 0);
    for (std::uint64_t r = 0; r < n; ++r)
        index.rank_of_[index.hub_order_[r]] = static_cast<std::uint32_t>(r);

    // Pruned BFS from each hub in rank order: a node is labeled only when the
    // labels built so far cannot already certify a distance <= the BFS depth.
    std::vector<std::uint32_t> dist(n, kUnreachable);
    std::vector<NodeId> touched;
    for (NodeId hub : index.hub_order_) {
        std::vector<NodeId> frontier{hub};
        dist[hub] = 0;
        touched.push_back(hub);
        std::uint32_t depth = 0;
        while (!frontier.empty()) {
            std::vector<NodeId> next;
            for (NodeId u : frontier) {
                auto certified = index.distance(hub, u);
                if (certified && *certified <= depth) continue;  // pruned
                index.labels_[u].push_back(
                    {hub, static_cast<std::uint16_t>(depth)});
                for (NodeId w : core.neighbors(u)) {
                    if (dist[w] != kUnreachable) continue;
                    dist[w] = depth + 1;
                    next.push_back(w);
                    touched.push_back(w);
                }
            }
            frontier = std::move(next);
            ++depth;
        }
        for (NodeId v : touched) dist[v] = kUnreachable;
        touched.clear();
    }
    return index;
}

std::optional<std::uint32_t> CoreLabelIndex::distance(NodeId u, NodeId v) const {
    const auto& lu = labels_[u];
    const auto& lv = labels_[v];
    std::uint32_t best = kUnreachable;
    std::size_t i = 0, j = 0;
    while (i < lu.size() && j < lv.size()) {
        std::uint32_t ri = rank_of_[lu[i].hub];
        std::uint32_t rj = rank_of_[lv[j].hub];
        if (ri == rj) {
            std::uint32_t total = lu[i].dist + lv[j].dist;
            if (total < best) best = total;
            ++i;
            ++j;
        } else if (ri < rj) {
            ++i;
        } else {
            ++j;
        }
    }
    if (best == kUnreachable) return std::nullopt;
    return best;
}

std::uint64_t CoreLabelIndex::label_entries() const {
    std::uint64_t total = 0;
    for (const auto& l : labels_) total += l.size();
    return total;
}

std::uint64_t CoreLabelIndex::file_bytes() const {
    return 7 + 8 + 4 * core_size() + 6 * label_entries();
}

namespace {
constexpr char kPllMagic[8] = "WHPLL1";
}

void CoreLabelIndex::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot open for writing: " + path);
    detail::put_magic(out, kPllMagic);
    detail::put_u64(out, core_size());
    for (const auto& l : labels_)
        detail::put_u32(out, static_cast<std::uint32_t>(l.size()));
    for (const auto& l : labels_) {
        for (const auto& e : l) {
            detail::put_u32(out, static_cast<std::uint32_t>(e.hub));
            detail::put_u16(out, e.dist);
        }
    }
    if (!out) throw FormatError("write failed: " + path);
}

CoreLabelIndex CoreLabelIndex::load(const std::string& path,
                                    const CoreDecomposition& dec) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open: " + path);
    detail::check_magic(in, kPllMagic, "core index");
    std::uint64_t n = detail::get_u64(in);
    if (n != dec.core_graph.num_nodes())
        throw FormatError("core index: core size mismatch with decomposition");

    CoreLabelIndex index;
    index.labels_.assign(n, {});
    std::vector<std::uint32_t> counts(n);
    for (auto& c : counts) c = detail::get_u32(in);
    for (std::uint64_t v = 0; v < n; ++v) {
        index.labels_[v].resize(counts[v]);
        for (auto& e : index.labels_[v]) {
            e.hub = detail::get_u32(in);
            e.dist = detail::get_u16(in);
            if (e.hub >= n) throw FormatError("core index: hub out of range");
        }
    }

    // Hub order is a function of the core graph; recompute for rank lookups.
    const Graph& core = dec.core_graph;
    index.hub_order_.resize(n);
    for (std::uint64_t i = 0; i < n; ++i) index.hub_order_[i] = static_cast<NodeId>(i);
    std::sort(index.hub_order_.begin(), index.hub_order_.end(),
              [&](NodeId a, NodeId b) {
                  auto da = core.degree(a), db = core.degree(b);
                  if (da != db) return da > db;
                  return a < b;
              });
    index.rank_of_.assign(n, 0);
    for (std::uint64_t r = 0; r < n; ++r)
        index.rank_of_[index.hub_order_[r]] = static_cast<std::uint32_t>(r);
    return index;
}

CoreLabelIndex build_core_index(const CoreDecomposition& dec) {
    return CoreLabelIndex::build(dec);
}

std::optional<std::vector<NodeId>> index_core_path(const CoreLabelIndex& index,
                                                   const CoreDecomposition& dec,
                                                   NodeId u, NodeId v) {
    auto total = index.distance(u, v);
    if (u == v) return std::vector<NodeId>{u};
    if (!total) return std::nullopt;

    std::vector<NodeId> path{u};
    NodeId x = u;
    std::uint32_t remaining = *total;
    while (x != v) {
        bool stepped = false;
        for (NodeId w : dec.core_graph.neighbors(x)) {  // ascending ids
            auto dw = index.distance(w, v);
            if (dw && *dw == remaining - 1) {
                stepped = true;
                x = w;
                break;
            }
        }
        if (!stepped)
            throw std::logic_error("index_core_path: descent stuck; index inexact");
        --remaining;
        path.push_back(x);
    }
    return path;
}

std::optional<std::vector<NodeId>> IndexCoreOracle::core_path(
    std::span<const NodeId> sources, std::span<const NodeId> targets) const {
    if (sources.empty() || targets.empty())
        throw std::invalid_argument("core_path: empty source or target set");
    std::uint32_t best = kUnreachable;
    NodeId best_u = kInvalidNode, best_v = kInvalidNode;
    for (NodeId u : sources) {
        for (NodeId v : targets) {
            std::optional<std::uint32_t> d =
                u == v ? std::optional<std::uint32_t>(0) : index_->distance(u, v);
            if (d && *d < best) {
                best = *d;
                best_u = u;
                best_v = v;
            }
        }
    }
    if (best == kUnreachable) return std::nullopt;
    return index_core_path(*index_, *dec_, best_u, best_v);
}

}  // namespace wormhole

#include "wormhole/baseline.hpp"

#include <algorithm>
#include <utility>

namespace wormhole {

namespace {

struct SearchSide {
    std::vector<std::uint32_t> dist;
    std::vector<NodeId> parent;
    std::vector<NodeId> frontier;
    std::uint32_t completed_depth = 0;
};

// Alternating level expansion, smaller frontier first. A meeting candidate
// (w, dist_s(w) + dist_t(w)) is final once its total cannot be undercut by
// paths longer than the completed depths; when a side exhausts, its BFS
// distances are final, so the recorded best is already exact.
template <class NeighborFn>
std::optional<std::pair<NodeId, std::uint32_t>> bibfs_meet(
    std::uint64_t n, NodeId s, NodeId t, NeighborFn&& neighbors_of,
    SearchSide& side_s, SearchSide& side_t) {
    side_s.dist.assign(n, kUnreachable);
    side_t.dist.assign(n, kUnreachable);
    side_s.parent.assign(n, kInvalidNode);
    side_t.parent.assign(n, kInvalidNode);
    side_s.dist[s] = 0;
    side_t.dist[t] = 0;
    side_s.frontier = {s};
    side_t.frontier = {t};

    if (s == t) return std::make_pair(s, 0u);

    std::uint32_t best = kUnreachable;
    NodeId best_node = kInvalidNode;
    while (!side_s.frontier.empty() && !side_t.frontier.empty()) {
        if (best != kUnreachable &&
            best <= side_s.completed_depth + side_t.completed_depth)
            break;
        SearchSide& grow =
            side_s.frontier.size() <= side_t.frontier.size() ? side_s : side_t;
        SearchSide& other = (&grow == &side_s) ? side_t : side_s;

        std::vector<NodeId> next;
        for (NodeId u : grow.frontier) {
            for (NodeId w : neighbors_of(u)) {
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
    return std::make_pair(best_node, best);
}

std::vector<NodeId> assemble_path(NodeId meet, const SearchSide& side_s,
                                  const SearchSide& side_t) {
    std::vector<NodeId> path;
    for (NodeId v = meet; v != kInvalidNode; v = side_s.parent[v])
        path.push_back(v);
    std::reverse(path.begin(), path.end());
    for (NodeId v = side_t.parent[meet]; v != kInvalidNode; v = side_t.parent[v])
        path.push_back(v);
    return path;
}

}  // namespace

PathResult bibfs(AccessSession& session, NodeId s, NodeId t) {
    const Graph& g = session.graph();
    if (s >= g.num_nodes() || t >= g.num_nodes())
        throw std::out_of_range("bibfs: node id out of range");

    const std::uint64_t before = session.query_count();
    SearchSide side_s, side_t;
    auto meet = bibfs_meet(
        g.num_nodes(), s, t, [&](NodeId u) { return session.query(u); },
        side_s, side_t);
    if (!meet) throw DisconnectedError();

    PathResult result;
    result.path = assemble_path(meet->first, side_s, side_t);
    result.length = meet->second;
    result.queries_used = session.query_count() - before;
    result.kind = RouteCase::exact;
    return result;
}

std::optional<std::uint32_t> bibfs_distance(const Graph& g, NodeId s, NodeId t) {
    if (s >= g.num_nodes() || t >= g.num_nodes())
        throw std::out_of_range("bibfs_distance: node id out of range");
    SearchSide side_s, side_t;
    auto meet = bibfs_meet(
        g.num_nodes(), s, t, [&](NodeId u) { return g.neighbors(u); }, side_s,
        side_t);
    if (!meet) return std::nullopt;
    return meet->second;
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, NodeId s) {
    std::vector<std::uint32_t> dist(g.num_nodes(), kUnreachable);
    dist[s] = 0;
    std::vector<NodeId> frontier{s};
    while (!frontier.empty()) {
        std::vector<NodeId> next;
        for (NodeId u : frontier) {
            for (NodeId w : g.neighbors(u)) {
                if (dist[w] != kUnreachable) continue;
                dist[w] = dist[u] + 1;
                next.push_back(w);
            }
        }
        frontier = std::move(next);
    }
    return dist;
}

}  // namespace wormhole

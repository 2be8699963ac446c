#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wormhole/access.hpp"
#include "wormhole/graph.hpp"
#include "wormhole/path_result.hpp"

namespace wormhole {

/// Thrown when s and t are provably in different components.
class DisconnectedError : public std::runtime_error {
public:
    DisconnectedError() : std::runtime_error("no path: endpoints disconnected") {}
};

/// Exact bidirectional BFS over the full graph, counted through the session.
/// Expands the smaller frontier first and stops once the best meeting point
/// can no longer be improved, so the returned length is the true distance.
PathResult bibfs(AccessSession& session, NodeId s, NodeId t);

/// Session-free exact distance, for ground truth that must not perturb
/// query counts. nullopt when disconnected.
std::optional<std::uint32_t> bibfs_distance(const Graph& g, NodeId s, NodeId t);

inline constexpr std::uint32_t kUnreachable = 0xffffffffu;

/// Single-source BFS distances; unreachable nodes marked kUnreachable.
/// Test and metrics oracle only.
std::vector<std::uint32_t> bfs_distances(const Graph& g, NodeId s);

}  // namespace wormhole

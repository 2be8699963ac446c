#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "wormhole/graph.hpp"

namespace wormhole {

/// How an inquiry was resolved.
enum class RouteCase : std::uint8_t {
    same_node,           // s == t
    direct_edge,         // t found in the first neighbor list of s
    intersect_outside,   // search trees met outside the inner ring
    through_core,        // stitched through the inner-ring oracle
    exhausted_component, // a side ran out of nodes without contact (error tag)
    exact,               // full-graph exact search (baseline)
};

std::string_view to_string(RouteCase c);

/// A returned path p_0..p_len with p_0 = s, p_len = t, every consecutive
/// pair an edge, no repeated nodes. length is always >= the true distance.
struct PathResult {
    std::vector<NodeId> path;
    std::uint32_t length = 0;
    std::uint64_t queries_used = 0;
    RouteCase kind = RouteCase::same_node;
};

}  // namespace wormhole

#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "wormhole/access.hpp"
#include "wormhole/coregen.hpp"
#include "wormhole/graph.hpp"
#include "wormhole/inner_oracle.hpp"
#include "wormhole/path_result.hpp"

namespace wormhole {

/// Which endpoints the inner-ring oracle searches between.
enum class Variant {
    E,  // full contact sets, multi-source / multi-target
    H,  // single highest-degree contact on each side
};

/// BFS tree of one endpoint. Expansion stops for good once the contact set
/// is nonempty. Contacts are inner-ring nodes and carry parent links like
/// every other tree node; all remaining tree nodes are outside the ring.
struct SearchTree {
    struct Link {
        NodeId parent;        // kInvalidNode at the root
        std::uint32_t depth;
    };

    NodeId root = 0;
    std::unordered_map<NodeId, Link> nodes;
    std::vector<NodeId> frontier;   // deepest level still expandable
    std::vector<NodeId> contacts;   // C(i), in discovery order
    bool stopped = false;           // contact found; never expanded again
    bool exhausted = false;         // component ran out without contact

    bool contains(NodeId v) const { return nodes.contains(v); }
    std::vector<NodeId> path_from_root(NodeId v) const;
};

class ExhaustedComponentError : public std::runtime_error {
public:
    enum class Side { source, target, core };
    explicit ExhaustedComponentError(Side side)
        : std::runtime_error("no route: search exhausted without reaching the inner ring"),
          side_(side) {}
    Side side() const { return side_; }

private:
    Side side_;
};

/// Answers SP(s, t): expands both trees level by level, one level each per
/// turn, until they meet outside the ring or both have inner-ring contacts;
/// in the latter case the oracle finds a shortest core path between the
/// contact sets (variant E) or between the highest-degree contacts
/// (variant H, ties to the lowest id) and the walks are stitched together.
/// Traversal outside the ring goes through the session; the induced core
/// graph and the ring membership known from preprocessing cost no queries.
PathResult route(AccessSession& session, const CoreDecomposition& dec,
                 NodeId s, NodeId t, const InnerRingOracle& oracle,
                 Variant variant);

/// route without the materialized path; always equals route(...).length.
std::uint32_t distance_only(AccessSession& session, const CoreDecomposition& dec,
                            NodeId s, NodeId t, const InnerRingOracle& oracle,
                            Variant variant);

/// Concatenates tree_s's root-to-contact walk, the core path, and tree_t's
/// walk reversed, then splices out any cycle between repeated nodes. With an
/// empty core path the trees must share a node; the meeting node of minimum
/// combined depth (ties to the lowest id) joins the walks instead.
std::vector<NodeId> stitch(const SearchTree& tree_s,
                           std::span<const NodeId> core_path,
                           const SearchTree& tree_t);

}  // namespace wormhole

#include "wormhole/router.hpp"

#include <algorithm>
#include <limits>

namespace wormhole {

std::vector<NodeId> SearchTree::path_from_root(NodeId v) const {
    std::vector<NodeId> path;
    for (NodeId x = v;; x = nodes.at(x).parent) {
        path.push_back(x);
        if (x == root) break;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

namespace {

struct SideState {
    SearchTree tree;
    ExhaustedComponentError::Side tag;
};

void init_side(SideState& side, NodeId root, const CoreDecomposition& dec) {
    side.tree.root = root;
    side.tree.nodes.emplace(root, SearchTree::Link{kInvalidNode, 0});
    if (dec.in_l0(root)) {
        side.tree.contacts.push_back(root);
        side.tree.stopped = true;
    } else {
        side.tree.frontier.push_back(root);
    }
}

// One single-level expansion. New nodes inside the ring become contacts
// directly (possible only off an outer-ring root). Otherwise any new
// outer-ring node contributes its ring neighbors as contacts one level
// deeper: those edges were revealed when preprocessing queried the ring,
// so no session queries are spent on them.
void expand_level(SideState& side, SideState& other, AccessSession& session,
                  const CoreDecomposition& dec, std::vector<NodeId>& meets) {
    SearchTree& tree = side.tree;
    const Graph& g = session.graph();

    std::vector<NodeId> next_frontier;
    std::vector<NodeId> direct_contacts;
    std::vector<NodeId> l1_nodes;
    for (NodeId x : tree.frontier) {
        const std::uint32_t child_depth = tree.nodes.at(x).depth + 1;
        for (NodeId w : session.query(x)) {
            if (tree.contains(w)) continue;
            tree.nodes.emplace(w, SearchTree::Link{x, child_depth});
            if (dec.in_l0(w)) {
                direct_contacts.push_back(w);
            } else {
                next_frontier.push_back(w);
                if (dec.in_l1(w)) l1_nodes.push_back(w);
                if (other.tree.contains(w)) meets.push_back(w);
            }
        }
    }
    tree.frontier = std::move(next_frontier);

    if (!direct_contacts.empty()) {
        tree.contacts = std::move(direct_contacts);
        tree.stopped = true;
        return;
    }
    if (!l1_nodes.empty()) {
        for (NodeId w : l1_nodes) {
            const std::uint32_t contact_depth = tree.nodes.at(w).depth + 1;
            for (NodeId c : g.neighbors(w)) {
                if (!dec.in_l0(c) || tree.contains(c)) continue;
                tree.nodes.emplace(c, SearchTree::Link{w, contact_depth});
                tree.contacts.push_back(c);
            }
        }
        tree.stopped = true;
        return;
    }
    if (tree.frontier.empty()) tree.exhausted = true;
}

NodeId highest_degree_contact(const SearchTree& tree, const Graph& g) {
    NodeId best = tree.contacts.front();
    std::uint32_t best_deg = g.degree(best);
    for (NodeId c : tree.contacts) {
        std::uint32_t d = g.degree(c);
        if (d > best_deg || (d == best_deg && c < best)) {
            best = c;
            best_deg = d;
        }
    }
    return best;
}

std::vector<NodeId> to_core_ids(std::span<const NodeId> global,
                                const CoreDecomposition& dec) {
    std::vector<NodeId> core;
    core.reserve(global.size());
    for (NodeId v : global) core.push_back(dec.global_to_core[v]);
    return core;
}

PathResult finish(std::vector<NodeId> path, RouteCase kind,
                  const AccessSession& session, std::uint64_t before) {
    PathResult r;
    r.length = static_cast<std::uint32_t>(path.size() - 1);
    r.path = std::move(path);
    r.queries_used = session.query_count() - before;
    r.kind = kind;
    return r;
}

}  // namespace

PathResult route(AccessSession& session, const CoreDecomposition& dec,
                 NodeId s, NodeId t, const InnerRingOracle& oracle,
                 Variant variant) {
    const Graph& g = session.graph();
    if (s >= g.num_nodes() || t >= g.num_nodes())
        throw std::out_of_range("route: node id out of range");

    const std::uint64_t before = session.query_count();
    if (s == t) return finish({s}, RouteCase::same_node, session, before);

    auto nbrs_s = session.query(s);
    if (std::binary_search(nbrs_s.begin(), nbrs_s.end(), t))
        return finish({s, t}, RouteCase::direct_edge, session, before);
    session.query(t);

    SideState side_s{{}, ExhaustedComponentError::Side::source};
    SideState side_t{{}, ExhaustedComponentError::Side::target};
    init_side(side_s, s, dec);
    init_side(side_t, t, dec);

    std::vector<NodeId> meets;
    while (!(side_s.tree.stopped && side_t.tree.stopped)) {
        bool progressed = false;
        for (SideState* me : {&side_s, &side_t}) {
            SideState& other = (me == &side_s) ? side_t : side_s;
            if (me->tree.stopped || me->tree.exhausted) continue;
            expand_level(*me, other, session, dec, meets);
            progressed = true;
            if (!meets.empty())
                return finish(stitch(side_s.tree, {}, side_t.tree),
                              RouteCase::intersect_outside, session, before);
            if (me->tree.exhausted) throw ExhaustedComponentError(me->tag);
        }
        if (!progressed)
            throw std::logic_error("route: no expandable side");  // unreachable
    }

    std::vector<NodeId> sources, targets;
    if (variant == Variant::H) {
        sources = {dec.global_to_core[highest_degree_contact(side_s.tree, g)]};
        targets = {dec.global_to_core[highest_degree_contact(side_t.tree, g)]};
    } else {
        sources = to_core_ids(side_s.tree.contacts, dec);
        targets = to_core_ids(side_t.tree.contacts, dec);
    }
    auto core_path = oracle.core_path(sources, targets);
    if (!core_path)
        throw ExhaustedComponentError(ExhaustedComponentError::Side::core);

    std::vector<NodeId> core_global;
    core_global.reserve(core_path->size());
    for (NodeId v : *core_path) core_global.push_back(dec.core_to_global[v]);
    return finish(stitch(side_s.tree, core_global, side_t.tree),
                  RouteCase::through_core, session, before);
}

std::uint32_t distance_only(AccessSession& session, const CoreDecomposition& dec,
                            NodeId s, NodeId t, const InnerRingOracle& oracle,
                            Variant variant) {
    return route(session, dec, s, t, oracle, variant).length;
}

namespace {

// Removes every cycle between two occurrences of the same node, keeping the
// first occurrence.
std::vector<NodeId> splice_repeats(const std::vector<NodeId>& walk) {
    std::vector<NodeId> out;
    out.reserve(walk.size());
    std::unordered_map<NodeId, std::size_t> position;
    position.reserve(walk.size());
    for (NodeId x : walk) {
        auto it = position.find(x);
        if (it == position.end()) {
            position.emplace(x, out.size());
            out.push_back(x);
        } else {
            for (std::size_t i = out.size(); i > it->second + 1; --i)
                position.erase(out[i - 1]);
            out.resize(it->second + 1);
        }
    }
    return out;
}

}  // namespace

std::vector<NodeId> stitch(const SearchTree& tree_s,
                           std::span<const NodeId> core_path,
                           const SearchTree& tree_t) {
    std::vector<NodeId> walk;
    if (core_path.empty()) {
        const SearchTree& small =
            tree_s.nodes.size() <= tree_t.nodes.size() ? tree_s : tree_t;
        const SearchTree& large = (&small == &tree_s) ? tree_t : tree_s;
        NodeId meet = kInvalidNode;
        std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
        for (const auto& [v, link] : small.nodes) {
            auto it = large.nodes.find(v);
            if (it == large.nodes.end()) continue;
            std::uint64_t combined = link.depth + it->second.depth;
            if (combined < best || (combined == best && v < meet)) {
                best = combined;
                meet = v;
            }
        }
        if (meet == kInvalidNode)
            throw std::logic_error("stitch: empty core path but trees do not meet");
        walk = tree_s.path_from_root(meet);
        auto back = tree_t.path_from_root(meet);
        walk.insert(walk.end(), back.rbegin() + 1, back.rend());
    } else {
        if (!tree_s.contains(core_path.front()) || !tree_t.contains(core_path.back()))
            throw std::logic_error("stitch: core path endpoints not in trees");
        walk = tree_s.path_from_root(core_path.front());
        walk.insert(walk.end(), core_path.begin() + 1, core_path.end());
        auto back = tree_t.path_from_root(core_path.back());
        walk.insert(walk.end(), back.rbegin() + 1, back.rend());
    }
    walk = splice_repeats(walk);
    if (walk.front() != tree_s.root || walk.back() != tree_t.root)
        throw std::logic_error("stitch: endpoints do not match tree roots");
    return walk;
}

}  // namespace wormhole

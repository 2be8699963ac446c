#include "wormhole/coregen.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <queue>
#include <random>

#include "binary_io.hpp"

namespace wormhole {

namespace {

struct HeapEntry {
    std::uint32_t l0_degree;
    std::uint64_t tie;  // fresh random draw per push; max wins among equals
    NodeId node;
    bool operator<(const HeapEntry& o) const {
        if (l0_degree != o.l0_degree) return l0_degree < o.l0_degree;
        if (tie != o.tie) return tie < o.tie;
        return node < o.node;
    }
};

}  // namespace

CoreDecomposition core_gen(AccessSession& session, NodeId seed,
                           double target_fraction, std::uint64_t rng_seed,
                           std::vector<Promotion>* trace) {
    const Graph& g = session.graph();
    const std::uint64_t n = g.num_nodes();
    if (!(target_fraction > 0.0 && target_fraction < 1.0))
        throw std::invalid_argument("target_fraction must be in (0,1)");
    if (seed >= n) throw std::out_of_range("seed node out of range");

    const std::uint64_t target = static_cast<std::uint64_t>(
        std::ceil(target_fraction * static_cast<double>(n)));

    CoreDecomposition dec;
    dec.l0 = Bitset(n);
    dec.l1 = Bitset(n);
    dec.seed = seed;
    dec.target_fraction = target_fraction;
    dec.rng_seed = rng_seed;

    std::mt19937_64 rng(rng_seed);
    std::vector<std::uint32_t> l0_degree(n, 0);
    std::priority_queue<HeapEntry> heap;
    std::uint64_t l0_count = 0;

    auto absorb = [&](NodeId u) {
        // u joins l0; its neighbors move into (or gain weight in) l1.
        dec.l0.set(u);
        ++l0_count;
        if (dec.l1.test(u)) dec.l1.reset(u);
        for (NodeId w : session.query(u)) {
            if (dec.l0.test(w)) continue;
            dec.l1.set(w);
            ++l0_degree[w];
            heap.push({l0_degree[w], rng(), w});
        }
    };

    absorb(seed);
    if (trace) trace->push_back({seed, 0});

    while (l0_count < target && !heap.empty()) {
        HeapEntry top = heap.top();
        heap.pop();
        if (dec.l0.test(top.node) || top.l0_degree != l0_degree[top.node])
            continue;  // stale
        if (trace) trace->push_back({top.node, top.l0_degree});
        absorb(top.node);
    }
    dec.truncated = l0_count < target;

    rebuild_core_graph(dec, g);
    return dec;
}

void rebuild_core_graph(CoreDecomposition& dec, const Graph& g) {
    const std::uint64_t n = g.num_nodes();
    dec.core_to_global.clear();
    for (std::uint64_t v = 0; v < n; ++v)
        if (dec.l0.test(v)) dec.core_to_global.push_back(static_cast<NodeId>(v));

    dec.global_to_core.assign(n, kInvalidNode);
    for (std::size_t i = 0; i < dec.core_to_global.size(); ++i)
        dec.global_to_core[dec.core_to_global[i]] = static_cast<NodeId>(i);

    std::vector<std::pair<NodeId, NodeId>> edges;
    for (std::size_t i = 0; i < dec.core_to_global.size(); ++i) {
        NodeId u = dec.core_to_global[i];
        for (NodeId w : g.neighbors(u)) {
            if (w > u && dec.l0.test(w))
                edges.emplace_back(static_cast<NodeId>(i), dec.global_to_core[w]);
        }
    }
    dec.core_graph = Graph::from_edges(dec.core_to_global.size(), std::move(edges));
}

namespace {
constexpr char kDecMagic[8] = "WHDEC1";
}

void save_decomposition(const CoreDecomposition& dec, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot open for writing: " + path);
    detail::put_magic(out, kDecMagic);
    detail::put_u64(out, dec.l0.size());
    detail::put_u64(out, dec.seed);
    detail::put_f64(out, dec.target_fraction);
    detail::put_u64(out, dec.rng_seed);
    detail::put_u8(out, dec.truncated ? 1 : 0);
    out.write(reinterpret_cast<const char*>(dec.l0.bytes().data()),
              static_cast<std::streamsize>(dec.l0.bytes().size()));
    out.write(reinterpret_cast<const char*>(dec.l1.bytes().data()),
              static_cast<std::streamsize>(dec.l1.bytes().size()));
    if (!out) throw FormatError("write failed: " + path);
}

CoreDecomposition load_decomposition(const std::string& path, const Graph& g) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open: " + path);
    detail::check_magic(in, kDecMagic, "decomposition");
    std::uint64_t n = detail::get_u64(in);
    if (n != g.num_nodes())
        throw FormatError("decomposition: node count mismatch with graph");

    CoreDecomposition dec;
    dec.seed = static_cast<NodeId>(detail::get_u64(in));
    dec.target_fraction = detail::get_f64(in);
    dec.rng_seed = detail::get_u64(in);
    dec.truncated = detail::get_u8(in) != 0;

    dec.l0 = Bitset(n);
    dec.l1 = Bitset(n);
    if (!in.read(reinterpret_cast<char*>(dec.l0.bytes().data()),
                 static_cast<std::streamsize>(dec.l0.bytes().size())) ||
        !in.read(reinterpret_cast<char*>(dec.l1.bytes().data()),
                 static_cast<std::streamsize>(dec.l1.bytes().size())))
        throw FormatError("decomposition: truncated file");

    rebuild_core_graph(dec, g);
    return dec;
}

std::uint64_t decomposition_file_bytes(std::uint64_t n) {
    return 7 + 8 + 8 + 8 + 8 + 1 + 2 * ((n + 7) / 8);
}

double default_fraction(std::uint64_t n, std::uint64_t m,
                        const FractionThresholds& t) {
    if (n == 0 || m == 0) throw std::invalid_argument("empty graph");
    if (m <= t.small_max_edges) return t.small_fraction;
    if (m <= t.medium_max_edges) return t.medium_fraction;
    return t.large_fraction;
}

void charge_preprocessing(AccessSession& session, const CoreDecomposition& dec) {
    for (NodeId v : dec.core_to_global) session.query(v);
    session.mark_phase("preprocessing");
}

}  // namespace wormhole

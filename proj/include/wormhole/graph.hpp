#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wormhole {

#ifdef WORMHOLE_WIDE_NODE_IDS
using NodeId = std::uint64_t;
#else
using NodeId = std::uint32_t;
#endif

inline constexpr NodeId kInvalidNode = static_cast<NodeId>(-1);

/// Thrown on malformed text input; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, std::size_t line)
        : std::runtime_error(std::move(msg)), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Thrown on binary-format problems: bad magic, truncation, size mismatch.
class FormatError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Immutable undirected graph over dense node ids [0, n) in CSR form.
///
/// Invariants: offsets[0] == 0, offsets[n] == 2m, offsets non-decreasing;
/// each neighbor slice strictly ascending; no self-loops or duplicate
/// edges; adjacency symmetric. Safe for concurrent reads once built.
class Graph {
public:
    Graph() = default;

    /// Builds from undirected edges (u < v, deduplicated, self-loop free,
    /// endpoints < n). Throws std::invalid_argument on violations.
    static Graph from_edges(std::uint64_t n,
                            std::vector<std::pair<NodeId, NodeId>> edges);

    std::uint64_t num_nodes() const { return n_; }
    std::uint64_t num_edges() const { return m_; }

    std::uint32_t degree(NodeId v) const {
        check_node(v);
        return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
    }

    /// Sorted neighbor slice of v; length == degree(v).
    std::span<const NodeId> neighbors(NodeId v) const {
        check_node(v);
        return {neighbors_.data() + offsets_[v],
                neighbors_.data() + offsets_[v + 1]};
    }

    bool has_edge(NodeId u, NodeId v) const;

    const std::vector<std::uint64_t>& offsets() const { return offsets_; }
    const std::vector<NodeId>& neighbor_array() const { return neighbors_; }

    bool operator==(const Graph& other) const = default;

private:
    void check_node(NodeId v) const {
        if (v >= n_) throw std::out_of_range("node id out of range");
    }

    std::uint64_t n_ = 0;
    std::uint64_t m_ = 0;
    std::vector<std::uint64_t> offsets_{0};
    std::vector<NodeId> neighbors_;
};

/// Result of text ingestion: the graph plus the dense-id -> original-label
/// map (labels[i] is the input label of node i; ascending).
struct EdgeListResult {
    Graph graph;
    std::vector<std::uint64_t> labels;
};

/// Parses whitespace-separated "u v" pairs. Lines starting with '#' or '%'
/// are comments. Directed/duplicate/self-loop inputs are symmetrized and
/// collapsed; labels are remapped to dense [0, n) in ascending label order.
/// Throws ParseError on malformed tokens, FormatError when no edges remain.
EdgeListResult ingest_edge_list(std::istream& in);

/// Binary CSR round trip: magic "WHCSR1\0", n (u64), m (u64),
/// offsets ((n+1) x u64), neighbors (2m x u32), little-endian.
void save_csr(const Graph& g, const std::string& path);
Graph load_csr(const std::string& path);

/// Label sidecar: magic "WHLBL1\0", n (u64), labels (n x u64), little-endian.
void save_labels(const std::vector<std::uint64_t>& labels, const std::string& path);
std::vector<std::uint64_t> load_labels(const std::string& path);

/// Writes one "u v" line per edge (u < v), in dense ids.
void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace wormhole

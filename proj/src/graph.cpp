#include "wormhole/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_map>
#include <utility>

#include "binary_io.hpp"

namespace wormhole {

Graph Graph::from_edges(std::uint64_t n,
                        std::vector<std::pair<NodeId, NodeId>> edges) {
    Graph g;
    g.n_ = n;
    g.m_ = edges.size();
    g.offsets_.assign(n + 1, 0);
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop");
        ++g.offsets_[u + 1];
        ++g.offsets_[v + 1];
    }
    for (std::uint64_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];

    g.neighbors_.resize(2 * g.m_);
    std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
        g.neighbors_[cursor[u]++] = v;
        g.neighbors_[cursor[v]++] = u;
    }
    for (std::uint64_t v = 0; v < n; ++v) {
        auto first = g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
        auto last = g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
        std::sort(first, last);
        if (std::adjacent_find(first, last) != last)
            throw std::invalid_argument("duplicate edge");
    }
    return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

EdgeListResult ingest_edge_list(std::istream& in) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t pos = 0;
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos])))
            ++pos;
        if (pos == line.size() || line[pos] == '#' || line[pos] == '%') continue;

        std::vector<std::uint64_t> tokens;
        while (pos < line.size()) {
            while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos])))
                ++pos;
            if (pos == line.size()) break;
            std::size_t end = pos;
            while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end])))
                ++end;
            std::uint64_t value = 0;
            auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + end, value);
            if (ec != std::errc() || ptr != line.data() + end)
                throw ParseError("malformed token '" + line.substr(pos, end - pos) +
                                     "' at line " + std::to_string(lineno),
                                 lineno);
            tokens.push_back(value);
            pos = end;
        }
        if (tokens.size() % 2 != 0)
            throw ParseError("odd number of endpoints at line " + std::to_string(lineno),
                             lineno);
        for (std::size_t i = 0; i < tokens.size(); i += 2) {
            std::uint64_t u = tokens[i], v = tokens[i + 1];
            if (u == v) continue;  // self-loops dropped
            raw.emplace_back(std::min(u, v), std::max(u, v));
        }
    }
    if (raw.empty())
        throw FormatError("edge list: no edges in input");

    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

    // Dense ids in ascending label order; only nodes with a surviving edge.
    std::vector<std::uint64_t> labels;
    labels.reserve(raw.size() * 2);
    for (const auto& [u, v] : raw) {
        labels.push_back(u);
        labels.push_back(v);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

    std::unordered_map<std::uint64_t, NodeId> dense;
    dense.reserve(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i)
        dense.emplace(labels[i], static_cast<NodeId>(i));

    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(raw.size());
    for (const auto& [u, v] : raw)
        edges.emplace_back(dense.at(u), dense.at(v));

    EdgeListResult result;
    result.graph = Graph::from_edges(labels.size(), std::move(edges));
    result.labels = std::move(labels);
    return result;
}

namespace {
constexpr char kCsrMagic[8] = "WHCSR1";
constexpr char kLabelMagic[8] = "WHLBL1";
}  // namespace

void save_csr(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot open for writing: " + path);
    detail::put_magic(out, kCsrMagic);
    detail::put_u64(out, g.num_nodes());
    detail::put_u64(out, g.num_edges());
    for (std::uint64_t off : g.offsets()) detail::put_u64(out, off);
    for (NodeId v : g.neighbor_array())
        detail::put_u32(out, static_cast<std::uint32_t>(v));
    if (!out) throw FormatError("write failed: " + path);
}

Graph load_csr(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open: " + path);
    detail::check_magic(in, kCsrMagic, "csr");
    std::uint64_t n = detail::get_u64(in);
    std::uint64_t m = detail::get_u64(in);

    std::vector<std::uint64_t> offsets(n + 1);
    for (auto& off : offsets) off = detail::get_u64(in);
    if (offsets.front() != 0 || offsets.back() != 2 * m)
        throw FormatError("csr: inconsistent offsets");

    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(m);
    std::vector<NodeId> nbrs(2 * m);
    for (auto& v : nbrs) v = detail::get_u32(in);
    in.peek();
    if (!in.eof()) throw FormatError("csr: trailing bytes");

    for (std::uint64_t u = 0; u < n; ++u) {
        if (offsets[u] > offsets[u + 1])
            throw FormatError("csr: offsets not monotone");
        for (std::uint64_t k = offsets[u]; k < offsets[u + 1]; ++k) {
            NodeId v = nbrs[k];
            if (v >= n) throw FormatError("csr: neighbor out of range");
            if (v > u) edges.emplace_back(static_cast<NodeId>(u), v);
        }
    }
    Graph g = Graph::from_edges(n, std::move(edges));
    if (g.num_edges() != m || g.offsets() != offsets || g.neighbor_array() != nbrs)
        throw FormatError("csr: adjacency not symmetric/sorted");
    return g;
}

void save_labels(const std::vector<std::uint64_t>& labels, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot open for writing: " + path);
    detail::put_magic(out, kLabelMagic);
    detail::put_u64(out, labels.size());
    for (std::uint64_t l : labels) detail::put_u64(out, l);
    if (!out) throw FormatError("write failed: " + path);
}

std::vector<std::uint64_t> load_labels(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open: " + path);
    detail::check_magic(in, kLabelMagic, "labels");
    std::uint64_t n = detail::get_u64(in);
    std::vector<std::uint64_t> labels(n);
    for (auto& l : labels) l = detail::get_u64(in);
    return labels;
}

void write_edge_list(const Graph& g, std::ostream& out) {
    for (std::uint64_t u = 0; u < g.num_nodes(); ++u)
        for (NodeId v : g.neighbors(static_cast<NodeId>(u)))
            if (v > u) out << u << ' ' << v << '\n';
}

}  // namespace wormhole

// Command-line front end: ingestion, generation, decomposition, single
// inquiries, and benchmark runs. Node ids at this boundary are the original
// input labels; dense internal ids never leak.
//
// Exit codes: 0 success, 1 usage error, 2 data/format error, 3 invalid pair.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <unordered_map>

#include <CLI11.hpp>

#include "wormhole/baseline.hpp"
#include "wormhole/bench.hpp"
#include "wormhole/chunglu.hpp"
#include "wormhole/coregen.hpp"
#include "wormhole/graph.hpp"
#include "wormhole/inner_oracle.hpp"
#include "wormhole/router.hpp"

namespace {

using namespace wormhole;
using Clock = std::chrono::steady_clock;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitInvalidPair = 3;

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string labels_path(const std::string& csr_path) { return csr_path + ".labels"; }

// Dense-id <-> original-label translation. Identity when no sidecar exists.
struct LabelView {
    std::vector<std::uint64_t> labels;  // empty = identity
    std::unordered_map<std::uint64_t, NodeId> to_dense;

    static LabelView for_graph(const std::string& csr_path, const Graph& g) {
        LabelView view;
        std::string side = labels_path(csr_path);
        if (std::filesystem::exists(side)) {
            view.labels = load_labels(side);
            if (view.labels.size() != g.num_nodes())
                throw FormatError("label sidecar does not match graph size");
            view.to_dense.reserve(view.labels.size());
            for (std::size_t i = 0; i < view.labels.size(); ++i)
                view.to_dense.emplace(view.labels[i], static_cast<NodeId>(i));
        }
        return view;
    }

    NodeId resolve(std::uint64_t label, const Graph& g) const {
        if (labels.empty()) {
            if (label >= g.num_nodes())
                throw UsageError("unknown node label " + std::to_string(label));
            return static_cast<NodeId>(label);
        }
        auto it = to_dense.find(label);
        if (it == to_dense.end())
            throw UsageError("unknown node label " + std::to_string(label));
        return it->second;
    }

    std::uint64_t original(NodeId v) const {
        return labels.empty() ? v : labels[v];
    }
};

int cmd_ingest(const std::string& input, const std::string& output) {
    std::ifstream in(input);
    if (!in) throw FormatError("cannot open: " + input);
    EdgeListResult result = ingest_edge_list(in);
    save_csr(result.graph, output);

    bool identity = true;
    for (std::size_t i = 0; i < result.labels.size(); ++i)
        if (result.labels[i] != i) {
            identity = false;
            break;
        }
    if (!identity) save_labels(result.labels, labels_path(output));

    std::cout << "n=" << result.graph.num_nodes()
              << " m=" << result.graph.num_edges() << "\n";
    return kExitOk;
}

int cmd_coregen(const std::string& csr, const std::string& out,
                std::optional<double> fraction,
                std::optional<std::uint64_t> seed_label, std::uint64_t rng_seed) {
    Graph g = load_csr(csr);
    LabelView labels = LabelView::for_graph(csr, g);

    double f = fraction ? *fraction : default_fraction(g.num_nodes(), g.num_edges());
    if (!fraction)
        std::cout << "fraction=" << f << " (default for this size class)\n";

    NodeId seed;
    if (seed_label) {
        seed = labels.resolve(*seed_label, g);
    } else {
        std::mt19937_64 rng(rng_seed);
        seed = static_cast<NodeId>(
            std::uniform_int_distribution<std::uint64_t>(0, g.num_nodes() - 1)(rng));
    }

    AccessSession session(g);
    const auto t0 = Clock::now();
    CoreDecomposition dec = core_gen(session, seed, f, rng_seed);
    const double setup_s = seconds_since(t0);
    save_decomposition(dec, out);

    std::cout << "l0=" << dec.l0_size() << " l1=" << dec.l1_size()
              << " setup_s=" << setup_s << " queries=" << session.query_count()
              << (dec.truncated ? " truncated=1" : "") << "\n";
    return kExitOk;
}

int cmd_query(const std::string& csr, const std::string& dec_path,
              std::uint64_t s_label, std::uint64_t t_label,
              const std::string& variant, const std::string& index_path) {
    Graph g = load_csr(csr);
    LabelView labels = LabelView::for_graph(csr, g);
    CoreDecomposition dec = load_decomposition(dec_path, g);
    NodeId s = labels.resolve(s_label, g);
    NodeId t = labels.resolve(t_label, g);

    std::unique_ptr<CoreLabelIndex> index;
    std::unique_ptr<InnerRingOracle> oracle;
    Variant v = Variant::E;
    if (variant == "E") {
        oracle = std::make_unique<BiBfsCoreOracle>(dec);
    } else if (variant == "H" || variant == "M") {
        v = Variant::H;
        if (variant == "M") {
            if (index_path.empty())
                throw UsageError("--variant M needs --index");
            index = std::make_unique<CoreLabelIndex>(CoreLabelIndex::load(index_path, dec));
            oracle = std::make_unique<IndexCoreOracle>(dec, *index);
        } else {
            oracle = std::make_unique<BiBfsCoreOracle>(dec);
        }
    } else {
        throw UsageError("unknown variant: " + variant);
    }

    AccessSession session(g);
    charge_preprocessing(session, dec);
    const std::uint64_t before = session.query_count();
    try {
        PathResult r = route(session, dec, s, t, *oracle, v);
        std::cout << "path:";
        for (NodeId x : r.path) std::cout << ' ' << labels.original(x);
        std::cout << "\nlength=" << r.length << " case=" << to_string(r.kind)
                  << " queries=" << (session.query_count() - before) << "\n";
        return kExitOk;
    } catch (const ExhaustedComponentError&) {
        std::cout << "invalid pair: no route between " << s_label << " and "
                  << t_label << "\n";
        return kExitInvalidPair;
    }
}

int cmd_bench(const std::string& csr, const std::string& dec_path,
              const std::string& method_name, std::uint64_t inquiries,
              bool ground_truth, std::uint64_t rng_seed, const std::string& out,
              int threads, bool record_timings) {
    Graph g = load_csr(csr);

    BenchOptions options;
    options.num_inquiries = inquiries;
    options.rng_seed = rng_seed;
    options.ground_truth = ground_truth;
    options.threads = threads;
    options.record_timings = record_timings;
    if (method_name == "wormhole_E") options.method = Method::wormhole_E;
    else if (method_name == "wormhole_H") options.method = Method::wormhole_H;
    else if (method_name == "wormhole_M") options.method = Method::wormhole_M;
    else if (method_name == "bibfs") options.method = Method::bibfs;
    else throw UsageError("unknown method: " + method_name);

    std::optional<CoreDecomposition> dec;
    if (options.method != Method::bibfs) {
        if (dec_path.empty())
            throw UsageError("wormhole methods need a decomposition file");
        dec = load_decomposition(dec_path, g);
    }

    BenchReport report = run_bench(g, dec ? &*dec : nullptr, options);
    export_csv(report, out);

    std::cout << "method=" << to_string(report.method) << " valid="
              << report.num_valid << "/" << report.records.size();
    if (report.pct_exact)
        std::cout << " pct_exact=" << *report.pct_exact << " pct_le2="
                  << *report.pct_le2;
    std::cout << " mean_us=" << report.mean_inquiry_time_us
              << " fraction_seen=" << report.total_fraction_seen << "\n";
    return kExitOk;
}

int cmd_gen_chunglu(std::uint64_t n, double beta, double avg_degree,
                    std::uint64_t rng_seed, const std::string& output,
                    const std::string& format) {
    ChungLuParams params{n, beta, avg_degree, rng_seed};
    Graph g;
    try {
        g = chunglu_generate(params);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    if (format == "csr") {
        save_csr(g, output);
    } else if (format == "edges") {
        std::ofstream out(output);
        if (!out) throw FormatError("cannot open for writing: " + output);
        write_edge_list(g, out);
    } else {
        throw UsageError("unknown format: " + format);
    }

    std::uint32_t dmax = 0;
    for (std::uint64_t v = 0; v < g.num_nodes(); ++v)
        dmax = std::max(dmax, g.degree(static_cast<NodeId>(v)));
    std::cout << "n=" << g.num_nodes() << " m=" << g.num_edges()
              << " max_degree=" << dmax << "\n";
    return kExitOk;
}

int cmd_build_core_index(const std::string& csr, const std::string& dec_path,
                         const std::string& out) {
    Graph g = load_csr(csr);
    CoreDecomposition dec = load_decomposition(dec_path, g);
    const auto t0 = Clock::now();
    CoreLabelIndex index = build_core_index(dec);
    const double setup_s = seconds_since(t0);
    index.save(out);
    std::cout << "core=" << index.core_size() << " entries=" << index.label_entries()
              << " setup_s=" << setup_s << " bytes=" << index.file_bytes() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sublinear approximate shortest paths via core-periphery routing"};
    app.require_subcommand(1);

    // ingest
    auto* ingest = app.add_subcommand("ingest", "Edge-list text to binary CSR");
    std::string in_path, out_path;
    ingest->add_option("input", in_path, "edge list file")->required();
    ingest->add_option("output", out_path, "output CSR file")->required();

    // coregen
    auto* coregen = app.add_subcommand("coregen", "Grow the inner ring and save the decomposition");
    std::string cg_csr, cg_out;
    std::optional<double> cg_fraction;
    std::optional<std::uint64_t> cg_seed_node;
    std::uint64_t cg_rng_seed = 1;
    coregen->add_option("csr", cg_csr, "input CSR file")->required();
    coregen->add_option("output", cg_out, "output decomposition file")->required();
    coregen->add_option("--fraction", cg_fraction,
                        "inner-ring fraction in (0,1); default picks 0.06/0.04/0.01 by edge count");
    coregen->add_option("--seed-node", cg_seed_node,
                        "seed node label; default: uniformly random from --rng-seed");
    coregen->add_option("--rng-seed", cg_rng_seed, "PRNG seed (tie-breaking, default seed node)")
        ->default_val(1);

    // query
    auto* query = app.add_subcommand("query", "Answer one shortest-path inquiry");
    std::string q_csr, q_dec, q_variant = "E", q_index;
    std::uint64_t q_s = 0, q_t = 0;
    query->add_option("csr", q_csr)->required();
    query->add_option("dec", q_dec)->required();
    query->add_option("s", q_s, "source label")->required();
    query->add_option("t", q_t, "target label")->required();
    query->add_option("--variant", q_variant, "E, H, or M")->default_val("E");
    query->add_option("--index", q_index, "core label index file (variant M)");

    // bench
    auto* bench = app.add_subcommand("bench", "Batch inquiries and CSV metrics");
    std::string b_csr, b_dec, b_method = "wormhole_E", b_out = "bench";
    std::uint64_t b_inquiries = 10'000, b_rng_seed = 1;
    bool b_ground_truth = false, b_record_timings = false;
    int b_threads = 1;
    bench->add_option("csr", b_csr)->required();
    bench->add_option("dec", b_dec, "decomposition file (wormhole methods)");
    bench->add_option("--method", b_method, "wormhole_E, wormhole_H, wormhole_M, or bibfs")
        ->default_val("wormhole_E");
    bench->add_option("--inquiries", b_inquiries)->default_val(10'000);
    bench->add_flag("--ground-truth", b_ground_truth,
                    "compute exact distances (uncounted) for error columns");
    bench->add_option("--rng-seed", b_rng_seed)->default_val(1);
    bench->add_option("--out", b_out, "output CSV prefix")->default_val("bench");
    bench->add_option("--threads", b_threads)->default_val(1);
    bench->add_flag("--record-timings", b_record_timings,
                    "write real per-record wall times (breaks byte reproducibility)");

    // gen-chunglu
    auto* gen = app.add_subcommand("gen-chunglu", "Generate a power-law random graph");
    std::uint64_t g_n = 0, g_rng_seed = 1;
    double g_beta = 2.5, g_avg_degree = 10.0;
    std::string g_out, g_format = "csr";
    gen->add_option("--n", g_n, "node count")->required();
    gen->add_option("--beta", g_beta, "power-law exponent in (2,3)")->default_val(2.5);
    gen->add_option("--avg-degree", g_avg_degree, "average expected degree (> 1)")
        ->default_val(10.0);
    gen->add_option("--rng-seed", g_rng_seed)->default_val(1);
    gen->add_option("output", g_out, "output file")->required();
    gen->add_option("--format", g_format, "csr or edges")->default_val("csr");

    // build-core-index
    auto* bci = app.add_subcommand("build-core-index", "Build the core label index (variant M)");
    std::string i_csr, i_dec, i_out;
    bci->add_option("csr", i_csr)->required();
    bci->add_option("dec", i_dec)->required();
    bci->add_option("output", i_out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (ingest->parsed()) return cmd_ingest(in_path, out_path);
        if (coregen->parsed())
            return cmd_coregen(cg_csr, cg_out, cg_fraction, cg_seed_node, cg_rng_seed);
        if (query->parsed())
            return cmd_query(q_csr, q_dec, q_s, q_t, q_variant, q_index);
        if (bench->parsed())
            return cmd_bench(b_csr, b_dec, b_method, b_inquiries, b_ground_truth,
                             b_rng_seed, b_out, b_threads, b_record_timings);
        if (gen->parsed())
            return cmd_gen_chunglu(g_n, g_beta, g_avg_degree, g_rng_seed, g_out, g_format);
        if (bci->parsed()) return cmd_build_core_index(i_csr, i_dec, i_out);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitData;
    } catch (const FormatError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wormhole/coregen.hpp"
#include "wormhole/graph.hpp"
#include "wormhole/path_result.hpp"

namespace wormhole {

enum class Method { wormhole_E, wormhole_H, wormhole_M, bibfs };

std::string_view to_string(Method m);

/// One sampled inquiry. s == t, disconnected pairs, and exhausted searches
/// are logged with their case tag but excluded from every error statistic.
struct InquiryRecord {
    std::uint64_t inquiry_idx = 0;
    NodeId s = 0;
    NodeId t = 0;
    RouteCase kind = RouteCase::same_node;
    bool valid = false;
    std::uint32_t est_len = 0;                  // meaningful when valid
    std::optional<std::uint32_t> true_len;      // set when ground truth ran
    std::optional<std::uint32_t> additive_err;
    std::optional<double> relative_err;
    std::uint64_t queries_used = 0;
    std::uint64_t wall_time_ns = 0;  // 0 unless record_timings was set
    double fraction_seen_after = 0.0;
};

struct BenchReport {
    Method method = Method::bibfs;
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    double core_fraction = 0.0;   // 0 for bibfs
    double setup_time_s = 0.0;
    std::uint64_t setup_bytes = 0;
    std::vector<InquiryRecord> records;

    std::uint64_t num_valid = 0;
    // Percentiles over valid inquiries with known ground truth.
    std::optional<double> pct_exact;
    std::optional<double> pct_le1;
    std::optional<double> pct_le2;
    std::optional<double> mean_rel_err;
    double mean_inquiry_time_us = 0.0;
    double median_inquiry_time_us = 0.0;
    double total_fraction_seen = 0.0;
};

struct BenchOptions {
    Method method = Method::wormhole_E;
    std::uint64_t num_inquiries = 10'000;
    std::uint64_t rng_seed = 0;
    bool ground_truth = false;
    int threads = 1;
    /// Per-record wall times are nondeterministic; they are written as 0
    /// unless this is set, so default record CSVs are byte-reproducible.
    /// Aggregate timings are always measured.
    bool record_timings = false;
};

/// Samples uniform (s, t) pairs and runs them against a fresh session.
/// For wormhole methods the session is pre-charged with the preprocessing
/// phase (one query per inner-ring node, as CoreGen spent) and variant M
/// builds its core label index during setup. Ground-truth distances come
/// from a session-free exact search and never touch query counts.
BenchReport run_bench(const Graph& g, const CoreDecomposition* dec,
                      const BenchOptions& options);

/// (est - true) / true; requires true_len >= 1.
double relative_error(std::uint32_t est_len, std::uint32_t true_len);

/// Inquiries after which the slow-setup/fast-inquiry method overtakes the
/// fast-setup one: (setup_slow - setup_fast) / (mit_fast - mit_slow), in
/// consistent units; +infinity when mit_fast <= mit_slow.
double breakeven(double setup_fast, double setup_slow, double mit_fast,
                 double mit_slow);

/// Writes <prefix>.records.csv and <prefix>.aggregates.csv with a stable
/// column order; unknown fields stay empty.
void export_csv(const BenchReport& report, const std::string& prefix);

}  // namespace wormhole

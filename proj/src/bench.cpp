#include "wormhole/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <memory>
#include <random>
#include <thread>

#include "wormhole/baseline.hpp"
#include "wormhole/inner_oracle.hpp"
#include "wormhole/router.hpp"

namespace wormhole {

std::string_view to_string(Method m) {
    switch (m) {
        case Method::wormhole_E: return "wormhole_E";
        case Method::wormhole_H: return "wormhole_H";
        case Method::wormhole_M: return "wormhole_M";
        case Method::bibfs: return "bibfs";
    }
    return "unknown";
}

double relative_error(std::uint32_t est_len, std::uint32_t true_len) {
    if (true_len == 0)
        throw std::invalid_argument("relative_error: undefined for true_len 0");
    return (static_cast<double>(est_len) - static_cast<double>(true_len)) /
           static_cast<double>(true_len);
}

double breakeven(double setup_fast, double setup_slow, double mit_fast,
                 double mit_slow) {
    if (mit_fast <= mit_slow) return std::numeric_limits<double>::infinity();
    return (setup_slow - setup_fast) / (mit_fast - mit_slow);
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct MethodRunner {
    const Graph& g;
    const CoreDecomposition* dec;
    Method method;
    const InnerRingOracle* oracle;  // wormhole methods only

    // Runs one inquiry; fills kind/valid/est_len/queries_used.
    void run(AccessSession& session, NodeId s, NodeId t, InquiryRecord& rec) const {
        try {
            PathResult r;
            if (method == Method::bibfs) {
                r = bibfs(session, s, t);
            } else {
                Variant v = method == Method::wormhole_E ? Variant::E : Variant::H;
                r = route(session, *dec, s, t, *oracle, v);
            }
            rec.kind = r.kind;
            rec.est_len = r.length;
            rec.queries_used = r.queries_used;
            rec.valid = s != t;
        } catch (const DisconnectedError&) {
            rec.kind = RouteCase::exhausted_component;
            rec.valid = false;
        } catch (const ExhaustedComponentError&) {
            rec.kind = RouteCase::exhausted_component;
            rec.valid = false;
        }
    }
};

void finalize_aggregates(BenchReport& report,
                         const std::vector<double>& times_us) {
    std::uint64_t valid = 0, with_truth = 0, exact = 0, le1 = 0, le2 = 0;
    double rel_sum = 0.0;
    for (const auto& rec : report.records) {
        if (!rec.valid) continue;
        ++valid;
        if (rec.additive_err) {
            ++with_truth;
            if (*rec.additive_err == 0) ++exact;
            if (*rec.additive_err <= 1) ++le1;
            if (*rec.additive_err <= 2) ++le2;
            rel_sum += rec.relative_err.value_or(0.0);
        }
    }
    report.num_valid = valid;
    if (with_truth > 0) {
        const double denom = static_cast<double>(with_truth);
        report.pct_exact = 100.0 * static_cast<double>(exact) / denom;
        report.pct_le1 = 100.0 * static_cast<double>(le1) / denom;
        report.pct_le2 = 100.0 * static_cast<double>(le2) / denom;
        report.mean_rel_err = rel_sum / denom;
    }
    if (!times_us.empty()) {
        double sum = 0.0;
        for (double t : times_us) sum += t;
        report.mean_inquiry_time_us = sum / static_cast<double>(times_us.size());
        std::vector<double> sorted = times_us;
        std::sort(sorted.begin(), sorted.end());
        std::size_t mid = sorted.size() / 2;
        report.median_inquiry_time_us =
            sorted.size() % 2 == 1
                ? sorted[mid]
                : 0.5 * (sorted[mid - 1] + sorted[mid]);
    }
}

}  // namespace

BenchReport run_bench(const Graph& g, const CoreDecomposition* dec,
                      const BenchOptions& options) {
    const bool is_wormhole = options.method != Method::bibfs;
    if (is_wormhole && dec == nullptr)
        throw std::invalid_argument("run_bench: wormhole methods need a decomposition");
    if (options.threads < 1)
        throw std::invalid_argument("run_bench: threads must be positive");

    BenchReport report;
    report.method = options.method;
    report.n = g.num_nodes();
    report.m = g.num_edges();

    AccessSession session(g);
    std::unique_ptr<CoreLabelIndex> index;
    std::unique_ptr<InnerRingOracle> oracle;

    const auto setup_start = Clock::now();
    if (is_wormhole) {
        report.core_fraction = dec->target_fraction;
        charge_preprocessing(session, *dec);
        if (options.method == Method::wormhole_M) {
            index = std::make_unique<CoreLabelIndex>(build_core_index(*dec));
            oracle = std::make_unique<IndexCoreOracle>(*dec, *index);
        } else {
            oracle = std::make_unique<BiBfsCoreOracle>(*dec);
        }
        report.setup_bytes = decomposition_file_bytes(g.num_nodes());
        if (index) report.setup_bytes += index->file_bytes();
    }
    report.setup_time_s = seconds_since(setup_start);

    // Uniform pairs, with replacement; s == t stays in as an invalid inquiry.
    std::mt19937_64 rng(options.rng_seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, g.num_nodes() - 1);
    std::vector<std::pair<NodeId, NodeId>> pairs(options.num_inquiries);
    for (auto& [s, t] : pairs) {
        s = static_cast<NodeId>(pick(rng));
        t = static_cast<NodeId>(pick(rng));
    }

    MethodRunner runner{g, dec, options.method, oracle.get()};

    // Warm caches on a throwaway session so the measured one stays clean.
    if (!pairs.empty()) {
        AccessSession warm(g);
        if (is_wormhole) charge_preprocessing(warm, *dec);
        InquiryRecord scratch;
        runner.run(warm, pairs[0].first, pairs[0].second, scratch);
    }

    report.records.resize(pairs.size());
    std::vector<double> times_us(pairs.size(), 0.0);

    auto run_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            InquiryRecord& rec = report.records[i];
            rec.inquiry_idx = i;
            rec.s = pairs[i].first;
            rec.t = pairs[i].second;
            const auto t0 = Clock::now();
            runner.run(session, rec.s, rec.t, rec);
            const double us =
                std::chrono::duration<double, std::micro>(Clock::now() - t0).count();
            times_us[i] = us;
            if (options.record_timings)
                rec.wall_time_ns = static_cast<std::uint64_t>(us * 1000.0);
            rec.fraction_seen_after = session.fraction_seen();
            if (options.ground_truth && rec.valid) {
                auto truth = bibfs_distance(g, rec.s, rec.t);  // session-free
                if (truth) {
                    rec.true_len = *truth;
                    rec.additive_err = rec.est_len - *truth;
                    if (*truth >= 1)
                        rec.relative_err = relative_error(rec.est_len, *truth);
                }
            }
        }
    };

    if (options.threads == 1 || pairs.size() < 2) {
        run_range(0, pairs.size());
    } else {
        const std::size_t workers =
            std::min<std::size_t>(options.threads, pairs.size());
        std::vector<std::thread> pool;
        const std::size_t chunk = (pairs.size() + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            std::size_t begin = w * chunk;
            std::size_t end = std::min(pairs.size(), begin + chunk);
            if (begin < end) pool.emplace_back(run_range, begin, end);
        }
        for (auto& th : pool) th.join();
    }

    report.total_fraction_seen = session.fraction_seen();
    finalize_aggregates(report, times_us);
    return report;
}

namespace {

std::string fmt_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

template <class T>
std::string fmt_opt(const std::optional<T>& v) {
    if (!v) return "";
    if constexpr (std::is_floating_point_v<T>)
        return fmt_double(*v);
    else
        return std::to_string(*v);
}

}  // namespace

void export_csv(const BenchReport& report, const std::string& prefix) {
    {
        std::ofstream out(prefix + ".records.csv");
        if (!out) throw FormatError("cannot open for writing: " + prefix + ".records.csv");
        out << "# per-inquiry records; invalid inquiries keep empty error fields;"
               " wall_time_ns is 0 unless timings were recorded; fraction_seen_after"
               " is exact for single-threaded runs\n";
        out << "inquiry_idx,s,t,case,est_len,true_len,additive_err,relative_err,"
               "queries_used,wall_time_ns,fraction_seen_after\n";
        for (const auto& r : report.records) {
            out << r.inquiry_idx << ',' << r.s << ',' << r.t << ','
                << to_string(r.kind) << ',';
            if (r.valid) out << r.est_len;
            out << ',' << fmt_opt(r.true_len) << ',' << fmt_opt(r.additive_err)
                << ',' << fmt_opt(r.relative_err) << ',' << r.queries_used << ','
                << r.wall_time_ns << ',' << fmt_double(r.fraction_seen_after)
                << '\n';
        }
        if (!out) throw FormatError("write failed: " + prefix + ".records.csv");
    }
    {
        std::ofstream out(prefix + ".aggregates.csv");
        if (!out)
            throw FormatError("cannot open for writing: " + prefix + ".aggregates.csv");
        out << "method,n,m,core_fraction,setup_time_s,setup_bytes,num_valid,"
               "pct_exact,pct_le1,pct_le2,mean_rel_err,mean_inquiry_time_us,"
               "median_inquiry_time_us,total_fraction_seen\n";
        out << to_string(report.method) << ',' << report.n << ',' << report.m
            << ',' << fmt_double(report.core_fraction) << ','
            << fmt_double(report.setup_time_s) << ',' << report.setup_bytes << ','
            << report.num_valid << ',' << fmt_opt(report.pct_exact) << ','
            << fmt_opt(report.pct_le1) << ',' << fmt_opt(report.pct_le2) << ','
            << fmt_opt(report.mean_rel_err) << ','
            << fmt_double(report.mean_inquiry_time_us) << ','
            << fmt_double(report.median_inquiry_time_us) << ','
            << fmt_double(report.total_fraction_seen) << '\n';
        if (!out) throw FormatError("write failed: " + prefix + ".aggregates.csv");
    }
}

}  // namespace wormhole

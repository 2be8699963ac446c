#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include "test_util.hpp"
#include "wormhole/bench.hpp"
#include "wormhole/chunglu.hpp"

using namespace wormhole;

namespace {

std::string temp_prefix(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct BenchFixture {
    Graph g;
    CoreDecomposition dec;
    BenchFixture() {
        ChungLuParams params{3'000, 2.5, 8.0, 9};
        g = chunglu_generate(params);
        AccessSession grow(g);
        dec = core_gen(grow, 5, 0.06, 3);
    }
};

}  // namespace

TEST_CASE("relative_error") {
    CHECK(relative_error(5, 5) == 0.0);
    CHECK(relative_error(6, 4) == 0.5);
    CHECK(relative_error(7, 5) == doctest::Approx(0.4));
    CHECK_THROWS_AS(relative_error(3, 0), std::invalid_argument);
}

TEST_CASE("breakeven") {
    CHECK(breakeven(0, 100, 2, 1) == 100.0);
    CHECK(breakeven(0.02, 4.1, 41e-6, 0.96e-6) == doctest::Approx(101'898.1).epsilon(0.001));
    CHECK(breakeven(0, 100, 1, 1) == std::numeric_limits<double>::infinity());
    CHECK(breakeven(0, 100, 1, 2) == std::numeric_limits<double>::infinity());
}

TEST_CASE("run_bench: bibfs with ground truth is all-exact") {
    BenchFixture fx;
    BenchOptions options;
    options.method = Method::bibfs;
    options.num_inquiries = 60;
    options.rng_seed = 4;
    options.ground_truth = true;

    BenchReport report = run_bench(fx.g, nullptr, options);
    CHECK(report.num_valid > 0);
    REQUIRE(report.pct_exact.has_value());
    CHECK(*report.pct_exact == 100.0);
    CHECK(*report.pct_le2 == 100.0);
    CHECK(*report.mean_rel_err == 0.0);
    for (const auto& rec : report.records)
        if (rec.valid) CHECK(*rec.additive_err == 0);
}

TEST_CASE("run_bench: zero inquiries still populates setup fields") {
    BenchFixture fx;
    BenchOptions options;
    options.method = Method::wormhole_E;
    options.num_inquiries = 0;

    BenchReport report = run_bench(fx.g, &fx.dec, options);
    CHECK(report.records.empty());
    CHECK(report.num_valid == 0);
    CHECK(report.setup_bytes == decomposition_file_bytes(fx.g.num_nodes()));
    CHECK(report.core_fraction == 0.06);

    std::string prefix = temp_prefix("wh_bench_empty");
    export_csv(report, prefix);
    std::istringstream records(slurp(prefix + ".records.csv"));
    std::string line;
    int lines = 0;
    while (std::getline(records, line)) ++lines;
    CHECK(lines == 2);  // comment + header only
    std::filesystem::remove(prefix + ".records.csv");
    std::filesystem::remove(prefix + ".aggregates.csv");
}

TEST_CASE("run_bench: wormhole needs a decomposition") {
    BenchFixture fx;
    BenchOptions options;
    options.method = Method::wormhole_E;
    CHECK_THROWS_AS(run_bench(fx.g, nullptr, options), std::invalid_argument);
}

TEST_CASE("run_bench: percentile chain and fraction_seen monotone") {
    BenchFixture fx;
    BenchOptions options;
    options.method = Method::wormhole_E;
    options.num_inquiries = 300;
    options.rng_seed = 12;
    options.ground_truth = true;

    BenchReport report = run_bench(fx.g, &fx.dec, options);
    REQUIRE(report.pct_exact.has_value());
    CHECK(*report.pct_exact <= *report.pct_le1);
    CHECK(*report.pct_le1 <= *report.pct_le2);
    CHECK(*report.pct_le2 <= 100.0);

    double last = 0.0;
    for (const auto& rec : report.records) {
        CHECK(rec.fraction_seen_after >= last);
        last = rec.fraction_seen_after;
    }
    CHECK(report.total_fraction_seen == last);
    // Preprocessing was charged before any inquiry ran.
    CHECK(report.records.front().fraction_seen_after >=
          static_cast<double>(fx.dec.l0_size()) / static_cast<double>(fx.g.num_nodes()));
}

TEST_CASE("run_bench: ground truth never perturbs query counts") {
    BenchFixture fx;
    BenchOptions with, without;
    with.method = without.method = Method::wormhole_E;
    with.num_inquiries = without.num_inquiries = 200;
    with.rng_seed = without.rng_seed = 31;
    with.ground_truth = true;
    without.ground_truth = false;

    BenchReport a = run_bench(fx.g, &fx.dec, with);
    BenchReport b = run_bench(fx.g, &fx.dec, without);
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        CHECK(a.records[i].queries_used == b.records[i].queries_used);
        CHECK(a.records[i].fraction_seen_after == b.records[i].fraction_seen_after);
        CHECK(a.records[i].est_len == b.records[i].est_len);
    }
}

TEST_CASE("run_bench: record CSVs are byte-identical across runs") {
    BenchFixture fx;
    BenchOptions options;
    options.method = Method::wormhole_H;
    options.num_inquiries = 150;
    options.rng_seed = 77;
    options.ground_truth = true;

    std::string p1 = temp_prefix("wh_bench_det1");
    std::string p2 = temp_prefix("wh_bench_det2");
    export_csv(run_bench(fx.g, &fx.dec, options), p1);
    export_csv(run_bench(fx.g, &fx.dec, options), p2);
    CHECK(slurp(p1 + ".records.csv") == slurp(p2 + ".records.csv"));
    for (const auto& p : {p1, p2}) {
        std::filesystem::remove(p + ".records.csv");
        std::filesystem::remove(p + ".aggregates.csv");
    }
}

TEST_CASE("export_csv: records round-trip to the reported aggregates") {
    BenchFixture fx;
    BenchOptions options;
    options.method = Method::wormhole_E;
    options.num_inquiries = 250;
    options.rng_seed = 51;
    options.ground_truth = true;

    BenchReport report = run_bench(fx.g, &fx.dec, options);
    std::string prefix = temp_prefix("wh_bench_rt");
    export_csv(report, prefix);

    // Parse the records file and recompute the error aggregates.
    std::istringstream in(slurp(prefix + ".records.csv"));
    std::string line;
    std::getline(in, line);  // comment
    std::getline(in, line);  // header
    CHECK(line ==
          "inquiry_idx,s,t,case,est_len,true_len,additive_err,relative_err,"
          "queries_used,wall_time_ns,fraction_seen_after");
    std::uint64_t with_truth = 0, exact = 0, le1 = 0, le2 = 0;
    std::uint64_t rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string f;
        while (std::getline(ss, f, ',')) fields.push_back(f);
        while (fields.size() < 11) fields.push_back("");
        const std::string& err = fields[6];
        if (!err.empty()) {
            ++with_truth;
            std::uint64_t e = std::stoull(err);
            if (e == 0) ++exact;
            if (e <= 1) ++le1;
            if (e <= 2) ++le2;
        }
        CHECK(fields[9] == "0");  // timings not recorded by default
    }
    CHECK(rows == report.records.size());
    REQUIRE(with_truth > 0);
    CHECK(*report.pct_exact == doctest::Approx(100.0 * exact / with_truth));
    CHECK(*report.pct_le1 == doctest::Approx(100.0 * le1 / with_truth));
    CHECK(*report.pct_le2 == doctest::Approx(100.0 * le2 / with_truth));

    std::filesystem::remove(prefix + ".records.csv");
    std::filesystem::remove(prefix + ".aggregates.csv");
}

TEST_CASE("run_bench: variant M setup includes the index footprint") {
    BenchFixture fx;
    BenchOptions options;
    options.method = Method::wormhole_M;
    options.num_inquiries = 50;
    options.rng_seed = 2;
    options.ground_truth = true;

    BenchReport report = run_bench(fx.g, &fx.dec, options);
    CHECK(report.setup_bytes > decomposition_file_bytes(fx.g.num_nodes()));
    CHECK(report.num_valid > 0);
}

TEST_CASE("run_bench: worker pool gathers records in inquiry order") {
    BenchFixture fx;
    BenchOptions options;
    options.method = Method::wormhole_E;
    options.num_inquiries = 120;
    options.rng_seed = 8;
    options.threads = 4;

    BenchReport report = run_bench(fx.g, &fx.dec, options);
    REQUIRE(report.records.size() == 120);
    for (std::size_t i = 0; i < report.records.size(); ++i)
        CHECK(report.records[i].inquiry_idx == i);

    // Same pairs as the single-threaded run.
    options.threads = 1;
    BenchReport solo = run_bench(fx.g, &fx.dec, options);
    for (std::size_t i = 0; i < report.records.size(); ++i) {
        CHECK(report.records[i].s == solo.records[i].s);
        CHECK(report.records[i].t == solo.records[i].t);
        CHECK(report.records[i].est_len == solo.records[i].est_len);
    }
}

TEST_CASE("run_bench: invalid inquiries are tagged and excluded") {
    // Graph with a stranded component: some pairs must come back invalid.
    Graph g = Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5},
                                    {5, 6}, {6, 7}, {7, 4}});
    CoreDecomposition dec = testutil::make_decomposition(g, {0});

    BenchOptions options;
    options.method = Method::wormhole_E;
    options.num_inquiries = 100;
    options.rng_seed = 19;
    options.ground_truth = true;

    BenchReport report = run_bench(g, &dec, options);
    std::uint64_t invalid = 0;
    for (const auto& rec : report.records) {
        if (!rec.valid) {
            ++invalid;
            CHECK((rec.kind == RouteCase::same_node ||
                   rec.kind == RouteCase::exhausted_component));
        }
    }
    CHECK(invalid > 0);
    CHECK(report.num_valid + invalid == report.records.size());
}

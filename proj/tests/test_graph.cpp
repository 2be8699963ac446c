#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "test_util.hpp"
#include "wormhole/chunglu.hpp"
#include "wormhole/graph.hpp"

using namespace wormhole;

namespace {

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("ingest: triangle") {
    std::istringstream in("0 1\n1 2\n2 0\n");
    auto result = ingest_edge_list(in);
    CHECK(result.graph.num_nodes() == 3);
    CHECK(result.graph.num_edges() == 3);
    for (NodeId v = 0; v < 3; ++v) CHECK(result.graph.degree(v) == 2);
}

TEST_CASE("ingest: dedup, reversed duplicates, self-loops") {
    std::istringstream in("5 7\n7 5\n5 5\n");
    auto result = ingest_edge_list(in);
    CHECK(result.graph.num_nodes() == 2);
    CHECK(result.graph.num_edges() == 1);
    CHECK(result.labels == std::vector<std::uint64_t>{5, 7});
}

TEST_CASE("ingest: comments, blank lines, multiple pairs per line") {
    std::istringstream in("# header\n% other comment\n\n0 1 1 2\n2 3\n");
    auto result = ingest_edge_list(in);
    CHECK(result.graph.num_nodes() == 4);
    CHECK(result.graph.num_edges() == 3);
}

TEST_CASE("ingest: malformed token reports line number") {
    std::istringstream in("0 1\n2 x\n");
    CHECK_THROWS_AS(ingest_edge_list(in), ParseError);
    std::istringstream in2("0 1\n2 x\n");
    try {
        ingest_edge_list(in2);
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("ingest: odd token count fails") {
    std::istringstream in("0 1 2\n");
    CHECK_THROWS_AS(ingest_edge_list(in), ParseError);
}

TEST_CASE("ingest: empty input fails") {
    std::istringstream in("");
    CHECK_THROWS_AS(ingest_edge_list(in), FormatError);
    std::istringstream only_loops("3 3\n");
    CHECK_THROWS_AS(ingest_edge_list(only_loops), FormatError);
}

TEST_CASE("neighbors: basics") {
    Graph tri = testutil::triangle();
    auto nb = tri.neighbors(0);
    CHECK(std::vector<NodeId>(nb.begin(), nb.end()) == std::vector<NodeId>{1, 2});

    Graph star = testutil::star_graph(4);
    CHECK(star.degree(0) == 4);
    CHECK(star.neighbors(0).size() == 4);

    Graph path = testutil::path_graph(3);
    auto mid = path.neighbors(1);
    CHECK(std::vector<NodeId>(mid.begin(), mid.end()) == std::vector<NodeId>{0, 2});

    CHECK_THROWS_AS(tri.neighbors(3), std::out_of_range);
}

TEST_CASE("graph invariants: sorted, self-free, degree sum = 2m") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = testutil::random_graph(60, 5.0, rng);
        std::uint64_t degree_sum = 0;
        for (NodeId v = 0; v < g.num_nodes(); ++v) {
            auto nb = g.neighbors(v);
            degree_sum += nb.size();
            CHECK(std::is_sorted(nb.begin(), nb.end()));
            CHECK(std::adjacent_find(nb.begin(), nb.end()) == nb.end());
            CHECK(std::find(nb.begin(), nb.end(), v) == nb.end());
            for (NodeId w : nb) CHECK(g.has_edge(w, v));
        }
        CHECK(degree_sum == 2 * g.num_edges());
    }
}

TEST_CASE("ingest idempotent on serialized output") {
    std::mt19937_64 rng(11);
    Graph g = testutil::random_graph(50, 4.0, rng);
    std::ostringstream first;
    write_edge_list(g, first);
    std::istringstream in(first.str());
    auto again = ingest_edge_list(in);

    // Isolated nodes are dropped by remapping, so compare after one pass.
    std::ostringstream second;
    write_edge_list(again.graph, second);
    std::istringstream in2(second.str());
    auto third = ingest_edge_list(in2);
    CHECK(again.graph == third.graph);
}

TEST_CASE("csr round trip") {
    std::string path = temp_path("wh_test_roundtrip.csr");
    Graph tri = testutil::triangle();
    save_csr(tri, path);
    CHECK(load_csr(path) == tri);

    ChungLuParams params{10'000, 2.5, 8.0, 3};
    Graph big = chunglu_generate(params);
    save_csr(big, path);
    CHECK(load_csr(path) == big);
    std::filesystem::remove(path);
}

TEST_CASE("csr: corrupted magic fails") {
    std::string path = temp_path("wh_test_badmagic.csr");
    save_csr(testutil::triangle(), path);
    {
        std::fstream f(path, std::ios::in | std::ios::out | std::ios::binary);
        f.seekp(0);
        f.write("XXXXXX", 6);
    }
    CHECK_THROWS_AS(load_csr(path), FormatError);
    std::filesystem::remove(path);
}

TEST_CASE("csr: truncated file fails") {
    std::string path = temp_path("wh_test_trunc.csr");
    save_csr(testutil::triangle(), path);
    std::filesystem::resize_file(path, std::filesystem::file_size(path) - 3);
    CHECK_THROWS_AS(load_csr(path), FormatError);
    std::filesystem::remove(path);
}

TEST_CASE("label sidecar round trip") {
    std::string path = temp_path("wh_test.labels");
    std::vector<std::uint64_t> labels{5, 7, 900000000001ull};
    save_labels(labels, path);
    CHECK(load_labels(path) == labels);
    std::filesystem::remove(path);
}

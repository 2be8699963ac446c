#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

// Subprocess smoke tests for the command-line tool. CTest points
// WORMHOLE_CLI at the built binary.

namespace {

namespace fs = std::filesystem;

std::string cli() {
    const char* env = std::getenv("WORMHOLE_CLI");
    REQUIRE_MESSAGE(env != nullptr, "WORMHOLE_CLI must point at the binary");
    return env;
}

fs::path work_dir() {
    auto dir = fs::temp_directory_path() / "wh_cli_tests";
    fs::create_directories(dir);
    return dir;
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    auto out_file = work_dir() / "out.txt";
    std::string cmd = cli() + " " + args + " > " + out_file.string() + " 2>&1";
    int rc = std::system(cmd.c_str());
    std::ifstream in(out_file);
    std::ostringstream ss;
    ss << in.rdbuf();
    return {WEXITSTATUS(rc), ss.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("cli: ingest and query round trip") {
    auto dir = work_dir();
    {
        std::ofstream edges(dir / "tri.txt");
        edges << "# comment\n10 20\n20 30\n30 10\n10 10\n20 10\n";
    }
    auto csr = (dir / "tri.csr").string();
    auto res = run("ingest " + (dir / "tri.txt").string() + " " + csr);
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("n=3 m=3") != std::string::npos);

    auto dec = (dir / "tri.dec").string();
    res = run("coregen " + csr + " " + dec + " --fraction 0.5 --seed-node 10 --rng-seed 1");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("l0=2") != std::string::npos);

    res = run("query " + csr + " " + dec + " 10 30");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("length=1") != std::string::npos);

    // Labels are original; unknown ones are usage errors.
    res = run("query " + csr + " " + dec + " 10 99");
    CHECK(res.exit_code == 1);

    res = run("query " + csr + " " + dec + " 10 10");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("length=0") != std::string::npos);
}

TEST_CASE("cli: missing file and bad fraction") {
    auto dir = work_dir();
    auto res = run("ingest " + (dir / "nope.txt").string() + " " + (dir / "x.csr").string());
    CHECK(res.exit_code == 2);

    std::ofstream(dir / "two.txt") << "0 1\n";
    run("ingest " + (dir / "two.txt").string() + " " + (dir / "two.csr").string());
    res = run("coregen " + (dir / "two.csr").string() + " " + (dir / "two.dec").string() +
              " --fraction 1.5");
    CHECK(res.exit_code == 1);
}

TEST_CASE("cli: gen-chunglu") {
    auto dir = work_dir();
    auto res = run("gen-chunglu --n 1000 --beta 2.5 --avg-degree 8 --rng-seed 5 " +
                   (dir / "cl.csr").string());
    CHECK(res.exit_code == 0);
    // E[m] = W/2 = 4000; binomial concentration keeps it within 10%.
    auto m_pos = res.out.find("m=");
    REQUIRE(m_pos != std::string::npos);
    long m = std::stol(res.out.substr(m_pos + 2));
    CHECK(m > 3600);
    CHECK(m < 4400);

    res = run("gen-chunglu --n 1000 --beta 3.5 --avg-degree 8 " + (dir / "bad.csr").string());
    CHECK(res.exit_code == 1);

    // Same seed, byte-identical output file.
    auto res2 = run("gen-chunglu --n 1000 --beta 2.5 --avg-degree 8 --rng-seed 5 " +
                    (dir / "cl2.csr").string());
    CHECK(res2.exit_code == 0);
    CHECK(slurp(dir / "cl.csr") == slurp(dir / "cl2.csr"));
}

TEST_CASE("cli: bench, variants, core index, disconnected exit code") {
    auto dir = work_dir();
    auto csr = (dir / "bench.csr").string();
    auto dec = (dir / "bench.dec").string();
    auto idx = (dir / "bench.idx").string();
    REQUIRE(run("gen-chunglu --n 2000 --beta 2.5 --avg-degree 8 --rng-seed 5 " + csr)
                .exit_code == 0);
    REQUIRE(run("coregen " + csr + " " + dec + " --fraction 0.06 --seed-node 3 --rng-seed 2")
                .exit_code == 0);

    auto res = run("build-core-index " + csr + " " + dec + " " + idx);
    CHECK(res.exit_code == 0);

    // Variant M equals H on the same inquiries (spot check via query).
    auto h = run("query " + csr + " " + dec + " 100 200 --variant H");
    auto m = run("query " + csr + " " + dec + " 100 200 --variant M --index " + idx);
    if (h.exit_code == 0) {
        REQUIRE(m.exit_code == 0);
        auto len = [](const std::string& s) {
            auto p = s.find("length=");
            return s.substr(p, s.find(' ', p) - p);
        };
        CHECK(len(h.out) == len(m.out));
    }
    CHECK(run("query " + csr + " " + dec + " 100 200 --variant M").exit_code == 1);

    auto prefix = (dir / "report").string();
    res = run("bench " + csr + " " + dec +
              " --method bibfs --inquiries 40 --ground-truth --rng-seed 7 --out " + prefix);
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("pct_exact=100") != std::string::npos);
    CHECK(fs::exists(prefix + ".records.csv"));
    CHECK(fs::exists(prefix + ".aggregates.csv"));

    // Determinism across runs with the same seed.
    auto p2 = (dir / "report2").string();
    res = run("bench " + csr + " " + dec +
              " --method wormhole_E --inquiries 60 --rng-seed 7 --out " + prefix);
    CHECK(res.exit_code == 0);
    res = run("bench " + csr + " " + dec +
              " --method wormhole_E --inquiries 60 --rng-seed 7 --out " + p2);
    CHECK(res.exit_code == 0);
    CHECK(slurp(prefix + ".records.csv") == slurp(p2 + ".records.csv"));

    // Header-only CSVs for zero inquiries.
    res = run("bench " + csr + " " + dec + " --method wormhole_E --inquiries 0 --out " +
              (dir / "empty").string());
    CHECK(res.exit_code == 0);

    // A disconnected pair surfaces exit code 3.
    std::ofstream(dir / "disc.txt") << "0 1\n2 3\n";
    auto dcsr = (dir / "disc.csr").string();
    auto ddec = (dir / "disc.dec").string();
    REQUIRE(run("ingest " + (dir / "disc.txt").string() + " " + dcsr).exit_code == 0);
    REQUIRE(run("coregen " + dcsr + " " + ddec + " --fraction 0.3 --seed-node 0").exit_code == 0);
    res = run("query " + dcsr + " " + ddec + " 0 3");
    CHECK(res.exit_code == 3);
}

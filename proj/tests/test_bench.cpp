#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "inet/bench.hpp"

#include <sstream>
#include <string>
#include <vector>

using namespace inet::bench;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

TEST_CASE("seeded_list is deterministic and seed-sensitive") {
    CHECK(seeded_list(50, 42) == seeded_list(50, 42));
    CHECK(seeded_list(50, 42) != seeded_list(50, 43));
    CHECK(seeded_list(0, 1).empty());
}

TEST_CASE("config validation") {
    config cfg;
    cfg.repetitions = 0;
    CHECK_THROWS_AS(run_benchmark(cfg), std::invalid_argument);
    cfg = config{};
    cfg.pool_sizes = {1, 1};
    CHECK_THROWS_AS(run_benchmark(cfg), std::invalid_argument);
    cfg = config{};
    cfg.pool_sizes = {0};
    CHECK_THROWS_AS(run_benchmark(cfg), std::invalid_argument);
    cfg = config{};
    cfg.fib_n = -2;
    CHECK_THROWS_AS(run_benchmark(cfg), std::invalid_argument);
}

TEST_CASE("single-pool fib report has speedup exactly 1.0") {
    config cfg;
    cfg.system = system_kind::fib;
    cfg.fib_n = 12;
    cfg.pool_sizes = {1};
    cfg.repetitions = 3;
    cfg.cutoff = 0;
    auto rep = run_benchmark(cfg);
    REQUIRE(rep.rows.size() == 1);
    CHECK(rep.rows[0].pool_size == 1);
    CHECK(rep.rows[0].speedup == 1.0);
    CHECK(rep.system == "fib");
    CHECK(rep.input == "n=12");
}

TEST_CASE("qsort benchmark passes the oracle gate and reports all pools") {
    config cfg;
    cfg.system = system_kind::qsort;
    cfg.list_len = 200;
    cfg.seed = 42;
    cfg.pool_sizes = {4, 1}; // rows come back sorted ascending
    cfg.repetitions = 2;
    auto rep = run_benchmark(cfg);
    REQUIRE(rep.rows.size() == 2);
    CHECK(rep.rows[0].pool_size == 1);
    CHECK(rep.rows[1].pool_size == 4);
    CHECK(rep.rows[0].speedup == 1.0);
}

TEST_CASE("degenerate msort input runs without fault") {
    config cfg;
    cfg.system = system_kind::msort;
    cfg.list_len = 0;
    cfg.pool_sizes = {1};
    cfg.repetitions = 1;
    auto rep = run_benchmark(cfg);
    REQUIRE(rep.rows.size() == 1);
}

TEST_CASE("csv format and parse-back") {
    config cfg;
    cfg.system = system_kind::fib;
    cfg.fib_n = 10;
    cfg.pool_sizes = {1, 2};
    cfg.repetitions = 2;
    cfg.cutoff = 0;
    auto rep = run_benchmark(cfg);

    std::ostringstream os;
    write_csv(rep, os);
    auto lines = split(os.str(), '\n');
    REQUIRE(lines.size() == 4); // header + 2 rows + trailing empty
    CHECK(lines[0] == "system,input,pool_size,mean_ms,stddev_ms,speedup");
    CHECK(lines[3].empty());

    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        auto cols = split(lines[i + 1], ',');
        REQUIRE(cols.size() == 6);
        CHECK(cols[0] == rep.system);
        CHECK(cols[1] == rep.input);
        CHECK(std::stoi(cols[2]) == rep.rows[i].pool_size);
        CHECK(std::stod(cols[3]) == doctest::Approx(rep.rows[i].mean_ms).epsilon(1e-6));
        CHECK(std::stod(cols[4]) == doctest::Approx(rep.rows[i].stddev_ms).epsilon(1e-6));
        CHECK(std::stod(cols[5]) == doctest::Approx(rep.rows[i].speedup).epsilon(1e-6));
    }
}

TEST_CASE("empty report writes header only") {
    report rep;
    rep.system = "fib";
    std::ostringstream os;
    write_csv(rep, os);
    CHECK(os.str() == "system,input,pool_size,mean_ms,stddev_ms,speedup\n");
}

TEST_CASE("report determinism modulo timing") {
    config cfg;
    cfg.system = system_kind::msort;
    cfg.list_len = 50;
    cfg.seed = 1337;
    cfg.pool_sizes = {1, 2};
    cfg.repetitions = 1;
    auto a = run_benchmark(cfg);
    auto b = run_benchmark(cfg);
    CHECK(a.system == b.system);
    CHECK(a.input == b.input);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i)
        CHECK(a.rows[i].pool_size == b.rows[i].pool_size);
}

#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace inet::bench {

/// A timed run's result disagreed with the reference oracle; timings of
/// wrong answers are meaningless, so the whole benchmark aborts.
class result_mismatch_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class system_kind { fib, qsort, msort };

const char* system_name(system_kind k);

struct config {
    system_kind system = system_kind::fib;
    std::int64_t fib_n = 25;
    int list_len = 1000;
    std::uint64_t seed = 42;
    std::vector<int> pool_sizes = {1, 2, 4, 8};
    int repetitions = 100;
    int cutoff = 20;
};

struct row {
    int pool_size = 0;
    double mean_ms = 0.0;
    double stddev_ms = 0.0;
    double speedup = 0.0;
};

struct report {
    std::string system;
    std::string input; // e.g. "n=25" or "len=1000 seed=42"
    std::vector<row> rows;
};

/// Deterministic pseudo-random input list (same output on every host).
std::vector<std::int64_t> seeded_list(int len, std::uint64_t seed);

/// Runs the configured system over every pool size: one discarded
/// warm-up run plus `repetitions` timed runs per size. Timing covers
/// reduction only; net construction is outside the clock. Every run's
/// result is checked against the reference module before its timing is
/// accepted; a mismatch throws. Speed-ups are relative to pool size 1
/// when present, otherwise to the first listed pool size.
report run_benchmark(const config& cfg);

/// CSV: header "system,input,pool_size,mean_ms,stddev_ms,speedup" plus
/// one row per pool size, ascending.
void write_csv(const report& rep, std::ostream& os);

/// Human-readable one-line-per-pool-size summary.
std::string format_report(const report& rep);

} // namespace inet::bench

#include "inet/bench.hpp"

#include "inet/reference.hpp"
#include "inet/systems.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace inet::bench {

const char* system_name(system_kind k) {
    switch (k) {
    case system_kind::fib: return "fib";
    case system_kind::qsort: return "qsort";
    case system_kind::msort: return "msort";
    }
    return "?";
}

std::vector<std::int64_t> seeded_list(int len, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i)
        out.push_back(static_cast<std::int64_t>(rng() % 1000000));
    return out;
}

namespace {

struct timed_run {
    ground_value result;
    double elapsed_ms;
};

timed_run run_once(runtime& rt, const config& cfg, const std::vector<std::int64_t>& input) {
    sys::prepared_net net;
    switch (cfg.system) {
    case system_kind::fib: net = sys::prepare_fib(cfg.fib_n); break;
    case system_kind::qsort: net = sys::prepare_quicksort(input); break;
    case system_kind::msort: net = sys::prepare_mergesort(input); break;
    }
    auto t0 = std::chrono::steady_clock::now();
    auto values = normalize(rt, net.roots, net.pairs);
    auto t1 = std::chrono::steady_clock::now();
    return {std::move(values.at(0)), std::chrono::duration<double, std::milli>(t1 - t0).count()};
}

void validate(const config& cfg) {
    if (cfg.repetitions < 1)
        throw std::invalid_argument("bench: repetitions must be >= 1");
    if (cfg.pool_sizes.empty())
        throw std::invalid_argument("bench: at least one pool size required");
    std::set<int> distinct(cfg.pool_sizes.begin(), cfg.pool_sizes.end());
    if (distinct.size() != cfg.pool_sizes.size())
        throw std::invalid_argument("bench: pool sizes must be distinct");
    for (int p : cfg.pool_sizes)
        if (p < 1)
            throw std::invalid_argument("bench: pool sizes must be >= 1");
    if (cfg.system == system_kind::fib && cfg.fib_n < 0)
        throw std::invalid_argument("bench: fib input must be >= 0");
    if (cfg.system != system_kind::fib && cfg.list_len < 0)
        throw std::invalid_argument("bench: list length must be >= 0");
}

} // namespace

report run_benchmark(const config& cfg) {
    validate(cfg);

    std::vector<std::int64_t> input;
    ground_value expected;
    std::ostringstream input_desc;
    if (cfg.system == system_kind::fib) {
        expected = {ref::fib_oracle(cfg.fib_n)};
        input_desc << "n=" << cfg.fib_n;
    } else {
        input = seeded_list(cfg.list_len, cfg.seed);
        expected = {ref::sort_oracle(input)};
        input_desc << "len=" << cfg.list_len << " seed=" << cfg.seed;
    }

    report rep;
    rep.system = system_name(cfg.system);
    rep.input = input_desc.str();

    std::vector<int> pools = cfg.pool_sizes;
    std::sort(pools.begin(), pools.end());

    for (int pool_size : pools) {
        parallel_runtime rt(pool_size);
        rt.set_fib_cutoff(cfg.cutoff);
        std::vector<double> times;
        times.reserve(static_cast<std::size_t>(cfg.repetitions));
        for (int rep_i = -1; rep_i < cfg.repetitions; ++rep_i) {
            timed_run run = run_once(rt, cfg, input);
            if (!(run.result == expected))
                throw result_mismatch_error(std::string("bench: result mismatch against reference (") +
                                         rep.system + ", pool " + std::to_string(pool_size) + ")");
            if (rep_i >= 0) // warm-up run discarded
                times.push_back(run.elapsed_ms);
        }
        double mean = 0.0;
        for (double t : times)
            mean += t;
        mean /= static_cast<double>(times.size());
        double var = 0.0;
        if (times.size() > 1) {
            for (double t : times)
                var += (t - mean) * (t - mean);
            var /= static_cast<double>(times.size() - 1);
        }
        rep.rows.push_back({pool_size, mean, std::sqrt(var), 0.0});
    }

    double baseline = rep.rows.front().mean_ms;
    for (const auto& r : rep.rows)
        if (r.pool_size == 1)
            baseline = r.mean_ms;
    for (auto& r : rep.rows)
        r.speedup = r.mean_ms > 0.0 ? baseline / r.mean_ms : 1.0;
    return rep;
}

void write_csv(const report& rep, std::ostream& os) {
    os << "system,input,pool_size,mean_ms,stddev_ms,speedup\n";
    for (const auto& r : rep.rows) {
        os << rep.system << ',' << rep.input << ',' << r.pool_size << ',';
        char buf[96];
        std::snprintf(buf, sizeof buf, "%.6f,%.6f,%.6f", r.mean_ms, r.stddev_ms, r.speedup);
        os << buf << '\n';
    }
}

std::string format_report(const report& rep) {
    std::ostringstream os;
    os << rep.system << " (" << rep.input << ")\n";
    for (const auto& r : rep.rows) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "  pool=%-3d mean=%10.3f ms  stddev=%8.3f ms  speedup=%.2fx\n",
                      r.pool_size, r.mean_ms, r.stddev_ms, r.speedup);
        os << buf;
    }
    return os.str();
}

} // namespace inet::bench

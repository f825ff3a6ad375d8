#include "inet.h"

#include "inet/bench.hpp"
#include "inet/dot.hpp"
#include "inet/reference.hpp"
#include "inet/systems.hpp"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

struct inet_runtime_s {
    std::unique_ptr<inet::runtime> engine;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class Fn>
inet_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const std::invalid_argument&) {
        return INET_ERR_INVALID_ARGUMENT;
    } catch (const inet::type_error&) {
        return INET_ERR_TYPE;
    } catch (const inet::stuck_net_error&) {
        return INET_ERR_STUCK;
    } catch (const inet::missing_rule_error&) {
        return INET_ERR_MISSING_RULE;
    } catch (const std::bad_alloc&) {
        return INET_ERR_INTERNAL;
    } catch (const std::exception&) {
        return INET_ERR_INTERNAL;
    }
}

bool parse_system(const char* name, inet::bench::system_kind& out) {
    if (!name)
        return false;
    std::string s(name);
    if (s == "fib")
        out = inet::bench::system_kind::fib;
    else if (s == "qsort")
        out = inet::bench::system_kind::qsort;
    else if (s == "msort")
        out = inet::bench::system_kind::msort;
    else
        return false;
    return true;
}

inet_status timed_single(inet_runtime* rt, inet::sys::prepared_net net, inet::ground_value& out,
                         double* elapsed_ms) {
    auto t0 = std::chrono::steady_clock::now();
    auto values = inet::normalize(*rt->engine, net.roots, net.pairs);
    auto t1 = std::chrono::steady_clock::now();
    if (elapsed_ms)
        *elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    out = std::move(values.at(0));
    return INET_OK;
}

} // namespace

extern "C" {

const char* inet_status_message(inet_status status) {
    switch (status) {
    case INET_OK: return "ok";
    case INET_ERR_INVALID_ARGUMENT: return "invalid argument";
    case INET_ERR_TYPE: return "ill-typed net";
    case INET_ERR_STUCK: return "stuck net";
    case INET_ERR_MISSING_RULE: return "no rule for this pair";
    case INET_ERR_RESULT_MISMATCH: return "result mismatch against reference";
    case INET_ERR_IO: return "i/o error";
    case INET_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

inet_status inet_runtime_create(int workers, inet_runtime** out) {
    if (!out || workers < 0)
        return INET_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        int n = workers == 0 ? inet::default_pool_size() : workers;
        auto handle = std::make_unique<inet_runtime_s>();
        handle->engine = std::make_unique<inet::parallel_runtime>(n);
        *out = handle.release();
        return INET_OK;
    });
}

inet_status inet_runtime_create_sequential(inet_runtime** out) {
    if (!out)
        return INET_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        auto handle = std::make_unique<inet_runtime_s>();
        handle->engine = std::make_unique<inet::ref::sequential_runtime>();
        *out = handle.release();
        return INET_OK;
    });
}

void inet_runtime_destroy(inet_runtime* rt) { delete rt; }

inet_status inet_runtime_set_cutoff(inet_runtime* rt, int cutoff) {
    if (!rt)
        return INET_ERR_INVALID_ARGUMENT;
    rt->engine->set_fib_cutoff(cutoff);
    return INET_OK;
}

inet_status inet_eval_fib(inet_runtime* rt, long long n, long long* result, double* elapsed_ms) {
    if (!rt || !result)
        return INET_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        inet::ground_value value;
        inet_status st = timed_single(rt, inet::sys::prepare_fib(n), value, elapsed_ms);
        if (st != INET_OK)
            return st;
        *result = std::get<std::int64_t>(value.v);
        return INET_OK;
    });
}

inet_status inet_eval_sort(inet_runtime* rt, inet_sort_algo algo, const long long* xs, size_t len,
                           long long* out, double* elapsed_ms) {
    if (!rt || (!xs && len > 0) || (!out && len > 0))
        return INET_ERR_INVALID_ARGUMENT;
    if (algo != INET_SORT_QUICKSORT && algo != INET_SORT_MERGESORT)
        return INET_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        std::vector<std::int64_t> input(xs, xs + len);
        auto net = algo == INET_SORT_QUICKSORT ? inet::sys::prepare_quicksort(input)
                                               : inet::sys::prepare_mergesort(input);
        inet::ground_value value;
        inet_status st = timed_single(rt, std::move(net), value, elapsed_ms);
        if (st != INET_OK)
            return st;
        const auto& sorted = std::get<std::vector<std::int64_t>>(value.v);
        for (size_t i = 0; i < sorted.size(); ++i)
            out[i] = sorted[i];
        return INET_OK;
    });
}

inet_status inet_eval_and(inet_runtime* rt, int x, int y, int* result) {
    if (!rt || !result)
        return INET_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *result = inet::sys::eval_and(*rt->engine, x != 0, y != 0) ? 1 : 0;
        return INET_OK;
    });
}

inet_status inet_eval_is_even(inet_runtime* rt, long long n, int* result) {
    if (!rt || !result)
        return INET_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *result = inet::sys::is_even(*rt->engine, n) ? 1 : 0;
        return INET_OK;
    });
}

inet_status inet_stats_text(inet_runtime* rt, char** out) {
    if (!rt || !out)
        return INET_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        char* s = dup_string(rt->engine->stats().text());
        if (!s)
            return INET_ERR_INTERNAL;
        *out = s;
        return INET_OK;
    });
}

inet_status inet_stats_reset(inet_runtime* rt) {
    if (!rt)
        return INET_ERR_INVALID_ARGUMENT;
    rt->engine->stats().reset();
    return INET_OK;
}

inet_status inet_run_stats(const char* system, long long n, int len, unsigned long long seed,
                           int cutoff, char** out) {
    if (!out)
        return INET_ERR_INVALID_ARGUMENT;
    inet::bench::system_kind kind;
    if (!parse_system(system, kind))
        return INET_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        inet::sys::prepared_net net;
        switch (kind) {
        case inet::bench::system_kind::fib:
            net = inet::sys::prepare_fib(n);
            break;
        case inet::bench::system_kind::qsort:
            net = inet::sys::prepare_quicksort(inet::bench::seeded_list(len, seed));
            break;
        case inet::bench::system_kind::msort:
            net = inet::sys::prepare_mergesort(inet::bench::seeded_list(len, seed));
            break;
        }
        inet::ref::sequential_runtime rt;
        rt.set_fib_cutoff(cutoff);
        inet::normalize(rt, net.roots, net.pairs);
        char* s = dup_string(rt.stats().text());
        if (!s)
            return INET_ERR_INTERNAL;
        *out = s;
        return INET_OK;
    });
}

inet_status inet_net_dot(const char* system, long long n, int len, unsigned long long seed,
                         char** out) {
    if (!out)
        return INET_ERR_INVALID_ARGUMENT;
    inet::bench::system_kind kind;
    if (!parse_system(system, kind))
        return INET_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        inet::sys::prepared_net net;
        switch (kind) {
        case inet::bench::system_kind::fib:
            net = inet::sys::prepare_fib(n);
            break;
        case inet::bench::system_kind::qsort:
            net = inet::sys::prepare_quicksort(inet::bench::seeded_list(len, seed));
            break;
        case inet::bench::system_kind::msort:
            net = inet::sys::prepare_mergesort(inet::bench::seeded_list(len, seed));
            break;
        }
        char* s = dup_string(inet::to_dot(net.pairs, net.roots));
        if (!s)
            return INET_ERR_INTERNAL;
        *out = s;
        return INET_OK;
    });
}

inet_status inet_bench_run(const inet_bench_config* cfg, const char* csv_path, char** report_text) {
    if (!cfg)
        return INET_ERR_INVALID_ARGUMENT;
    inet::bench::config cxx;
    if (!parse_system(cfg->system, cxx.system))
        return INET_ERR_INVALID_ARGUMENT;
    if (!cfg->pool_sizes || cfg->pool_count < 1)
        return INET_ERR_INVALID_ARGUMENT;
    cxx.fib_n = cfg->fib_n;
    cxx.list_len = cfg->list_len;
    cxx.seed = cfg->seed;
    cxx.pool_sizes.assign(cfg->pool_sizes, cfg->pool_sizes + cfg->pool_count);
    cxx.repetitions = cfg->repetitions;
    cxx.cutoff = cfg->cutoff;
    return guarded([&]() -> inet_status {
        inet::bench::report rep;
        try {
            rep = inet::bench::run_benchmark(cxx);
        } catch (const inet::bench::result_mismatch_error&) {
            return INET_ERR_RESULT_MISMATCH;
        }
        if (csv_path) {
            std::ofstream out(csv_path);
            if (!out)
                return INET_ERR_IO;
            inet::bench::write_csv(rep, out);
            if (!out.flush())
                return INET_ERR_IO;
        }
        if (report_text) {
            char* s = dup_string(inet::bench::format_report(rep));
            if (!s)
                return INET_ERR_INTERNAL;
            *report_text = s;
        }
        return INET_OK;
    });
}

void inet_string_free(char* s) { std::free(s); }

} // extern "C"

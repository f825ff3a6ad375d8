#include "inet/reference.hpp"

#include <algorithm>
#include <stdexcept>

namespace inet::ref {

std::int64_t fib_oracle(std::int64_t n) {
    if (n < 0)
        throw std::invalid_argument("fib_oracle: negative input");
    std::int64_t a = 0;
    std::int64_t b = 1;
    for (std::int64_t i = 0; i < n; ++i) {
        std::int64_t next = a + b;
        a = b;
        b = next;
    }
    return a;
}

std::vector<std::int64_t> sort_oracle(std::span<const std::int64_t> xs) {
    std::vector<std::int64_t> out(xs.begin(), xs.end());
    std::sort(out.begin(), out.end());
    return out;
}

sequential_runtime::sequential_runtime() : runtime(default_rules()) {}

sequential_runtime::sequential_runtime(const rule_set& rules) : runtime(rules) {}

void sequential_runtime::schedule(node_ptr positive, node_ptr negative) {
    queue_.push_back({std::move(positive), std::move(negative)});
}

void sequential_runtime::run_to_quiescence() {
    while (!queue_.empty()) {
        active_pair pair = std::move(queue_.front());
        queue_.pop_front();
        apply(pair.positive, pair.negative);
    }
}

sequential_result reduce_sequential(std::span<const node_ptr> interface_roots,
                                    std::span<const active_pair> initial, int fib_cutoff) {
    sequential_runtime rt;
    rt.set_fib_cutoff(fib_cutoff);
    sequential_result out;
    out.values = normalize(rt, interface_roots, initial);
    out.rule_counts = rt.stats().snapshot();
    return out;
}

} // namespace inet::ref

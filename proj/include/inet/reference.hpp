#pragma once

#include "inet/runtime.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace inet::ref {

/// Iterative two-accumulator Fibonacci; throws std::invalid_argument
/// for negative input.
std::int64_t fib_oracle(std::int64_t n);

std::vector<std::int64_t> sort_oracle(std::span<const std::int64_t> xs);

/// Single-threaded deterministic engine: an explicit FIFO of pending
/// active pairs drained to quiescence. Runs the exact same rule arms as
/// the parallel engine; only dispatch is synchronous. Used as the
/// confluence and correctness baseline.
class sequential_runtime final : public runtime {
public:
    sequential_runtime();
    explicit sequential_runtime(const rule_set& rules);

    void schedule(node_ptr positive, node_ptr negative) override;
    bool blocking_reads() const noexcept override { return false; }
    void run_to_quiescence() override;

private:
    std::deque<active_pair> queue_;
};

struct sequential_result {
    std::vector<ground_value> values;
    std::map<std::string, std::uint64_t> rule_counts;
};

/// Drains the given initial pairs in queue order and reads back the
/// interface. An interface root left unresolved at quiescence surfaces
/// as stuck_net_error.
sequential_result reduce_sequential(std::span<const node_ptr> interface_roots,
                                    std::span<const active_pair> initial, int fib_cutoff = 20);

} // namespace inet::ref

#pragma once

#include "inet/agent.hpp"
#include "inet/runtime.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace inet::sys {

/// Symbol set of one shipped interaction system, for enumeration-style
/// exhaustiveness checks and tooling.
struct system_info {
    std::string name;
    std::vector<symbol> symbols;
};

const std::vector<system_info>& shipped_systems();

/// A built, not-yet-reduced net: interface roots plus initial pairs.
struct prepared_net {
    std::vector<node_ptr> roots;
    std::vector<active_pair> pairs;
};

prepared_net prepare_and(bool x, bool y);
prepared_net prepare_if(bool cond, bool then_v, bool else_v);
prepared_net prepare_is_even(std::int64_t n);
prepared_net prepare_fib(std::int64_t n); // throws std::invalid_argument for n < 0
prepared_net prepare_quicksort(std::span<const std::int64_t> xs);
prepared_net prepare_mergesort(std::span<const std::int64_t> xs);

bool eval_and(runtime& rt, bool x, bool y);
bool is_even(runtime& rt, std::int64_t n);

/// n-th Fibonacci number (fib(0) = 0, fib(1) = 1) via net reduction.
/// Inputs at or below the runtime's cutoff short-circuit to the
/// iterative algorithm inside the Int ><- Fib base arm.
std::int64_t fib_net(runtime& rt, std::int64_t n);

std::vector<std::int64_t> quicksort_net(runtime& rt, std::span<const std::int64_t> xs);
std::vector<std::int64_t> mergesort_net(runtime& rt, std::span<const std::int64_t> xs);

list_pos encode_list(std::span<const std::int64_t> xs);
std::vector<std::int64_t> decode_list(const node_ptr& list_root, bool allow_block);

} // namespace inet::sys

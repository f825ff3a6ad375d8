#pragma once

#include "inet/agent.hpp"
#include "inet/node.hpp"
#include "inet/scheduler.hpp"

#include <atomic>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace inet {

struct active_pair {
    node_ptr positive;
    node_ptr negative;
};

class runtime;

/// One guarded dispatch arm for an unordered symbol pair. Arms for a
/// pair are tried in registration order, most specific first; the last
/// arm of every pair must be unguarded so dispatch is total.
struct rule_arm {
    std::string label;
    std::function<bool(const runtime&, const node&, const node&)> guard; // null = always
    std::function<void(runtime&, const node_ptr&, const node_ptr&)> body;
};

/// Total mapping from (positive symbol, negative symbol) active pairs to
/// guarded right-hand-side builders. At most one rule (= one arm list)
/// per pair; the name arms are built into dispatch itself.
class rule_set {
public:
    rule_set();

    void add(symbol positive, symbol negative, std::vector<rule_arm> arms);

    bool has_rule(symbol positive, symbol negative) const noexcept;
    const std::vector<rule_arm>* find(symbol positive, symbol negative) const noexcept;

    /// All arm labels, including the two name arms; index = counter slot.
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    static constexpr std::size_t name_pos_slot = 0;
    static constexpr std::size_t name_neg_slot = 1;
    std::size_t slot_of(symbol positive, symbol negative, std::size_t arm) const noexcept;

private:
    struct pair_rules {
        std::vector<rule_arm> arms;
        std::vector<std::size_t> slots;
    };
    std::array<std::array<std::unique_ptr<pair_rules>, symbol_count>, symbol_count> table_{};
    std::vector<std::string> labels_;
    friend class runtime;
};

/// Per-run firing counters, one slot per rule arm. Strong confluence
/// makes the totals identical across pool sizes and schedules.
class interaction_stats {
public:
    explicit interaction_stats(const rule_set& rules);

    void bump(std::size_t slot) noexcept {
        counts_[slot].fetch_add(1, std::memory_order_relaxed);
    }
    void reset() noexcept;

    /// Nonzero counters keyed by arm label.
    std::map<std::string, std::uint64_t> snapshot() const;

    /// "label TAB count" lines, sorted by label, nonzero counters only.
    std::string text() const;

private:
    const rule_set* rules_;
    std::unique_ptr<std::atomic<std::uint64_t>[]> counts_;
};

/// Dispatch context shared by the parallel engine and the sequential
/// reference engine: both run the exact same rule arms and differ only
/// in how scheduled pairs are executed.
class runtime {
public:
    explicit runtime(const rule_set& rules);
    virtual ~runtime() = default;

    runtime(const runtime&) = delete;
    runtime& operator=(const runtime&) = delete;

    /// The -><- operator: queue an active pair for reduction.
    virtual void schedule(node_ptr positive, node_ptr negative) = 0;

    /// True when interface promises may be read with a parking block();
    /// false for engines that must be fully drained first.
    virtual bool blocking_reads() const noexcept = 0;

    /// Runs queued work to quiescence where the engine is driver-stepped
    /// (sequential); no-op for self-driving pool engines.
    virtual void run_to_quiescence() {}

    /// Exactly one arm fires for the pair, or missing_rule_error when the
    /// (dynamically built) pair has no rule.
    void apply(const node_ptr& positive, const node_ptr& negative);

    const rule_set& rules() const noexcept { return *rules_; }
    interaction_stats& stats() noexcept { return stats_; }
    const interaction_stats& stats() const noexcept { return stats_; }

    int fib_cutoff() const noexcept { return fib_cutoff_; }
    void set_fib_cutoff(int cutoff) noexcept { fib_cutoff_ = cutoff; }

private:
    const rule_set* rules_;
    interaction_stats stats_;
    int fib_cutoff_ = 20;
};

/// Rule set covering every shipped system (defined with the systems).
const rule_set& default_rules();

/// Pool-backed engine. Workers expand pairs depth-first from a local
/// worklist and overflow the oldest (largest) pending subtrees to the
/// shared queue in batches, keeping queue contention low while feeding
/// idle workers.
class parallel_runtime final : public runtime {
public:
    explicit parallel_runtime(int workers = default_pool_size());
    parallel_runtime(int workers, const rule_set& rules);
    ~parallel_runtime() override;

    void schedule(node_ptr positive, node_ptr negative) override;
    bool blocking_reads() const noexcept override { return true; }

    worker_pool& pool() noexcept { return pool_; }

private:
    void drain(std::vector<active_pair> batch);

    worker_pool pool_;
};

/// Typed -><-: only a (V, pos) / (V, neg) pair is expressible, so a
/// well-typedness violation here is a compile error, not a runtime one.
template <class V>
void interact(runtime& rt, agent<V, pos_t> a, agent<V, neg_t> b) {
    rt.schedule(std::move(a).take(), std::move(b).take());
}

/// Dynamically checked -><- for the untyped construction path: orients
/// the pair by principal polarity and rejects ill-typed pairs (pos-pos,
/// neg-neg, mismatched value kinds) with a type_error. Both orientations
/// are accepted and behave identically.
void interact_dyn(runtime& rt, node_ptr a, node_ptr b);

/// Ground observation of a normalized net.
struct ground_value {
    std::variant<bool, std::int64_t, std::vector<std::int64_t>> v;

    bool operator==(const ground_value&) const = default;
    std::string to_string() const;
};

/// Recursively resolves a positive agent to a ground value. Names are
/// read through their promises: parking the caller when allow_block is
/// set, otherwise failing with stuck_net_error if unresolved. A
/// non-value agent (a stuck function symbol) raises stuck_net_error.
ground_value read_back(const node_ptr& root, bool allow_block);

/// Schedules the initial pairs, lets the engine reach quiescence and
/// reads back every interface root, in order.
std::vector<ground_value> normalize(runtime& rt, std::span<const node_ptr> interface_roots,
                                    std::span<const active_pair> initial);

} // namespace inet

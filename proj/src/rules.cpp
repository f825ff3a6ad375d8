#include "inet/runtime.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace inet {

rule_set::rule_set() {
    labels_.push_back("name:pos");
    labels_.push_back("name:neg");
}

void rule_set::add(symbol positive, symbol negative, std::vector<rule_arm> arms) {
    auto& slot = table_[static_cast<std::size_t>(positive)][static_cast<std::size_t>(negative)];
    assert(!slot && "at most one rule per symbol pair");
    assert(!arms.empty() && !arms.back().guard && "last arm of a pair must be unguarded");
    auto pr = std::make_unique<pair_rules>();
    for (auto& arm : arms) {
        pr->slots.push_back(labels_.size());
        labels_.push_back(arm.label);
        pr->arms.push_back(std::move(arm));
    }
    slot = std::move(pr);
}

bool rule_set::has_rule(symbol positive, symbol negative) const noexcept {
    return table_[static_cast<std::size_t>(positive)][static_cast<std::size_t>(negative)] != nullptr;
}

const std::vector<rule_arm>* rule_set::find(symbol positive, symbol negative) const noexcept {
    const auto& pr = table_[static_cast<std::size_t>(positive)][static_cast<std::size_t>(negative)];
    return pr ? &pr->arms : nullptr;
}

std::size_t rule_set::slot_of(symbol positive, symbol negative, std::size_t arm) const noexcept {
    const auto& pr = table_[static_cast<std::size_t>(positive)][static_cast<std::size_t>(negative)];
    return pr->slots[arm];
}

interaction_stats::interaction_stats(const rule_set& rules)
    : rules_(&rules), counts_(new std::atomic<std::uint64_t>[rules.labels().size()]) {
    reset();
}

void interaction_stats::reset() noexcept {
    for (std::size_t i = 0; i < rules_->labels().size(); ++i)
        counts_[i].store(0, std::memory_order_relaxed);
}

std::map<std::string, std::uint64_t> interaction_stats::snapshot() const {
    std::map<std::string, std::uint64_t> out;
    const auto& labels = rules_->labels();
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto c = counts_[i].load(std::memory_order_relaxed);
        if (c != 0)
            out[labels[i]] += c;
    }
    return out;
}

std::string interaction_stats::text() const {
    std::ostringstream os;
    for (const auto& [label, count] : snapshot())
        os << label << '\t' << count << '\n';
    return os.str();
}

runtime::runtime(const rule_set& rules) : rules_(&rules), stats_(rules) {}

void runtime::apply(const node_ptr& positive, const node_ptr& negative) {
    // Name arms come first, in the listed order: NamePos re-dispatches
    // once its promise is resolved, releasing the worker meanwhile.
    if (positive->sym == symbol::NamePos) {
        stats_.bump(rule_set::name_pos_slot);
        positive->cell->on_resolved(
            [this, partner = negative](const node_ptr& resolved) { schedule(resolved, partner); });
        return;
    }
    if (negative->sym == symbol::NameNeg) {
        stats_.bump(rule_set::name_neg_slot);
        negative->cell->resolve(positive);
        return;
    }
    const auto& pr =
        rules_->table_[static_cast<std::size_t>(positive->sym)][static_cast<std::size_t>(negative->sym)];
    if (!pr)
        throw missing_rule_error(std::string("No rule for this pair: ") +
                                 std::string(symbol_label(positive->sym)) + " -><- " +
                                 std::string(symbol_label(negative->sym)));
    for (std::size_t i = 0; i < pr->arms.size(); ++i) {
        const auto& arm = pr->arms[i];
        if (arm.guard && !arm.guard(*this, *positive, *negative))
            continue;
        stats_.bump(pr->slots[i]);
        arm.body(*this, positive, negative);
        return;
    }
    throw missing_rule_error("guarded arms not total for pair"); // unreachable for shipped rules
}

namespace {
thread_local std::deque<active_pair>* tls_worklist = nullptr;

constexpr std::size_t flush_high_watermark = 128;
constexpr std::size_t flush_batch = 64;
} // namespace

parallel_runtime::parallel_runtime(int workers) : parallel_runtime(workers, default_rules()) {}

parallel_runtime::parallel_runtime(int workers, const rule_set& rules)
    : runtime(rules), pool_(workers) {}

parallel_runtime::~parallel_runtime() { pool_.wait_idle(); }

void parallel_runtime::schedule(node_ptr positive, node_ptr negative) {
    if (tls_worklist) {
        tls_worklist->push_back({std::move(positive), std::move(negative)});
        return;
    }
    std::vector<active_pair> batch;
    batch.push_back({std::move(positive), std::move(negative)});
    pool_.post([this, batch = std::move(batch)]() mutable { drain(std::move(batch)); });
}

void parallel_runtime::drain(std::vector<active_pair> batch) {
    std::deque<active_pair> local(std::make_move_iterator(batch.begin()),
                                  std::make_move_iterator(batch.end()));
    tls_worklist = &local;
    while (!local.empty()) {
        active_pair pair = std::move(local.back());
        local.pop_back();
        apply(pair.positive, pair.negative);
        if (local.size() >= flush_high_watermark) {
            // The front of the deque holds the shallowest (largest)
            // pending subtrees; hand those to idle workers.
            std::vector<active_pair> overflow(std::make_move_iterator(local.begin()),
                                              std::make_move_iterator(local.begin() + flush_batch));
            local.erase(local.begin(), local.begin() + flush_batch);
            pool_.post([this, overflow = std::move(overflow)]() mutable { drain(std::move(overflow)); });
        }
    }
    tls_worklist = nullptr;
}

void interact_dyn(runtime& rt, node_ptr a, node_ptr b) {
    port_type pa = principal_of(*a);
    port_type pb = principal_of(*b);
    if (pa.pol == pb.pol)
        throw type_error(std::string("interact: ill-typed active pair ") +
                         std::string(symbol_label(a->sym)) + " -><- " +
                         std::string(symbol_label(b->sym)) + " (equal polarities)");
    if (pa.kind != pb.kind && pa.kind != value_kind::any_v && pb.kind != value_kind::any_v)
        throw type_error(std::string("interact: ill-typed active pair ") +
                         std::string(symbol_label(a->sym)) + " -><- " +
                         std::string(symbol_label(b->sym)) + " (value types differ)");
    if (pa.pol == port_polarity::positive)
        rt.schedule(std::move(a), std::move(b));
    else
        rt.schedule(std::move(b), std::move(a));
}

std::string ground_value::to_string() const {
    if (const bool* b = std::get_if<bool>(&v))
        return *b ? "true" : "false";
    if (const std::int64_t* i = std::get_if<std::int64_t>(&v))
        return std::to_string(*i);
    const auto& xs = std::get<std::vector<std::int64_t>>(v);
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            out += "; ";
        out += std::to_string(xs[i]);
    }
    out += "]";
    return out;
}

namespace {

node_ptr resolve_names(node_ptr n, bool allow_block) {
    while (n->sym == symbol::NamePos) {
        if (allow_block) {
            n = n->cell->block();
        } else {
            const node_ptr* held = n->cell->peek();
            if (!held)
                throw stuck_net_error("read_back: unresolved name in normal form");
            n = *held;
        }
    }
    return n;
}

} // namespace

ground_value read_back(const node_ptr& root, bool allow_block) {
    node_ptr n = resolve_names(root, allow_block);
    switch (n->sym) {
    case symbol::T:
        return {true};
    case symbol::F:
        return {false};
    case symbol::Int:
        return {n->attr};
    case symbol::Nil:
    case symbol::Cons: {
        std::vector<std::int64_t> xs;
        while (n->sym == symbol::Cons) {
            xs.push_back(n->attr);
            n = resolve_names(n->aux[0], allow_block);
        }
        if (n->sym != symbol::Nil)
            throw stuck_net_error(std::string("read_back: list tail stuck at ") +
                                  std::string(symbol_label(n->sym)));
        return {std::move(xs)};
    }
    default:
        throw stuck_net_error(std::string("read_back: stuck at non-value agent ") +
                              std::string(symbol_label(n->sym)));
    }
}

std::vector<ground_value> normalize(runtime& rt, std::span<const node_ptr> interface_roots,
                                    std::span<const active_pair> initial) {
    for (const auto& pair : initial)
        rt.schedule(pair.positive, pair.negative);
    rt.run_to_quiescence();
    std::vector<ground_value> out;
    out.reserve(interface_roots.size());
    for (const auto& root : interface_roots)
        out.push_back(read_back(root, rt.blocking_reads()));
    if (auto* prt = dynamic_cast<parallel_runtime*>(&rt))
        prt->pool().wait_idle();
    return out;
}

} // namespace inet

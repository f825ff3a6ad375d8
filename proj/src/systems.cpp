#include "inet/systems.hpp"

#include "inet/reference.hpp"

#include <stdexcept>
#include <utility>

namespace inet {

namespace {

using namespace sys;

int_neg wrap_int_neg(const node_ptr& n) { return int_neg::from_node(n); }
int_pos wrap_int_pos(const node_ptr& n) { return int_pos::from_node(n); }
bool_neg wrap_bool_neg(const node_ptr& n) { return bool_neg::from_node(n); }
bool_pos wrap_bool_pos(const node_ptr& n) { return bool_pos::from_node(n); }
list_neg wrap_list_neg(const node_ptr& n) { return list_neg::from_node(n); }
list_pos wrap_list_pos(const node_ptr& n) { return list_pos::from_node(n); }

rule_arm arm(std::string label, std::function<void(runtime&, const node_ptr&, const node_ptr&)> body) {
    return {std::move(label), nullptr, std::move(body)};
}

rule_arm guarded(std::string label, std::function<bool(const runtime&, const node&, const node&)> g,
                 std::function<void(runtime&, const node_ptr&, const node_ptr&)> body) {
    return {std::move(label), std::move(g), std::move(body)};
}

rule_set build_rules() {
    rule_set rules;

    // Booleans.
    rules.add(symbol::T, symbol::And,
              {arm("T-And", [](runtime& rt, const node_ptr&, const node_ptr& neg) {
                  interact(rt, wrap_bool_pos(neg->aux[1]), wrap_bool_neg(neg->aux[0]));
              })});
    rules.add(symbol::F, symbol::And,
              {arm("F-And", [](runtime& rt, const node_ptr&, const node_ptr& neg) {
                  // Second operand discarded; reclamation collects its net.
                  interact(rt, F(), wrap_bool_neg(neg->aux[0]));
              })});
    rules.add(symbol::T, symbol::If,
              {arm("T-If", [](runtime& rt, const node_ptr&, const node_ptr& neg) {
                  interact(rt, wrap_bool_pos(neg->aux[1]), wrap_bool_neg(neg->aux[0]));
              })});
    rules.add(symbol::F, symbol::If,
              {arm("F-If", [](runtime& rt, const node_ptr&, const node_ptr& neg) {
                  interact(rt, wrap_bool_pos(neg->aux[2]), wrap_bool_neg(neg->aux[0]));
              })});

    // Attributed integers: the guarded arm must come before the
    // fall-through, or odd inputs would never be reached correctly.
    rules.add(symbol::Int, symbol::IsEven,
              {guarded("Int-IsEven:even",
                       [](const runtime&, const node& pos, const node&) { return pos.attr % 2 == 0; },
                       [](runtime& rt, const node_ptr&, const node_ptr& neg) {
                           interact(rt, T(), wrap_bool_neg(neg->aux[0]));
                       }),
               arm("Int-IsEven:odd", [](runtime& rt, const node_ptr&, const node_ptr& neg) {
                   interact(rt, F(), wrap_bool_neg(neg->aux[0]));
               })});

    // Fibonacci. fib(0) = 0, fib(1) = 1. Inputs at or below the cutoff
    // short-circuit to the iterative algorithm.
    rules.add(symbol::Int, symbol::Fib,
              {guarded("Int-Fib:base",
                       [](const runtime& rt, const node& pos, const node&) {
                           return pos.attr < 2 || pos.attr <= rt.fib_cutoff();
                       },
                       [](runtime& rt, const node_ptr& pos, const node_ptr& neg) {
                           interact(rt, Int(ref::fib_oracle(pos->attr)), wrap_int_neg(neg->aux[0]));
                       }),
               arm("Int-Fib:rec", [](runtime& rt, const node_ptr& pos, const node_ptr& neg) {
                   std::int64_t k = pos->attr;
                   auto result = wrap_int_neg(neg->aux[0]);
                   auto [second, second_out] = new_name<int_ty>();
                   interact(rt, Int(k - 1), Fib(AddStage1(result, second)));
                   interact(rt, Int(k - 2), Fib(second_out));
               })});
    rules.add(symbol::Int, symbol::AddStage1,
              {arm("Int-AddStage1", [](runtime& rt, const node_ptr& pos, const node_ptr& neg) {
                  interact(rt, wrap_int_pos(neg->aux[1]),
                           AddStage2(pos->attr, wrap_int_neg(neg->aux[0])));
              })});
    rules.add(symbol::Int, symbol::AddStage2,
              {arm("Int-AddStage2", [](runtime& rt, const node_ptr& pos, const node_ptr& neg) {
                  interact(rt, Int(neg->attr + pos->attr), wrap_int_neg(neg->aux[0]));
              })});

    // Quicksort: pivot is the head, ties go to the low partition.
    rules.add(symbol::Nil, symbol::QS,
              {arm("Nil-QS", [](runtime& rt, const node_ptr&, const node_ptr& neg) {
                  interact(rt, Nil(), wrap_list_neg(neg->aux[0]));
              })});
    rules.add(symbol::Cons, symbol::QS,
              {arm("Cons-QS", [](runtime& rt, const node_ptr& pos, const node_ptr& neg) {
                  std::int64_t pivot = pos->attr;
                  auto result = wrap_list_neg(neg->aux[0]);
                  auto [high_sorted, high_out] = new_name<int_list_ty>();
                  interact(rt, wrap_list_pos(pos->aux[0]),
                           Part(pivot, QS(App(result, Cons(pivot, high_sorted))), QS(high_out)));
              })});
    rules.add(symbol::Nil, symbol::Part,
              {arm("Nil-Part", [](runtime& rt, const node_ptr&, const node_ptr& neg) {
                  interact(rt, Nil(), wrap_list_neg(neg->aux[0]));
                  interact(rt, Nil(), wrap_list_neg(neg->aux[1]));
              })});
    rules.add(symbol::Cons, symbol::Part,
              {guarded("Cons-Part:low",
                       [](const runtime&, const node& pos, const node& neg) {
                           return pos.attr <= neg.attr;
                       },
                       [](runtime& rt, const node_ptr& pos, const node_ptr& neg) {
                           auto [rest, rest_out] = new_name<int_list_ty>();
                           interact(rt, Cons(pos->attr, rest), wrap_list_neg(neg->aux[0]));
                           interact(rt, wrap_list_pos(pos->aux[0]),
                                    Part(neg->attr, rest_out, wrap_list_neg(neg->aux[1])));
                       }),
               arm("Cons-Part:high", [](runtime& rt, const node_ptr& pos, const node_ptr& neg) {
                   auto [rest, rest_out] = new_name<int_list_ty>();
                   interact(rt, Cons(pos->attr, rest), wrap_list_neg(neg->aux[1]));
                   interact(rt, wrap_list_pos(pos->aux[0]),
                            Part(neg->attr, wrap_list_neg(neg->aux[0]), rest_out));
               })});
    rules.add(symbol::Nil, symbol::App,
              {arm("Nil-App", [](runtime& rt, const node_ptr&, const node_ptr& neg) {
                  interact(rt, wrap_list_pos(neg->aux[1]), wrap_list_neg(neg->aux[0]));
              })});
    rules.add(symbol::Cons, symbol::App,
              {arm("Cons-App", [](runtime& rt, const node_ptr& pos, const node_ptr& neg) {
                  auto [rest, rest_out] = new_name<int_list_ty>();
                  interact(rt, Cons(pos->attr, rest), wrap_list_neg(neg->aux[0]));
                  interact(rt, wrap_list_pos(pos->aux[0]),
                           App(rest_out, wrap_list_pos(neg->aux[1])));
              })});

    // Mergesort: alternating split, attribute-carrying merge agents.
    rules.add(symbol::Nil, symbol::MS,
              {arm("Nil-MS", [](runtime& rt, const node_ptr&, const node_ptr& neg) {
                  interact(rt, Nil(), wrap_list_neg(neg->aux[0]));
              })});
    rules.add(symbol::Cons, symbol::MS,
              {arm("Cons-MS", [](runtime& rt, const node_ptr& pos, const node_ptr& neg) {
                  interact(rt, wrap_list_pos(pos->aux[0]),
                           MS2(pos->attr, wrap_list_neg(neg->aux[0])));
              })});
    rules.add(symbol::Nil, symbol::MS2,
              {arm("Nil-MS2", [](runtime& rt, const node_ptr&, const node_ptr& neg) {
                  interact(rt, Cons(neg->attr, Nil()), wrap_list_neg(neg->aux[0]));
              })});
    rules.add(symbol::Cons, symbol::MS2,
              {arm("Cons-MS2", [](runtime& rt, const node_ptr& pos, const node_ptr& neg) {
                  // List is h :: h2 :: t2 with h = neg attr: split t2
                  // alternately, sort h::left and h2::right, merge.
                  auto result = wrap_list_neg(neg->aux[0]);
                  auto [left, left_out] = new_name<int_list_ty>();
                  auto [right, right_out] = new_name<int_list_ty>();
                  auto [left_sorted, left_sorted_out] = new_name<int_list_ty>();
                  interact(rt, wrap_list_pos(pos->aux[0]), Split(left_out, right_out));
                  interact(rt, Cons(neg->attr, left), MS(left_sorted_out));
                  interact(rt, Cons(pos->attr, right), MS(Merge(result, left_sorted)));
              })});
    rules.add(symbol::Nil, symbol::Split,
              {arm("Nil-Split", [](runtime& rt, const node_ptr&, const node_ptr& neg) {
                  interact(rt, Nil(), wrap_list_neg(neg->aux[0]));
                  interact(rt, Nil(), wrap_list_neg(neg->aux[1]));
              })});
    rules.add(symbol::Cons, symbol::Split,
              {arm("Cons-Split", [](runtime& rt, const node_ptr& pos, const node_ptr& neg) {
                  auto [rest, rest_out] = new_name<int_list_ty>();
                  interact(rt, Cons(pos->attr, rest), wrap_list_neg(neg->aux[0]));
                  // Outputs swap so elements alternate between the two.
                  interact(rt, wrap_list_pos(pos->aux[0]),
                           Split(wrap_list_neg(neg->aux[1]), rest_out));
              })});
    rules.add(symbol::Nil, symbol::Merge,
              {arm("Nil-Merge", [](runtime& rt, const node_ptr&, const node_ptr& neg) {
                  interact(rt, wrap_list_pos(neg->aux[1]), wrap_list_neg(neg->aux[0]));
              })});
    rules.add(symbol::Cons, symbol::Merge,
              {arm("Cons-Merge", [](runtime& rt, const node_ptr& pos, const node_ptr& neg) {
                  interact(rt, wrap_list_pos(neg->aux[1]),
                           MergeCmp(pos->attr, wrap_list_neg(neg->aux[0]),
                                    wrap_list_pos(pos->aux[0])));
              })});
    rules.add(symbol::Nil, symbol::MergeCmp,
              {arm("Nil-MergeCmp", [](runtime& rt, const node_ptr&, const node_ptr& neg) {
                  interact(rt, Cons(neg->attr, wrap_list_pos(neg->aux[1])),
                           wrap_list_neg(neg->aux[0]));
              })});
    rules.add(symbol::Cons, symbol::MergeCmp,
              {guarded("Cons-MergeCmp:left",
                       [](const runtime&, const node& pos, const node& neg) {
                           return neg.attr <= pos.attr;
                       },
                       [](runtime& rt, const node_ptr& pos, const node_ptr& neg) {
                           // Held head h wins: h :: merge(t, h2 :: t2).
                           auto [rest, rest_out] = new_name<int_list_ty>();
                           interact(rt, Cons(neg->attr, rest), wrap_list_neg(neg->aux[0]));
                           interact(rt, wrap_list_pos(neg->aux[1]),
                                    Merge(rest_out, Cons(pos->attr, wrap_list_pos(pos->aux[0]))));
                       }),
               arm("Cons-MergeCmp:right", [](runtime& rt, const node_ptr& pos, const node_ptr& neg) {
                   // Incoming head h2 wins: h2 :: merge(h :: t, t2).
                   auto [rest, rest_out] = new_name<int_list_ty>();
                   interact(rt, Cons(pos->attr, rest), wrap_list_neg(neg->aux[0]));
                   interact(rt, wrap_list_pos(pos->aux[0]),
                            Merge(rest_out, Cons(neg->attr, wrap_list_pos(neg->aux[1]))));
               })});

    return rules;
}

} // namespace

const rule_set& default_rules() {
    static const rule_set rules = build_rules();
    return rules;
}

namespace sys {

const std::vector<system_info>& shipped_systems() {
    static const std::vector<system_info> systems = {
        {"bool", {symbol::T, symbol::F, symbol::And, symbol::If}},
        {"arith", {symbol::T, symbol::F, symbol::And, symbol::If, symbol::Int, symbol::IsEven}},
        {"fib", {symbol::Int, symbol::Fib, symbol::AddStage1, symbol::AddStage2}},
        {"list",
         {symbol::Nil, symbol::Cons, symbol::QS, symbol::Part, symbol::App, symbol::MS, symbol::MS2,
          symbol::Split, symbol::Merge, symbol::MergeCmp}},
    };
    return systems;
}

namespace {

bool_pos bool_agent(bool b) { return b ? T() : F(); }

prepared_net single_root(node_ptr root, active_pair pair) {
    prepared_net net;
    net.roots.push_back(std::move(root));
    net.pairs.push_back(std::move(pair));
    return net;
}

} // namespace

prepared_net prepare_and(bool x, bool y) {
    auto [result, result_out] = new_name<bool_ty>();
    auto lhs = bool_agent(x);
    auto rhs = And(result_out, bool_agent(y));
    return single_root(std::move(result).take(),
                       {std::move(lhs).take(), std::move(rhs).take()});
}

prepared_net prepare_if(bool cond, bool then_v, bool else_v) {
    auto [result, result_out] = new_name<bool_ty>();
    auto lhs = bool_agent(cond);
    auto rhs = If(result_out, bool_agent(then_v), bool_agent(else_v));
    return single_root(std::move(result).take(),
                       {std::move(lhs).take(), std::move(rhs).take()});
}

prepared_net prepare_is_even(std::int64_t n) {
    auto [result, result_out] = new_name<bool_ty>();
    auto lhs = Int(n);
    auto rhs = IsEven(result_out);
    return single_root(std::move(result).take(),
                       {std::move(lhs).take(), std::move(rhs).take()});
}

prepared_net prepare_fib(std::int64_t n) {
    if (n < 0)
        throw std::invalid_argument("fib: negative input");
    auto [result, result_out] = new_name<int_ty>();
    auto lhs = Int(n);
    auto rhs = Fib(result_out);
    return single_root(std::move(result).take(),
                       {std::move(lhs).take(), std::move(rhs).take()});
}

prepared_net prepare_quicksort(std::span<const std::int64_t> xs) {
    auto [result, result_out] = new_name<int_list_ty>();
    auto lhs = encode_list(xs);
    auto rhs = QS(result_out);
    return single_root(std::move(result).take(),
                       {std::move(lhs).take(), std::move(rhs).take()});
}

prepared_net prepare_mergesort(std::span<const std::int64_t> xs) {
    auto [result, result_out] = new_name<int_list_ty>();
    auto lhs = encode_list(xs);
    auto rhs = MS(result_out);
    return single_root(std::move(result).take(),
                       {std::move(lhs).take(), std::move(rhs).take()});
}

namespace {

ground_value run_single(runtime& rt, prepared_net net) {
    auto values = normalize(rt, net.roots, net.pairs);
    return values.at(0);
}

} // namespace

bool eval_and(runtime& rt, bool x, bool y) {
    return std::get<bool>(run_single(rt, prepare_and(x, y)).v);
}

bool is_even(runtime& rt, std::int64_t n) {
    return std::get<bool>(run_single(rt, prepare_is_even(n)).v);
}

std::int64_t fib_net(runtime& rt, std::int64_t n) {
    return std::get<std::int64_t>(run_single(rt, prepare_fib(n)).v);
}

std::vector<std::int64_t> quicksort_net(runtime& rt, std::span<const std::int64_t> xs) {
    return std::get<std::vector<std::int64_t>>(run_single(rt, prepare_quicksort(xs)).v);
}

std::vector<std::int64_t> mergesort_net(runtime& rt, std::span<const std::int64_t> xs) {
    return std::get<std::vector<std::int64_t>>(run_single(rt, prepare_mergesort(xs)).v);
}

list_pos encode_list(std::span<const std::int64_t> xs) {
    list_pos tail = Nil();
    for (auto it = xs.rbegin(); it != xs.rend(); ++it)
        tail = Cons(*it, std::move(tail));
    return tail;
}

std::vector<std::int64_t> decode_list(const node_ptr& list_root, bool allow_block) {
    ground_value g = read_back(list_root, allow_block);
    if (auto* xs = std::get_if<std::vector<std::int64_t>>(&g.v))
        return std::move(*xs);
    throw stuck_net_error("decode_list: agent is not a list");
}

} // namespace sys
} // namespace inet

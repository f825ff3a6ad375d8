#pragma once

#include "inet/node.hpp"

#include <type_traits>
#include <utility>

namespace inet {

// Polarity tags. Deliberately uninhabited: they exist only at the type
// level and can never unify, so a positive agent can never appear where
// a negative one is required.
struct pos_t {
    pos_t() = delete;
};
struct neg_t {
    neg_t() = delete;
};

// Value-type tags, one per semantic carrier.
struct int_ty {
    int_ty() = delete;
};
struct bool_ty {
    bool_ty() = delete;
};
struct int_list_ty {
    int_list_ty() = delete;
};

template <class P>
struct inverse_polarity;
template <>
struct inverse_polarity<pos_t> {
    using type = neg_t;
};
template <>
struct inverse_polarity<neg_t> {
    using type = pos_t;
};
template <class P>
using inverse_polarity_t = typename inverse_polarity<P>::type;

/// Handle to an agent's principal port, typed (V, P). The tags are
/// erased at runtime: an agent is exactly one shared node pointer.
///
/// Auxiliary slots in the constructors below are typed by the agent
/// STORED in them, whose polarity is the inverse of the polarity the
/// port carries in the graphical notation. E.g. the result port of And
/// is drawn as a (bool, pos) output, but the slot holds the (bool, neg)
/// consumer that output is wired to. This inversion is the whole trick:
/// it is what lets plain constructor application represent wiring.
template <class V, class P>
class agent {
public:
    using value_type = V;
    using polarity = P;

    const node_ptr& ptr() const& noexcept { return n_; }
    node_ptr take() && noexcept { return std::move(n_); }

    /// Rewraps a raw node without checks. Rule bodies use this to give
    /// matched sub-agents back their statically known types.
    static agent from_node(node_ptr n) { return agent(std::move(n)); }

private:
    explicit agent(node_ptr n) : n_(std::move(n)) {}
    node_ptr n_;
};

using bool_pos = agent<bool_ty, pos_t>;
using bool_neg = agent<bool_ty, neg_t>;
using int_pos = agent<int_ty, pos_t>;
using int_neg = agent<int_ty, neg_t>;
using list_pos = agent<int_list_ty, pos_t>;
using list_neg = agent<int_list_ty, neg_t>;

/// Fresh wire: a matched NamePos/NameNeg pair over one single-assignment
/// cell. Connecting a producer to the NameNeg and a consumer to the
/// NamePos realizes one aux-aux link.
template <class V>
std::pair<agent<V, pos_t>, agent<V, neg_t>> new_name() {
    auto [p, n] = new_name_nodes();
    return {agent<V, pos_t>::from_node(std::move(p)), agent<V, neg_t>::from_node(std::move(n))};
}

// Constructor-per-symbol encoding. Each symbol is a function object whose
// call signature is the symbol's typed constructor; ill-typed nets like
// And(r, Int(0)) fail overload resolution and do not compile.
namespace sys {

inline constexpr struct t_ctor {
    bool_pos operator()() const { return bool_pos::from_node(make_node(symbol::T, 0, {})); }
} T{};

inline constexpr struct f_ctor {
    bool_pos operator()() const { return bool_pos::from_node(make_node(symbol::F, 0, {})); }
} F{};

inline constexpr struct and_ctor {
    bool_neg operator()(bool_neg result, bool_pos operand) const {
        return bool_neg::from_node(
            make_node(symbol::And, 0, {std::move(result).take(), std::move(operand).take()}));
    }
} And{};

inline constexpr struct if_ctor {
    bool_neg operator()(bool_neg result, bool_pos then_branch, bool_pos else_branch) const {
        return bool_neg::from_node(make_node(symbol::If, 0,
                                             {std::move(result).take(), std::move(then_branch).take(),
                                              std::move(else_branch).take()}));
    }
} If{};

inline constexpr struct int_ctor {
    int_pos operator()(std::int64_t n) const {
        return int_pos::from_node(make_node(symbol::Int, n, {}));
    }
} Int{};

inline constexpr struct is_even_ctor {
    int_neg operator()(bool_neg result) const {
        return int_neg::from_node(make_node(symbol::IsEven, 0, {std::move(result).take()}));
    }
} IsEven{};

inline constexpr struct fib_ctor {
    int_neg operator()(int_neg result) const {
        return int_neg::from_node(make_node(symbol::Fib, 0, {std::move(result).take()}));
    }
} Fib{};

inline constexpr struct add_stage1_ctor {
    int_neg operator()(int_neg result, int_pos operand) const {
        return int_neg::from_node(
            make_node(symbol::AddStage1, 0, {std::move(result).take(), std::move(operand).take()}));
    }
} AddStage1{};

inline constexpr struct add_stage2_ctor {
    int_neg operator()(std::int64_t acc, int_neg result) const {
        return int_neg::from_node(make_node(symbol::AddStage2, acc, {std::move(result).take()}));
    }
} AddStage2{};

inline constexpr struct nil_ctor {
    list_pos operator()() const { return list_pos::from_node(make_node(symbol::Nil, 0, {})); }
} Nil{};

inline constexpr struct cons_ctor {
    list_pos operator()(std::int64_t head, list_pos tail) const {
        return list_pos::from_node(make_node(symbol::Cons, head, {std::move(tail).take()}));
    }
} Cons{};

inline constexpr struct qs_ctor {
    list_neg operator()(list_neg result) const {
        return list_neg::from_node(make_node(symbol::QS, 0, {std::move(result).take()}));
    }
} QS{};

inline constexpr struct part_ctor {
    list_neg operator()(std::int64_t pivot, list_neg low_out, list_neg high_out) const {
        return list_neg::from_node(
            make_node(symbol::Part, pivot, {std::move(low_out).take(), std::move(high_out).take()}));
    }
} Part{};

inline constexpr struct app_ctor {
    list_neg operator()(list_neg result, list_pos suffix) const {
        return list_neg::from_node(
            make_node(symbol::App, 0, {std::move(result).take(), std::move(suffix).take()}));
    }
} App{};

inline constexpr struct ms_ctor {
    list_neg operator()(list_neg result) const {
        return list_neg::from_node(make_node(symbol::MS, 0, {std::move(result).take()}));
    }
} MS{};

inline constexpr struct ms2_ctor {
    list_neg operator()(std::int64_t first_head, list_neg result) const {
        return list_neg::from_node(make_node(symbol::MS2, first_head, {std::move(result).take()}));
    }
} MS2{};

inline constexpr struct split_ctor {
    list_neg operator()(list_neg left_out, list_neg right_out) const {
        return list_neg::from_node(
            make_node(symbol::Split, 0, {std::move(left_out).take(), std::move(right_out).take()}));
    }
} Split{};

inline constexpr struct merge_ctor {
    list_neg operator()(list_neg result, list_pos other) const {
        return list_neg::from_node(
            make_node(symbol::Merge, 0, {std::move(result).take(), std::move(other).take()}));
    }
} Merge{};

inline constexpr struct merge_cmp_ctor {
    list_neg operator()(std::int64_t head, list_neg result, list_pos tail) const {
        return list_neg::from_node(
            make_node(symbol::MergeCmp, head, {std::move(result).take(), std::move(tail).take()}));
    }
} MergeCmp{};

} // namespace sys

} // namespace inet

#pragma once

#include "inet/scheduler.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace inet {

/// Runtime-level port typing, used by signatures, the dynamically checked
/// construction path, and tooling. The statically typed layer in agent.hpp
/// erases all of this into phantom template parameters.
enum class value_kind : std::uint8_t { int_v, bool_v, int_list_v, any_v };
enum class port_polarity : std::uint8_t { positive, negative };

struct port_type {
    value_kind kind;
    port_polarity pol;
};

enum class symbol : std::uint8_t {
    T,
    F,
    And,
    If,
    Int,
    IsEven,
    Fib,
    AddStage1,
    AddStage2,
    Nil,
    Cons,
    QS,
    Part,
    App,
    MS,
    MS2,
    Split,
    Merge,
    MergeCmp,
    NamePos,
    NameNeg,
};

inline constexpr std::size_t symbol_count = static_cast<std::size_t>(symbol::NameNeg) + 1;
inline constexpr std::size_t max_arity = 3;

/// Per-symbol metadata. Auxiliary slot types are the STORED types: the
/// type and polarity of the agent held in the slot, which is the inverse
/// of the polarity the port carries in the usual graphical depiction.
struct symbol_signature {
    std::string_view label;
    port_type principal;
    std::array<port_type, max_arity> aux;
    std::uint8_t arity;
    bool has_attr;
};

const symbol_signature& signature_of(symbol s) noexcept;
std::string_view symbol_label(symbol s) noexcept;

struct node;
using node_ptr = std::shared_ptr<node>;
using name_cell = detail::oneshot_cell<node_ptr>;

/// One agent instance. A node denotes its own principal port; the aux
/// array holds the agents connected at its auxiliary ports. Immutable
/// after construction; the only mutable state is the name cell.
struct node {
    symbol sym;
    std::int64_t attr = 0;
    std::array<node_ptr, max_arity> aux{};
    std::shared_ptr<name_cell> cell; // NamePos / NameNeg only

    explicit node(symbol s) : sym(s) {}
    ~node();
};

class type_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class stuck_net_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class missing_rule_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unchecked construction; used by the statically typed layer, whose
/// signatures already guarantee well-typedness.
node_ptr make_node(symbol s, std::int64_t attr, std::initializer_list<node_ptr> aux);

/// Dynamically checked construction: verifies arity and that every aux
/// agent's principal (value kind, polarity) matches the stored slot type.
/// Throws type_error on mismatch. This is the conformance path for hosts
/// without per-constructor type refinement; the typed layer makes these
/// faults unrepresentable at compile time instead.
node_ptr make_agent(symbol s, std::int64_t attr, std::span<const node_ptr> aux);

/// Principal port type of a constructed node (names are polymorphic in
/// the value kind and report any_v).
port_type principal_of(const node& n) noexcept;

/// Untyped name pair over a fresh cell.
std::pair<node_ptr, node_ptr> new_name_nodes();

} // namespace inet

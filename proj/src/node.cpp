#include "inet/node.hpp"

#include <vector>

namespace inet {

namespace {

constexpr port_type ip = {value_kind::int_v, port_polarity::positive};
constexpr port_type in = {value_kind::int_v, port_polarity::negative};
constexpr port_type bp = {value_kind::bool_v, port_polarity::positive};
constexpr port_type bn = {value_kind::bool_v, port_polarity::negative};
constexpr port_type lp = {value_kind::int_list_v, port_polarity::positive};
constexpr port_type ln = {value_kind::int_list_v, port_polarity::negative};
constexpr port_type ap = {value_kind::any_v, port_polarity::positive};
constexpr port_type an = {value_kind::any_v, port_polarity::negative};

constexpr symbol_signature make_sig(std::string_view label, port_type principal,
                                    std::initializer_list<port_type> aux, bool has_attr) {
    symbol_signature sig{label, principal, {}, 0, has_attr};
    for (auto p : aux)
        sig.aux[sig.arity++] = p;
    return sig;
}

// Aux entries are stored-slot types (inverted relative to the drawn port).
const symbol_signature signatures[symbol_count] = {
    make_sig("T", bp, {}, false),
    make_sig("F", bp, {}, false),
    make_sig("And", bn, {bn, bp}, false),
    make_sig("If", bn, {bn, bp, bp}, false),
    make_sig("Int", ip, {}, true),
    make_sig("IsEven", in, {bn}, false),
    make_sig("Fib", in, {in}, false),
    make_sig("AddStage1", in, {in, ip}, false),
    make_sig("AddStage2", in, {in}, true),
    make_sig("Nil", lp, {}, false),
    make_sig("Cons", lp, {lp}, true),
    make_sig("QS", ln, {ln}, false),
    make_sig("Part", ln, {ln, ln}, true),
    make_sig("App", ln, {ln, lp}, false),
    make_sig("MS", ln, {ln}, false),
    make_sig("MS2", ln, {ln}, true),
    make_sig("Split", ln, {ln, ln}, false),
    make_sig("Merge", ln, {ln, lp}, false),
    make_sig("MergeCmp", ln, {ln, lp}, true),
    make_sig("NamePos", ap, {}, false),
    make_sig("NameNeg", an, {}, false),
};

} // namespace

const symbol_signature& signature_of(symbol s) noexcept {
    return signatures[static_cast<std::size_t>(s)];
}

std::string_view symbol_label(symbol s) noexcept { return signature_of(s).label; }

node::~node() {
    // Iterative teardown so that long Cons/name chains cannot overflow
    // the stack through recursive shared_ptr destruction.
    std::vector<node_ptr> pending;
    auto strip = [&pending](node& n) {
        for (auto& child : n.aux) {
            if (child && child.use_count() == 1)
                pending.push_back(std::move(child));
        }
        if (n.cell && n.cell.use_count() == 1) {
            if (auto held = n.cell->take_value(); held && held->use_count() == 1)
                pending.push_back(std::move(*held));
        }
    };
    strip(*this);
    while (!pending.empty()) {
        node_ptr doomed = std::move(pending.back());
        pending.pop_back();
        strip(*doomed);
    }
}

node_ptr make_node(symbol s, std::int64_t attr, std::initializer_list<node_ptr> aux) {
    auto n = std::make_shared<node>(s);
    n->attr = attr;
    std::size_t i = 0;
    for (const auto& a : aux)
        n->aux[i++] = a;
    return n;
}

port_type principal_of(const node& n) noexcept { return signature_of(n.sym).principal; }

namespace {

bool port_matches(port_type want, port_type got) {
    if (want.pol != got.pol)
        return false;
    return want.kind == got.kind || want.kind == value_kind::any_v || got.kind == value_kind::any_v;
}

std::string port_string(port_type p) {
    std::string_view kind;
    switch (p.kind) {
    case value_kind::int_v: kind = "int"; break;
    case value_kind::bool_v: kind = "bool"; break;
    case value_kind::int_list_v: kind = "int list"; break;
    case value_kind::any_v: kind = "'a"; break;
    }
    return std::string("(") + std::string(kind) + ", " +
           (p.pol == port_polarity::positive ? "pos" : "neg") + ")";
}

} // namespace

node_ptr make_agent(symbol s, std::int64_t attr, std::span<const node_ptr> aux) {
    const auto& sig = signature_of(s);
    if (s == symbol::NamePos || s == symbol::NameNeg)
        throw type_error("make_agent: name agents are created through new_name");
    if (aux.size() != sig.arity)
        throw type_error(std::string("make_agent: ") + std::string(sig.label) + " expects " +
                         std::to_string(sig.arity) + " auxiliary agents, got " +
                         std::to_string(aux.size()));
    for (std::size_t i = 0; i < aux.size(); ++i) {
        if (!aux[i])
            throw type_error("make_agent: null auxiliary agent");
        port_type got = principal_of(*aux[i]);
        if (!port_matches(sig.aux[i], got))
            throw type_error(std::string("make_agent: ") + std::string(sig.label) + " slot " +
                             std::to_string(i) + " expects " + port_string(sig.aux[i]) +
                             " but " + std::string(symbol_label(aux[i]->sym)) + " has " +
                             port_string(got));
    }
    auto n = std::make_shared<node>(s);
    n->attr = attr;
    for (std::size_t i = 0; i < aux.size(); ++i)
        n->aux[i] = aux[i];
    return n;
}

std::pair<node_ptr, node_ptr> new_name_nodes() {
    auto cell = std::make_shared<name_cell>();
    auto pos = std::make_shared<node>(symbol::NamePos);
    auto neg = std::make_shared<node>(symbol::NameNeg);
    pos->cell = cell;
    neg->cell = cell;
    return {std::move(pos), std::move(neg)};
}

} // namespace inet

#include "inet/dot.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>
#include <vector>

namespace inet {

namespace {

struct dot_builder {
    std::map<const node*, int> ids;
    std::vector<const node*> order;
    std::map<const name_cell*, std::vector<int>> name_pairs;

    int visit(const node_ptr& n) {
        auto it = ids.find(n.get());
        if (it != ids.end())
            return it->second;
        int id = static_cast<int>(order.size());
        ids.emplace(n.get(), id);
        order.push_back(n.get());
        if (n->cell)
            name_pairs[n->cell.get()].push_back(id);
        const auto& sig = signature_of(n->sym);
        for (std::uint8_t i = 0; i < sig.arity; ++i)
            visit(n->aux[i]);
        return id;
    }
};

} // namespace

std::string to_dot(std::span<const active_pair> pairs, std::span<const node_ptr> roots) {
    dot_builder b;
    for (const auto& p : pairs) {
        b.visit(p.positive);
        b.visit(p.negative);
    }
    for (const auto& r : roots)
        b.visit(r);

    std::ostringstream os;
    os << "digraph net {\n";
    os << "  node [shape=box];\n";
    for (std::size_t i = 0; i < b.order.size(); ++i) {
        const node* n = b.order[i];
        os << "  a" << i << " [label=\"" << symbol_label(n->sym);
        if (signature_of(n->sym).has_attr)
            os << "[" << n->attr << "]";
        os << "\"];\n";
    }
    for (std::size_t i = 0; i < b.order.size(); ++i) {
        const node* n = b.order[i];
        const auto& sig = signature_of(n->sym);
        for (std::uint8_t k = 0; k < sig.arity; ++k)
            os << "  a" << i << " -> a" << b.ids.at(n->aux[k].get()) << " [label=\"" << int(k)
               << "\"];\n";
    }
    for (const auto& p : pairs)
        os << "  a" << b.ids.at(p.positive.get()) << " -> a" << b.ids.at(p.negative.get())
           << " [dir=both, color=red];\n";
    std::vector<std::pair<int, int>> dashed;
    for (const auto& [cell, members] : b.name_pairs) {
        if (members.size() == 2)
            dashed.emplace_back(std::min(members[0], members[1]), std::max(members[0], members[1]));
    }
    std::sort(dashed.begin(), dashed.end());
    for (const auto& [lo, hi] : dashed)
        os << "  a" << lo << " -> a" << hi << " [style=dashed, dir=none];\n";
    return os.str();
}

} // namespace inet

#pragma once

#include "inet/runtime.hpp"

#include <span>
#include <string>

namespace inet {

/// Deterministic DOT rendering of a quiescent net: one box per agent
/// labeled "label" or "label[attr]", auxiliary connections drawn with
/// the arrowhead at the connected agent's principal port, active pairs
/// as double-arrowed principal-principal edges, and matched name pairs
/// as dashed edges. Serializing the same net twice yields byte-identical
/// output.
std::string to_dot(std::span<const active_pair> pairs, std::span<const node_ptr> roots);

} // namespace inet

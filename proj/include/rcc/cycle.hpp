#pragma once

#include <compare>
#include <vector>

#include "rcc/graph.hpp"

namespace rcc {

// Simple cycle stored as a node sequence in canonical form: the smallest
// node id comes first and of its two neighbors on the cycle the smaller one
// comes second.  This makes equal cycles compare equal regardless of the
// rotation or direction they were discovered in.
struct Cycle {
    std::vector<int> nodes;

    int length() const { return static_cast<int>(nodes.size()); }

    // Rotates and possibly reverses the sequence into canonical form.
    // The sequence must have at least 3 distinct nodes.
    static Cycle canonical(std::vector<int> sequence);

    bool operator==(const Cycle&) const = default;
    auto operator<=>(const Cycle&) const = default;
};

// True when the node sequence is a simple cycle of g: length >= 3, nodes
// distinct and consecutive nodes (wrapping around) adjacent in g.
bool is_cycle_of(const Cycle& c, const Graph& g);

}  // namespace rcc

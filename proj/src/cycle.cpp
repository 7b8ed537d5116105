#include "rcc/cycle.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace rcc {

Cycle Cycle::canonical(std::vector<int> sequence) {
    const int l = static_cast<int>(sequence.size());
    if (l < 3) throw std::invalid_argument("a cycle needs at least 3 nodes");
    const auto lowest = std::min_element(sequence.begin(), sequence.end());
    std::rotate(sequence.begin(), lowest, sequence.end());
    if (sequence[1] > sequence[l - 1])
        std::reverse(sequence.begin() + 1, sequence.end());
    return Cycle{std::move(sequence)};
}

bool is_cycle_of(const Cycle& c, const Graph& g) {
    const int l = c.length();
    if (l < 3) return false;
    std::unordered_set<int> seen;
    for (int i = 0; i < l; ++i) {
        const int u = c.nodes[i];
        if (u < 0 || u >= g.node_count()) return false;
        if (!seen.insert(u).second) return false;
        if (!g.has_edge(u, c.nodes[(i + 1) % l])) return false;
    }
    return true;
}

}  // namespace rcc

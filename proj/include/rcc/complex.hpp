#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rcc/cycle.hpp"
#include "rcc/graph.hpp"
#include "rcc/linalg.hpp"

namespace rcc {

// Two-dimensional cell complex: a graph skeleton plus a set of 2-cells,
// each glued along a simple cycle.  Cells are stored canonical, sorted and
// unique; the constructor canonicalizes and rejects duplicates and
// sequences that are not cycles of the skeleton.
class CellComplex2 {
public:
    CellComplex2() = default;
    CellComplex2(Graph skeleton, std::vector<Cycle> cells);

    const Graph& skeleton() const { return skeleton_; }
    const std::vector<Cycle>& cells() const { return cells_; }

private:
    Graph skeleton_;
    std::vector<Cycle> cells_;
};

// Signed incidence operators.  vertex_edge is n x m with -1 at the smaller
// endpoint and +1 at the larger one; edge_cell is m x k with one +-1 entry
// per edge of each cell, positive when the cell's traversal agrees with the
// edge's low-to-high orientation.  Their product is always zero.
struct BoundaryMatrices {
    IntMatrix vertex_edge;
    IntMatrix edge_cell;
};

BoundaryMatrices boundary_matrices(const CellComplex2& cx);

struct CohomologyDims {
    int b0 = 0;  // connected components
    int b1 = 0;  // independent uncovered loops
    int b2 = 0;  // enclosed voids
};

// Betti numbers over the rationals via exact ranks of the boundary
// operators.
CohomologyDims cohomology_dims(const CellComplex2& cx);

// A complex is orientable when cell orientations can be flipped so that
// every edge shared by two cells is traversed in opposite directions, and
// no edge lies in more than two cells.
bool is_orientable(const CellComplex2& cx);

// Provenance carried alongside a sampled complex.
struct ComplexMeta {
    std::uint64_t seed = 0;
    int trees = 0;
    std::string mode;           // "uniform-probability" or "expected-cells"
    std::string approximation;  // "estimated" or "fast"
    std::vector<int> undersampled_lengths;
};

// JSON with sorted keys and no whitespace dependence on input, so equal
// complexes serialize to identical bytes.
std::string write_complex_json(const CellComplex2& cx, const ComplexMeta& meta);
std::pair<CellComplex2, ComplexMeta> read_complex_json(std::string_view text);

}  // namespace rcc

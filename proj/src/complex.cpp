#include "rcc/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace rcc {

CellComplex2::CellComplex2(Graph skeleton, std::vector<Cycle> cells)
    : skeleton_(std::move(skeleton)) {
    cells_.reserve(cells.size());
    for (auto& c : cells) {
        Cycle canon = Cycle::canonical(std::move(c.nodes));
        if (!is_cycle_of(canon, skeleton_))
            throw std::invalid_argument("cell is not a cycle of the skeleton");
        cells_.push_back(std::move(canon));
    }
    std::sort(cells_.begin(), cells_.end());
    if (std::adjacent_find(cells_.begin(), cells_.end()) != cells_.end())
        throw std::invalid_argument("duplicate cell");
}

namespace {

std::map<std::pair<int, int>, int> edge_index(const Graph& g) {
    std::map<std::pair<int, int>, int> idx;
    int e = 0;
    for (auto edge : g.edges()) idx[edge] = e++;
    return idx;
}

}  // namespace

BoundaryMatrices boundary_matrices(const CellComplex2& cx) {
    const Graph& g = cx.skeleton();
    const int n = g.node_count();
    const int m = static_cast<int>(g.edge_count());
    const int k = static_cast<int>(cx.cells().size());
    const auto idx = edge_index(g);

    BoundaryMatrices b;
    b.vertex_edge = IntMatrix(n, m);
    for (int e = 0; e < m; ++e) {
        const auto [u, v] = g.edges()[e];
        b.vertex_edge.at(u, e) = -1;
        b.vertex_edge.at(v, e) = 1;
    }

    b.edge_cell = IntMatrix(m, k);
    for (int j = 0; j < k; ++j) {
        const auto& nodes = cx.cells()[j].nodes;
        const int l = static_cast<int>(nodes.size());
        for (int i = 0; i < l; ++i) {
            const int a = nodes[i];
            const int c = nodes[(i + 1) % l];
            const int e = idx.at({std::min(a, c), std::max(a, c)});
            b.edge_cell.at(e, j) = a < c ? 1 : -1;
        }
    }
    return b;
}

namespace {

int component_count(const Graph& g) {
    const int n = g.node_count();
    std::vector<char> seen(n, 0);
    int comps = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++comps;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
    }
    return comps;
}

}  // namespace

CohomologyDims cohomology_dims(const CellComplex2& cx) {
    const BoundaryMatrices b = boundary_matrices(cx);
    const int m = static_cast<int>(cx.skeleton().edge_count());
    const int k = static_cast<int>(cx.cells().size());
    const int r1 = rank(b.vertex_edge);
    const int r2 = rank(b.edge_cell);

    CohomologyDims dims;
    dims.b0 = component_count(cx.skeleton());
    dims.b1 = m - r1 - r2;  // r1 always equals n - b0; tests assert that
    dims.b2 = k - r2;
    return dims;
}

bool is_orientable(const CellComplex2& cx) {
    const Graph& g = cx.skeleton();
    const int k = static_cast<int>(cx.cells().size());
    const auto idx = edge_index(g);

    // directions[e] collects (cell, sign) for every cell using edge e.
    std::vector<std::vector<std::pair<int, int>>> directions(g.edge_count());
    for (int j = 0; j < k; ++j) {
        const auto& nodes = cx.cells()[j].nodes;
        const int l = static_cast<int>(nodes.size());
        for (int i = 0; i < l; ++i) {
            const int a = nodes[i];
            const int c = nodes[(i + 1) % l];
            const int e = idx.at({std::min(a, c), std::max(a, c)});
            directions[e].emplace_back(j, a < c ? 1 : -1);
            if (directions[e].size() > 2) return false;
        }
    }

    // Two cells on one edge must traverse it oppositely, possibly after
    // flipping one of them: flip parity propagates through a union-find.
    std::vector<int> parent(k), parity(k, 0);
    std::iota(parent.begin(), parent.end(), 0);
    const auto find = [&](int x) {
        int root = x, p = 0;
        while (parent[root] != root) {
            p ^= parity[root];
            root = parent[root];
        }
        // Path compression with parity rewrite.
        while (parent[x] != root) {
            const int nxt = parent[x];
            const int np = p ^ parity[x];
            parent[x] = root;
            parity[x] = p;
            p = np;
            x = nxt;
        }
        return root;
    };
    const auto parity_of = [&](int x) {
        int p = 0;
        while (parent[x] != x) {
            p ^= parity[x];
            x = parent[x];
        }
        return p;
    };

    for (const auto& users : directions) {
        if (users.size() != 2) continue;
        const auto [c1, s1] = users[0];
        const auto [c2, s2] = users[1];
        const int want = s1 == s2 ? 1 : 0;  // same direction: exactly one flip
        const int r1 = find(c1), r2 = find(c2);
        const int p1 = parity_of(c1), p2 = parity_of(c2);
        if (r1 == r2) {
            if ((p1 ^ p2) != want) return false;
        } else {
            parent[r1] = r2;
            parity[r1] = p1 ^ p2 ^ want;
        }
    }
    return true;
}

std::string write_complex_json(const CellComplex2& cx, const ComplexMeta& meta) {
    nlohmann::json j;
    j["n"] = cx.skeleton().node_count();
    auto& edges = j["edges"] = nlohmann::json::array();
    for (auto [u, v] : cx.skeleton().edges()) edges.push_back({u, v});
    auto& cells = j["cells"] = nlohmann::json::array();
    for (const auto& c : cx.cells()) cells.push_back(c.nodes);
    j["meta"] = {{"seed", meta.seed},
                 {"trees", meta.trees},
                 {"mode", meta.mode},
                 {"approximation", meta.approximation},
                 {"undersampled_lengths", meta.undersampled_lengths}};
    return j.dump(2) + "\n";
}

std::pair<CellComplex2, ComplexMeta> read_complex_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("invalid complex JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges") || !j.contains("cells"))
        throw std::invalid_argument("complex JSON needs n, edges and cells");

    try {
        const int n = j.at("n").get<int>();
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw std::invalid_argument("each edge must be a pair");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        std::vector<Cycle> cells;
        for (const auto& c : j.at("cells")) cells.push_back(Cycle{c.get<std::vector<int>>()});

        ComplexMeta meta;
        if (j.contains("meta")) {
            const auto& jm = j.at("meta");
            meta.seed = jm.value("seed", 0ULL);
            meta.trees = jm.value("trees", 0);
            meta.mode = jm.value("mode", "");
            meta.approximation = jm.value("approximation", "");
            meta.undersampled_lengths = jm.value("undersampled_lengths", std::vector<int>{});
        }
        return {CellComplex2(Graph(n, std::move(edges)), std::move(cells)), std::move(meta)};
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("invalid complex JSON: ") + e.what());
    }
}

}  // namespace rcc

#ifndef QEC_TESTS_HELPERS_HPP
#define QEC_TESTS_HELPERS_HPP

#include <string>
#include <vector>

#include "qec/graph.hpp"

namespace qec::test {

inline Graph complement(const Graph& g) {
    std::vector<Edge> e;
    for (int i = 0; i < g.vertex_count(); ++i)
        for (int j = i + 1; j < g.vertex_count(); ++j)
            if (!g.adjacent(i, j)) e.emplace_back(i, j);
    return Graph(g.vertex_count(), std::move(e));
}

// K_{2,2,2}, 4-regular on 6 vertices with smallest eigenvalue -2.
inline Graph octahedron() {
    Graph g = complement(complete_blocks(3, 2));
    g.set_label("K222");
    return g;
}

inline Graph star(int leaves) {
    std::vector<Edge> e;
    for (int i = 0; i < leaves; ++i) e.emplace_back(0, i + 1);
    return Graph(leaves + 1, std::move(e), "K1_" + std::to_string(leaves));
}

inline Graph complete_bipartite(int a, int b) {
    std::vector<Edge> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph(a + b, std::move(e), "K" + std::to_string(a) + "_" + std::to_string(b));
}

} // namespace qec::test

#endif

#include "qec/random_graphs.hpp"

#include <limits>

#include "qec/errors.hpp"

namespace qec {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t m) {
    if (m == 0) throw precondition_error("uniform_below: m must be positive");
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % m;
    for (;;) {
        const std::uint64_t v = rng();
        if (v < limit) return v % m;
    }
}

Graph random_graph(std::mt19937_64& rng, int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng() & 1u) e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

Graph random_connected_graph(std::mt19937_64& rng, int n_min, int n_max) {
    const int n = n_min + static_cast<int>(uniform_below(rng, n_max - n_min + 1));
    for (int attempt = 0; attempt < 100000; ++attempt) {
        Graph g = random_graph(rng, n);
        if (is_connected(g)) return g;
    }
    throw numeric_error("random_connected_graph: gave up after 100000 attempts");
}

Graph random_circulant(std::mt19937_64& rng, int n) {
    std::vector<Edge> e;
    for (int s = 1; s <= n / 2; ++s) {
        if (!(rng() & 1u)) continue;
        for (int i = 0; i < n; ++i) {
            const int j = (i + s) % n;
            if (i != j) e.emplace_back(i, j);
        }
    }
    return Graph(n, std::move(e));
}

} // namespace qec

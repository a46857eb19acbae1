#include "qec/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "qec/errors.hpp"

namespace qec {

Graph::Graph(int n, std::vector<Edge> edges, std::string label)
    : n_(n), edges_(std::move(edges)), label_(std::move(label)) {
    if (n_ < 0)
        throw precondition_error("graph: vertex count must be non-negative, got " + std::to_string(n_));
    for (auto& [u, v] : edges_) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw precondition_error("graph: edge (" + std::to_string(u) + "," + std::to_string(v) +
                                     ") out of range for n=" + std::to_string(n_));
        if (u == v)
            throw precondition_error("graph: loop edge at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Graph::adjacent(int u, int v) const {
    if (u == v) return false;
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(n_, 0);
    for (const auto& [u, v] : edges_) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

std::optional<int> Graph::regular_degree() const {
    if (n_ == 0) return std::nullopt;
    auto deg = degrees();
    for (int d : deg)
        if (d != deg[0]) return std::nullopt;
    return deg[0];
}

Eigen::MatrixXd Graph::adjacency_matrix() const {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_, n_);
    for (const auto& [u, v] : edges_) {
        a(u, v) = 1.0;
        a(v, u) = 1.0;
    }
    return a;
}

std::vector<std::vector<int>> Graph::adjacency_lists() const {
    std::vector<std::vector<int>> nbr(n_);
    for (const auto& [u, v] : edges_) {
        nbr[u].push_back(v);
        nbr[v].push_back(u);
    }
    return nbr;
}

Graph complete_graph(int n) {
    if (n < 1) throw parse_error("complete graph needs n >= 1");
    std::vector<Edge> e;
    e.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, std::move(e), "K" + std::to_string(n));
}

Graph empty_graph(int n) {
    if (n < 1) throw parse_error("empty graph needs n >= 1");
    return Graph(n, {}, "E" + std::to_string(n));
}

Graph path_graph(int n) {
    if (n < 1) throw parse_error("path graph needs n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e), "P" + std::to_string(n));
}

Graph cycle_graph(int n) {
    if (n < 3) throw parse_error("cycle graph needs n >= 3");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(e), "C" + std::to_string(n));
}

Graph complete_blocks(int p, int q) {
    if (p < 1 || q < 1) throw parse_error("pKq needs p >= 1 and q >= 1");
    std::vector<Edge> e;
    for (int b = 0; b < p; ++b)
        for (int i = 0; i < q; ++i)
            for (int j = i + 1; j < q; ++j) e.emplace_back(b * q + i, b * q + j);
    return Graph(p * q, std::move(e), std::to_string(p) + "K" + std::to_string(q));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> e(a.edges());
    const int off = a.vertex_count();
    for (const auto& [u, v] : b.edges()) e.emplace_back(u + off, v + off);
    std::string label;
    if (!a.label().empty() && !b.label().empty()) label = a.label() + "+" + b.label();
    return Graph(a.vertex_count() + b.vertex_count(), std::move(e), std::move(label));
}

Graph make_family(const std::string& kind, const std::vector<int>& params) {
    auto want = [&](std::size_t k) {
        if (params.size() != k)
            throw parse_error("family '" + kind + "' expects " + std::to_string(k) +
                              " parameter(s), got " + std::to_string(params.size()));
    };
    if (kind == "complete") {
        want(1);
        return complete_graph(params[0]);
    }
    if (kind == "empty") {
        want(1);
        return empty_graph(params[0]);
    }
    if (kind == "path") {
        want(1);
        return path_graph(params[0]);
    }
    if (kind == "cycle") {
        want(1);
        return cycle_graph(params[0]);
    }
    if (kind == "disjoint-union-of-completes") {
        want(2);
        return complete_blocks(params[0], params[1]);
    }
    if (kind == "disjoint-union") {
        // pairs (p_i, q_i), each a block of p_i copies of K_{q_i}
        if (params.empty() || params.size() % 2 != 0)
            throw parse_error("family 'disjoint-union' expects pairs (p,q,...) of parameters");
        Graph g = complete_blocks(params[0], params[1]);
        for (std::size_t i = 2; i < params.size(); i += 2)
            g = disjoint_union(g, complete_blocks(params[i], params[i + 1]));
        return g;
    }
    throw parse_error("unknown family '" + kind + "'");
}

Graph corona(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count();
    const int nh = h.vertex_count();
    if (ng < 1) throw precondition_error("corona: g needs at least one vertex");
    const int blk = 1 + nh;
    std::vector<Edge> e;
    e.reserve(g.edge_count() + static_cast<std::size_t>(ng) * (nh + h.edge_count()));
    for (const auto& [i, j] : g.edges()) e.emplace_back(i * blk, j * blk);
    for (int i = 0; i < ng; ++i) {
        const int base = i * blk;
        for (int x = 0; x < nh; ++x) e.emplace_back(base, base + 1 + x);
        for (const auto& [x, y] : h.edges()) e.emplace_back(base + 1 + x, base + 1 + y);
    }
    std::string label;
    if (!g.label().empty() && !h.label().empty())
        label = "corona(" + g.label() + "," + h.label() + ")";
    return Graph(ng * blk, std::move(e), std::move(label));
}

Graph join_k1(const Graph& h) {
    const int nh = h.vertex_count();
    std::vector<Edge> e;
    e.reserve(nh + h.edge_count());
    for (int x = 0; x < nh; ++x) e.emplace_back(0, 1 + x);
    for (const auto& [x, y] : h.edges()) e.emplace_back(1 + x, 1 + y);
    std::string label = h.label().empty() ? "" : "join(K1," + h.label() + ")";
    return Graph(1 + nh, std::move(e), std::move(label));
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    auto nbr = g.adjacency_lists();
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : nbr[x])
            if (!seen[y]) {
                seen[y] = 1;
                ++reached;
                q.push(y);
            }
    }
    return reached == n;
}

} // namespace qec

#ifndef QEC_GRAPH_HPP
#define QEC_GRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace qec {

using Edge = std::pair<int, int>;

// Simple undirected graph: vertex set {0..n-1}, normalized edge list
// (sorted pairs, deduplicated, no loops).  Immutable after construction.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges, std::string label = "");

    int vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::string& label() const noexcept { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }

    bool adjacent(int u, int v) const;
    std::vector<int> degrees() const;
    // Degree if every vertex has the same one, otherwise nullopt.
    std::optional<int> regular_degree() const;

    Eigen::MatrixXd adjacency_matrix() const;
    std::vector<std::vector<int>> adjacency_lists() const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::string label_;
};

// Named families with canonical vertex numbering 0..n-1.
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n); // n >= 3
// p disjoint copies of K_q.
Graph complete_blocks(int p, int q);
Graph disjoint_union(const Graph& a, const Graph& b);

// Dispatch by family name: "complete", "empty", "path", "cycle",
// "disjoint-union-of-completes" (params [p, q]) and "disjoint-union"
// (params [p1, q1, p2, q2, ...], a union of complete blocks).
Graph make_family(const std::string& kind, const std::vector<int>& params);

// Corona g (.) h: one private copy of h per vertex of g, that vertex joined
// to all of its copy.  Block i occupies indices i*(1+h.n) .. i*(1+h.n)+h.n
// with the copy of the g-vertex first.
Graph corona(const Graph& g, const Graph& h);

// Join with a single apex vertex: new vertex 0 adjacent to every vertex
// of h, h's adjacency preserved on 1..h.n.
Graph join_k1(const Graph& h);

bool is_connected(const Graph& g);

} // namespace qec

#endif

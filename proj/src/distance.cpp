#include "qec/distance.hpp"

#include <queue>
#include <string>
#include <vector>

#include "qec/errors.hpp"

namespace qec {

namespace {

// Kronecker product over integer matrices.
Eigen::MatrixXi kron(const Eigen::MatrixXi& a, const Eigen::MatrixXi& b) {
    Eigen::MatrixXi out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

} // namespace

DistanceMatrix distance_matrix(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1) throw precondition_error("distance_matrix: graph has no vertices");
    auto nbr = g.adjacency_lists();
    Eigen::MatrixXi d = Eigen::MatrixXi::Constant(n, n, -1);
    for (int s = 0; s < n; ++s) {
        d(s, s) = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int y : nbr[x])
                if (d(s, y) < 0) {
                    d(s, y) = d(s, x) + 1;
                    q.push(y);
                }
        }
        for (int y = 0; y < n; ++y)
            if (d(s, y) < 0)
                throw precondition_error("distance_matrix: graph is disconnected, vertex " +
                                         std::to_string(y) + " unreachable from vertex " +
                                         std::to_string(s));
    }
    return DistanceMatrix{n, std::move(d)};
}

DistanceMatrix corona_distance_matrix(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count();
    const int nh = h.vertex_count();
    if (ng < 2) throw precondition_error("corona_distance_matrix: g needs at least 2 vertices");
    if (nh < 1) throw precondition_error("corona_distance_matrix: h needs at least 1 vertex");

    const Eigen::MatrixXi dg = distance_matrix(g).d; // also certifies connectivity
    const Eigen::MatrixXi ah = h.adjacency_matrix().cast<int>();
    const int blk = 1 + nh;

    // Inner blocks over {o} ∪ V_2 in the order of corona().
    Eigen::MatrixXi inner = Eigen::MatrixXi::Zero(blk, blk);
    inner.bottomRightCorner(nh, nh) = -2 * Eigen::MatrixXi::Identity(nh, nh) - ah;

    Eigen::MatrixXi outer = Eigen::MatrixXi::Zero(blk, blk);
    outer.block(0, 1, 1, nh).setOnes();
    outer.block(1, 0, nh, 1).setOnes();
    outer.bottomRightCorner(nh, nh).setConstant(2);

    Eigen::MatrixXi d = kron(dg, Eigen::MatrixXi::Ones(blk, blk)) +
                        kron(Eigen::MatrixXi::Identity(ng, ng), inner) +
                        kron(Eigen::MatrixXi::Ones(ng, ng), outer);
    return DistanceMatrix{ng * blk, std::move(d)};
}

} // namespace qec

#ifndef QEC_DISTANCE_HPP
#define QEC_DISTANCE_HPP

#include <Eigen/Dense>

#include "qec/graph.hpp"

namespace qec {

// Exact hop-count distance matrix of a connected graph.
struct DistanceMatrix {
    int n = 0;
    Eigen::MatrixXi d;

    Eigen::MatrixXd as_double() const { return d.cast<double>(); }
};

// BFS all-pairs distances; throws precondition_error naming an unreached
// vertex when g is disconnected.
DistanceMatrix distance_matrix(const Graph& g);

// Distance matrix of corona(g, h) assembled as the three-term tensor sum
//   D_G (x) J  +  I (x) [0 0; 0 -2I-A_H]  +  J (x) [0 J; J 2J]
// in the block ordering of corona().  Equals the BFS matrix entrywise.
DistanceMatrix corona_distance_matrix(const Graph& g, const Graph& h);

} // namespace qec

#endif

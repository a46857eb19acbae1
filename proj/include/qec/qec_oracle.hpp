#ifndef QEC_QEC_ORACLE_HPP
#define QEC_QEC_ORACLE_HPP

#include <optional>
#include <string>

#include <Eigen/Dense>

#include "qec/distance.hpp"
#include "qec/graph.hpp"

namespace qec {

struct QecResult {
    enum class Method { oracle, closed_form, theorem };

    double value = 0.0;
    // Unit vector f with <1,f> = 0 and <f,Df> = value, present for oracle
    // results.  Sign normalized so the first nonzero entry is positive.
    std::optional<Eigen::VectorXd> certificate;
    Method method = Method::oracle;
    std::string graph_id;
};

const char* method_name(QecResult::Method m);

// Deterministic orthonormal basis of the hyperplane {f : <1,f> = 0}:
// the trailing n-1 columns of the Householder reflector carrying the first
// coordinate axis to 1/sqrt(n).
Eigen::MatrixXd hyperplane_basis(int n);

// Brute-force QEC: largest eigenvalue of B^T D B where B spans the
// hyperplane orthogonal to the all-ones vector.
QecResult qec_oracle(const DistanceMatrix& d, std::string graph_id = "");

// Oracle value for a connected graph on >= 2 vertices.
double qec_graph(const Graph& g);

// QEC(K_1 + H) for a kappa-regular H on n vertices with smallest adjacency
// eigenvalue min_eig: -2 + max{-min_eig, (2n - kappa)/(n + 1)}.
double qec_join_k1_regular(int n, int kappa, double min_eig);

} // namespace qec

#endif

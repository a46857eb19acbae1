#include "qec/qec_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "qec/errors.hpp"
#include "qec/spectral.hpp"

namespace qec {

const char* method_name(QecResult::Method m) {
    switch (m) {
        case QecResult::Method::oracle: return "oracle";
        case QecResult::Method::closed_form: return "closed_form";
        case QecResult::Method::theorem: return "theorem";
    }
    return "?";
}

Eigen::MatrixXd hyperplane_basis(int n) {
    if (n < 2) throw precondition_error("hyperplane_basis: n must be >= 2");
    // Householder reflector swapping e_1 and 1/sqrt(n); its trailing columns
    // span the complement of the all-ones direction.
    Eigen::VectorXd w = -Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(double(n)));
    w(0) += 1.0;
    w.normalize();
    Eigen::MatrixXd q = Eigen::MatrixXd::Identity(n, n) - 2.0 * w * w.transpose();
    return q.rightCols(n - 1);
}

namespace {

void validate_distance_matrix(const DistanceMatrix& dm) {
    if (dm.n < 2) throw precondition_error("qec_oracle: needs at least 2 vertices");
    if (dm.d.rows() != dm.n || dm.d.cols() != dm.n)
        throw precondition_error("qec_oracle: distance matrix shape mismatch");
    for (int i = 0; i < dm.n; ++i) {
        if (dm.d(i, i) != 0)
            throw precondition_error("qec_oracle: nonzero diagonal at " + std::to_string(i));
        for (int j = i + 1; j < dm.n; ++j) {
            if (dm.d(i, j) != dm.d(j, i))
                throw precondition_error("qec_oracle: distance matrix not symmetric");
            if (dm.d(i, j) < 1)
                throw precondition_error("qec_oracle: off-diagonal distance < 1, not a connected graph");
        }
    }
}

} // namespace

QecResult qec_oracle(const DistanceMatrix& dm, std::string graph_id) {
    validate_distance_matrix(dm);
    const int n = dm.n;
    const Eigen::MatrixXd b = hyperplane_basis(n);
    Eigen::MatrixXd m = b.transpose() * dm.as_double() * b;
    m = 0.5 * (m + m.transpose().eval());
    EigenSym es = eigen_sym(m);

    QecResult res;
    res.value = es.values(0);
    res.method = QecResult::Method::oracle;
    res.graph_id = std::move(graph_id);

    Eigen::VectorXd f = b * es.vectors.col(0);
    const double big = f.cwiseAbs().maxCoeff();
    for (int i = 0; i < n; ++i) {
        if (std::abs(f(i)) > 1e-10 * big) {
            if (f(i) < 0) f = -f;
            break;
        }
    }
    res.certificate = std::move(f);
    return res;
}

double qec_graph(const Graph& g) {
    return qec_oracle(distance_matrix(g), g.label()).value;
}

double qec_join_k1_regular(int n, int kappa, double min_eig) {
    if (n < 1) throw precondition_error("qec_join_k1_regular: n must be >= 1");
    if (kappa < 0 || kappa >= n)
        throw precondition_error("qec_join_k1_regular: degree must satisfy 0 <= kappa < n");
    return -2.0 + std::max(-min_eig, (2.0 * n - kappa) / (n + 1.0));
}

} // namespace qec

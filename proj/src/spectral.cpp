#include "qec/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "qec/errors.hpp"

namespace qec {

EigenSym eigen_sym(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols())
        throw precondition_error("eigen_sym: matrix is not square");
    const double scale = m.size() > 0 ? std::max(1.0, m.cwiseAbs().maxCoeff()) : 1.0;
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw precondition_error("eigen_sym: matrix is not symmetric within 1e-12 relative tolerance");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    if (es.info() != Eigen::Success)
        throw numeric_error("eigen_sym: eigensolver did not converge");

    // Eigen returns ascending order; flip to descending.
    EigenSym out;
    out.values = es.eigenvalues().reverse();
    out.vectors = es.eigenvectors().rowwise().reverse();
    return out;
}

SpectralData spectral_data(const Eigen::MatrixXd& m, double group_tol) {
    EigenSym es = eigen_sym(m);
    const int n = static_cast<int>(m.rows());
    const double inf_norm = n > 0 ? m.cwiseAbs().rowwise().sum().maxCoeff() : 0.0;
    const double tol = group_tol * std::max(1.0, inf_norm);

    SpectralData sd;
    sd.n = n;
    sd.group_tol = tol;
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
    int i = 0;
    while (i < n) {
        int j = i;
        while (j + 1 < n && es.values(j) - es.values(j + 1) <= tol) ++j;
        double sum = 0.0, w = 0.0;
        for (int t = i; t <= j; ++t) {
            sum += es.values(t);
            const double c = ones.dot(es.vectors.col(t));
            w += c * c;
        }
        sd.eigs.push_back(sum / (j - i + 1));
        sd.mults.push_back(j - i + 1);
        sd.proj_one_sq.push_back(w);
        i = j + 1;
    }
    return sd;
}

MainEigenvalues main_eigenvalues(const SpectralData& sd, double main_tol) {
    MainEigenvalues main;
    for (std::size_t i = 0; i < sd.eigs.size(); ++i) {
        if (sd.proj_one_sq[i] > main_tol) {
            main.values.push_back(sd.eigs[i]);
            if (std::abs(sd.eigs[i] + 2.0) <= sd.group_tol)
                main.contains_minus_two = true;
            else
                ++main.k;
        }
    }
    return main;
}

} // namespace qec

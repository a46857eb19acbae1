#ifndef QEC_SPECTRAL_HPP
#define QEC_SPECTRAL_HPP

#include <vector>

#include <Eigen/Dense>

#include "qec/tolerances.hpp"

namespace qec {

// Full symmetric eigendecomposition, eigenvalues descending with matching
// orthonormal eigenvector columns.
struct EigenSym {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;
};

// Throws precondition_error for non-symmetric input (1e-12 relative) and
// numeric_error when the solver does not converge.
EigenSym eigen_sym(const Eigen::MatrixXd& m);

// Distinct eigenvalues of a symmetric matrix with multiplicities and the
// squared norms ||E_a 1||^2 of the projected all-ones vector.
struct SpectralData {
    int n = 0;
    std::vector<double> eigs;        // distinct, strictly descending
    std::vector<int> mults;
    std::vector<double> proj_one_sq; // per distinct eigenvalue
    double group_tol = 0;            // effective absolute merge tolerance

    double max_eigenvalue() const { return eigs.front(); }
    double min_eigenvalue() const { return eigs.back(); }
};

// Raw eigenvalues are merged into groups while consecutive gaps stay within
// group_tol * max(1, ||m||_inf); deterministic for sorted input.
SpectralData spectral_data(const Eigen::MatrixXd& m, double group_tol = Tolerances{}.group_tol);

// Eigenvalues whose eigenspace is not orthogonal to the all-ones vector.
struct MainEigenvalues {
    std::vector<double> values;     // descending subset of SpectralData::eigs
    bool contains_minus_two = false;
    int k = 0;                      // |values \ {-2}|
};

MainEigenvalues main_eigenvalues(const SpectralData& sd, double main_tol = Tolerances{}.main_tol);

} // namespace qec

#endif

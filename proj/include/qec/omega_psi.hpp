#ifndef QEC_OMEGA_PSI_HPP
#define QEC_OMEGA_PSI_HPP

#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qec/graph.hpp"
#include "qec/spectral.hpp"
#include "qec/tolerances.hpp"

namespace qec {

// The omega/psi function pair of a symmetric matrix A:
//
//   omega(lambda) = 1 + ||E_{-2} 1||^2 + sum_a lambda/(a+2+lambda) ||E_a 1||^2
//   psi(lambda)   = lambda / omega(lambda)
//
// where a runs over the main eigenvalues of A other than -2.  omega has a
// simple pole at -a-2 for each such a and exactly k = |ev_M(A)\{-2}| real
// zeros, one per interlacing bracket.  psi is evaluated in cleared-
// denominator rational form so it stays finite at omega's poles
// (psi(-a-2) = 0) and has poles exactly at omega's zeros.
class OmegaPsi {
public:
    static OmegaPsi from_graph(const Graph& h, const Tolerances& tols = {});
    static OmegaPsi from_matrix(const Eigen::MatrixXd& a, const Tolerances& tols = {});

    int dimension() const noexcept { return n_; }
    int k() const noexcept { return static_cast<int>(alphas_.size()); }
    const MainEigenvalues& main() const noexcept { return main_; }
    double minus_two_weight() const noexcept { return w_minus2_; }

    // Main eigenvalues != -2, ascending, with their ||E_a 1||^2 weights.
    const std::vector<double>& main_alphas() const noexcept { return alphas_; }
    const std::vector<double>& main_weights() const noexcept { return weights_; }

    const std::vector<double>& poles() const noexcept { return poles_; }  // descending
    const std::vector<double>& zeros() const noexcept { return zeros_; }  // descending
    // Largest zero of omega; nullopt when k = 0 (the -inf convention).
    std::optional<double> lambda_star() const;

    // Open intervals (-a_{i+1}-2, -a_i-2), one per zero, in the same
    // (descending-zero) order as zeros().
    std::vector<std::pair<double, double>> zero_brackets() const;

    // Analytic-extension evaluation; throws precondition_error within
    // 1e-12 of a pole of omega.
    double omega(double lambda) const;

    // Cleared-denominator rational form; throws precondition_error within
    // 1e-12 of a zero of omega (a pole of psi).
    double psi(double lambda) const;

    // d(psi)/d(lambda) = (1 + lambda^2 ||(A+2+lambda)^{-1} 1||^2) / omega^2,
    // valid away from omega's poles and zeros.
    double psi_derivative(double lambda) const;

    // The unique lambda in (lambda_star, +inf) with psi(lambda) = target:
    // expanding bracket plus bisection, Newton-polished; accurate to 1e-11.
    double psi_star_inverse(double target) const;

private:
    OmegaPsi() = default;

    double omega_raw(double lambda) const;
    double psi_raw(double lambda) const;
    void locate_zeros();

    int n_ = 0;
    SpectralData sd_;
    MainEigenvalues main_;
    double w_minus2_ = 0.0;
    std::vector<double> alphas_;  // ascending, != -2
    std::vector<double> weights_;
    std::vector<double> bracket_pts_; // ev_M union {-2}, ascending
    std::vector<double> poles_;   // descending
    std::vector<double> zeros_;   // descending
};

// omega evaluated through the linear-solve definition
// 1 + lambda <1, (A+2+lambda)^{-1} 1>; cross-check oracle only, requires
// det(A+2+lambda) != 0.
double omega_matrix_form(const Eigen::MatrixXd& a, double lambda);

// psi_star^{-1} for a kappa-regular graph on n vertices:
//   ((n+1)t - (kappa+2) + sqrt(((n+1)t - (kappa+2))^2 + 4(kappa+2)t)) / 2.
double psi_inverse_regular_closed_form(int n, int kappa, double target);

} // namespace qec

#endif

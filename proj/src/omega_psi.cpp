#include "qec/omega_psi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qec/errors.hpp"

namespace qec {

namespace {

constexpr double kPoleGuard = 1e-12;
constexpr double kBracketWidth = 5e-13; // bisection stops below the 1e-12 contract
constexpr int kMaxBisect = 200;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

OmegaPsi OmegaPsi::from_graph(const Graph& h, const Tolerances& tols) {
    return from_matrix(h.adjacency_matrix(), tols);
}

OmegaPsi OmegaPsi::from_matrix(const Eigen::MatrixXd& a, const Tolerances& tols) {
    if (a.rows() < 1)
        throw precondition_error("OmegaPsi: matrix must have at least one row");
    OmegaPsi op;
    op.n_ = static_cast<int>(a.rows());
    op.sd_ = spectral_data(a, tols.group_tol);
    op.main_ = main_eigenvalues(op.sd_, tols.main_tol);

    for (std::size_t i = 0; i < op.sd_.eigs.size(); ++i) {
        if (op.sd_.proj_one_sq[i] <= tols.main_tol) continue;
        if (std::abs(op.sd_.eigs[i] + 2.0) <= op.sd_.group_tol) {
            op.w_minus2_ += op.sd_.proj_one_sq[i];
        } else {
            op.alphas_.push_back(op.sd_.eigs[i]);
            op.weights_.push_back(op.sd_.proj_one_sq[i]);
        }
    }
    // main values come in descending; flip to ascending for the brackets
    std::reverse(op.alphas_.begin(), op.alphas_.end());
    std::reverse(op.weights_.begin(), op.weights_.end());

    // ascending alphas map to descending poles -a-2
    for (double a : op.alphas_) op.poles_.push_back(-a - 2.0);

    op.bracket_pts_ = op.alphas_;
    op.bracket_pts_.push_back(-2.0); // ev_M ∪ {-2}
    std::sort(op.bracket_pts_.begin(), op.bracket_pts_.end());

    op.locate_zeros();
    return op;
}

std::optional<double> OmegaPsi::lambda_star() const {
    if (zeros_.empty()) return std::nullopt;
    return zeros_.front();
}

std::vector<std::pair<double, double>> OmegaPsi::zero_brackets() const {
    std::vector<std::pair<double, double>> out;
    for (std::size_t i = 0; i + 1 < bracket_pts_.size(); ++i)
        out.emplace_back(-bracket_pts_[i + 1] - 2.0, -bracket_pts_[i] - 2.0);
    return out;
}

double OmegaPsi::omega_raw(double lambda) const {
    double s = 1.0 + w_minus2_;
    for (std::size_t j = 0; j < alphas_.size(); ++j)
        s += lambda / (alphas_[j] + 2.0 + lambda) * weights_[j];
    return s;
}

double OmegaPsi::omega(double lambda) const {
    for (double p : poles_)
        if (std::abs(lambda - p) <= kPoleGuard)
            throw precondition_error("omega: evaluation at pole " + fmt(p));
    return omega_raw(lambda);
}

double OmegaPsi::psi_raw(double lambda) const {
    // psi = lambda * prod_j(a_j+2+lambda) / p(lambda), with the numerator
    // polynomial of omega expanded as a sum of products so the value stays
    // finite at omega's poles.
    const std::size_t k = alphas_.size();
    double prod = 1.0;
    for (std::size_t j = 0; j < k; ++j) prod *= alphas_[j] + 2.0 + lambda;
    double num = lambda * prod;
    double den = (1.0 + w_minus2_) * prod;
    for (std::size_t j = 0; j < k; ++j) {
        double qj = 1.0;
        for (std::size_t l = 0; l < k; ++l)
            if (l != j) qj *= alphas_[l] + 2.0 + lambda;
        den += lambda * weights_[j] * qj;
    }
    return num / den;
}

double OmegaPsi::psi(double lambda) const {
    for (double z : zeros_)
        if (std::abs(lambda - z) <= kPoleGuard)
            throw precondition_error("psi: evaluation at pole " + fmt(z) + " (zero of omega)");
    return psi_raw(lambda);
}

double OmegaPsi::psi_derivative(double lambda) const {
    for (double p : poles_)
        if (std::abs(lambda - p) <= kPoleGuard)
            throw precondition_error("psi_derivative: evaluation at omega pole " + fmt(p));
    for (double z : zeros_)
        if (std::abs(lambda - z) <= kPoleGuard)
            throw precondition_error("psi_derivative: evaluation at psi pole " + fmt(z));
    // 1 + lambda^2 ||(A+2+lambda)^{-1} 1||^2, with the -2 term collapsing to
    // its weight.
    double num = 1.0 + w_minus2_;
    for (std::size_t j = 0; j < alphas_.size(); ++j) {
        const double f = alphas_[j] + 2.0 + lambda;
        num += lambda * lambda * weights_[j] / (f * f);
    }
    const double w = omega_raw(lambda);
    return num / (w * w);
}

void OmegaPsi::locate_zeros() {
    const std::size_t k = alphas_.size();
    zeros_.clear();
    for (std::size_t i = 0; i + 1 < bracket_pts_.size(); ++i) {
        const double a_lo = bracket_pts_[i];     // alpha_i (ascending)
        const double a_hi = bracket_pts_[i + 1]; // alpha_{i+1}
        double lo = -a_hi - 2.0;
        double hi = -a_lo - 2.0;
        if (hi - lo <= 1e-12)
            throw numeric_error("omega zeros: degenerate bracket (" + fmt(lo) + "," + fmt(hi) +
                                "), near-coincident main eigenvalues");
        // Sign of omega just inside the left endpoint, from the one-sided
        // pole limits; the bracket point -2 is not a pole and omega(0) > 0.
        double s_lo;
        if (a_hi == -2.0) s_lo = 1.0;
        else if (a_hi > -2.0) s_lo = -1.0;
        else s_lo = 1.0;

        for (int it = 0; it < kMaxBisect && hi - lo > kBracketWidth; ++it) {
            double mid = 0.5 * (lo + hi);
            double v = omega_raw(mid);
            if (!std::isfinite(v)) { // exact pole hit; nudge inward
                mid = std::nextafter(mid, hi);
                v = omega_raw(mid);
            }
            if (v == 0.0) {
                lo = hi = mid;
                break;
            }
            if ((v > 0.0) == (s_lo > 0.0)) lo = mid;
            else hi = mid;
        }
        zeros_.push_back(0.5 * (lo + hi));
    }
    // brackets were scanned from the rightmost lambda-interval down
    std::sort(zeros_.begin(), zeros_.end(), std::greater<>());
    for (std::size_t i = 0; i + 1 < zeros_.size(); ++i)
        if (!(zeros_[i] > zeros_[i + 1]))
            throw numeric_error("omega zeros: zero list not strictly descending");
    if (zeros_.size() != k)
        throw numeric_error("omega zeros: expected " + std::to_string(k) + " zeros, found " +
                            std::to_string(zeros_.size()));
}

double OmegaPsi::psi_star_inverse(double target) const {
    if (!std::isfinite(target))
        throw precondition_error("psi_star_inverse: target must be finite");
    if (alphas_.empty())
        return (n_ + 1.0) * target; // psi(lambda) = lambda/(n+1) when ev_M = {-2}

    const double ls = zeros_.front();
    // psi -> -inf as lambda -> lambda_star+ and -> +inf at +inf, so a
    // bracket always exists on the rightmost branch.
    double lo = ls + 1e-11;
    while (psi_raw(lo) > target && lo - ls > 1e-15) lo = ls + (lo - ls) / 16.0;
    double hi = ls + 1.0;
    while (psi_raw(hi) < target) hi = ls + 2.0 * (hi - ls);

    for (int it = 0; it < kMaxBisect && hi - lo > kBracketWidth; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (psi_raw(mid) < target) lo = mid;
        else hi = mid;
    }
    double x = 0.5 * (lo + hi);

    // Newton polish inside the final bracket, skipped near omega poles
    // where the derivative form blows up.
    const double slack = 2.0 * (hi - lo);
    for (int step = 0; step < 2; ++step) {
        bool near_pole = false;
        for (double p : poles_)
            if (std::abs(x - p) < 1e-6) { near_pole = true; break; }
        if (near_pole) break;
        double num = 1.0 + w_minus2_;
        for (std::size_t j = 0; j < alphas_.size(); ++j) {
            const double f = alphas_[j] + 2.0 + x;
            num += x * x * weights_[j] / (f * f);
        }
        const double w = omega_raw(x);
        const double d = num / (w * w);
        if (!(d > 0.0) || !std::isfinite(d)) break;
        const double nx = x - (psi_raw(x) - target) / d;
        if (!(nx >= lo - slack) || !(nx <= hi + slack)) break;
        x = nx;
    }
    return x;
}

double omega_matrix_form(const Eigen::MatrixXd& a, double lambda) {
    const int n = static_cast<int>(a.rows());
    Eigen::MatrixXd m = a + (2.0 + lambda) * Eigen::MatrixXd::Identity(n, n);
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
    if (!lu.isInvertible())
        throw precondition_error("omega_matrix_form: A + 2 + lambda is singular");
    return 1.0 + lambda * ones.dot(lu.solve(ones));
}

double psi_inverse_regular_closed_form(int n, int kappa, double target) {
    if (n < 1) throw precondition_error("psi_inverse_regular_closed_form: n must be >= 1");
    if (kappa < 0 || kappa >= n)
        throw precondition_error("psi_inverse_regular_closed_form: need 0 <= kappa < n");
    const double c = kappa + 2.0;
    const double a = (n + 1.0) * target - c;
    const double disc = a * a + 4.0 * c * target;
    if (disc < 0.0)
        throw numeric_error("psi_inverse_regular_closed_form: negative discriminant " + fmt(disc));
    return 0.5 * (a + std::sqrt(disc));
}

} // namespace qec

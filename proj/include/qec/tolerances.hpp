#ifndef QEC_TOLERANCES_HPP
#define QEC_TOLERANCES_HPP

namespace qec {

// Numeric policy shared across the library.  group_tol merges raw eigenvalues
// into distinct groups (scaled by the matrix norm before use), main_tol
// decides whether a projected all-ones weight counts as nonzero, and
// eigen_excl_tol is the certainty radius for spectrum non-membership tests.
struct Tolerances {
    double group_tol = 1e-7;
    double main_tol = 1e-9;
    double eigen_excl_tol = 1e-6;
};

} // namespace qec

#endif

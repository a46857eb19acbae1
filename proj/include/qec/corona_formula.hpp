#ifndef QEC_CORONA_FORMULA_HPP
#define QEC_CORONA_FORMULA_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qec/graph.hpp"
#include "qec/qec_oracle.hpp"
#include "qec/spectral.hpp"
#include "qec/tolerances.hpp"

namespace qec {

// A predicate outcome with its numerical margin: the signed distance to
// the predicate's threshold, oriented along the predicate's direction
// (for equality predicates it is minus the distance to the target value).
struct Condition {
    bool holds = false;
    double margin = 0.0;
};

// Spectrum non-membership cannot be certified below grouping noise, so the
// exclusion test carries a third state.
enum class TriState { yes, no, indeterminate };

const char* tri_state_name(TriState s);

struct ConditionSet {
    // (i): -2 - psi_inv(QEC(G)) not in ev(A_H).  yes above eigen_excl_tol,
    // no below the grouping tolerance, indeterminate between.
    TriState cond_i_not_eigen = TriState::indeterminate;
    double cond_i_distance = 0.0; // distance to the nearest eigenvalue

    Condition min_ev_ge_minus2;
    Condition g_qec_ge_0;
    Condition min_ev_gt_neg_sqrt2;
    // -2 - psi_inv(QEC(G)) < min ev(A_H), strict.
    Condition strict_min_ev_dominance;

    bool regular = false;
    int degree = -1; // valid when regular
    // -2 - min ev(A_H) <= -(kappa+2)/(n+1), the regular-H dominance bound.
    Condition regular_gamma_bound;

    Condition min_ev_eq_minus2;

    // Zero-product rule: QEC(G) = 0 and QEC(K_1+H) <= 0, or symmetrically.
    Condition g_qec_eq_0;
    Condition g_qec_le_0;
    Condition join_qec_eq_0;
    Condition join_qec_le_0;
};

// Classification of a (G, H) pair: which closed-form rules apply, the
// predicted QEC of the corona, and (after verify_pair) the oracle value
// with its cross-check outcomes.
struct TheoremReport {
    std::string g_label;
    std::string h_label;
    int g_n = 0;
    int h_n = 0;

    double g_qec = 0.0;          // oracle QEC(G)
    double join_qec = 0.0;       // oracle QEC(K_1 + H)
    SpectralData h_spectrum;     // of A_H
    MainEigenvalues h_main;
    double min_ev = 0.0;         // min ev(A_H)
    double psi_inv_value = 0.0;  // psi_{H*}^{-1}(QEC(G)), numeric
    double gamma3_upper_bound = 0.0; // -min ev(A_H) - 2

    ConditionSet conditions;
    std::vector<std::string> applicable; // subset of {T4.9,T4.10,T4.11,T4.13,T4.16,P2.3}
    std::vector<std::string> notes;      // e.g. the odd-cycle oracle-only routing
    std::optional<double> predicted;
    std::map<std::string, double> predictions_by_rule;

    std::optional<QecResult> oracle;

    // Cross-check outcomes, filled by verify_pair.
    std::optional<double> abs_deviation; // |predicted - oracle|
    std::optional<bool> formula_ok;      // deviation <= 1e-7
    bool lower_bound_ok = true;          // oracle >= max{-2+sqrt2, QEC(G), QEC(K_1+H)}
    bool psi_floor_ok = true;            // oracle >= psi_inv - tol
    bool gamma3_bound_ok = true;         // oracle <= max{psi_inv, -min_ev-2} when (i) holds

    Tolerances tols;

    bool indeterminate() const { return conditions.cond_i_not_eigen == TriState::indeterminate; }
    bool passed() const;
};

// Tolerance for classifying equalities/thresholds in the predicates above,
// for the mutual agreement of co-applicable rules, and for the
// prediction-vs-oracle gate.
inline constexpr double kConditionTol = 1e-9;
inline constexpr double kAgreementTol = 1e-9;
inline constexpr double kFormulaTol = 1e-7;
inline constexpr double kSanityTol = 1e-9;

// Evaluates every predicate with its margin and decides which rules apply.
// Requires g connected with >= 2 vertices and h with >= 1 vertex.
TheoremReport check_conditions(const Graph& g, const Graph& h, const Tolerances& tols = {});

// Fills report.predicted from the applicable rules; all co-applicable
// predictions must agree within 1e-9.  Throws precondition_error
// ("formula not established") when no rule applies.
double predict_qec(TheoremReport& report, const Graph& g, const Graph& h);

// check_conditions + prediction + whole-graph oracle + cross-checks.
// size_cap bounds the corona order g.n * (1 + h.n).
TheoremReport verify_pair(const Graph& g, const Graph& h, const Tolerances& tols = {},
                          int size_cap = 400);

struct BatchConfig {
    int count = 200;
    std::uint64_t seed = 0;
    int g_min = 2;
    int g_max = 6;
    int h_min = 1;
    int h_max = 4;
    int size_cap = 400;
    Tolerances tols;
};

struct PairOutcome {
    std::string g_desc;
    std::string h_desc;
    std::vector<std::string> applicable;
    std::optional<double> predicted;
    double oracle = 0.0;
    std::optional<double> abs_deviation;
    bool passed = true;
    bool indeterminate = false;
    bool cond_i_conflict = false; // cond (i) false while companion conditions hold
    std::string note;
};

struct BatchSummary {
    int total = 0;
    int applicable_pairs = 0;
    int passes = 0;
    int failures = 0;
    int no_theorem = 0;
    int indeterminate = 0;
    double worst_abs_deviation = 0.0;
    std::map<std::string, int> per_rule;          // rule -> applicable count
    std::map<std::string, int> per_rule_failures;
    std::vector<PairOutcome> outcomes;            // every evaluated pair
    std::vector<std::size_t> failure_indices;
    std::vector<std::size_t> indeterminate_indices;
};

// Seeded sweep over random connected G and arbitrary random H (disconnected
// H included on purpose).  Deterministic for a given config.
BatchSummary batch_verify(const BatchConfig& cfg);

// Compact "n4:0-1,2-3" description used in batch outcomes.
std::string describe_graph(const Graph& g);

} // namespace qec

#endif

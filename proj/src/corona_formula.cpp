#include "qec/corona_formula.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <sstream>

#include "qec/distance.hpp"
#include "qec/errors.hpp"
#include "qec/omega_psi.hpp"
#include "qec/random_graphs.hpp"

namespace qec {

namespace {

const double kSqrt2 = std::sqrt(2.0);

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace

const char* tri_state_name(TriState s) {
    switch (s) {
        case TriState::yes: return "true";
        case TriState::no: return "false";
        case TriState::indeterminate: return "indeterminate";
    }
    return "?";
}

bool TheoremReport::passed() const {
    if (!lower_bound_ok || !psi_floor_ok || !gamma3_bound_ok) return false;
    if (formula_ok.has_value() && !*formula_ok) return false;
    return true;
}

TheoremReport check_conditions(const Graph& g, const Graph& h, const Tolerances& tols) {
    if (g.vertex_count() < 2)
        throw precondition_error("check_conditions: g needs at least 2 vertices");
    if (h.vertex_count() < 1)
        throw precondition_error("check_conditions: h needs at least 1 vertex");

    TheoremReport r;
    r.tols = tols;
    r.g_label = g.label().empty() ? describe_graph(g) : g.label();
    r.h_label = h.label().empty() ? describe_graph(h) : h.label();
    r.g_n = g.vertex_count();
    r.h_n = h.vertex_count();

    r.g_qec = qec_graph(g); // throws on disconnected g
    r.join_qec = qec_graph(join_k1(h));

    const Eigen::MatrixXd ah = h.adjacency_matrix();
    r.h_spectrum = spectral_data(ah, tols.group_tol);
    r.h_main = main_eigenvalues(r.h_spectrum, tols.main_tol);
    r.min_ev = r.h_spectrum.min_eigenvalue();
    r.gamma3_upper_bound = -r.min_ev - 2.0;

    const OmegaPsi op = OmegaPsi::from_graph(h, tols);
    r.psi_inv_value = op.psi_star_inverse(r.g_qec);

    ConditionSet& c = r.conditions;

    const double excl_point = -2.0 - r.psi_inv_value;
    double dist = std::numeric_limits<double>::infinity();
    for (double ev : r.h_spectrum.eigs) dist = std::min(dist, std::abs(excl_point - ev));
    c.cond_i_distance = dist;
    if (dist > tols.eigen_excl_tol) c.cond_i_not_eigen = TriState::yes;
    else if (dist < r.h_spectrum.group_tol) c.cond_i_not_eigen = TriState::no;
    else c.cond_i_not_eigen = TriState::indeterminate;

    c.min_ev_ge_minus2 = {r.min_ev >= -2.0 - kConditionTol, r.min_ev + 2.0};
    c.g_qec_ge_0 = {r.g_qec >= -kConditionTol, r.g_qec};
    c.min_ev_gt_neg_sqrt2 = {r.min_ev > -kSqrt2 + kConditionTol, r.min_ev + kSqrt2};
    c.strict_min_ev_dominance = {excl_point < r.min_ev - kConditionTol, r.min_ev - excl_point};

    const auto kappa = h.regular_degree();
    c.regular = kappa.has_value();
    c.degree = kappa.value_or(-1);
    if (c.regular) {
        const double bound = -(c.degree + 2.0) / (r.h_n + 1.0);
        const double lhs = -2.0 - r.min_ev;
        c.regular_gamma_bound = {lhs <= bound + kConditionTol, bound - lhs};
    }
    c.min_ev_eq_minus2 = {std::abs(r.min_ev + 2.0) <= kConditionTol, -std::abs(r.min_ev + 2.0)};

    c.g_qec_eq_0 = {std::abs(r.g_qec) <= kConditionTol, -std::abs(r.g_qec)};
    c.g_qec_le_0 = {r.g_qec <= kConditionTol, -r.g_qec};
    c.join_qec_eq_0 = {std::abs(r.join_qec) <= kConditionTol, -std::abs(r.join_qec)};
    c.join_qec_le_0 = {r.join_qec <= kConditionTol, -r.join_qec};

    const bool cond_i = c.cond_i_not_eigen == TriState::yes;
    if (cond_i && c.min_ev_ge_minus2.holds && c.g_qec_ge_0.holds)
        r.applicable.push_back("T4.9");
    if (cond_i && c.min_ev_gt_neg_sqrt2.holds)
        r.applicable.push_back("T4.10");
    if (c.strict_min_ev_dominance.holds)
        r.applicable.push_back("T4.11");
    if (c.regular && cond_i && c.regular_gamma_bound.holds)
        r.applicable.push_back("T4.13");
    if (c.regular && c.min_ev_eq_minus2.holds)
        r.applicable.push_back("T4.16");
    if ((c.g_qec_eq_0.holds && c.join_qec_le_0.holds) ||
        (c.g_qec_le_0.holds && c.join_qec_eq_0.holds))
        r.applicable.push_back("P2.3");

    // 2-regular H with smallest eigenvalue above -2 is a union of odd
    // cycles; no closed form is established there, so such pairs run
    // oracle-only.
    if (r.applicable.empty() && c.regular && c.degree == 2 &&
        r.min_ev > -2.0 + kConditionTol)
        r.notes.push_back("odd-cycle H: no closed form, oracle only");

    return r;
}

double predict_qec(TheoremReport& r, const Graph& g, const Graph& h) {
    (void)g;
    if (r.applicable.empty())
        throw precondition_error("predict_qec: formula not established for this pair (" +
                                 r.g_label + ", " + r.h_label + ")");
    const ConditionSet& c = r.conditions;
    const bool reg = c.regular;
    const int nh = h.vertex_count();
    const double psi_inv =
        reg ? psi_inverse_regular_closed_form(nh, c.degree, r.g_qec) : r.psi_inv_value;

    r.predictions_by_rule.clear();
    for (const std::string& rule : r.applicable) {
        double v;
        if (rule == "T4.16")
            v = r.g_qec > kConditionTol ? psi_inv : 0.0;
        else if (rule == "P2.3")
            v = 0.0;
        else
            v = psi_inv; // T4.9 / T4.10 / T4.11 / T4.13
        r.predictions_by_rule[rule] = v;
    }

    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const auto& [rule, v] : r.predictions_by_rule) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (hi - lo > kAgreementTol) {
        std::ostringstream oss;
        oss << "predict_qec: co-applicable rules disagree for (" << r.g_label << ", "
            << r.h_label << "):";
        for (const auto& [rule, v] : r.predictions_by_rule) oss << ' ' << rule << '=' << fmt(v);
        throw verification_error(oss.str());
    }
    r.predicted = r.predictions_by_rule.at(r.applicable.front());
    return *r.predicted;
}

TheoremReport verify_pair(const Graph& g, const Graph& h, const Tolerances& tols, int size_cap) {
    const long order = static_cast<long>(g.vertex_count()) * (1 + h.vertex_count());
    if (order > size_cap)
        throw precondition_error("verify_pair: corona order " + std::to_string(order) +
                                 " exceeds size cap " + std::to_string(size_cap));

    TheoremReport r = check_conditions(g, h, tols);
    if (!r.applicable.empty()) predict_qec(r, g, h);

    std::string corona_id = "corona(" + r.g_label + "," + r.h_label + ")";
    r.oracle = qec_oracle(corona_distance_matrix(g, h), std::move(corona_id));
    const double orc = r.oracle->value;

    if (r.predicted) {
        r.abs_deviation = std::abs(*r.predicted - orc);
        r.formula_ok = *r.abs_deviation <= kFormulaTol;
    }
    const double floor = std::max({-2.0 + kSqrt2, r.g_qec, r.join_qec});
    r.lower_bound_ok = orc >= floor - kSanityTol;
    r.psi_floor_ok = orc >= r.psi_inv_value - kSanityTol;
    if (r.conditions.cond_i_not_eigen == TriState::yes)
        r.gamma3_bound_ok = orc <= std::max(r.psi_inv_value, r.gamma3_upper_bound) + kSanityTol;
    return r;
}

std::string describe_graph(const Graph& g) {
    std::ostringstream oss;
    oss << 'n' << g.vertex_count() << ':';
    bool first = true;
    for (const auto& [u, v] : g.edges()) {
        if (!first) oss << ',';
        oss << u << '-' << v;
        first = false;
    }
    return oss.str();
}

BatchSummary batch_verify(const BatchConfig& cfg) {
    BatchSummary s;
    std::mt19937_64 rng(cfg.seed);
    for (int t = 0; t < cfg.count; ++t) {
        const Graph g = random_connected_graph(rng, cfg.g_min, cfg.g_max);
        const int nh = cfg.h_min + static_cast<int>(uniform_below(rng, cfg.h_max - cfg.h_min + 1));
        const Graph h = random_graph(rng, nh);

        TheoremReport r = verify_pair(g, h, cfg.tols, cfg.size_cap);

        PairOutcome o;
        o.g_desc = describe_graph(g);
        o.h_desc = describe_graph(h);
        o.applicable = r.applicable;
        o.predicted = r.predicted;
        o.oracle = r.oracle->value;
        o.abs_deviation = r.abs_deviation;
        o.indeterminate = r.indeterminate();
        o.passed = r.passed();

        // Companion conditions holding while (i) is known false would be a
        // counterexample worth surfacing.
        const ConditionSet& c = r.conditions;
        if (c.cond_i_not_eigen == TriState::no &&
            ((c.min_ev_ge_minus2.holds && c.g_qec_ge_0.holds) ||
             (c.regular && c.regular_gamma_bound.holds)))
            o.cond_i_conflict = true;

        if (!o.passed) {
            std::ostringstream note;
            if (r.formula_ok && !*r.formula_ok)
                note << "prediction deviates by " << fmt(*r.abs_deviation) << "; ";
            if (!r.lower_bound_ok) note << "isometric lower bound violated; ";
            if (!r.psi_floor_ok) note << "psi-inverse floor violated; ";
            if (!r.gamma3_bound_ok) note << "gamma3 upper bound violated; ";
            o.note = note.str();
        }

        ++s.total;
        if (o.indeterminate) {
            ++s.indeterminate;
            s.indeterminate_indices.push_back(s.outcomes.size());
        }
        if (r.applicable.empty()) {
            ++s.no_theorem;
        } else {
            ++s.applicable_pairs;
            for (const auto& rule : r.applicable) ++s.per_rule[rule];
            if (r.abs_deviation)
                s.worst_abs_deviation = std::max(s.worst_abs_deviation, *r.abs_deviation);
        }
        if (o.passed) {
            ++s.passes;
        } else {
            ++s.failures;
            s.failure_indices.push_back(s.outcomes.size());
            for (const auto& rule : r.applicable) ++s.per_rule_failures[rule];
        }
        s.outcomes.push_back(std::move(o));
    }
    return s;
}

} // namespace qec

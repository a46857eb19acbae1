#include "qec/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include <nlohmann/json.hpp>

namespace qec {

using nlohmann::json;

json json_number(double v) {
    if (!std::isfinite(v)) return nullptr;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return json(std::strtod(buf, nullptr));
}

namespace {

json number_list(const std::vector<double>& v) {
    json a = json::array();
    for (double x : v) a.push_back(json_number(x));
    return a;
}

json condition_json(const Condition& c) {
    return json{{"holds", c.holds}, {"margin", json_number(c.margin)}};
}

} // namespace

json to_json(const Tolerances& t) {
    return json{{"group_tol", json_number(t.group_tol)},
                {"main_tol", json_number(t.main_tol)},
                {"eigen_excl_tol", json_number(t.eigen_excl_tol)}};
}

json to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    json j{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
    if (!g.label().empty()) j["label"] = g.label();
    return j;
}

json to_json(const DistanceMatrix& d) {
    json rows = json::array();
    for (int i = 0; i < d.n; ++i) {
        json row = json::array();
        for (int j = 0; j < d.n; ++j) row.push_back(d.d(i, j));
        rows.push_back(std::move(row));
    }
    return json{{"n", d.n}, {"d", std::move(rows)}};
}

json to_json(const SpectralData& sd, const MainEigenvalues& main) {
    return json{{"eigenvalues", number_list(sd.eigs)},
                {"multiplicities", sd.mults},
                {"proj_one_sq", number_list(sd.proj_one_sq)},
                {"main_eigenvalues", number_list(main.values)}};
}

json to_json(const QecResult& r) {
    json j{{"graph", r.graph_id},
           {"qec", json_number(r.value)},
           {"method", method_name(r.method)}};
    if (r.certificate) {
        json cert = json::array();
        for (int i = 0; i < r.certificate->size(); ++i)
            cert.push_back(json_number((*r.certificate)(i)));
        j["certificate"] = std::move(cert);
        j["n"] = static_cast<int>(r.certificate->size());
    }
    return j;
}

json to_json(const OmegaPsi& op) {
    json j{{"n", op.dimension()},
           {"k", op.k()},
           {"main_eigenvalues", number_list(op.main().values)},
           {"weights", number_list(op.main_weights())},
           {"minus_two_weight", json_number(op.minus_two_weight())},
           {"poles", number_list(op.poles())},
           {"zeros", number_list(op.zeros())}};
    if (auto ls = op.lambda_star())
        j["lambda_star"] = json_number(*ls);
    else
        j["lambda_star"] = nullptr;
    return j;
}

json to_json(const TheoremReport& r) {
    const ConditionSet& c = r.conditions;
    json regular_flags{{"regular", c.regular}};
    if (c.regular) {
        regular_flags["kappa"] = c.degree;
        regular_flags["gamma_bound"] = condition_json(c.regular_gamma_bound);
    }
    json conditions{
        {"cond_i_not_eigen",
         json{{"state", tri_state_name(c.cond_i_not_eigen)},
              {"distance_to_spectrum", json_number(c.cond_i_distance)}}},
        {"min_ev_ge_minus2", condition_json(c.min_ev_ge_minus2)},
        {"g_qec_ge_0", condition_json(c.g_qec_ge_0)},
        {"min_ev_gt_neg_sqrt2", condition_json(c.min_ev_gt_neg_sqrt2)},
        {"strict_min_ev_dominance", condition_json(c.strict_min_ev_dominance)},
        {"regular_flags", std::move(regular_flags)},
        {"min_ev_eq_minus2", condition_json(c.min_ev_eq_minus2)},
        {"g_qec_eq_0", condition_json(c.g_qec_eq_0)},
        {"join_qec_eq_0", condition_json(c.join_qec_eq_0)},
    };

    json j{{"g", r.g_label},
           {"h", r.h_label},
           {"g_n", r.g_n},
           {"h_n", r.h_n},
           {"g_qec", json_number(r.g_qec)},
           {"join_qec", json_number(r.join_qec)},
           {"h_spectrum", to_json(r.h_spectrum, r.h_main)},
           {"min_ev", json_number(r.min_ev)},
           {"psi_inv_value", json_number(r.psi_inv_value)},
           {"gamma3_upper_bound", json_number(r.gamma3_upper_bound)},
           {"conditions", std::move(conditions)},
           {"applicable", r.applicable}};
    if (!r.notes.empty()) j["notes"] = r.notes;
    if (r.predicted) j["predicted"] = json_number(*r.predicted);
    if (r.oracle) j["oracle"] = to_json(*r.oracle);
    if (r.abs_deviation) j["abs_deviation"] = json_number(*r.abs_deviation);
    if (r.formula_ok) j["formula_ok"] = *r.formula_ok;
    j["lower_bound_ok"] = r.lower_bound_ok;
    j["psi_floor_ok"] = r.psi_floor_ok;
    j["gamma3_bound_ok"] = r.gamma3_bound_ok;
    j["tolerances"] = to_json(r.tols);
    return j;
}

json to_json(const PairOutcome& o) {
    json j{{"g", o.g_desc},
           {"h", o.h_desc},
           {"applicable", o.applicable},
           {"oracle", json_number(o.oracle)},
           {"passed", o.passed},
           {"indeterminate", o.indeterminate}};
    if (o.predicted) j["predicted"] = json_number(*o.predicted);
    if (o.abs_deviation) j["abs_deviation"] = json_number(*o.abs_deviation);
    if (o.cond_i_conflict) j["cond_i_conflict"] = true;
    if (!o.note.empty()) j["note"] = o.note;
    return j;
}

json to_json(const BatchSummary& s) {
    json reports = json::array();
    for (const auto& o : s.outcomes) reports.push_back(to_json(o));
    json indeterminate = json::array();
    for (auto i : s.indeterminate_indices) indeterminate.push_back(to_json(s.outcomes[i]));
    json failures = json::array();
    for (auto i : s.failure_indices) failures.push_back(to_json(s.outcomes[i]));
    return json{{"total", s.total},
                {"applicable_pairs", s.applicable_pairs},
                {"passes", s.passes},
                {"failures", s.failures},
                {"no_theorem", s.no_theorem},
                {"indeterminate", s.indeterminate},
                {"worst_abs_deviation", json_number(s.worst_abs_deviation)},
                {"per_rule", s.per_rule},
                {"per_rule_failures", s.per_rule_failures},
                {"failing_pairs", std::move(failures)},
                {"indeterminate_pairs", std::move(indeterminate)},
                {"reports", std::move(reports)}};
}

} // namespace qec

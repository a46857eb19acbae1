#include "qec/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qec/corona_formula.hpp"
#include "qec/distance.hpp"
#include "qec/errors.hpp"
#include "qec/graph_spec.hpp"
#include "qec/json_io.hpp"
#include "qec/omega_psi.hpp"
#include "qec/qec_oracle.hpp"

namespace qec::cli {

namespace {

using nlohmann::json;

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void emit(std::ostream& out, json j, const Tolerances& tols) {
    j["tolerances"] = to_json(tols);
    out << j.dump(2) << '\n';
}

std::string label_or(const Graph& g, const std::string& spec) {
    return g.label().empty() ? spec : g.label();
}

void print_sample_csv(std::ostream& out, const OmegaPsi& op, double a, double b, int m) {
    if (m < 1) throw precondition_error("sample: need at least one point");
    out << "lambda,omega,psi\n";
    for (int i = 0; i < m; ++i) {
        const double lam = m == 1 ? a : a + (b - a) * i / (m - 1);
        out << fmt12(lam) << ',';
        try {
            out << fmt12(op.omega(lam));
        } catch (const precondition_error&) {
            out << "nan";
        }
        out << ',';
        try {
            out << fmt12(op.psi(lam));
        } catch (const precondition_error&) {
            out << "nan";
        }
        out << '\n';
    }
}

void print_report_table(std::ostream& out, const TheoremReport& r) {
    out << "pair: (" << r.g_label << ", " << r.h_label << ")\n";
    out << "  QEC(G)            = " << fmt12(r.g_qec) << '\n';
    out << "  QEC(K1+H)         = " << fmt12(r.join_qec) << '\n';
    out << "  min ev(A_H)       = " << fmt12(r.min_ev) << '\n';
    out << "  psi_inv(QEC(G))   = " << fmt12(r.psi_inv_value) << '\n';
    out << "  gamma3 upper bound= " << fmt12(r.gamma3_upper_bound) << '\n';
    out << "  cond (i)          = " << tri_state_name(r.conditions.cond_i_not_eigen)
        << " (distance " << fmt12(r.conditions.cond_i_distance) << ")\n";
    out << "  applicable        =";
    if (r.applicable.empty()) out << " (none)";
    for (const auto& t : r.applicable) out << ' ' << t;
    out << '\n';
    for (const auto& note : r.notes) out << "  note              = " << note << '\n';
    if (r.predicted) out << "  predicted         = " << fmt12(*r.predicted) << '\n';
    if (r.oracle) out << "  oracle            = " << fmt12(r.oracle->value) << '\n';
    if (r.abs_deviation) out << "  |pred - oracle|   = " << fmt12(*r.abs_deviation) << '\n';
    out << "  status            = " << (r.passed() ? "PASS" : "FAIL") << '\n';
}

void print_batch_table(std::ostream& out, const BatchSummary& s) {
    out << "pairs evaluated     " << s.total << '\n';
    out << "with applicable rule " << s.applicable_pairs << '\n';
    out << "passes / failures   " << s.passes << " / " << s.failures << '\n';
    out << "no rule applies     " << s.no_theorem << '\n';
    out << "indeterminate       " << s.indeterminate << '\n';
    out << "worst |pred-oracle| " << fmt12(s.worst_abs_deviation) << '\n';
    out << "per rule:\n";
    for (const auto& [rule, cnt] : s.per_rule) {
        const auto it = s.per_rule_failures.find(rule);
        const int bad = it == s.per_rule_failures.end() ? 0 : it->second;
        out << "  " << rule << "  applicable " << cnt << "  failures " << bad << '\n';
    }
    for (auto i : s.failure_indices) {
        const auto& o = s.outcomes[i];
        out << "FAIL (" << o.g_desc << ", " << o.h_desc << "): " << o.note << '\n';
    }
    for (auto i : s.indeterminate_indices) {
        const auto& o = s.outcomes[i];
        out << "INDETERMINATE (" << o.g_desc << ", " << o.h_desc << ")\n";
    }
    for (const auto& o : s.outcomes)
        if (o.cond_i_conflict)
            out << "COND-I CONFLICT (" << o.g_desc << ", " << o.h_desc
                << "): exclusion fails while companion conditions hold\n";
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"quadratic embedding constants of graphs and corona products"};
    app.require_subcommand(1);

    Tolerances tols;
    bool table = false;
    app.add_option("--group-tol", tols.group_tol, "eigenvalue grouping tolerance");
    app.add_option("--main-tol", tols.main_tol, "main-eigenvalue weight threshold");
    app.add_option("--eigen-excl-tol", tols.eigen_excl_tol,
                   "certainty radius for spectrum exclusion");
    app.add_flag("--table", table, "human-readable output instead of JSON");

    std::string spec_g, spec_h;
    double target = 0.0;
    int size_cap = 400;
    std::vector<double> sample_args;
    double sample_a = 0.0, sample_b = 1.0;
    int sample_m = 1;

    auto* cmd_qec = app.add_subcommand("qec", "QEC of a connected graph (brute-force oracle)");
    cmd_qec->add_option("graph", spec_g, "family shorthand or edge-list file")->required();
    cmd_qec->fallthrough();

    auto* cmd_dist = app.add_subcommand("dist", "hop-count distance matrix");
    cmd_dist->add_option("graph", spec_g)->required();
    cmd_dist->fallthrough();

    auto* cmd_corona = app.add_subcommand("corona", "corona product edge list");
    cmd_corona->add_option("G", spec_g)->required();
    cmd_corona->add_option("H", spec_h)->required();
    cmd_corona->fallthrough();

    auto* cmd_omega = app.add_subcommand("omega", "omega/psi data of a graph");
    cmd_omega->add_option("H", spec_h)->required();
    cmd_omega->add_option("--sample", sample_args, "a b m: emit m (lambda,omega,psi) CSV rows")
        ->expected(3);
    cmd_omega->fallthrough();

    auto* cmd_psi_inv = app.add_subcommand("psi-inv", "rightmost-branch inverse of psi");
    cmd_psi_inv->add_option("H", spec_h)->required();
    cmd_psi_inv->add_option("target", target)->required();
    cmd_psi_inv->fallthrough();

    auto* cmd_predict = app.add_subcommand("predict", "closed-form prediction vs oracle for a pair");
    cmd_predict->add_option("G", spec_g)->required();
    cmd_predict->add_option("H", spec_h)->required();
    cmd_predict->add_option("--size-cap", size_cap, "maximum corona order");
    cmd_predict->fallthrough();

    BatchConfig cfg;
    auto* cmd_verify = app.add_subcommand("verify", "seeded random theorem sweep");
    cmd_verify->add_option("--seed", cfg.seed, "RNG seed")->required();
    cmd_verify->add_option("--count", cfg.count, "number of pairs");
    cmd_verify->add_option("--gmin", cfg.g_min);
    cmd_verify->add_option("--gmax", cfg.g_max);
    cmd_verify->add_option("--hmin", cfg.h_min);
    cmd_verify->add_option("--hmax", cfg.h_max);
    cmd_verify->add_option("--size-cap", cfg.size_cap);
    cmd_verify->fallthrough();

    auto* cmd_sample = app.add_subcommand("sample", "CSV samples of omega and psi");
    cmd_sample->add_option("H", spec_h)->required();
    cmd_sample->add_option("a", sample_a)->required();
    cmd_sample->add_option("b", sample_b)->required();
    cmd_sample->add_option("m", sample_m)->required();
    cmd_sample->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kExitOk : kExitParse;
    }

    try {
        if (cmd_qec->parsed()) {
            const Graph g = parse_graph_spec(spec_g);
            QecResult r = qec_oracle(distance_matrix(g), label_or(g, spec_g));
            if (table) {
                out << "QEC(" << r.graph_id << ") = " << fmt12(r.value) << "  [oracle]\n";
            } else {
                json j = to_json(r);
                j["n"] = g.vertex_count();
                emit(out, std::move(j), tols);
            }
        } else if (cmd_dist->parsed()) {
            const Graph g = parse_graph_spec(spec_g);
            const DistanceMatrix d = distance_matrix(g);
            if (table) {
                for (int i = 0; i < d.n; ++i) {
                    for (int j = 0; j < d.n; ++j) out << (j ? " " : "") << d.d(i, j);
                    out << '\n';
                }
            } else {
                json j = to_json(d);
                j["graph"] = label_or(g, spec_g);
                emit(out, std::move(j), tols);
            }
        } else if (cmd_corona->parsed()) {
            const Graph g = parse_graph_spec(spec_g);
            const Graph h = parse_graph_spec(spec_h);
            const Graph c = corona(g, h);
            if (table) {
                out << format_edge_list(c);
            } else {
                emit(out, to_json(c), tols);
            }
        } else if (cmd_omega->parsed()) {
            const Graph h = parse_graph_spec(spec_h);
            const OmegaPsi op = OmegaPsi::from_graph(h, tols);
            if (!sample_args.empty()) {
                print_sample_csv(out, op, sample_args[0], sample_args[1],
                                 static_cast<int>(sample_args[2]));
            } else if (table) {
                json j = to_json(op);
                out << "omega/psi of " << label_or(h, spec_h) << '\n' << j.dump(2) << '\n';
            } else {
                json j = to_json(op);
                j["graph"] = label_or(h, spec_h);
                emit(out, std::move(j), tols);
            }
        } else if (cmd_psi_inv->parsed()) {
            const Graph h = parse_graph_spec(spec_h);
            const OmegaPsi op = OmegaPsi::from_graph(h, tols);
            const double v = op.psi_star_inverse(target);
            if (table) {
                out << "psi_star_inverse(" << label_or(h, spec_h) << ", " << fmt12(target)
                    << ") = " << fmt12(v) << '\n';
            } else {
                json j{{"graph", label_or(h, spec_h)},
                       {"n", h.vertex_count()},
                       {"target", json_number(target)},
                       {"value", json_number(v)}};
                emit(out, std::move(j), tols);
            }
        } else if (cmd_predict->parsed()) {
            const Graph g = parse_graph_spec(spec_g);
            const Graph h = parse_graph_spec(spec_h);
            const TheoremReport r = verify_pair(g, h, tols, size_cap);
            if (table) print_report_table(out, r);
            else emit(out, to_json(r), tols);
            if (r.applicable.empty()) {
                err << "formula not established for this pair (no rule applies); "
                       "oracle value reported\n";
                return kExitPrecondition;
            }
            if (!r.passed()) return kExitVerification;
        } else if (cmd_verify->parsed()) {
            cfg.tols = tols;
            const BatchSummary s = batch_verify(cfg);
            if (table) {
                print_batch_table(out, s);
            } else {
                json j = to_json(s);
                j["config"] = json{{"seed", cfg.seed},   {"count", cfg.count},
                                   {"gmin", cfg.g_min},  {"gmax", cfg.g_max},
                                   {"hmin", cfg.h_min},  {"hmax", cfg.h_max},
                                   {"size_cap", cfg.size_cap}};
                emit(out, std::move(j), tols);
            }
            if (s.failures > 0) return kExitVerification;
        } else if (cmd_sample->parsed()) {
            const Graph h = parse_graph_spec(spec_h);
            const OmegaPsi op = OmegaPsi::from_graph(h, tols);
            print_sample_csv(out, op, sample_a, sample_b, sample_m);
        }
    } catch (const parse_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const precondition_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const verification_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitVerification;
    } catch (const numeric_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumeric;
    }
    return kExitOk;
}

} // namespace qec::cli

#pragma once

// Command-line front end. Kept in a header so tests can drive it in-process
// with string streams.
//
// Exit codes: 0 success or confirmed, 1 counterexample (verify) or no rainbow
// matching (rainbow), 2 usage or input error, 3 budget exceeded.

#include "hyperext/hyperext.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace hyperext::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2, kBudget = 3 };

struct GlobalOptions {
    std::string format = "text";
    int jobs = 1;
    std::uint64_t seed = 1;
    std::uint64_t max_nodes = 0;  // 0 keeps the library defaults
    std::int64_t max_millis = 0;
    bool no_timing = false;
    bool strict = false;

    bool json() const { return format == "json"; }

    VerifyOptions verify_options() const {
        VerifyOptions opt;
        opt.jobs = std::max(1, jobs);
        if (max_nodes > 0) {
            opt.budget.max_nodes = max_nodes;
            opt.matching_budget.max_nodes = max_nodes;
        }
        if (max_millis > 0) opt.budget.max_time = std::chrono::milliseconds(max_millis);
        return opt;
    }

    SearchBudget search_budget() const {
        SearchBudget b;
        if (max_nodes > 0) b.max_nodes = max_nodes;
        return b;
    }
};

class Runner {
public:
    Runner(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out_(out), err_(err) {}

    int run(int argc, const char* const* argv);

private:
    Hypergraph read_graph(const std::string& path) {
        ParseOptions po;
        po.duplicate_edges_are_errors = g_.strict;
        ParseResult res;
        if (path == "-") {
            res = parse_hypergraph(in_, po);
        } else {
            std::ifstream f(path);
            if (!f) throw std::invalid_argument("cannot open '" + path + "'");
            res = parse_hypergraph(f, po);
        }
        for (const std::string& w : res.warnings) err_ << "warning: " << path << ": " << w << "\n";
        return std::move(res.graph);
    }

    std::string read_text(const std::string& path) {
        std::ostringstream buf;
        if (path == "-") {
            buf << in_.rdbuf();
        } else {
            std::ifstream f(path);
            if (!f) throw std::invalid_argument("cannot open '" + path + "'");
            buf << f.rdbuf();
        }
        return buf.str();
    }

    void emit_graph(const Hypergraph& h, const std::string& path) {
        if (path.empty() || path == "-") {
            write_hypergraph(out_, h);
            return;
        }
        std::ofstream f(path);
        if (!f) throw std::invalid_argument("cannot write '" + path + "'");
        write_hypergraph(f, h);
    }

    static std::string edge_labels(VertexSet e) {
        std::string s;
        e.for_each([&](int v) {
            if (!s.empty()) s += ' ';
            s += std::to_string(v + 1);
        });
        return s;
    }

    void print_report(const VerificationReport& rep) {
        if (g_.json()) {
            out_ << report_to_jsonl(rep, !g_.no_timing);
            return;
        }
        out_ << "kind: " << rep.kind << "\ncell:";
        for (const auto& [key, value] : rep.cell) out_ << ' ' << key << '=' << value;
        out_ << "\n";
        if (rep.regime) out_ << "regime: " << to_string(*rep.regime) << "\n";
        out_ << "status: " << (rep.status ? to_string(*rep.status) : "unset") << "\n";
        out_ << "claimed: " << to_decimal(rep.claimed_bound) << "\n";
        out_ << "observed: " << to_decimal(rep.observed_max) << "\n";
        if (rep.gap_bound) out_ << "gap bound: " << to_decimal(*rep.gap_bound) << "\n";
        if (rep.observed_below_bound) out_ << "observed below bound: " << to_decimal(*rep.observed_below_bound) << "\n";
        out_ << "threshold met: " << (rep.threshold_met ? "yes" : "no") << "\n";
        out_ << "families: " << rep.families << "\nnodes: " << rep.nodes << "\n";
        if (!g_.no_timing) out_ << "millis: " << rep.millis << "\n";
        if (rep.witness) out_ << "witness:\n" << serialize_hypergraph(*rep.witness);
        if (rep.witness_family)
            for (std::size_t i = 0; i < rep.witness_family->size(); ++i)
                out_ << "witness color " << i + 1 << ":\n" << serialize_hypergraph((*rep.witness_family)[i]);
        if (!rep.error.empty()) out_ << "error: " << rep.error << "\n";
    }

    static int report_exit(const VerificationReport& rep) {
        if (!rep.status) return kBudget;
        return *rep.status == Status::counterexample ? kNegative : kOk;
    }

    std::istream& in_;
    std::ostream& out_;
    std::ostream& err_;
    GlobalOptions g_;
};

inline int Runner::run(int argc, const char* const* argv) {
    CLI::App app{"Exact extremal hypergraph toolkit", "hyperext"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand
    app.add_option("--format", g_.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--jobs", g_.jobs, "Worker threads")->check(CLI::Range(1, 1024));
    app.add_option("--seed", g_.seed, "Seed for randomized runs");
    app.add_option("--max-nodes", g_.max_nodes, "Search node budget (0 = default)");
    app.add_option("--max-millis", g_.max_millis, "Wall-clock budget per enumeration (0 = none)");
    app.add_flag("--no-timing", g_.no_timing, "Omit elapsed times so output is reproducible byte for byte");
    app.add_flag("--strict", g_.strict, "Treat duplicate edges in input files as errors");

    int n = 0, k = 0, r = 0, a = 0, s = 0, i = 0, j = 0, t = 0, trials = 200, p = 0;
    int ia = 0, ib = 0, ic = 0;
    std::string file = "-", output, x_text, config;
    std::vector<std::string> files;
    bool per_vertex = false, full = false, check_hypothesis = false;

    auto* construct = app.add_subcommand("construct", "Write F^(r)_{n,k,a}");
    construct->add_option("--n", n)->required();
    construct->add_option("--k", k)->required();
    construct->add_option("--r", r)->required();
    construct->add_option("--a", a)->required();
    construct->add_option("-o,--output", output, "Output file (default stdout)");

    auto* count = app.add_subcommand("count", "Count s-cliques");
    count->add_option("--s", s)->required();
    count->add_flag("--per-vertex", per_vertex);
    count->add_option("file", file, "Hypergraph file, - for stdin");

    auto* nu = app.add_subcommand("nu", "Matching number with a witness");
    nu->add_option("file", file);

    auto* shift_cmd = app.add_subcommand("shift", "Apply S_ij (1-based i < j)");
    shift_cmd->add_option("--i", i)->required();
    shift_cmd->add_option("--j", j)->required();
    shift_cmd->add_option("file", file);
    shift_cmd->add_option("-o,--output", output);

    auto* stab = app.add_subcommand("stabilize", "Shift until stable; trace summary on stderr");
    stab->add_option("file", file);
    stab->add_option("-o,--output", output);

    auto* closed = app.add_subcommand("closed-form", "s-clique count of F^(r)_{n,k,a}");
    closed->add_option("--n", n)->required();
    closed->add_option("--k", k)->required();
    closed->add_option("--r", r)->required();
    closed->add_option("--a", a)->required();
    closed->add_option("--s", s)->required();

    auto* verify = app.add_subcommand("verify", "Exhaustive desk-scale checks");
    verify->require_subcommand(1);
    auto* v_ext = verify->add_subcommand("extremal", "Maximum s-clique count with nu <= k");
    v_ext->add_option("--n", n)->required();
    v_ext->add_option("--k", k)->required();
    v_ext->add_option("--r", r)->required();
    v_ext->add_option("--s", s)->required();
    v_ext->add_flag("--full-enumeration", full, "Enumerate every hypergraph, not only stable ones");
    auto* v_sweep = verify->add_subcommand("sweep", "Extremal checks over a parameter grid (JSONL)");
    v_sweep->add_option("--config", config)->required();
    v_sweep->add_flag("--full-enumeration", full);
    auto* v_rain = verify->add_subcommand("rainbow", "Rainbow matchings on random and boundary families");
    v_rain->add_option("--n", n)->required();
    v_rain->add_option("--k", k)->required();
    v_rain->add_option("--r", r)->required();
    v_rain->add_option("--t", t)->required();
    v_rain->add_option("--trials", trials);
    auto* v_head = verify->add_subcommand("head", "Head intersections of clique-covered stable families");
    v_head->add_option("--n", n)->required();
    v_head->add_option("--k", k)->required();
    v_head->add_option("--r", r)->required();
    v_head->add_option("--s", s)->required();

    auto* rainbow = app.add_subcommand("rainbow", "Rainbow matching across color files");
    rainbow->add_option("files", files)->required();
    rainbow->add_flag("--check-hypothesis", check_hypothesis);
    rainbow->add_option("--t", t);

    auto* ineq = app.add_subcommand("ineq", "Binomial and power inequality checks");
    ineq->add_option("--a", ia)->required();
    ineq->add_option("--b", ib)->required();
    ineq->add_option("--c", ic)->required();
    auto* p_opt = ineq->add_option("--p", p);
    auto* x_opt = ineq->add_option("--x", x_text, "Rational u/v");
    p_opt->needs(x_opt);
    x_opt->needs(p_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out_, err_) == 0 ? kOk : kUsage;
    }

    try {
        if (construct->parsed()) {
            emit_graph(build_extremal_family(n, k, r, a), output);
            return kOk;
        }
        if (count->parsed()) {
            const Hypergraph h = read_graph(file);
            const CliqueCount c = count_cliques(h, s, per_vertex, g_.jobs);
            if (g_.json()) {
                Json j;
                j["schema"] = kSchema;
                j["s"] = s;
                j["total"] = to_decimal(c.total);
                if (per_vertex) {
                    Json pv = Json::object();
                    for (std::size_t v = 0; v < c.per_vertex.size(); ++v)
                        pv[std::to_string(v + 1)] = to_decimal(c.per_vertex[v]);
                    j["per_vertex"] = pv;
                }
                out_ << j.dump() << "\n";
            } else {
                out_ << to_decimal(c.total) << "\n";
                if (per_vertex)
                    for (std::size_t v = 0; v < c.per_vertex.size(); ++v)
                        out_ << v + 1 << ": " << to_decimal(c.per_vertex[v]) << "\n";
            }
            return kOk;
        }
        if (nu->parsed()) {
            const Hypergraph h = read_graph(file);
            const MatchingResult m = matching_number(h, g_.search_budget());
            if (g_.json()) {
                Json j;
                j["schema"] = kSchema;
                j["nu"] = m.size;
                Json w = Json::array();
                for (VertexSet e : m.witness.edges) w.push_back(edge_labels(e));
                j["witness"] = w;
                out_ << j.dump() << "\n";
            } else {
                out_ << m.size << "\n";
                for (VertexSet e : m.witness.edges) out_ << edge_labels(e) << "\n";
            }
            return kOk;
        }
        if (shift_cmd->parsed()) {
            const Hypergraph h = read_graph(file);
            emit_graph(shift(h, i - 1, j - 1), output);
            return kOk;
        }
        if (stab->parsed()) {
            const ShiftTrace trace = stabilize(read_graph(file));
            emit_graph(trace.result, output);
            std::size_t moved = 0;
            for (const ShiftApplication& app_step : trace.applications) moved += app_step.moved;
            err_ << "stabilized after " << trace.rounds << " rounds, " << trace.applications.size()
                 << " effective shifts, " << moved << " edges moved\n";
            return kOk;
        }
        if (closed->parsed()) {
            const BigInt v = closed_form_clique_count(n, k, r, a, s);
            if (g_.json()) {
                Json j;
                j["schema"] = kSchema;
                j["value"] = to_decimal(v);
                out_ << j.dump() << "\n";
            } else {
                out_ << to_decimal(v) << "\n";
            }
            return kOk;
        }
        if (v_ext->parsed()) {
            VerifyOptions opt = g_.verify_options();
            opt.full_enumeration = full;
            const VerificationReport rep = verify_extremal_cell(n, k, r, s, opt);
            print_report(rep);
            return report_exit(rep);
        }
        if (v_sweep->parsed()) {
            VerifyOptions opt = g_.verify_options();
            opt.full_enumeration = full;
            const std::vector<SweepCell> cells = expand_sweep(parse_sweep_config(read_text(config)));
            // Cells run one at a time; each cell shards internally over the workers.
            const int cell_jobs = opt.jobs;
            opt.jobs = 1;
            const std::vector<VerificationReport> reports = run_sweep(cells, opt, cell_jobs);
            int code = kOk;
            for (const VerificationReport& rep : reports) {
                out_ << report_to_jsonl(rep, !g_.no_timing);
                if (rep.status && *rep.status == Status::counterexample) code = kNegative;
            }
            return code;
        }
        if (v_rain->parsed()) {
            const VerificationReport rep = verify_rainbow_cell(n, k, r, t, trials, g_.seed, g_.verify_options());
            print_report(rep);
            return report_exit(rep);
        }
        if (v_head->parsed()) {
            const VerificationReport rep = verify_head_intersection(n, k, r, s, g_.verify_options());
            print_report(rep);
            return report_exit(rep);
        }
        if (rainbow->parsed()) {
            std::vector<Hypergraph> members;
            for (const std::string& f : files) members.push_back(read_graph(f));
            const ColoredFamily fam(std::move(members));
            const std::optional<RainbowMatching> m = find_rainbow_matching(fam, g_.search_budget());
            std::vector<ColorHypothesis> verdicts;
            if (check_hypothesis) verdicts = rainbow_hypothesis_check(fam, t);
            if (g_.json()) {
                Json j;
                j["schema"] = kSchema;
                if (m) {
                    Json picks = Json::array();
                    for (const RainbowPick& pick : m->picks)
                        picks.push_back(Json{{"color", pick.color + 1}, {"edge", edge_labels(pick.edge)}});
                    j["matching"] = picks;
                } else {
                    j["matching"] = nullptr;
                }
                if (check_hypothesis) {
                    Json hs = Json::array();
                    for (const ColorHypothesis& v : verdicts)
                        hs.push_back(Json{{"holds", v.holds}, {"s", v.witness_s ? Json(*v.witness_s) : Json(nullptr)}});
                    j["hypothesis"] = hs;
                }
                out_ << j.dump() << "\n";
            } else {
                if (m) {
                    for (const RainbowPick& pick : m->picks)
                        out_ << "color " << pick.color + 1 << ": " << edge_labels(pick.edge) << "\n";
                } else {
                    out_ << "none\n";
                }
                for (std::size_t c = 0; c < verdicts.size(); ++c) {
                    out_ << "hypothesis color " << c + 1 << ": " << (verdicts[c].holds ? "holds" : "fails");
                    if (verdicts[c].witness_s) out_ << " (s=" << *verdicts[c].witness_s << ")";
                    out_ << "\n";
                }
            }
            return m ? kOk : kNegative;
        }
        if (ineq->parsed()) {
            std::vector<InequalityVerdict> verdicts = binomial_inequality_suite(ia, ib, ic);
            if (p_opt->count() > 0) verdicts.push_back(power_inequality(p, parse_rational(x_text)));
            if (g_.json()) {
                Json j;
                j["schema"] = kSchema;
                Json vs = Json::object();
                for (const InequalityVerdict& v : verdicts) vs[std::to_string(v.id)] = to_string(v.verdict);
                j["verdicts"] = vs;
                out_ << j.dump() << "\n";
            } else {
                for (const InequalityVerdict& v : verdicts) out_ << "(" << v.id << ") " << to_string(v.verdict) << "\n";
            }
            return kOk;
        }
    } catch (const BudgetExceeded& e) {
        err_ << "budget exceeded: " << e.what() << " after " << e.nodes() << " nodes\n";
        return kBudget;
    } catch (const ParseError& e) {
        err_ << "input error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err_ << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

inline int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    return Runner(in, out, err).run(argc, argv);
}

}  // namespace hyperext::cli

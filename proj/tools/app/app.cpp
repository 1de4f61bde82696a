#include "app.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "crossint/bounds.hpp"
#include "crossint/branching.hpp"
#include "crossint/constructions.hpp"
#include "crossint/errors.hpp"
#include "crossint/search.hpp"
#include "crossint/structure.hpp"
#include "grids.hpp"
#include "report.hpp"
#include "verify.hpp"

namespace crossint::app {

namespace {

// Writes `text` to `path`, or to `out` when the path is empty.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw precondition_error("cannot write '" + path + "'");
    file << text;
}

json params_json(int n, int k, int t) { return json{{"n", n}, {"k", k}, {"t", t}}; }

struct ConstructOpts {
    std::string family;
    int n = 0;
    int k = 0;
    int t = 0;
    std::vector<int> center;
    std::string out;
    std::string format = "text";
};

int do_construct(const ConstructOpts& o, std::ostream& out) {
    GroundParams::make(o.n, o.k, o.t);
    Family f;
    std::string label = o.family;
    if (o.family == "A") {
        f = build_A(o.n, o.k, o.t);
    } else if (o.family == "H") {
        f = build_H(o.n, o.k, o.t);
    } else {
        const SubsetWord center = o.center.empty() ? SubsetWord::range(1, o.t) : SubsetWord::of(o.center);
        f = build_star(o.n, o.k, center);
        label += " center=" + to_string(center);
    }
    if (o.format == "json") {
        json j = report_header("construct", json{{"family", label}, {"params", params_json(o.n, o.k, o.t)}});
        j["family"] = to_json(f);
        emit(dump(j), o.out, out);
        return kOk;
    }
    const std::string comment = std::string(kToolName) + " " + kToolVersion + " construct " + label +
                                " n=" + std::to_string(o.n) + " k=" + std::to_string(o.k) +
                                " t=" + std::to_string(o.t);
    if (o.out.empty()) {
        out << "# " << comment << "\n" << to_text(f);
    } else {
        write_family_file(o.out, f, comment);
    }
    return kOk;
}

struct AnalyzeOpts {
    std::string in;
    std::string in2;
    int t = 0;
    std::optional<int> k;
    bool predicates = false;
    bool tau = false;
    bool basis = false;
    bool saturate = false;
    bool classify = false;
    std::string out;
};

int do_analyze(AnalyzeOpts o, std::ostream& out) {
    if (o.t < 1) throw precondition_error("--t must be at least 1");
    const Family f = read_family_file(o.in);
    std::optional<Family> g;
    if (!o.in2.empty()) g = read_family_file(o.in2);
    if (!(o.predicates || o.tau || o.basis || o.saturate || o.classify)) o.predicates = o.tau = o.basis = true;
    if ((o.saturate || o.classify) && !g) throw precondition_error("--saturate and --classify need --in2");
    if (o.classify && !o.k) throw precondition_error("--classify needs --k");

    json config{{"in", o.in}, {"t", o.t}};
    if (g) config["in2"] = o.in2;
    if (o.k) config["k"] = *o.k;
    json j = report_header("analyze", config);
    int code = kOk;

    if (o.predicates) {
        json p{{"t_intersecting", is_t_intersecting(f, o.t)}};
        if (!f.empty()) p["nontrivial"] = is_nontrivial(f, o.t);
        if (g) p["cross_t_intersecting"] = is_cross_t_intersecting(f, *g, o.t);
        j["predicates"] = p;
    }
    if (o.tau) {
        if (f.empty()) throw precondition_error("tau_t of an empty family is undefined");
        j["tau"] = tau_t(f, o.t);
    }
    if (o.basis) {
        const int k = o.k.value_or(f.uniformity().value_or(f.ground()));
        const Basis b = compute_basis(f, o.t, k);
        j["basis"] = to_json(b);
    }
    if (o.saturate) {
        const SaturatedPair p = saturate(f, *g, o.t);
        j["saturated"] = json{{"F", to_json(p.F)},
                              {"G", to_json(p.G)},
                              {"basis_F", to_json(p.basis_F)},
                              {"basis_G", to_json(p.basis_G)},
                              {"nontrivial", p.is_nontrivial()}};
    }
    if (o.classify) {
        const ClauseSet clauses = classify_exact_pair(f, *g, o.t, *o.k);
        const ExactFactsReport facts = check_exact_facts(f, *g, o.t);
        json w = json::array();
        for (SubsetWord s : facts.witness) w.push_back(to_json(s));
        j["clauses"] = clauses.names();
        j["facts"] = json{{"fact1", facts.fact1}, {"fact2", facts.fact2}, {"witness", w}, {"detail", facts.detail}};
        if (!clauses.any() || !facts.ok()) code = kVerificationFailed;
    }
    emit(dump(j), o.out, out);
    return code;
}

struct BranchOpts {
    std::string b1;
    std::string b2;
    int t = 0;
    int k = 0;
    std::string r1 = "auto";
    std::string policy = "lex";
    std::string out;
};

int do_branch(const BranchOpts& o, std::ostream& out) {
    const Basis b1 = Basis::from_members(read_family_file(o.b1), o.t, o.k);
    const Basis b2 = Basis::from_members(read_family_file(o.b2), o.t, o.k);
    std::optional<int> r1;
    if (o.r1 == "auto") {
        r1 = min_r_for_cover(b1, o.t);
        if (!r1) throw precondition_error("--r1 auto: no r gives tau_t(B1^(<=r)) >= t+1");
    } else if (o.r1 != "none") {
        try {
            std::size_t used = 0;
            r1 = std::stoi(o.r1, &used);
            if (used != o.r1.size()) throw std::invalid_argument(o.r1);
        } catch (const std::logic_error&) {
            throw precondition_error("--r1: expected an integer, auto or none, got '" + o.r1 + "'");
        }
    }
    const BranchReport rep = run_branching(b1, b2, r1, o.t, o.k, parse_policy(o.policy));
    json config{{"b1", o.b1}, {"b2", o.b2}, {"t", o.t}, {"k", o.k}, {"r1", o.r1}, {"policy", o.policy}};
    json j = report_header("branch", config);
    j["report"] = to_json(rep);
    emit(dump(j), o.out, out);
    const bool ok = rep.weight_conserved && rep.cover_ok && rep.weight_bound_ok;
    return ok ? kOk : kVerificationFailed;
}

struct IneqOpts {
    std::string check;
    std::string grid;
    std::string format = "csv";
    std::string out;
};

int do_ineq(const IneqOpts& o, std::ostream& out) {
    if (std::find(kIneqChecks.begin(), kIneqChecks.end(), o.check) == kIneqChecks.end()) {
        throw precondition_error("--check: unknown check '" + o.check + "'");
    }
    const std::vector<IneqReport> reports = run_ineq_grid(o.check, parse_grid(o.grid));
    const bool all = std::all_of(reports.begin(), reports.end(), [](const IneqReport& r) { return r.verdict; });
    std::string text;
    if (o.format == "json") {
        json j = report_header("ineq", json{{"check", o.check}, {"grid", o.grid}});
        json rows = json::array();
        for (const IneqReport& r : reports) rows.push_back(to_json(r));
        j["rows"] = rows;
        j["pass"] = all;
        text = dump(j);
    } else {
        text = csv_preamble("ineq check=" + o.check + " grid=" + o.grid, "check,params,lhs,rhs,slack,verdict");
        for (const IneqReport& r : reports) text += csv_row(r);
    }
    emit(text, o.out, out);
    return all ? kOk : kVerificationFailed;
}

struct SearchOpts {
    std::string mode;
    int n = 0;
    int k = 0;
    std::optional<int> t;
    bool nontrivial = false;
    std::optional<std::uint64_t> budget_nodes;
    std::optional<double> budget_secs;
    std::string out;
};

int do_search(const SearchOpts& o, std::ostream& out) {
    SearchProblem problem;
    if (o.mode == "single") {
        problem.mode = SearchMode::single_t_intersecting;
    } else if (o.mode == "pair") {
        problem.mode = SearchMode::pair_cross_t;
        problem.saturated = true;
    } else {
        problem.mode = SearchMode::pair_cross_1_pyber;
    }
    if (!o.t && problem.mode != SearchMode::pair_cross_1_pyber) throw precondition_error("--t is required");
    problem.params = GroundParams{o.n, o.k, o.t.value_or(1)};
    problem.nontrivial = o.nontrivial;
    problem.budget = Budget{o.budget_nodes, o.budget_secs};
    const SearchResult r = solve(problem);

    json config{{"mode", o.mode}, {"params", params_json(o.n, o.k, problem.params.t)}, {"nontrivial", o.nontrivial}};
    if (o.budget_nodes) config["budget_nodes"] = *o.budget_nodes;
    if (o.budget_secs) config["budget_secs"] = *o.budget_secs;
    json j = report_header("search", config);
    j["result"] = to_json(r);
    const bool valid = witnesses_valid(problem, r);
    j["witnesses_valid"] = valid;
    emit(dump(j), o.out, out);
    if (!r.exhaustive) return kBudgetExhausted;
    return valid ? kOk : kVerificationFailed;
}

int do_hmf(const std::string& grid, const std::string& path, std::ostream& out) {
    const std::vector<HmfRow> rows = hmf_table(hmf_grid(parse_grid(grid)));
    std::string text = csv_preamble("hmf-table grid=" + grid, "n,k,t,optimum,size_A,size_H,equal,exhaustive");
    bool all = true;
    for (const HmfRow& r : rows) {
        all = all && r.equal() && r.exhaustive;
        std::ostringstream line;
        line << r.n << "," << r.k << "," << r.t << "," << r.optimum << "," << r.size_a << "," << r.size_h << ","
             << (r.equal() ? "true" : "false") << "," << (r.exhaustive ? "true" : "false") << "\n";
        text += line.str();
    }
    emit(text, path, out);
    return all ? kOk : kVerificationFailed;
}

int do_verify_all(const std::string& scale, std::uint64_t seed, const std::string& path, std::ostream& out,
                  std::ostream& err) {
    Verifier verifier(seed, parse_scale(scale));
    const std::vector<CriterionResult> results = verifier.run_all();
    const json j = verifier.report(results);
    emit(dump(j), path, out);
    bool all = true;
    for (const CriterionResult& r : results) {
        all = all && r.pass;
        if (!r.pass) err << "criterion " << r.id << " failed: " << r.name << "\n";
    }
    return all ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App cli{"Constructions, structure checks and exhaustive search for t-intersecting families", kToolName};
    cli.set_version_flag("--version", std::string(kToolVersion));
    cli.require_subcommand(1);

    ConstructOpts con;
    auto* construct = cli.add_subcommand("construct", "Build A(n,k,t), H(n,k,t) or a full star");
    construct->add_option("--family", con.family)->required()->check(CLI::IsMember({"A", "H", "star"}));
    construct->add_option("--n", con.n)->required();
    construct->add_option("--k", con.k)->required();
    construct->add_option("--t", con.t)->required();
    construct->add_option("--center", con.center, "Star center elements (default 1..t)");
    construct->add_option("--out", con.out, "Family file to write (default stdout)");
    construct->add_option("--format", con.format)->check(CLI::IsMember({"text", "json"}));

    AnalyzeOpts ana;
    auto* analyze = cli.add_subcommand("analyze", "Predicates, tau_t, basis, saturation and exact-pair classes");
    analyze->add_option("--in", ana.in, "Family file F")->required();
    analyze->add_option("--in2", ana.in2, "Family file G");
    analyze->add_option("--t", ana.t)->required();
    analyze->add_option("--k", ana.k, "Basis truncation, and the k in the exact-pair classifier");
    analyze->add_flag("--predicates", ana.predicates);
    analyze->add_flag("--tau", ana.tau);
    analyze->add_flag("--basis", ana.basis);
    analyze->add_flag("--saturate", ana.saturate);
    analyze->add_flag("--classify", ana.classify);
    analyze->add_option("--out", ana.out);

    BranchOpts br;
    auto* branch = cli.add_subcommand("branch", "Weighted branching process on a pair of bases");
    branch->add_option("--b1", br.b1)->required();
    branch->add_option("--b2", br.b2)->required();
    branch->add_option("--t", br.t)->required();
    branch->add_option("--k", br.k)->required();
    branch->add_option("--r1", br.r1, "Integer, auto (smallest covering r) or none")->capture_default_str();
    branch->add_option("--policy", br.policy, "lex or random:<seed>")->capture_default_str();
    branch->add_option("--out", br.out);

    IneqOpts iq;
    auto* ineq = cli.add_subcommand("ineq", "Exact checks of the binomial and lex-sum inequalities");
    ineq->add_option("--check", iq.check)->required()->check(CLI::IsMember(kIneqChecks));
    ineq->add_option("--grid", iq.grid, "k=v,... with ranges a..b and lists x;y");
    ineq->add_option("--format", iq.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    ineq->add_option("--out", iq.out);

    SearchOpts so;
    auto* search = cli.add_subcommand("search", "Exhaustive extremal search");
    search->add_option("--mode", so.mode)->required()->check(CLI::IsMember({"single", "pair", "pyber"}));
    search->add_option("--n", so.n)->required();
    search->add_option("--k", so.k)->required();
    search->add_option("--t", so.t, "Required except in pyber mode, where it is 1");
    search->add_flag("--nontrivial", so.nontrivial);
    search->add_option("--budget-nodes", so.budget_nodes);
    search->add_option("--budget-secs", so.budget_secs);
    search->add_option("--out", so.out);

    std::string hmf_grid_spec;
    std::string hmf_out;
    auto* hmf = cli.add_subcommand("hmf-table", "Single-family optimum against max{|A|,|H|}");
    hmf->add_option("--grid", hmf_grid_spec);
    hmf->add_option("--out", hmf_out);

    std::string scale = "smoke";
    std::uint64_t seed = 1;
    std::string verify_out;
    auto* verify = cli.add_subcommand("verify-all", "Run every acceptance criterion");
    verify->add_option("--scale", scale)->check(CLI::IsMember({"smoke", "desk"}))->capture_default_str();
    verify->add_option("--seed", seed)->capture_default_str();
    verify->add_option("--out", verify_out);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        cli.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = cli.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (*construct) return do_construct(con, out);
        if (*analyze) return do_analyze(ana, out);
        if (*branch) return do_branch(br, out);
        if (*ineq) return do_ineq(iq, out);
        if (*search) return do_search(so, out);
        if (*hmf) return do_hmf(hmf_grid_spec, hmf_out, out);
        if (*verify) return do_verify_all(scale, seed, verify_out, out, err);
    } catch (const precondition_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const infeasible_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace crossint::app

#include "lmc/fixtures.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

using namespace lmc;

namespace {

constexpr int kExitNegative = 1;
constexpr int kExitInputError = 2;
constexpr int kExitGuard = 3;

std::uint64_t fnv1a(const std::string& bytes, std::uint64_t h = 0xcbf29ce484222325ull) {
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(in), {});
}

struct ReportContext {
    std::string command;
    std::string format = "json";
    std::uint64_t seed = 0;
    std::uint64_t digest = fnv1a("");
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void absorb(const std::string& bytes) { digest = fnv1a(bytes, digest); }

    void emit_tsv(const Json& payload, std::ostream& os, const std::string& prefix) const {
        if (payload.is_object()) {
            for (const auto& [key, value] : payload.items())
                emit_tsv(value, os, prefix.empty() ? key : prefix + "." + key);
        } else if (payload.is_array()) {
            std::size_t i = 0;
            for (const Json& value : payload) {
                emit_tsv(value, os, prefix + "[" + std::to_string(i) + "]");
                ++i;
            }
        } else {
            os << prefix << "\t"
               << (payload.is_string() ? payload.get<std::string>() : payload.dump()) << "\n";
        }
    }

    void print(const Json& payload) const {
        const double ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start)
                              .count();
        if (format == "tsv") {
            std::cout << "# command\t" << command << "\n# input_digest\t" << hex64(digest)
                      << "\n# seed\t" << seed << "\n";
            emit_tsv(payload, std::cout, "");
            std::cout << "# timing_ms\t" << ms << "\n";
            return;
        }
        Json report;
        report["command"] = command;
        report["input_digest"] = hex64(digest);
        report["seed"] = seed;
        report["payload"] = payload;
        report["timing_ms"] = ms;
        std::cout << report.dump(2) << "\n";
    }
};

std::size_t node_guard() {
    if (const char* env = std::getenv("LMC_MAX_NODES")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0)
            return static_cast<std::size_t>(v);
    }
    return 12;
}

LiftedPair load_pair(const std::string& arg, ReportContext& report) {
    if (std::ifstream probe(arg); probe.good()) {
        const std::string bytes = slurp(arg);
        report.absorb(bytes);
        return pair_from_json(Json::parse(bytes));
    }
    if (auto fixture = fixtures::by_name(arg)) {
        report.absorb(arg);
        return *std::move(fixture);
    }
    throw ParseError("'" + arg + "' is neither a readable file nor a known fixture");
}

// --- generator specs -------------------------------------------------

struct GenSpec {
    std::string family;
    std::map<std::string, std::string> kv;
    std::vector<std::string> positional;

    double number(const std::string& key, std::size_t pos,
                  std::optional<double> fallback = {}) const {
        std::string token;
        if (auto it = kv.find(key); it != kv.end())
            token = it->second;
        else if (pos < positional.size())
            token = positional[pos];
        else if (fallback)
            return *fallback;
        else
            throw ParseError("generator spec is missing '" + key + "'");
        try {
            return std::stod(token);
        } catch (const std::logic_error&) {
            throw ParseError("generator parameter '" + key + "' = '" + token + "' is not a number");
        }
    }
};

GenSpec parse_gen_spec(const std::string& text) {
    GenSpec spec;
    std::string body;
    const auto open = text.find('(');
    if (open != std::string::npos) {
        const auto close = text.rfind(')');
        if (close == std::string::npos || close < open)
            throw ParseError("unbalanced parentheses in generator spec '" + text + "'");
        spec.family = text.substr(0, open);
        body = text.substr(open + 1, close - open - 1);
    } else {
        const auto space = text.find(' ');
        spec.family = text.substr(0, space);
        body = space == std::string::npos ? "" : text.substr(space + 1);
    }
    for (char& c : body)
        if (c == ',')
            c = ' ';
    std::stringstream ss(body);
    std::string token;
    while (ss >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos)
            spec.positional.push_back(token);
        else
            spec.kv[token.substr(0, eq)] = token.substr(eq + 1);
    }
    return spec;
}

LiftedPair generate_pair(const GenSpec& spec, const EdgeSet& lift_edges, std::uint64_t& seed) {
    if (spec.family == "random") {
        const auto n = static_cast<std::size_t>(spec.number("n", 0));
        const double p = spec.number("p", 1, 0.5);
        const double lift = spec.number("lift", 2, 0.5);
        seed = static_cast<std::uint64_t>(spec.number("seed", 3, static_cast<double>(seed)));
        LiftedPair pair = gen_random_pair(n, p, lift, seed);
        if (lift_edges.empty())
            return pair;
        EdgeSet extra = pair.lifted_only();
        extra.insert(extra.end(), lift_edges.begin(), lift_edges.end());
        return make_lifted_pair(pair.base(), extra);
    }
    Graph base(0, {});
    if (spec.family == "path")
        base = gen_path(static_cast<std::size_t>(spec.number("n", 0)));
    else if (spec.family == "cycle")
        base = gen_cycle(static_cast<std::size_t>(spec.number("n", 0)));
    else if (spec.family == "grid")
        base = gen_grid(static_cast<std::size_t>(spec.number("r", 0)),
                        static_cast<std::size_t>(spec.number("c", 1)));
    else if (spec.family == "complete")
        base = gen_complete(static_cast<std::size_t>(spec.number("n", 0)));
    else
        throw ParseError("unknown generator family '" + spec.family + "'");
    try {
        return make_lifted_pair(std::move(base), lift_edges);
    } catch (const std::invalid_argument& err) {
        throw ParseError(err.what());
    }
}

Edge parse_edge_pair(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw ParseError("lift edge '" + text + "' must be 'u,v'");
    try {
        return Edge(std::stoull(text.substr(0, comma)), std::stoull(text.substr(comma + 1)));
    } catch (const std::logic_error&) {
        throw ParseError("lift edge '" + text + "' must be 'u,v'");
    }
}

Json violated_system(const LiftedPair& pair, const Labeling& x) {
    Json out = Json::array();
    for (const auto& [tag, ineq] : canonical_inequalities(pair)) {
        const Rational lhs = ineq.evaluate(x);
        if (lhs > ineq.rhs) {
            Json item;
            item["tag"] = tag_to_string(tag);
            item["lhs"] = rational_to_string(lhs);
            item["rhs"] = rational_to_string(ineq.rhs);
            out.push_back(item);
        }
    }
    return out;
}

const char* verdict_name(FacetVerdict v) {
    switch (v) {
    case FacetVerdict::facet:
        return "facet";
    case FacetVerdict::not_facet:
        return "not_facet";
    default:
        return "inconclusive";
    }
}

Json edges_json(const EdgeSet& edges) {
    Json out = Json::array();
    for (const Edge& e : edges)
        out.push_back(e.str());
    return out;
}

struct TheoremOutcome {
    std::string verdict = "none"; // facet | not_facet | inconclusive | none
    Json violated = Json::array();
    Json witnesses = Json::object();
};

TheoremOutcome theorem_check(const LiftedPair& pair, const InequalityTag& tag) {
    TheoremOutcome out;
    if (const auto* box = std::get_if<BoxTag>(&tag)) {
        if (box->upper) {
            const auto verdict = check_box_upper(pair, box->edge);
            out.verdict = verdict.facet ? "facet" : "not_facet";
            if (verdict.witness_lifted) {
                out.violated.push_back("cut-vertex-pair");
                out.witnesses["lifted_edge"] = verdict.witness_lifted->str();
            }
        } else {
            const auto verdict = check_box_lower(pair, box->edge);
            out.verdict = verdict_name(verdict.verdict);
            if (verdict.triangle_witness) {
                out.violated.push_back(verdict.base_edge ? "triangle" : "a");
                out.witnesses["triangle_node"] = *verdict.triangle_witness;
            }
            if (!verdict.cond_b) {
                out.violated.push_back("b");
                out.witnesses["close_pair"] = Json::array(
                    {verdict.distance_witness->first, verdict.distance_witness->second});
            }
            if (!verdict.cond_c) {
                out.violated.push_back("c");
                out.witnesses["separator_triangle"] =
                    Json::array({verdict.separator_witness->s, verdict.separator_witness->s_other,
                                 verdict.separator_witness->t});
            }
        }
        return out;
    }
    if (std::holds_alternative<CycleTag>(tag) || std::holds_alternative<PathTag>(tag)) {
        out.verdict = check_cycle_path_facet(pair, tag) ? "facet" : "not_facet";
        if (out.verdict == "not_facet")
            out.violated.push_back("chord-in-lifted-graph");
        return out;
    }
    const auto& cut = std::get<CutTag>(tag);
    const VwCutContext ctx(pair, cut.lifted, cut.cut);
    if (cut.cut.size() == 1) {
        const auto verdict = check_single_edge_cut_facet(ctx);
        out.verdict = verdict.facet ? "facet" : "not_facet";
        if (!verdict.cond_a) {
            out.violated.push_back("a");
            out.witnesses["v0_bridge"] = verdict.a_witness->str();
        }
        if (!verdict.cond_b) {
            out.violated.push_back("b");
            out.witnesses["forbidden_pair"] =
                Json::array({verdict.b_witness->first.str(), verdict.b_witness->second.str()});
        }
        return out;
    }
    const auto report = check_cut_conditions(ctx);
    out.verdict = report.all_hold() ? "inconclusive" : "not_facet";
    for (const std::string& name : report.violated())
        out.violated.push_back(name);
    if (report.c1_witness)
        out.witnesses["C1"] = report.c1_witness->str();
    if (report.c2_witness)
        out.witnesses["C2"] = edges_json(*report.c2_witness);
    if (report.c3_witness)
        out.witnesses["C3"] = Json{{"f_prime", report.c3_witness->f_prime.str()},
                                   {"F", edges_json(report.c3_witness->subset)},
                                   {"k", report.c3_witness->k}};
    if (report.c4_witness)
        out.witnesses["C4"] = Json{{"v", report.c4_witness->v_prime},
                                   {"w", report.c4_witness->w_prime},
                                   {"path", report.c4_witness->path.str()}};
    if (report.c5_witness)
        out.witnesses["C5"] = edges_json(*report.c5_witness);
    return out;
}

// --- verify suites ----------------------------------------------------

struct SuiteResult {
    Json payload;
    bool pass = true;
};

SuiteResult suite_dimension(const LiftedPair& pair) {
    SuiteResult out;
    const int dim = affine_dimension(enumerate_lifted_multicuts(pair));
    out.payload["affine_dimension"] = dim;
    out.payload["lifted_edges"] = pair.lifted_edge_count();
    out.pass = dim == static_cast<int>(pair.lifted_edge_count());
    return out;
}

SuiteResult suite_lemma8(const LiftedPair& pair) {
    SuiteResult out;
    const std::size_t m = pair.lifted_edge_count();
    const auto enumerated = enumerate_lifted_multicuts(pair);
    const std::set<Labeling> members(enumerated.begin(), enumerated.end());
    const auto system = canonical_inequalities(pair);
    std::size_t feasible = 0;
    Json mismatches = Json::array();
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
        Labeling x(m, 0);
        for (std::size_t i = 0; i < m; ++i)
            x[i] = (mask >> (m - 1 - i)) & 1;
        bool by_system = true;
        for (const auto& [tag, ineq] : system)
            if (!ineq.satisfied_by(x)) {
                by_system = false;
                break;
            }
        const bool by_components = is_lifted_multicut(pair, x);
        const bool by_membership = members.count(x) == 1;
        if (by_components)
            ++feasible;
        if (by_system != by_components || by_components != by_membership)
            mismatches.push_back(labeling_to_string(x));
    }
    out.payload["labelings"] = std::uint64_t(1) << m;
    out.payload["feasible"] = feasible;
    out.payload["mismatches"] = mismatches;
    out.pass = mismatches.empty();
    return out;
}

SuiteResult suite_cycles(const LiftedPair& pair) {
    SuiteResult out;
    std::size_t checked = 0;
    Json disagreements = Json::array();
    for (const auto& [tag, ineq] : canonical_inequalities(pair)) {
        if (!std::holds_alternative<CycleTag>(tag) && !std::holds_alternative<PathTag>(tag))
            continue;
        ++checked;
        const bool predicted = check_cycle_path_facet(pair, tag);
        if (predicted != is_facet(pair, ineq))
            disagreements.push_back(tag_to_string(tag));
    }
    out.payload["inequalities"] = checked;
    out.payload["disagreements"] = disagreements;
    out.pass = disagreements.empty();
    return out;
}

SuiteResult suite_cuts_single(const LiftedPair& pair) {
    SuiteResult out;
    std::size_t checked = 0;
    Json disagreements = Json::array();
    for (const Edge& f : pair.lifted_only())
        for (const Edge& bridge : one_elementary_cuts(pair.base(), f.u, f.v)) {
            ++checked;
            const VwCutContext ctx(pair, f, {bridge});
            const bool predicted = check_single_edge_cut_facet(ctx).facet;
            if (predicted != is_facet(pair, ctx.inequality()))
                disagreements.push_back(tag_to_string(InequalityTag(CutTag{f, {bridge}})));
        }
    out.payload["contexts"] = checked;
    out.payload["disagreements"] = disagreements;
    out.pass = disagreements.empty();
    return out;
}

SuiteResult suite_cuts_necessary(const LiftedPair& pair) {
    SuiteResult out;
    std::size_t checked = 0, condition_failures = 0;
    Json unsound = Json::array();
    for (const Edge& f : pair.lifted_only())
        for (const EdgeSet& cut : enumerate_vw_cuts(pair.base(), f.u, f.v)) {
            ++checked;
            const VwCutContext ctx(pair, f, cut);
            const auto report = check_cut_conditions(ctx);
            if (report.all_hold())
                continue;
            ++condition_failures;
            if (is_facet(pair, ctx.inequality())) // a violated condition must rule facets out
                unsound.push_back(tag_to_string(InequalityTag(CutTag{f, cut})));
        }
    out.payload["contexts"] = checked;
    out.payload["condition_failures"] = condition_failures;
    out.payload["unsound"] = unsound;
    out.pass = unsound.empty();
    return out;
}

SuiteResult suite_box(const LiftedPair& pair) {
    SuiteResult out;
    std::size_t checked = 0, inconclusive = 0;
    Json disagreements = Json::array();
    for (const Edge& e : pair.lifted().edges()) {
        ++checked;
        const bool upper_oracle = is_facet(pair, box_inequality(pair, e, true));
        if (check_box_upper(pair, e).facet != upper_oracle)
            disagreements.push_back(tag_to_string(InequalityTag(BoxTag{e, true})));
        const bool lower_oracle = is_facet(pair, box_inequality(pair, e, false));
        const auto lower = check_box_lower(pair, e);
        if (lower.verdict == FacetVerdict::inconclusive)
            ++inconclusive;
        else if ((lower.verdict == FacetVerdict::facet) != lower_oracle)
            disagreements.push_back(tag_to_string(InequalityTag(BoxTag{e, false})));
    }
    out.payload["edges"] = checked;
    out.payload["lower_inconclusive"] = inconclusive;
    out.payload["disagreements"] = disagreements;
    out.pass = disagreements.empty();
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"lifted multicuts: feasibility, polytope faces, facet predicates, solvers"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    std::uint64_t seed = 0;
    bool force = false;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "tsv"}));
    app.add_option("--seed", seed, "seed echoed in reports and used by generators");
    app.add_flag("--force", force, "bypass the enumeration guard");

    std::string pair_arg, labeling_arg, inequality_arg, instance_arg, spec_arg, out_path, suite_name;
    std::string method = "exact";
    std::vector<std::string> lift_edge_args;

    auto* cmd_check = app.add_subcommand("check", "test a labeling for lifted multicut feasibility")->fallthrough();
    cmd_check->add_option("pair", pair_arg, "pair file or fixture name")->required();
    cmd_check->add_option("labeling", labeling_arg, "01-string over the lifted edges")->required();

    auto* cmd_lift = app.add_subcommand("lift", "lift a base multicut to the lifted graph")->fallthrough();
    cmd_lift->add_option("pair", pair_arg, "pair file or fixture name")->required();
    cmd_lift->add_option("labeling", labeling_arg, "01-string over the base edges")->required();

    auto* cmd_enumerate = app.add_subcommand("enumerate", "list all lifted multicut labelings")->fallthrough();
    cmd_enumerate->add_option("pair", pair_arg, "pair file or fixture name")->required();

    auto* cmd_dim = app.add_subcommand("dim", "affine dimension of the lifted multicut hull")->fallthrough();
    cmd_dim->add_option("pair", pair_arg, "pair file or fixture name")->required();

    auto* cmd_facet =
        app.add_subcommand("facet-check", "facet test: theorem predicate versus exact oracle")->fallthrough();
    cmd_facet->add_option("pair", pair_arg, "pair file or fixture name")->required();
    cmd_facet->add_option("inequality", inequality_arg, "inequality JSON file")->required();

    auto* cmd_solve = app.add_subcommand("solve", "minimum cost lifted multicut")->fallthrough();
    cmd_solve->add_option("instance", instance_arg, "instance JSON file")->required();
    cmd_solve->add_option("--method", method, "exact | bnb | greedy")
        ->check(CLI::IsMember({"exact", "bnb", "greedy"}));

    auto* cmd_gen = app.add_subcommand(
        "gen", "generate a pair: path(n) cycle(n) grid(r,c) complete(n) random(n,p,lift,seed)")->fallthrough();
    cmd_gen->add_option("spec", spec_arg, "family spec")->required();
    cmd_gen->add_option("--lift-edge", lift_edge_args, "extra lifted edge 'u,v' (repeatable)");
    cmd_gen->add_option("-o,--output", out_path, "also write the bare pair JSON to this file");

    auto* cmd_verify = app.add_subcommand("verify", "run a predicate-versus-oracle suite")->fallthrough();
    cmd_verify->add_option("pair", pair_arg, "pair file or fixture name");
    cmd_verify->add_option("--gen", spec_arg, "generate the pair instead");
    cmd_verify->add_option("--suite", suite_name,
                           "dimension | lemma8 | cycles | cuts-single | cuts-necessary | box")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help and friends
        app.exit(e);
        return kExitInputError;
    }

    ReportContext report;
    for (int i = 1; i < argc; ++i)
        report.command += (i > 1 ? " " : "") + std::string(argv[i]);
    report.format = format;
    report.seed = seed;

    const std::size_t guard = node_guard();
    const auto guarded = [&](const LiftedPair& pair) {
        if (!force && pair.node_count() > guard) {
            std::cerr << "instance has " << pair.node_count() << " nodes, guard is " << guard
                      << " (use --force or LMC_MAX_NODES)\n";
            return false;
        }
        return true;
    };

    try {
        if (*cmd_check) {
            const LiftedPair pair = load_pair(pair_arg, report);
            report.absorb(labeling_arg);
            const Labeling x = labeling_from_string(labeling_arg);
            if (x.size() != pair.lifted_edge_count())
                throw ParseError("labeling has " + std::to_string(x.size()) + " bits, expected " +
                                 std::to_string(pair.lifted_edge_count()));
            const bool feasible = is_lifted_multicut(pair, x);
            Json payload;
            payload["labeling"] = labeling_arg;
            payload["feasible"] = feasible;
            payload["violated"] = feasible ? Json::array() : violated_system(pair, x);
            report.print(payload);
            return feasible ? 0 : kExitNegative;
        }
        if (*cmd_lift) {
            const LiftedPair pair = load_pair(pair_arg, report);
            report.absorb(labeling_arg);
            const Labeling base_lab = labeling_from_string(labeling_arg);
            if (base_lab.size() != pair.base().edge_count())
                throw ParseError("base labeling has " + std::to_string(base_lab.size()) +
                                 " bits, expected " + std::to_string(pair.base().edge_count()));
            EdgeSet m;
            for (std::size_t i = 0; i < base_lab.size(); ++i)
                if (base_lab[i])
                    m.push_back(pair.base().edges()[i]);
            EdgeSet up;
            try {
                up = lift(pair, m);
            } catch (const NotAMulticutError& err) {
                throw ParseError(std::string(err.what()) + " (base labeling is not a multicut)");
            }
            Labeling x(pair.lifted_edge_count(), 0);
            for (const Edge& e : up)
                x[pair.index_of(e)] = 1;
            Json payload;
            payload["base_labeling"] = labeling_arg;
            payload["lifted_labeling"] = labeling_to_string(x);
            report.print(payload);
            return 0;
        }
        if (*cmd_enumerate) {
            const LiftedPair pair = load_pair(pair_arg, report);
            if (!guarded(pair))
                return kExitGuard;
            Json labelings = Json::array();
            for (const Labeling& x : enumerate_lifted_multicuts(pair))
                labelings.push_back(labeling_to_string(x));
            Json payload;
            payload["count"] = labelings.size();
            payload["labelings"] = labelings;
            report.print(payload);
            return 0;
        }
        if (*cmd_dim) {
            const LiftedPair pair = load_pair(pair_arg, report);
            if (!guarded(pair))
                return kExitGuard;
            auto result = suite_dimension(pair);
            report.print(result.payload);
            return result.pass ? 0 : kExitNegative;
        }
        if (*cmd_facet) {
            const LiftedPair pair = load_pair(pair_arg, report);
            const std::string bytes = slurp(inequality_arg);
            report.absorb(bytes);
            const Json ij = Json::parse(bytes);
            const LinearInequality ineq = inequality_from_json(pair, ij);
            std::optional<InequalityTag> tag;
            if (ij.contains("tag"))
                tag = tag_from_string(pair, ij["tag"].get<std::string>());
            if (!guarded(pair))
                return kExitGuard;
            Json payload;
            payload["inequality"] = inequality_to_json(pair, ineq, tag);
            bool oracle = false;
            try {
                oracle = is_facet(pair, ineq);
            } catch (const InvalidInequalityError& err) {
                payload["error"] = "inequality is not valid";
                payload["violating_vertex"] = labeling_to_string(err.witness_labeling);
                report.print(payload);
                return kExitInputError;
            }
            payload["oracle_verdict"] = oracle ? "facet" : "not_facet";
            TheoremOutcome outcome;
            if (tag)
                outcome = theorem_check(pair, *tag);
            payload["theorem_verdict"] = outcome.verdict;
            payload["violated_conditions"] = outcome.violated;
            payload["witnesses"] = outcome.witnesses;
            report.print(payload);
            return oracle ? 0 : kExitNegative;
        }
        if (*cmd_solve) {
            const std::string bytes = slurp(instance_arg);
            report.absorb(bytes);
            const Instance inst = instance_from_json(Json::parse(bytes));
            Solution solution;
            if (method == "exact") {
                SolveOptions opts;
                opts.max_nodes = guard;
                opts.force = force;
                solution = solve_exact(inst.pair, inst.costs, opts);
            } else if (method == "bnb") {
                solution = solve_branch_and_bound(inst.pair, inst.costs);
            } else {
                solution = solve_greedy(inst.pair, inst.costs);
            }
            Json payload = solution_to_json(solution);
            payload["method"] = method;
            report.print(payload);
            return 0;
        }
        if (*cmd_gen) {
            report.absorb(spec_arg);
            EdgeSet lift_edges;
            for (const std::string& text : lift_edge_args)
                lift_edges.push_back(parse_edge_pair(text));
            std::uint64_t used_seed = seed;
            const LiftedPair pair = generate_pair(parse_gen_spec(spec_arg), lift_edges, used_seed);
            report.seed = used_seed;
            const Json pj = pair_to_json(pair);
            if (!out_path.empty()) {
                std::ofstream out(out_path);
                if (!out)
                    throw ParseError("cannot write '" + out_path + "'");
                out << pj.dump(2) << "\n";
            }
            report.print(pj);
            return 0;
        }
        if (*cmd_verify) {
            LiftedPair pair = [&] {
                if (!spec_arg.empty()) {
                    report.absorb(spec_arg);
                    std::uint64_t used_seed = seed;
                    LiftedPair generated = generate_pair(parse_gen_spec(spec_arg), {}, used_seed);
                    report.seed = used_seed;
                    return generated;
                }
                if (pair_arg.empty())
                    throw ParseError("verify needs a pair file, fixture name or --gen spec");
                return load_pair(pair_arg, report);
            }();
            if (!guarded(pair))
                return kExitGuard;
            if (suite_name == "lemma8" && pair.lifted_edge_count() > 20 && !force) {
                std::cerr << "lemma8 sweeps 2^" << pair.lifted_edge_count()
                          << " labelings; use --force to proceed\n";
                return kExitGuard;
            }
            SuiteResult result;
            if (suite_name == "dimension")
                result = suite_dimension(pair);
            else if (suite_name == "lemma8")
                result = suite_lemma8(pair);
            else if (suite_name == "cycles")
                result = suite_cycles(pair);
            else if (suite_name == "cuts-single")
                result = suite_cuts_single(pair);
            else if (suite_name == "cuts-necessary")
                result = suite_cuts_necessary(pair);
            else if (suite_name == "box")
                result = suite_box(pair);
            else
                throw ParseError("unknown suite '" + suite_name +
                                 "' (dimension, lemma8, cycles, cuts-single, cuts-necessary, box)");
            result.payload["suite"] = suite_name;
            result.payload["pass"] = result.pass;
            report.print(result.payload);
            return result.pass ? 0 : kExitNegative;
        }
    } catch (const ParseError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInputError;
    } catch (const Json::exception& err) {
        std::cerr << "error: invalid JSON: " << err.what() << "\n";
        return kExitInputError;
    } catch (const InstanceTooLargeError& err) {
        std::cerr << "error: " << err.what() << " (use --force or LMC_MAX_NODES)\n";
        return kExitGuard;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInputError;
    }
    return 0;
}

// Command-line front end: thin wrappers over the library, stable text
// output, and a scripting-friendly exit-code contract:
//   0 = holds / expected outcome, 1 = violation or counterexample found,
//   2 = input error, 3 = resource budget refusal.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tollwalk/axioms.hpp"
#include "tollwalk/catalog.hpp"
#include "tollwalk/efgame.hpp"
#include "tollwalk/errors.hpp"
#include "tollwalk/gadgets.hpp"
#include "tollwalk/recognizers.hpp"
#include "tollwalk/ternary.hpp"
#include "tollwalk/theorems.hpp"
#include "tollwalk/toll.hpp"

namespace {

using namespace tollwalk;

constexpr int kExitHolds = 0;
constexpr int kExitViolated = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Graph load_graph(const std::string& path, const std::string& format) {
    std::string text = read_file(path);
    if (format == "graph6") {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) return parse_graph6(line);
        throw parse_error(path + ": no graph6 line found");
    }
    return parse_edge_list(text);
}

// Catalog names plus the gadget builders: G_d:<d> and GP_d:<d>.
Graph named_graph(const std::string& name) {
    auto param = [&](const std::string& prefix) -> int {
        return std::stoi(name.substr(prefix.size()));
    };
    try {
        if (name.rfind("G_d:", 0) == 0) return build_G_d(param("G_d:"));
        if (name.rfind("GP_d:", 0) == 0) return build_G_d_prime(param("GP_d:"));
    } catch (const std::logic_error&) {
        throw parse_error("bad gadget parameter in " + name);
    }
    return catalog(name);
}

std::string join(const std::vector<int>& xs, const char* sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? sep : "") << xs[i];
    return os.str();
}

void machine_header(const std::string& command) {
    std::cout << "v=1\ncommand=" << command << "\n";
}

std::string witness_text(const AxiomVerdict& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.witness.size(); ++i)
        os << (i ? " " : "") << v.witness_names[i] << "=" << v.witness[i];
    return os.str();
}

// ---- interval ------------------------------------------------------------

int cmd_interval(const std::string& graph_path, const std::string& format,
                 int u, int v, bool verify, bool machine) {
    Graph g = load_graph(graph_path, format);
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
        throw contract_error("vertex out of range");
    VertexSet members = toll_interval(g, u, v);
    bool verified = true;
    if (verify && u != v && !g.has_edge(u, v))
        verified = members == toll_interval_oracle(g, u, v);
    if (machine) {
        machine_header("interval");
        std::cout << "u=" << u << "\nv=" << v << "\n"
                  << "members=" << join(members.to_vector(), ",") << "\n";
        if (verify) std::cout << "verified=" << (verified ? 1 : 0) << "\n";
    } else {
        std::cout << "T(" << u << "," << v << ") = {"
                  << join(members.to_vector(), " ") << "}\n";
        if (verify)
            std::cout << "oracle cross-check: " << (verified ? "ok" : "MISMATCH")
                      << "\n";
    }
    return verified ? kExitHolds : kExitViolated;
}

// ---- axioms --------------------------------------------------------------

int cmd_axioms(const std::string& graph_path, const std::string& transit_path,
               const std::string& format, std::vector<std::string> axiom_names,
               bool machine) {
    if (graph_path.empty() == transit_path.empty())
        throw parse_error("exactly one of --graph and --transit is required");
    TransitFunction r = graph_path.empty()
                            ? parse_transit_function(read_file(transit_path))
                            : toll_transit(load_graph(graph_path, format));

    std::vector<AxiomId> ids;
    if (axiom_names.empty()) {
        ids = all_axioms();
    } else {
        for (auto& name : axiom_names) {
            auto id = axiom_by_name(name);
            if (!id) throw parse_error("unknown axiom " + name);
            ids.push_back(*id);
        }
    }

    bool all_ok = true;
    if (machine) machine_header("axioms");
    for (const AxiomVerdict& v : check_axioms(r, ids)) {
        all_ok = all_ok && v.satisfied;
        if (machine) {
            std::cout << "axiom=" << axiom_name(v.axiom)
                      << " status=" << (v.satisfied ? "satisfied" : "violated");
            if (!v.satisfied) std::cout << " witness=" << join(v.witness, ",");
            std::cout << "\n";
        } else {
            std::cout << "(" << axiom_name(v.axiom) << ") "
                      << (v.satisfied ? "satisfied" : "violated");
            if (!v.satisfied) std::cout << " at " << witness_text(v);
            std::cout << "\n";
        }
    }
    return all_ok ? kExitHolds : kExitViolated;
}

// ---- classify ------------------------------------------------------------

int cmd_classify(const std::string& graph_path, const std::string& format,
                 bool machine) {
    Graph g = load_graph(graph_path, format);
    std::vector<ClassReport> reports = {
        is_chordal(g),      is_triangle_free(g),
        is_tree(g),         is_at_free(g),
        is_distance_hereditary(g), is_ptolemaic(g)};
    if (machine) machine_header("classify");
    for (const ClassReport& rep : reports) {
        if (machine) {
            std::cout << "class=" << rep.class_name
                      << " member=" << (rep.member ? 1 : 0);
            if (!rep.member)
                std::cout << " certificate_kind=" << rep.certificate_kind
                          << " certificate=" << join(rep.certificate, ",");
            std::cout << "\n";
        } else {
            std::cout << rep.class_name << ": " << (rep.member ? "yes" : "no");
            if (!rep.member)
                std::cout << " (" << rep.certificate_kind << ": "
                          << join(rep.certificate, " ") << ")";
            std::cout << "\n";
        }
    }
    return kExitHolds;
}

// ---- theorem -------------------------------------------------------------

int cmd_theorem(const std::string& id, int max_n, const std::string& corpus,
                int jobs, int trials, int max_trial_n, unsigned seed,
                bool machine) {
    if (!theorem_by_id(id)) throw parse_error("unknown theorem id " + id);
    if (trials > 0) {
        ConverseReport rep = probe_converse(id, trials, max_trial_n, seed);
        if (machine) {
            machine_header("theorem");
            std::cout << "id=" << rep.id << "\nmode=converse\ntrials=" << rep.trials
                      << "\nsatisfying=" << rep.satisfying
                      << "\ndisconnected=" << rep.disconnected_underlying
                      << "\nfalsifications=" << rep.falsifications.size() << "\n";
        } else {
            std::cout << rep.id << ": " << rep.trials << " random trials, "
                      << rep.satisfying << " satisfied the axiom set ("
                      << rep.disconnected_underlying
                      << " with a disconnected underlying graph), "
                      << rep.falsifications.size() << " falsifications\n";
            for (auto& f : rep.falsifications) std::cout << f << "\n";
        }
        return rep.falsifications.empty() ? kExitHolds : kExitViolated;
    }

    EquivalenceReport rep = sweep(id, max_n, jobs, corpus);
    if (machine) {
        machine_header("theorem");
        std::cout << "id=" << rep.id << "\nmode=sweep\ngraphs=" << rep.graphs_checked
                  << "\nhypothesis_count=" << rep.hypothesis_count
                  << "\ndisagreements=" << rep.disagreements.size() << "\n";
        for (auto& d : rep.disagreements)
            std::cout << "disagreement=" << d.graph6 << " left=" << d.left
                      << " right=" << d.right << "\n";
    } else {
        std::cout << rep.id << ": " << rep.graphs_checked << " graphs checked, "
                  << rep.disagreements.size() << " disagreements";
        if (rep.hypothesis_count)
            std::cout << " (" << rep.hypothesis_count << " met the hypothesis)";
        std::cout << "\n";
        for (auto& d : rep.disagreements)
            std::cout << "  " << d.graph6 << ": left=" << d.left
                      << " right=" << d.right << " " << d.witness << "\n";
    }
    return rep.disagreements.empty() ? kExitHolds : kExitViolated;
}

// ---- nondef --------------------------------------------------------------

int cmd_nondef_scant(int d, bool machine) {
    Graph g = build_G_d(d), gp = build_G_d_prime(d);
    ScantVerdict left = is_scant(w_structure(g));
    TernaryStructure wp = w_structure(gp);
    ScantVerdict right = is_scant(wp);
    // The exhibited non-scant pair: F(v'_2, x') = {v'_1, v'_2, x'}.
    std::vector<int> fset = wp.f(gadget_v(d, 2), gadget_x(d)).to_vector();
    std::vector<int> expected = {gadget_v(d, 1), gadget_v(d, 2), gadget_x(d)};
    bool reproduced = left.scant && !right.scant && fset == expected;

    if (machine) {
        machine_header("nondef-scant");
        std::cout << "d=" << d << "\nleft_scant=" << left.scant
                  << "\nright_scant=" << right.scant << "\nwitness_pair="
                  << gp.label(gadget_v(d, 2)) << "," << gp.label(gadget_x(d))
                  << "\nwitness_fset=" << join(fset, ",") << "\n"
                  << "first_offender=" << right.x << "," << right.y << "\n";
    } else {
        std::cout << "W(G_" << d << ") scant: " << (left.scant ? "yes" : "no")
                  << "\n";
        std::cout << "W(G'_" << d << ") scant: " << (right.scant ? "yes" : "no")
                  << "; witness pair (" << gp.label(gadget_v(d, 2)) << ","
                  << gp.label(gadget_x(d)) << ") with F-set {";
        for (std::size_t i = 0; i < fset.size(); ++i)
            std::cout << (i ? " " : "") << gp.label(fset[i]);
        std::cout << "}\n";
        if (!right.scant)
            std::cout << "first offending pair: (" << gp.label(right.x) << ","
                      << gp.label(right.y) << ")\n";
    }
    return reproduced ? kExitHolds : kExitViolated;
}

int cmd_nondef_ef_exact(int d, const std::string& left_name,
                        const std::string& right_name, int moves, bool machine) {
    TernaryStructure a, b;
    if (d > 0) {
        a = w_structure(build_G_d(d));
        b = w_structure(build_G_d_prime(d));
    } else if (!left_name.empty() && !right_name.empty()) {
        a = w_structure(named_graph(left_name));
        b = w_structure(named_graph(right_name));
    } else {
        throw parse_error("ef-exact needs --d or both --left and --right");
    }
    EFGameResult result = ef_solve(a, b, moves);
    bool dup = result.winner == EFWinner::duplicator;
    if (machine) {
        machine_header("nondef-ef-exact");
        std::cout << "moves=" << result.rounds
                  << "\nwinner=" << (dup ? "duplicator" : "spoiler") << "\n";
        for (std::size_t i = 0; i < result.trace.size(); ++i)
            std::cout << "round=" << i + 1
                      << " side=" << (result.trace[i].in_a ? "left" : "right")
                      << " spoiler=" << result.trace[i].spoiler
                      << " duplicator=" << result.trace[i].duplicator << "\n";
    } else {
        std::cout << moves << "-move game: "
                  << (dup ? "Duplicator" : "Spoiler") << " wins\n";
        for (std::size_t i = 0; i < result.trace.size(); ++i)
            std::cout << "round " << i + 1 << ": spoiler side="
                      << (result.trace[i].in_a ? "left" : "right")
                      << " v=" << result.trace[i].spoiler << "; duplicator v="
                      << result.trace[i].duplicator << "\n";
    }
    return dup ? kExitHolds : kExitViolated;
}

int cmd_nondef_ef_strategy(int d, int moves, unsigned seed, int runs,
                           bool machine) {
    StrategyContext ctx(d, moves);
    std::mt19937 rng(seed);
    int wins = 0;
    std::string first_loss;
    for (int i = 0; i < runs; ++i) {
        StrategyRunReport rep = ctx.play(ctx.random_script(rng));
        if (rep.duplicator_won)
            ++wins;
        else if (first_loss.empty())
            first_loss = "run " + std::to_string(i) + ": " + rep.detail;
    }
    if (machine) {
        machine_header("nondef-ef-strategy");
        std::cout << "d=" << d << "\nmoves=" << moves << "\nseed=" << seed
                  << "\nruns=" << runs << "\nwins=" << wins << "\n";
    } else {
        std::cout << "strategy play d=" << d << " moves=" << moves << ": " << wins
                  << "/" << runs << " duplicator wins\n";
        if (!first_loss.empty()) std::cout << first_loss << "\n";
    }
    return wins == runs ? kExitHolds : kExitViolated;
}

// ---- catalog -------------------------------------------------------------

int cmd_catalog(const std::string& name, const std::string& emit, bool machine) {
    if (name.empty()) {
        if (machine) machine_header("catalog");
        for (auto& n : catalog_names()) std::cout << n << "\n";
        return kExitHolds;
    }
    Graph g = named_graph(name);
    if (machine) {
        machine_header("catalog");
        std::cout << "name=" << name << "\nn=" << g.vertex_count()
                  << "\nm=" << g.edge_count() << "\n";
    }
    if (emit == "graph6")
        std::cout << to_graph6(g) << "\n";
    else
        std::cout << to_edge_list(g);
    return kExitHolds;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"toll walk transit function toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    bool machine = false;
    app.add_flag("--machine", machine, "line-delimited key/value output");

    std::string graph_path, transit_path, format = "edgelist";
    std::string corpus, theorem_id, cat_name, emit = "edgelist";
    std::string left_name, right_name;
    std::vector<std::string> axiom_names;
    int u = 0, v = 0, max_n = 6, jobs = 1, trials = 0, max_trial_n = 4;
    int d = 0, moves = 1, runs = 500;
    unsigned seed = 1;
    bool verify = false;

    auto* interval = app.add_subcommand("interval", "toll interval of a pair");
    interval->add_option("--graph", graph_path)->required();
    interval->add_option("--format", format)
        ->check(CLI::IsMember({"edgelist", "graph6"}));
    interval->add_option("u", u)->required();
    interval->add_option("v", v)->required();
    interval->add_flag("--verify", verify, "cross-check against the walk oracle");

    auto* axioms = app.add_subcommand("axioms", "check axioms on a transit function");
    axioms->add_option("--graph", graph_path);
    axioms->add_option("--transit", transit_path);
    axioms->add_option("--format", format)
        ->check(CLI::IsMember({"edgelist", "graph6"}));
    axioms->add_option("--axiom", axiom_names)->take_all();

    auto* classify = app.add_subcommand("classify", "graph class membership");
    classify->add_option("--graph", graph_path)->required();
    classify->add_option("--format", format)
        ->check(CLI::IsMember({"edgelist", "graph6"}));

    auto* theorem = app.add_subcommand("theorem", "sweep or probe a statement");
    theorem->add_option("--id", theorem_id)->required();
    theorem->add_option("--max-n", max_n);
    theorem->add_option("--corpus", corpus);
    theorem->add_option("--jobs", jobs);
    theorem->add_option("--trials", trials);
    theorem->add_option("--max-trial-n", max_trial_n);
    theorem->add_option("--seed", seed);

    auto* nondef = app.add_subcommand("nondef", "gadgets, scantness, EF games");
    nondef->require_subcommand(1);
    auto* scant = nondef->add_subcommand("scant", "scant verdicts for the gadget pair");
    scant->add_option("--d", d)->required();
    auto* ef_exact = nondef->add_subcommand("ef-exact", "exact game value");
    ef_exact->add_option("--d", d);
    ef_exact->add_option("--left", left_name);
    ef_exact->add_option("--right", right_name);
    ef_exact->add_option("--moves", moves);
    auto* ef_strategy = nondef->add_subcommand("ef-strategy", "seeded strategy soak");
    ef_strategy->add_option("--d", d)->required();
    ef_strategy->add_option("--moves", moves);
    ef_strategy->add_option("--seed", seed);
    ef_strategy->add_option("--runs", runs);

    auto* cat = app.add_subcommand("catalog", "emit a named graph");
    cat->add_option("name", cat_name);
    cat->add_option("--emit", emit)->check(CLI::IsMember({"edgelist", "graph6"}));

    // Let --machine appear after the subcommand as well.
    for (CLI::App* sub : {interval, axioms, classify, theorem, nondef, scant,
                          ef_exact, ef_strategy, cat})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*interval)
            return cmd_interval(graph_path, format, u, v, verify, machine);
        if (*axioms)
            return cmd_axioms(graph_path, transit_path, format, axiom_names, machine);
        if (*classify) return cmd_classify(graph_path, format, machine);
        if (*theorem)
            return cmd_theorem(theorem_id, max_n, corpus, jobs, trials,
                               max_trial_n, seed, machine);
        if (*nondef) {
            if (*scant) return cmd_nondef_scant(d, machine);
            if (*ef_exact)
                return cmd_nondef_ef_exact(d, left_name, right_name, moves, machine);
            if (*ef_strategy)
                return cmd_nondef_ef_strategy(d, moves, seed, runs, machine);
        }
        if (*cat) return cmd_catalog(cat_name, emit, machine);
    } catch (const budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const contract_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}

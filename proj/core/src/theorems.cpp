#include "tollwalk/theorems.hpp"

#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "tollwalk/enumerate.hpp"
#include "tollwalk/errors.hpp"
#include "tollwalk/recognizers.hpp"
#include "tollwalk/toll.hpp"

namespace tollwalk {

namespace {

using A = AxiomId;

bool class_member(const std::string& cls, const Graph& g) {
    if (cls == "chordal") return is_chordal(g).member;
    if (cls == "triangle-free") return is_triangle_free(g).member;
    if (cls == "tree") return is_tree(g).member;
    if (cls == "AT-free") return is_at_free(g).member;
    if (cls == "distance-hereditary") return is_distance_hereditary(g).member;
    if (cls == "Ptolemaic") return is_ptolemaic(g).member;
    throw contract_error("unknown graph class " + cls);
}

std::string describe_verdicts(const TransitFunction& r,
                              const std::vector<AxiomId>& ids) {
    for (AxiomId id : ids) {
        AxiomVerdict v = check_axiom(r, id);
        if (!v.satisfied) {
            std::ostringstream os;
            os << axiom_name(id) << " violated at (";
            for (std::size_t i = 0; i < v.witness.size(); ++i)
                os << (i ? "," : "") << v.witness_names[i] << "=" << v.witness[i];
            os << ")";
            return os.str();
        }
    }
    return "";
}

}  // namespace

const std::vector<TheoremBinding>& theorem_bindings() {
    static const std::vector<TheoremBinding> table = {
        // iff characterizations of single axioms / small sets
        {"thm-jc-chordal", TheoremKind::iff, {A::JC}, "chordal", {}},
        {"lem-tr-trianglefree", TheoremKind::iff, {A::tr}, "triangle-free", {}},
        {"thm-jc-tr-tree", TheoremKind::iff, {A::JC, A::tr}, "tree", {}},
        {"cor-b1p-atfree", TheoremKind::iff, {A::b1p}, "AT-free", {}},
        {"thm-pt-ptolemaic", TheoremKind::iff, {A::JC, A::pt}, "Ptolemaic", {}},
        {"thm-dh-dh1-dh", TheoremKind::iff, {A::dh, A::dh1}, "distance-hereditary", {}},
        // one-directional propositions
        {"prop-chordal-twc", TheoremKind::implication, {A::TWC}, "chordal", {}},
        {"prop-jc-implies-b2", TheoremKind::implication, {A::b2}, "", {A::JC}},
        {"prop-atfree-j4p-b2p", TheoremKind::implication, {A::J4p, A::b2p}, "AT-free", {}},
        {"prop-atfree-twa", TheoremKind::implication, {A::TWA}, "AT-free", {}},
        {"prop-dh-b2-twc", TheoremKind::implication, {A::b2, A::TWC}, "distance-hereditary", {}},
        // full characterization axiom lists
        {"char-chordal", TheoremKind::characterization,
         {A::b2, A::J2, A::JC, A::TW1, A::TW2, A::TWC}, "chordal", {}},
        {"char-tree", TheoremKind::characterization,
         {A::b2, A::tr, A::JC, A::TW1, A::TW2, A::TWC}, "tree", {}},
        {"char-atfree", TheoremKind::characterization,
         {A::b1p, A::b2p, A::J2, A::J4, A::J4p, A::TW1p, A::TWA}, "AT-free", {}},
        {"char-ptolemaic", TheoremKind::characterization,
         {A::b2, A::J2, A::JC, A::pt, A::TW1, A::TW2, A::TWC}, "Ptolemaic", {}},
        {"char-dh", TheoremKind::characterization,
         {A::b2, A::J2, A::J4, A::dh, A::dh1, A::TW1p, A::TWC}, "distance-hereditary", {}},
    };
    return table;
}

std::optional<TheoremBinding> theorem_by_id(const std::string& id) {
    for (auto& b : theorem_bindings())
        if (b.id == id) return b;
    return std::nullopt;
}

TheoremCheck verify_theorem(const std::string& id, const Graph& g) {
    auto binding = theorem_by_id(id);
    if (!binding) throw contract_error("unknown theorem id " + id);
    if (!is_connected(g)) throw contract_error("requires connected graph");
    TransitFunction t = toll_transit(g);

    TheoremCheck check{};
    if (binding->kind == TheoremKind::implication) {
        check.left = binding->graph_class.empty()
                         ? satisfies_all(t, binding->hyp_axioms)
                         : class_member(binding->graph_class, g);
        if (!check.left) {
            check.right = true;  // vacuous
            check.agree = true;
            return check;
        }
        std::string violation = describe_verdicts(t, binding->axioms);
        check.right = violation.empty();
        check.agree = check.right;
        check.witness = violation;
        return check;
    }

    check.left = satisfies_all(t, binding->axioms);
    check.right = class_member(binding->graph_class, g);
    check.agree = check.left == check.right;
    if (!check.agree)
        check.witness = check.left ? ("axioms hold but graph is not " +
                                      binding->graph_class)
                                   : describe_verdicts(t, binding->axioms);
    return check;
}

EquivalenceReport sweep(const std::string& id, int max_n, int jobs,
                        const std::string& corpus_path) {
    if (max_n < 2) throw contract_error("sweep requires max_n >= 2");
    std::vector<Graph> corpus = corpus_path.empty()
                                    ? enumerate_connected_up_to(max_n)
                                    : read_graph6_file(corpus_path, true);
    if (!corpus_path.empty()) {
        std::erase_if(corpus, [&](const Graph& g) {
            return g.vertex_count() > max_n;
        });
    }

    EquivalenceReport report;
    report.id = id;
    report.graphs_checked = int(corpus.size());

    std::vector<TheoremCheck> checks(corpus.size());
    if (jobs < 1) jobs = 1;
    if (jobs == 1) {
        for (std::size_t i = 0; i < corpus.size(); ++i)
            checks[i] = verify_theorem(id, corpus[i]);
    } else {
        std::vector<std::thread> workers;
        std::size_t chunk = (corpus.size() + jobs - 1) / jobs;
        for (int j = 0; j < jobs; ++j) {
            std::size_t lo = j * chunk, hi = std::min(corpus.size(), lo + chunk);
            if (lo >= hi) break;
            workers.emplace_back([&, lo, hi] {
                for (std::size_t i = lo; i < hi; ++i)
                    checks[i] = verify_theorem(id, corpus[i]);
            });
        }
        for (auto& w : workers) w.join();
    }

    auto binding = theorem_by_id(id);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        if (binding->kind == TheoremKind::implication && checks[i].left)
            ++report.hypothesis_count;
        if (!checks[i].agree)
            report.disagreements.push_back({to_graph6(corpus[i]), checks[i].left,
                                            checks[i].right, checks[i].witness});
    }
    return report;
}

ConverseReport probe_converse(const std::string& char_id, int trials, int max_n,
                              std::uint32_t seed) {
    auto binding = theorem_by_id(char_id);
    if (!binding || binding->kind != TheoremKind::characterization)
        throw contract_error("probe_converse requires a char-* id");
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pick_n(2, std::max(2, max_n));
    std::uniform_int_distribution<int> pick_p(1, 5);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    ConverseReport report;
    report.id = char_id;
    report.trials = trials;
    for (int t = 0; t < trials; ++t) {
        int n = pick_n(rng);
        double p = pick_p(rng) / 10.0;
        std::map<std::pair<int, int>, std::vector<int>> entries;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                std::vector<int> members{a, b};
                for (int c = 0; c < n; ++c)
                    if (c != a && c != b && unit(rng) < p) members.push_back(c);
                entries[{a, b}] = members;
            }
        TransitFunction r = make_transit_function(n, entries, false);
        if (!satisfies_all(r, binding->axioms)) continue;
        ++report.satisfying;
        Graph gr = underlying_graph(r);
        if (!is_connected(gr)) {
            ++report.disconnected_underlying;
            continue;
        }
        bool in_class = class_member(binding->graph_class, gr);
        bool equals_t = in_class && (toll_transit(gr) == r);
        if (!in_class || !equals_t) {
            std::ostringstream os;
            os << "trial " << t << (in_class ? ": R != T on G_R\n" : ": G_R not in class\n")
               << to_transit_text(r);
            report.falsifications.push_back(os.str());
        }
    }
    return report;
}

PathLemmaReport induced_path_lemma_check(const Graph& g, const std::string& variant) {
    std::vector<AxiomId> hyp;
    if (variant == "easy1") hyp = {A::J2, A::JC, A::TW2};
    else if (variant == "easy") hyp = {A::J2, A::J4, A::J4p, A::TW1p};
    else if (variant == "easydh") hyp = {A::J2, A::J4, A::dh1, A::TW1p};
    else throw contract_error("unknown lemma variant " + variant);

    if (!is_connected(g)) throw contract_error("requires connected graph");
    TransitFunction t = toll_transit(g);
    PathLemmaReport report;
    report.hypothesis_holds = satisfies_all(t, hyp);
    if (!report.hypothesis_holds) {
        report.detail = "hypothesis axioms not satisfied; lemma not evaluated";
        return report;
    }

    // Enumerate induced paths by depth-first extension; for each with
    // endpoints u,v check V(P) within T(u,v), and that every neighbor z of a
    // deep inner vertex (one not adjacent to either endpoint) lies in
    // T(u,v).
    int n = g.vertex_count();
    report.conclusion_holds = true;
    std::vector<int> path;
    auto check_path = [&]() -> bool {
        int u = path.front(), v = path.back();
        const VertexSet& interval = t.at(u, v);
        for (int w : path)
            if (!interval.contains(w)) return false;
        for (std::size_t i = 1; i + 1 < path.size(); ++i) {
            if (g.has_edge(path[i], u) || g.has_edge(path[i], v)) continue;
            VertexSet z = g.neighbors(path[i]);
            bool ok = true;
            z.for_each([&](int zz) {
                if (!interval.contains(zz)) ok = false;
            });
            if (!ok) return false;
        }
        return true;
    };
    std::function<bool(void)> extend = [&]() -> bool {
        if (path.size() >= 2 && !check_path()) {
            std::ostringstream os;
            os << "induced path";
            for (int w : path) os << ' ' << w;
            os << " escapes its toll interval";
            report.detail = os.str();
            return false;
        }
        int last = path.back();
        VertexSet candidates = g.neighbors(last);
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            candidates -= g.neighbors(path[i]);
            candidates.erase(path[i]);
        }
        bool ok = true;
        candidates.for_each([&](int w) {
            if (!ok) return;
            path.push_back(w);
            ok = extend();
            path.pop_back();
        });
        return ok;
    };
    for (int u = 0; u < n && report.conclusion_holds; ++u) {
        path.assign(1, u);
        if (!extend()) report.conclusion_holds = false;
    }
    return report;
}

}  // namespace tollwalk

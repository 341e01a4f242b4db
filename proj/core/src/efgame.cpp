#include "tollwalk/efgame.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>

#include "tollwalk/errors.hpp"

namespace tollwalk {

double ef_state_budget() {
    if (const char* env = std::getenv("TOLLWALK_BUDGET")) {
        char* end = nullptr;
        double v = std::strtod(env, &end);
        if (end != env && v > 0) return v;
    }
    return 1e8;
}

namespace {

struct Solver {
    const TernaryStructure& a;
    const TernaryStructure& b;
    int total_rounds;
    double budget;
    double visited = 0;
    std::map<std::vector<int>, bool> memo;
    PartialMap map;

    std::vector<int> key() const {
        std::vector<int> k;
        k.reserve(2 * map.pairs.size() + 1);
        for (auto& [x, y] : map.pairs) k.push_back(x);
        k.push_back(-1);
        for (auto& [x, y] : map.pairs) k.push_back(y);
        return k;
    }

    // Minimax value with the current partial map: true iff the duplicator
    // can survive the remaining rounds.
    bool dup_wins(int rounds_left) {
        if (++visited > budget)
            throw budget_error("ef_solve exceeded its state budget mid-search",
                               visited, budget);
        if (!check_partial_isomorphism(map, a, b)) return false;
        if (rounds_left == 0) return true;
        auto k = key();
        if (auto it = memo.find(k); it != memo.end()) return it->second;

        bool result = true;
        for (int side = 0; side < 2 && result; ++side) {
            const TernaryStructure& from = side == 0 ? a : b;
            const TernaryStructure& to = side == 0 ? b : a;
            for (int s = 0; s < from.universe_size() && result; ++s) {
                bool answered = false;
                for (int r = 0; r < to.universe_size() && !answered; ++r) {
                    map.pairs.push_back(side == 0 ? std::pair{s, r}
                                                  : std::pair{r, s});
                    answered = dup_wins(rounds_left - 1);
                    map.pairs.pop_back();
                }
                if (!answered) result = false;  // s is a winning spoiler move
            }
        }
        memo[k] = result;
        return result;
    }

    // Rebuilds a principal line after the value is known.
    void principal_line(int rounds_left, bool dup_value, std::vector<EFMove>& out) {
        if (rounds_left == 0) return;
        for (int side = 0; side < 2; ++side) {
            const TernaryStructure& from = side == 0 ? a : b;
            const TernaryStructure& to = side == 0 ? b : a;
            for (int s = 0; s < from.universe_size(); ++s) {
                int winning_reply = -1, first_reply = -1;
                for (int r = 0; r < to.universe_size(); ++r) {
                    map.pairs.push_back(side == 0 ? std::pair{s, r}
                                                  : std::pair{r, s});
                    bool child = dup_wins(rounds_left - 1);
                    map.pairs.pop_back();
                    if (first_reply < 0) first_reply = r;
                    if (child) {
                        winning_reply = r;
                        break;
                    }
                }
                bool spoiler_wins_here = winning_reply < 0;
                if (dup_value && !spoiler_wins_here) {
                    // Any first move works for the line; show this one.
                    out.push_back({side == 0, s, winning_reply});
                    map.pairs.push_back(side == 0 ? std::pair{s, winning_reply}
                                                  : std::pair{winning_reply, s});
                    principal_line(rounds_left - 1, true, out);
                    map.pairs.pop_back();
                    return;
                }
                if (!dup_value && spoiler_wins_here) {
                    out.push_back({side == 0, s, first_reply});
                    map.pairs.push_back(side == 0 ? std::pair{s, first_reply}
                                                  : std::pair{first_reply, s});
                    principal_line(rounds_left - 1, false, out);
                    map.pairs.pop_back();
                    return;
                }
            }
        }
    }
};

}  // namespace

EFGameResult ef_solve(const TernaryStructure& a, const TernaryStructure& b,
                      int rounds) {
    if (rounds < 1) throw contract_error("ef_solve needs at least one round");
    double budget = ef_state_budget();
    double per_round = double(a.universe_size() + b.universe_size()) *
                       std::max(a.universe_size(), b.universe_size());
    double estimate = std::pow(per_round, rounds);
    if (estimate > budget) {
        std::ostringstream os;
        os << "ef_solve refused: estimated state count " << estimate
           << " exceeds budget " << budget << "; use the strategy mode instead";
        throw budget_error(os.str(), estimate, budget);
    }

    Solver solver{a, b, rounds, budget};
    bool dup = solver.dup_wins(rounds);
    EFGameResult result;
    result.rounds = rounds;
    result.winner = dup ? EFWinner::duplicator : EFWinner::spoiler;
    solver.principal_line(rounds, dup, result.trace);
    return result;
}

// ---- strategy play -------------------------------------------------------

StrategyContext::StrategyContext(int d, int n) : d_(d), n_(n) {
    if (n < 1) throw contract_error("strategy play needs at least one round");
    if (d <= (1 << (n + 1)))
        throw contract_error("strategy play requires d > 2^(n+1)");
    a_ = build_G_d(d);
    b_ = build_G_d_prime(d);
    da_ = distances(a_);
    db_ = distances(b_);
    wa_ = w_structure(a_);
    wb_ = w_structure(b_);
    anchors_ = {{gadget_u(d, 1), gadget_u(d, 1)},
                {gadget_v(d, 1), gadget_v(d, 1)},
                {gadget_x(d), gadget_x(d)},
                {gadget_u(d, 2 * d + 1), gadget_u(d, 2 * d + 1)},
                {gadget_v(d, 2 * d + 1), gadget_v(d, 2 * d + 1)}};
}

SpoilerScript StrategyContext::random_script(std::mt19937& rng) const {
    std::uniform_int_distribution<int> side(0, 1);
    std::uniform_int_distribution<int> vertex(0, 8 * d_);
    SpoilerScript script;
    for (int i = 0; i < n_; ++i)
        script.push_back({side(rng) == 0, vertex(rng)});
    return script;
}

StrategyRunReport StrategyContext::play(const SpoilerScript& script) const {
    if (int(script.size()) != n_)
        throw contract_error("spoiler script length must equal the round count");
    int total = 8 * d_ + 1;

    // Layer bounds [lo, hi) of a vertex; replies stay inside them.
    auto layer = [&](int v) -> std::pair<int, int> {
        if (v < 4 * d_) return {0, 4 * d_};
        if (v < 8 * d_) return {4 * d_, 8 * d_};
        return {8 * d_, 8 * d_ + 1};
    };

    StrategyRunReport report;
    report.duplicator_won = true;
    std::vector<std::pair<int, int>> played;  // (G_d vertex, G'_d vertex)

    for (int k = 1; k <= n_; ++k) {
        auto [in_a, s] = script[k - 1];
        if (s < 0 || s >= total) throw contract_error("spoiler vertex out of range");
        int t = 1 << (n_ - k);

        StrategyRound round;
        round.in_a = in_a;
        round.spoiler = s;

        // Repeat of an earlier move is answered identically.
        for (auto& [pa, pb] : played)
            if ((in_a ? pa : pb) == s) round.duplicator = in_a ? pb : pa;

        if (round.duplicator < 0) {
            const auto& ds = in_a ? da_ : db_;  // spoiler-side distances
            const auto& dr = in_a ? db_ : da_;  // reply-side distances
            auto [lo, hi] = layer(s);
            for (int b = lo; b < hi && round.duplicator < 0; ++b) {
                bool ok = true;
                auto check = [&](int p, int q) {
                    int dsp = ds[s][in_a ? p : q];
                    int drq = dr[b][in_a ? q : p];
                    if (dsp <= t ? drq != dsp : drq <= t) ok = false;
                };
                for (auto& [p, q] : anchors_) check(p, q);
                for (auto& [p, q] : played)
                    if (ok) check(p, q);
                if (ok) round.duplicator = b;
            }
        }

        if (round.duplicator < 0) {
            std::ostringstream os;
            os << "round " << k << ": no qualifying reply for spoiler move "
               << (in_a ? "left " : "right ") << s;
            report.detail = os.str();
            report.duplicator_won = false;
            report.rounds.push_back(round);
            return report;
        }

        played.push_back(in_a ? std::pair{s, round.duplicator}
                              : std::pair{round.duplicator, s});

        round.conditions_ok = true;
        for (std::size_t i = 0; i < played.size() && round.conditions_ok; ++i)
            for (std::size_t j = i + 1; j < played.size(); ++j) {
                int dstar = da_[played[i].first][played[j].first];
                int dprime = db_[played[i].second][played[j].second];
                if (dstar <= t ? dprime != dstar : dprime <= t) {
                    round.conditions_ok = false;
                    break;
                }
            }

        PartialMap m;
        m.pairs = played;
        round.partial_iso_ok = check_partial_isomorphism(m, wa_, wb_);

        report.rounds.push_back(round);
        if (!round.conditions_ok || !round.partial_iso_ok) {
            std::ostringstream os;
            os << "round " << k << ": "
               << (round.conditions_ok ? "partial isomorphism"
                                       : "distance conditions")
               << " violated";
            report.detail = os.str();
            report.duplicator_won = false;
            return report;
        }
    }
    return report;
}

StrategyRunReport duplicator_strategy_play(int d, int n, const SpoilerScript& script) {
    return StrategyContext(d, n).play(script);
}

}  // namespace tollwalk

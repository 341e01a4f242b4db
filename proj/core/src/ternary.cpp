#include "tollwalk/ternary.hpp"

#include <sstream>

#include "tollwalk/errors.hpp"
#include "tollwalk/toll.hpp"

namespace tollwalk {

TernaryStructure::TernaryStructure(int n) : n_(n) {
    if (n < 1) throw contract_error("ternary structure needs a non-empty universe");
    rows_.assign(std::size_t(n) * n, VertexSet(n));
}

void TernaryStructure::set(int x, int y, int z) {
    if (x < 0 || x >= n_ || y < 0 || y >= n_ || z < 0 || z >= n_)
        throw contract_error("ternary triple out of range");
    rows_[std::size_t(x) * n_ + z].insert(y);
}

void TernaryStructure::unset(int x, int y, int z) {
    if (x < 0 || x >= n_ || y < 0 || y >= n_ || z < 0 || z >= n_)
        throw contract_error("ternary triple out of range");
    rows_[std::size_t(x) * n_ + z].erase(y);
}

const VertexSet& TernaryStructure::f(int x, int z) const {
    if (x < 0 || x >= n_ || z < 0 || z >= n_)
        throw contract_error("ternary pair out of range");
    return rows_[std::size_t(x) * n_ + z];
}

void TernaryStructure::attach_companion(Graph g) {
    if (g.vertex_count() != n_)
        throw contract_error("companion graph order mismatch");
    companion_ = std::move(g);
}

Graph TernaryStructure::underlying() const {
    Graph g(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v) {
            VertexSet both = f(u, v) | f(v, u);
            if (both == VertexSet::of(n_, {u, v})) g.add_edge(u, v);
        }
    return g;
}

void assert_ternary_conditions(const TernaryStructure& s) {
    int n = s.universe_size();
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (!s.holds(u, u, v)) {
                std::ostringstream os;
                os << "condition (i) fails: not D(" << u << "," << u << "," << v << ")";
                throw contract_error(os.str());
            }
            for (int x = 0; x < n; ++x) {
                if (s.holds(u, x, v) && !s.holds(v, x, u)) {
                    std::ostringstream os;
                    os << "condition (ii) fails at D(" << u << "," << x << "," << v << ")";
                    throw contract_error(os.str());
                }
                if (u == v && x != u && s.holds(u, x, u)) {
                    std::ostringstream os;
                    os << "condition (iii) fails at D(" << u << "," << x << "," << u << ")";
                    throw contract_error(os.str());
                }
            }
        }
}

TernaryStructure w_structure(const Graph& g) {
    TernaryStructure s = ternary_from_transit(toll_transit(g));
    s.attach_companion(g);
    assert_ternary_conditions(s);
    return s;
}

TernaryStructure ternary_from_transit(const TransitFunction& r) {
    int n = r.universe_size();
    TernaryStructure s(n);
    for (int x = 0; x < n; ++x)
        for (int z = 0; z < n; ++z)
            r.at(x, z).for_each([&](int y) { s.set(x, y, z); });
    return s;
}

TernaryStructure scant_structure(const Graph& g) {
    int n = g.vertex_count();
    TernaryStructure s(n);
    VertexSet full(n);
    for (int v = 0; v < n; ++v) full.insert(v);
    for (int x = 0; x < n; ++x)
        for (int z = 0; z < n; ++z) {
            if (x == z) {
                s.set(x, x, z);
            } else if (g.has_edge(x, z)) {
                s.set(x, x, z);
                s.set(x, z, z);
            } else {
                full.for_each([&](int y) { s.set(x, y, z); });
            }
        }
    s.attach_companion(g);
    return s;
}

ScantVerdict is_scant(const TernaryStructure& s) {
    assert_ternary_conditions(s);
    int n = s.universe_size();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            const VertexSet& fs = s.f(x, y);
            if (fs == VertexSet::of(n, {x, y})) continue;
            if (fs.count() == n) continue;
            return {false, x, y, fs.to_vector()};
        }
    return {true, -1, -1, {}};
}

bool check_partial_isomorphism(const PartialMap& m, const TernaryStructure& a,
                               const TernaryStructure& b) {
    std::size_t k = m.pairs.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            auto [ai, bi] = m.pairs[i];
            auto [aj, bj] = m.pairs[j];
            if ((ai == aj) != (bi == bj)) return false;  // ill-defined / not injective
        }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t l = 0; l < k; ++l) {
                bool da = a.holds(m.pairs[i].first, m.pairs[j].first, m.pairs[l].first);
                bool db = b.holds(m.pairs[i].second, m.pairs[j].second, m.pairs[l].second);
                if (da != db) return false;
            }
    return true;
}

}  // namespace tollwalk

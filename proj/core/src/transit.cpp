#include "tollwalk/transit.hpp"

#include <algorithm>
#include <sstream>

#include "tollwalk/errors.hpp"

namespace tollwalk {

int TransitFunction::index(int a, int b) const {
    if (a < 0 || a >= n_ || b < 0 || b >= n_)
        throw contract_error("transit function: vertex out of range");
    if (a > b) std::swap(a, b);
    // Row-major upper triangle including the diagonal.
    return a * n_ - a * (a - 1) / 2 + (b - a);
}

TransitFunction make_transit_function(
    int n, const std::map<std::pair<int, int>, std::vector<int>>& entries,
    bool default_pairs) {
    if (n < 1) throw contract_error("transit function: universe must be nonempty");
    TransitFunction r;
    r.n_ = n;
    r.table_.assign(n * (n + 1) / 2, VertexSet(n));
    std::vector<bool> listed(r.table_.size(), false);
    for (int a = 0; a < n; ++a) r.table_[r.index(a, a)].insert(a);
    for (auto& [key, members] : entries) {
        auto [a, b] = key;
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw contract_error("transit function: vertex out of range in entry");
        VertexSet s(n);
        for (int c : members) {
            if (c < 0 || c >= n)
                throw contract_error("transit function: member out of range");
            s.insert(c);
        }
        std::ostringstream pair_name;
        pair_name << "(" << a << "," << b << ")";
        if (a == b) {
            if (s != VertexSet::of(n, {a}))
                throw contract_error("transit function: (t3) violated at " + pair_name.str());
            continue;
        }
        if (!s.contains(a) || !s.contains(b))
            throw contract_error("transit function: (t1) violated at " + pair_name.str());
        int idx = r.index(a, b);
        if (listed[idx] && r.table_[idx] != s)
            throw contract_error("transit function: conflicting entries for " + pair_name.str());
        r.table_[idx] = s;
        listed[idx] = true;
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            int idx = r.index(a, b);
            if (!listed[idx]) {
                if (!default_pairs) {
                    std::ostringstream os;
                    os << "transit function: pair (" << a << "," << b << ") missing";
                    throw contract_error(os.str());
                }
                r.table_[idx] = VertexSet::of(n, {a, b});
            }
        }
    return r;
}

Graph underlying_graph(const TransitFunction& r) {
    int n = r.universe_size();
    Graph g(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (r.is_trivial_pair(a, b)) g.add_edge(a, b);
    return g;
}

TransitFunction parse_transit_function(std::istream& in) {
    std::string line;
    int line_no = 0;
    int n = -1;
    std::map<std::pair<int, int>, std::vector<int>> entries;
    auto fail = [&](const std::string& what) -> void {
        std::ostringstream os;
        os << "line " << line_no << ": " << what;
        throw parse_error(os.str());
    };
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        if (n < 0) {
            std::string extra;
            if (!(fields >> n) || n < 1 || (fields >> extra))
                fail("expected universe size");
            continue;
        }
        int a, b;
        std::string colon;
        if (!(fields >> a >> b >> colon) || colon != ":")
            fail("expected \"a b : members\"");
        std::vector<int> members;
        int c;
        while (fields >> c) members.push_back(c);
        if (!fields.eof()) fail("non-integer member");
        auto key = std::minmax(a, b);
        if (entries.count({key.first, key.second}))
            fail("duplicate pair");
        entries[{key.first, key.second}] = std::move(members);
    }
    if (n < 0) throw parse_error("missing universe size header");
    try {
        return make_transit_function(n, entries, /*default_pairs=*/true);
    } catch (const contract_error& e) {
        throw parse_error(e.what());
    }
}

TransitFunction parse_transit_function(const std::string& text) {
    std::istringstream in(text);
    return parse_transit_function(in);
}

std::string to_transit_text(const TransitFunction& r) {
    int n = r.universe_size();
    std::ostringstream os;
    os << n << '\n';
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (r.is_trivial_pair(a, b)) continue;
            os << a << ' ' << b << " :";
            r.at(a, b).for_each([&](int c) { os << ' ' << c; });
            os << '\n';
        }
    return os.str();
}

}  // namespace tollwalk

#include "tollwalk/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "tollwalk/errors.hpp"

namespace tollwalk {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw contract_error("graph order must be nonnegative");
    adj_.assign(n, VertexSet(n));
}

void Graph::add_edge(int a, int b) {
    if (a < 0 || a >= n_ || b < 0 || b >= n_)
        throw contract_error("edge endpoint out of range");
    if (a == b) throw contract_error("self-loops are not allowed");
    if (adj_[a].contains(b)) throw contract_error("duplicate edge");
    adj_[a].insert(b);
    adj_[b].insert(a);
    ++m_;
}

const VertexSet& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw contract_error("vertex out of range");
    return adj_[v];
}

VertexSet Graph::closed_neighborhood(int v) const {
    VertexSet s = neighbors(v);
    s.insert(v);
    return s;
}

int Graph::degree(int v) const { return neighbors(v).count(); }

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int a = 0; a < n_; ++a)
        adj_[a].for_each([&](int b) {
            if (a < b) out.emplace_back(a, b);
        });
    return out;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

void Graph::set_label(int v, std::string label) {
    if (v < 0 || v >= n_) throw contract_error("vertex out of range");
    if (labels_.empty()) labels_.assign(n_, "");
    labels_[v] = std::move(label);
}

const std::string& Graph::label(int v) const {
    static const std::string empty;
    if (labels_.empty()) return empty;
    return labels_.at(v);
}

std::optional<int> Graph::vertex_by_label(const std::string& label) const {
    for (int v = 0; v < int(labels_.size()); ++v)
        if (labels_[v] == label) return v;
    return std::nullopt;
}

VertexSet reachable_from(const Graph& g, int start, const VertexSet& forbidden) {
    if (forbidden.contains(start))
        throw contract_error("reachable_from: start vertex is forbidden");
    VertexSet seen(g.vertex_count());
    seen.insert(start);
    std::deque<int> queue{start};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        VertexSet next = g.neighbors(v);
        next -= forbidden;
        next -= seen;
        next.for_each([&](int w) {
            seen.insert(w);
            queue.push_back(w);
        });
    }
    return seen;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    return reachable_from(g, 0, VertexSet(g.vertex_count())).count() == g.vertex_count();
}

bool separates(const Graph& g, const VertexSet& s, int a, int b) {
    if (a == b) throw contract_error("separates: endpoints must differ");
    if (s.contains(a) || s.contains(b))
        throw contract_error("separates: endpoint inside separator");
    return !reachable_from(g, a, s).contains(b);
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(g.vertex_count(), kInfiniteDistance);
    dist[source] = 0;
    std::deque<int> queue{source};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        g.neighbors(v).for_each([&](int w) {
            if (dist[w] == kInfiniteDistance) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        });
    }
    return dist;
}

std::vector<std::vector<int>> distances(const Graph& g) {
    std::vector<std::vector<int>> d(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) d[v] = bfs_distances(g, v);
    return d;
}

namespace {

bool induced_witness_ok(const Graph& host, const Graph& pattern,
                        const std::vector<int>& image) {
    int p = pattern.vertex_count();
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j)
            if (pattern.has_edge(i, j) != host.has_edge(image[i], image[j]))
                return false;
    return true;
}

bool extend_induced(const Graph& host, const Graph& pattern,
                    std::vector<int>& image, std::vector<bool>& used) {
    int p = pattern.vertex_count();
    int i = int(image.size());
    if (i == p) return true;
    for (int v = 0; v < host.vertex_count(); ++v) {
        if (used[v] || host.degree(v) < pattern.degree(i)) continue;
        bool ok = true;
        for (int j = 0; j < i && ok; ++j)
            if (pattern.has_edge(j, i) != host.has_edge(image[j], v)) ok = false;
        if (!ok) continue;
        image.push_back(v);
        used[v] = true;
        if (extend_induced(host, pattern, image, used)) return true;
        image.pop_back();
        used[v] = false;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> contains_induced(const Graph& host, const Graph& pattern) {
    if (pattern.vertex_count() == 0)
        throw contract_error("contains_induced: empty pattern");
    if (pattern.vertex_count() > host.vertex_count()) return std::nullopt;
    std::vector<int> image;
    std::vector<bool> used(host.vertex_count(), false);
    if (!extend_induced(host, pattern, image, used)) return std::nullopt;
    // The backtracker already guarantees this; keep it as a hard check so a
    // future pruning bug cannot return a bogus witness.
    if (!induced_witness_ok(host, pattern, image))
        throw contract_error("contains_induced: internal witness check failed");
    return image;
}

// ---- edge-list text -----------------------------------------------------

namespace {

bool is_blank(const std::string& s) {
    return s.find_first_not_of(" \t\r") == std::string::npos;
}

[[noreturn]] void fail_line(int line_no, const std::string& what) {
    std::ostringstream os;
    os << "line " << line_no << ": " << what;
    throw parse_error(os.str());
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int line_no = 0;
    long n = -1, m = -1;
    Graph g;
    long seen_edges = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank(line) || line[line.find_first_not_of(" \t")] == '#') continue;
        std::istringstream fields(line);
        long a, b;
        std::string trailing;
        if (!(fields >> a >> b) || (fields >> trailing))
            fail_line(line_no, "expected two integers");
        if (n < 0) {
            n = a;
            m = b;
            if (n < 0 || m < 0) fail_line(line_no, "negative header value");
            g = Graph(int(n));
            continue;
        }
        if (a < 0 || b >= n) fail_line(line_no, "vertex id out of range");
        if (a >= b) fail_line(line_no, "edges must satisfy i < j");
        if (g.has_edge(int(a), int(b))) fail_line(line_no, "duplicate edge");
        g.add_edge(int(a), int(b));
        ++seen_edges;
    }
    if (n < 0) throw parse_error("missing \"n m\" header");
    if (seen_edges != m) {
        std::ostringstream os;
        os << "header declares " << m << " edges but " << seen_edges << " were given";
        throw parse_error(os.str());
    }
    return g;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [a, b] : g.edges()) os << a << ' ' << b << '\n';
    return os.str();
}

// ---- graph6 -------------------------------------------------------------

Graph parse_graph6(const std::string& line) {
    std::string s = line;
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) throw parse_error("graph6: empty input");
    int n = s[0] - 63;
    if (n < 0 || n > 62)
        throw parse_error("graph6: only the short form (n <= 62) is supported");
    std::size_t need = std::size_t(n) * (n - 1) / 2;
    std::size_t groups = (need + 5) / 6;
    if (s.size() != 1 + groups)
        throw parse_error("graph6: wrong length for declared order");
    Graph g(n);
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int c = s[1 + bit / 6] - 63;
            if (c < 0 || c > 63) throw parse_error("graph6: byte out of range");
            if ((c >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    // Padding bits must be zero.
    for (; bit < groups * 6; ++bit) {
        int c = s[1 + bit / 6] - 63;
        if ((c >> (5 - bit % 6)) & 1) throw parse_error("graph6: nonzero padding");
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    int n = g.vertex_count();
    if (n > 62) throw contract_error("graph6: order exceeds short-form limit of 62");
    std::string out(1, char(n + 63));
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(char(acc + 63));
                acc = nbits = 0;
            }
        }
    if (nbits) out.push_back(char((acc << (6 - nbits)) + 63));
    return out;
}

}  // namespace tollwalk

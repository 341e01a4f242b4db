#include "tollwalk/enumerate.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>

#include "tollwalk/errors.hpp"

namespace tollwalk {

namespace {

// Pair index of edge (i,j), i<j, in lexicographic order for a fixed n.
int pair_index(int n, int i, int j) {
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

bool mask_connected(int n, std::uint32_t mask) {
    std::uint32_t adj[8] = {0};
    for (int i = 0, e = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++e)
            if (mask >> e & 1) {
                adj[i] |= 1u << j;
                adj[j] |= 1u << i;
            }
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint32_t next = 0;
        for (int v = 0; v < n; ++v)
            if (frontier >> v & 1) next |= adj[v];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (1u << n) - 1;
}

// True when no permutation maps the mask to a lexicographically smaller one
// (bit 0 = pair (0,1) treated as most significant).
bool is_canonical(int n, std::uint32_t mask,
                  const std::vector<std::vector<int>>& perms) {
    int pairs = n * (n - 1) / 2;
    // Pair (i,j) per index e, precomputed once per call.
    std::vector<std::pair<int, int>> pair_of(pairs);
    for (int i = 0, e = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++e) pair_of[e] = {i, j};
    for (const auto& p : perms) {
        for (int e = 0; e < pairs; ++e) {
            auto [i, j] = pair_of[e];
            int a = p[i], b = p[j];
            if (a > b) std::swap(a, b);
            int orig = mask >> e & 1;
            int image = mask >> pair_index(n, a, b) & 1;
            if (image != orig) {
                // First difference decides (bit e is most significant).
                if (image < orig) return false;  // permuted image is smaller
                break;
            }
        }
    }
    return true;
}

Graph mask_to_graph(int n, std::uint32_t mask) {
    Graph g(n);
    for (int i = 0, e = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++e)
            if (mask >> e & 1) g.add_edge(i, j);
    return g;
}

}  // namespace

std::vector<Graph> enumerate_connected(int n) {
    if (n < 1 || n > 7)
        throw contract_error("builtin enumeration supports 1 <= n <= 7");
    std::vector<std::vector<int>> perms;
    std::vector<int> ident(n);
    std::iota(ident.begin(), ident.end(), 0);
    std::vector<int> p = ident;
    while (std::next_permutation(p.begin(), p.end())) perms.push_back(p);

    int pairs = n * (n - 1) / 2;
    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
        if (!mask_connected(n, mask)) continue;
        if (!is_canonical(n, mask, perms)) continue;
        out.push_back(mask_to_graph(n, mask));
    }
    return out;
}

std::vector<Graph> enumerate_connected_up_to(int max_n) {
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n) {
        auto part = enumerate_connected(n);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<Graph> read_graph6_file(const std::string& path, bool connected_only) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open corpus file " + path);
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        Graph g = parse_graph6(line);
        if (connected_only && !is_connected(g)) continue;
        out.push_back(std::move(g));
    }
    return out;
}

Graph random_connected_graph(int n, double p, std::mt19937& rng) {
    if (n < 1) throw contract_error("random graph order must be positive");
    std::bernoulli_distribution coin(p);
    for (;;) {
        Graph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (coin(rng)) g.add_edge(i, j);
        if (is_connected(g)) return g;
    }
}

}  // namespace tollwalk

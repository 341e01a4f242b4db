#include "tollwalk/gadgets.hpp"

#include <string>

#include "tollwalk/errors.hpp"

namespace tollwalk {

namespace {

void require_d(int d) {
    if (d < 2) throw contract_error("gadget graphs require d >= 2");
}

void add_rungs_and_x(Graph& g, int d) {
    for (int i = 1; i <= 4 * d; ++i)
        g.add_edge(gadget_u(d, i), gadget_v(d, i));
    g.add_edge(gadget_v(d, 1), gadget_x(d));
    g.add_edge(gadget_v(d, 2 * d + 1), gadget_x(d));
}

void label_layers(Graph& g, int d, const char* prime) {
    for (int i = 1; i <= 4 * d; ++i) {
        g.set_label(gadget_u(d, i), "u" + std::string(prime) + std::to_string(i));
        g.set_label(gadget_v(d, i), "v" + std::string(prime) + std::to_string(i));
    }
    g.set_label(gadget_x(d), "x" + std::string(prime));
}

}  // namespace

int gadget_u(int d, int i) {
    if (i < 1 || i > 4 * d) throw contract_error("gadget index out of range");
    return i - 1;
}

int gadget_v(int d, int i) {
    if (i < 1 || i > 4 * d) throw contract_error("gadget index out of range");
    return 4 * d + i - 1;
}

int gadget_x(int d) { return 8 * d; }

Graph build_G_d(int d) {
    require_d(d);
    Graph g(8 * d + 1);
    for (int i = 0; i < 4 * d; ++i) {
        g.add_edge(i, (i + 1) % (4 * d));                  // u-layer 4d-cycle
        g.add_edge(4 * d + i, 4 * d + (i + 1) % (4 * d));  // v-layer 4d-cycle
    }
    add_rungs_and_x(g, d);
    label_layers(g, d, "");
    return g;
}

Graph build_G_d_prime(int d) {
    require_d(d);
    Graph g(8 * d + 1);
    // Each layer: two 2d-cycles, on name ranges 1..2d and 2d+1..4d.
    for (int half = 0; half < 2; ++half) {
        int base = half * 2 * d;
        for (int i = 0; i < 2 * d; ++i) {
            g.add_edge(base + i, base + (i + 1) % (2 * d));
            g.add_edge(4 * d + base + i, 4 * d + base + (i + 1) % (2 * d));
        }
    }
    add_rungs_and_x(g, d);
    label_layers(g, d, "'");
    return g;
}

}  // namespace tollwalk

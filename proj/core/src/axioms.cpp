#include "tollwalk/axioms.hpp"

#include <map>

#include "tollwalk/errors.hpp"

namespace tollwalk {

const std::vector<AxiomId>& all_axioms() {
    static const std::vector<AxiomId> ids = {
        AxiomId::b1,  AxiomId::b1p, AxiomId::b2,  AxiomId::b2p, AxiomId::J0,
        AxiomId::J2,  AxiomId::J3,  AxiomId::J4,  AxiomId::J4p, AxiomId::JC,
        AxiomId::tr,  AxiomId::TW1, AxiomId::TW1p, AxiomId::TW2, AxiomId::TW3,
        AxiomId::TWC, AxiomId::TWA, AxiomId::dh,  AxiomId::dh1, AxiomId::pt,
        AxiomId::SP,
    };
    return ids;
}

std::string axiom_name(AxiomId id) {
    switch (id) {
        case AxiomId::b1: return "b1";
        case AxiomId::b1p: return "b1p";
        case AxiomId::b2: return "b2";
        case AxiomId::b2p: return "b2p";
        case AxiomId::J0: return "J0";
        case AxiomId::J2: return "J2";
        case AxiomId::J3: return "J3";
        case AxiomId::J4: return "J4";
        case AxiomId::J4p: return "J4p";
        case AxiomId::JC: return "JC";
        case AxiomId::tr: return "tr";
        case AxiomId::TW1: return "TW1";
        case AxiomId::TW1p: return "TW1p";
        case AxiomId::TW2: return "TW2";
        case AxiomId::TW3: return "TW3";
        case AxiomId::TWC: return "TWC";
        case AxiomId::TWA: return "TWA";
        case AxiomId::dh: return "dh";
        case AxiomId::dh1: return "dh1";
        case AxiomId::pt: return "pt";
        case AxiomId::SP: return "SP";
    }
    throw contract_error("unknown axiom id");
}

std::optional<AxiomId> axiom_by_name(const std::string& name) {
    for (AxiomId id : all_axioms())
        if (axiom_name(id) == name) return id;
    return std::nullopt;
}

namespace {

// Each checker below spells out its quantifier prefix and distinctness set.
// "elements" = no distinctness beyond what the body states; "different" =
// pairwise distinct.  Two readings are tightened relative to the bare text
// and are validated by the exhaustive small-graph sweeps in the test suite:
//  * (tr) and (J2) require u != v — with u = v every function with a
//    nontrivial edge pair would violate them, which would contradict the
//    triangle-free and tree characterizations they feed;
//  * (pt) and (dh) quantify five pairwise distinct vertices (their proofs
//    open with "there exist distinct vertices u,x,y,z,v"); e.g. with z = x
//    allowed, (dh) would fail on the 3-vertex path, a tree.
// (dh1) deliberately allows u = v: the house violates it exactly at its
// apex, which the corresponding drawing marks "u=v".
struct Checker {
    const TransitFunction& r;
    int n;

    explicit Checker(const TransitFunction& r) : r(r), n(r.universe_size()) {}

    bool in(int x, int a, int b) const { return r.at(a, b).contains(x); }
    bool triv(int a, int b) const { return r.is_trivial_pair(a, b); }
    bool subset(int a, int b, int c, int d) const {
        return r.at(a, b).is_subset_of(r.at(c, d));
    }

    using W = std::optional<std::vector<int>>;

    // (b1): x in R(u,v), x != v  =>  v not in R(x,u).   Vars (u,v,x).
    W b1() const {
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                for (int x = 0; x < n; ++x)
                    if (in(x, u, v) && x != v && in(v, x, u))
                        return {{u, v, x}};
        return {};
    }

    // (b1'): x in R(u,v), v != x, R(v,x) != {v,x}  =>  v not in R(u,x).
    W b1p() const {
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                for (int x = 0; x < n; ++x)
                    if (in(x, u, v) && v != x && !triv(v, x) && in(v, u, x))
                        return {{u, v, x}};
        return {};
    }

    // (b2): x in R(u,v)  =>  R(u,x) subset of R(u,v).
    W b2() const {
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                for (int x = 0; x < n; ++x)
                    if (in(x, u, v) && !subset(u, x, u, v))
                        return {{u, v, x}};
        return {};
    }

    // (b2'): x in R(u,v), R(u,x) != {u,x}  =>  R(x,v) subset of R(u,v).
    W b2p() const {
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                for (int x = 0; x < n; ++x)
                    if (in(x, u, v) && !triv(u, x) && !subset(x, v, u, v))
                        return {{u, v, x}};
        return {};
    }

    // (J0): different u,x,y,v: x in R(u,y), y in R(x,v)  =>  x in R(u,v).
    W J0() const {
        for (int u = 0; u < n; ++u)
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    for (int v = 0; v < n; ++v) {
                        if (u == x || u == y || u == v || x == y || x == v || y == v)
                            continue;
                        if (in(x, u, y) && in(y, x, v) && !in(x, u, v))
                            return {{u, x, y, v}};
                    }
        return {};
    }

    // (J2): u != v, R(u,x)={u,x}, R(x,v)={x,v}, R(u,v) != {u,v}
    //       =>  x in R(u,v).
    W J2() const {
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                for (int x = 0; x < n; ++x) {
                    if (u == v) continue;
                    if (triv(u, x) && triv(x, v) && !triv(u, v) && !in(x, u, v))
                        return {{u, v, x}};
                }
        return {};
    }

    // (J3): x in R(u,y), y in R(x,v), x != y, R(u,v) != {u,v}
    //       =>  x in R(u,v).
    W J3() const {
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                for (int x = 0; x < n; ++x)
                    for (int y = 0; y < n; ++y)
                        if (x != y && in(x, u, y) && in(y, x, v) &&
                            !triv(u, v) && !in(x, u, v))
                            return {{u, v, x, y}};
        return {};
    }

    // (J4): x in R(u,y), y in R(x,v), x != y, R(u,x)={u,x}, R(y,v)={y,v},
    //       R(u,v) != {u,v}  =>  x in R(u,v).
    W J4() const {
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                for (int x = 0; x < n; ++x)
                    for (int y = 0; y < n; ++y)
                        if (x != y && triv(u, x) && triv(y, v) &&
                            in(x, u, y) && in(y, x, v) && !triv(u, v) &&
                            !in(x, u, v))
                            return {{u, v, x, y}};
        return {};
    }

    // (J4'): x in R(u,y), y in R(x,v), R(u,x) != {u,x}, R(y,v) != {y,v},
    //        R(x,y) != {x,y}, R(u,v) != {u,v}  =>  x in R(u,v).
    W J4p() const {
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                for (int x = 0; x < n; ++x)
                    for (int y = 0; y < n; ++y)
                        if (!triv(u, x) && !triv(y, v) && !triv(x, y) &&
                            !triv(u, v) && in(x, u, y) && in(y, x, v) &&
                            !in(x, u, v))
                            return {{u, v, x, y}};
        return {};
    }

    // (JC): different u,x,y,v: x in R(u,y), y in R(x,v), R(x,y)={x,y}
    //       =>  x in R(u,v).
    W JC() const {
        for (int u = 0; u < n; ++u)
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    for (int v = 0; v < n; ++v) {
                        if (u == x || u == y || u == v || x == y || x == v || y == v)
                            continue;
                        if (in(x, u, y) && in(y, x, v) && triv(x, y) &&
                            !in(x, u, v))
                            return {{u, x, y, v}};
                    }
        return {};
    }

    // (tr): u != v, R(u,x)={u,x}, R(x,v)={x,v}  =>  x in R(u,v).
    W tr() const {
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                for (int x = 0; x < n; ++x) {
                    if (u == v) continue;
                    if (triv(u, x) && triv(x, v) && !in(x, u, v))
                        return {{u, v, x}};
                }
        return {};
    }

    // (TW1): x,y in R(u,v), u != x, x != y, y != v, R(x,z)={x,z},
    //        R(z,y)={z,y}, R(x,v) != {x,v}, R(u,y) != {u,y}
    //        =>  z in R(u,v).
    W TW1() const {
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                for (int x = 0; x < n; ++x) {
                    if (x == u || !in(x, u, v) || triv(x, v)) continue;
                    for (int y = 0; y < n; ++y) {
                        if (y == x || y == v || !in(y, u, v) || triv(u, y)) continue;
                        for (int z = 0; z < n; ++z)
                            if (triv(x, z) && triv(z, y) && !in(z, u, v))
                                return {{u, v, x, y, z}};
                    }
                }
        return {};
    }

    // (TW1'): x,y in R(u,v), x != u, y != v, R(x,v) != {x,v},
    //         R(u,y) != {u,y}, R(x,z)={x,z}, R(z,w)={z,w}, R(w,y)={w,y},
    //         R(u,w) != {u,w}  =>  z in R(u,v).
    W TW1p() const {
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                for (int x = 0; x < n; ++x) {
                    if (x == u || !in(x, u, v) || triv(x, v)) continue;
                    for (int w = 0; w < n; ++w) {
                        if (triv(u, w)) continue;
                        for (int y = 0; y < n; ++y) {
                            if (y == v || !in(y, u, v) || triv(u, y) || !triv(w, y))
                                continue;
                            for (int z = 0; z < n; ++z)
                                if (triv(x, z) && triv(z, w) && !in(z, u, v))
                                    return {{u, v, x, w, y, z}};
                        }
                    }
                }
        return {};
    }

    // (TW2): x in R(u,v), R(u,x) != {u,x}, R(x,v) != {x,v}, R(x,z)={x,z}
    //        =>  z in R(u,v).
    W TW2() const {
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                for (int x = 0; x < n; ++x) {
                    if (!in(x, u, v) || triv(u, x) || triv(x, v)) continue;
                    for (int z = 0; z < n; ++z)
                        if (triv(x, z) && !in(z, u, v))
                            return {{u, v, x, z}};
                }
        return {};
    }

    // (TW3): different u,v,x with x in R(u,v): some v1 in R(x,v), v1 != x,
    //        R(x,v1)={x,v1}, R(u,v1) != {u,v1} must exist.
    // (TWC): as TW3, additionally x not in R(v1,v).
    W TW3_or_TWC(bool twc) const {
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                for (int x = 0; x < n; ++x) {
                    if (u == v || u == x || v == x || !in(x, u, v)) continue;
                    bool found = false;
                    for (int v1 = 0; v1 < n && !found; ++v1)
                        if (v1 != x && in(v1, x, v) && triv(x, v1) &&
                            !triv(u, v1) && (!twc || !in(x, v1, v)))
                            found = true;
                    if (!found) return {{u, v, x}};
                }
        return {};
    }

    // (TWA): different u,v,x with x in R(u,v): some x1 in R(x,v) ∩ R(u,v),
    //        x1 != x, R(x,x1)={x,x1}, R(u,x1) != {u,x1},
    //        R(x1,v) proper subset of R(x,v) must exist.
    W TWA() const {
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                for (int x = 0; x < n; ++x) {
                    if (u == v || u == x || v == x || !in(x, u, v)) continue;
                    bool found = false;
                    for (int x1 = 0; x1 < n && !found; ++x1)
                        if (x1 != x && in(x1, x, v) && in(x1, u, v) &&
                            triv(x, x1) && !triv(u, x1) &&
                            subset(x1, v, x, v) && r.at(x1, v) != r.at(x, v))
                            found = true;
                    if (!found) return {{u, v, x}};
                }
        return {};
    }

    // (dh): different u,x,y,v,z: x,y,z in R(u,y) ∩ R(x,v),
    //       R(u,v) != {u,v}, R(x,y)={x,y}, R(u,z)={u,z}, R(v,z)={v,z}
    //       =>  R(x,z) != {x,z} or R(y,z) != {y,z}.
    W dh() const {
        for (int u = 0; u < n; ++u)
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    for (int v = 0; v < n; ++v) {
                        if (u == x || u == y || u == v || x == y || x == v || y == v)
                            continue;
                        if (triv(u, v) || !triv(x, y)) continue;
                        if (!in(x, u, y) || !in(y, x, v) || !in(x, x, v) ||
                            !in(y, u, y))
                            continue;
                        for (int z = 0; z < n; ++z) {
                            if (z == u || z == x || z == y || z == v) continue;
                            if (in(z, u, y) && in(z, x, v) && triv(u, z) &&
                                triv(v, z) && triv(x, z) && triv(y, z))
                                return {{u, x, y, v, z}};
                        }
                    }
        return {};
    }

    // (dh1): x in R(u,y), y in R(x,v), R(x,y)={x,y}, x != y,
    //        R(u,x) != {u,x}, R(y,v) != {y,v}  =>  x in R(u,v).
    //        u = v is allowed (and is how the house violates it).
    W dh1() const {
        for (int u = 0; u < n; ++u)
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    for (int v = 0; v < n; ++v)
                        if (x != y && triv(x, y) && !triv(u, x) && !triv(y, v) &&
                            in(x, u, y) && in(y, x, v) && !in(x, u, v))
                            return {{u, x, y, v}};
        return {};
    }

    // (pt): different u,x,y,v,z: x,z in R(u,y), y,z in R(x,v), R(x,y)={x,y}
    //       =>  R(x,z) != {x,z} and R(y,z) != {y,z}.
    W pt() const {
        for (int u = 0; u < n; ++u)
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    for (int v = 0; v < n; ++v) {
                        if (u == x || u == y || u == v || x == y || x == v || y == v)
                            continue;
                        if (!triv(x, y) || !in(x, u, y) || !in(y, x, v)) continue;
                        for (int z = 0; z < n; ++z) {
                            if (z == u || z == x || z == y || z == v) continue;
                            if (in(z, u, y) && in(z, x, v) &&
                                (triv(x, z) || triv(y, z)))
                                return {{u, x, y, v, z}};
                        }
                    }
        return {};
    }

    // (SP): every pair set is {x,y} or the whole universe.
    W SP() const {
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y)
                if (!triv(x, y) && r.at(x, y).count() != n)
                    return {{x, y}};
        return {};
    }
};

const std::vector<std::string>& witness_names_for(AxiomId id) {
    static const std::map<AxiomId, std::vector<std::string>> names = {
        {AxiomId::b1, {"u", "v", "x"}},
        {AxiomId::b1p, {"u", "v", "x"}},
        {AxiomId::b2, {"u", "v", "x"}},
        {AxiomId::b2p, {"u", "v", "x"}},
        {AxiomId::J0, {"u", "x", "y", "v"}},
        {AxiomId::J2, {"u", "v", "x"}},
        {AxiomId::J3, {"u", "v", "x", "y"}},
        {AxiomId::J4, {"u", "v", "x", "y"}},
        {AxiomId::J4p, {"u", "v", "x", "y"}},
        {AxiomId::JC, {"u", "x", "y", "v"}},
        {AxiomId::tr, {"u", "v", "x"}},
        {AxiomId::TW1, {"u", "v", "x", "y", "z"}},
        {AxiomId::TW1p, {"u", "v", "x", "w", "y", "z"}},
        {AxiomId::TW2, {"u", "v", "x", "z"}},
        {AxiomId::TW3, {"u", "v", "x"}},
        {AxiomId::TWC, {"u", "v", "x"}},
        {AxiomId::TWA, {"u", "v", "x"}},
        {AxiomId::dh, {"u", "x", "y", "v", "z"}},
        {AxiomId::dh1, {"u", "x", "y", "v"}},
        {AxiomId::pt, {"u", "x", "y", "v", "z"}},
        {AxiomId::SP, {"x", "y"}},
    };
    return names.at(id);
}

}  // namespace

AxiomVerdict check_axiom(const TransitFunction& r, AxiomId id) {
    Checker c(r);
    Checker::W w;
    switch (id) {
        case AxiomId::b1: w = c.b1(); break;
        case AxiomId::b1p: w = c.b1p(); break;
        case AxiomId::b2: w = c.b2(); break;
        case AxiomId::b2p: w = c.b2p(); break;
        case AxiomId::J0: w = c.J0(); break;
        case AxiomId::J2: w = c.J2(); break;
        case AxiomId::J3: w = c.J3(); break;
        case AxiomId::J4: w = c.J4(); break;
        case AxiomId::J4p: w = c.J4p(); break;
        case AxiomId::JC: w = c.JC(); break;
        case AxiomId::tr: w = c.tr(); break;
        case AxiomId::TW1: w = c.TW1(); break;
        case AxiomId::TW1p: w = c.TW1p(); break;
        case AxiomId::TW2: w = c.TW2(); break;
        case AxiomId::TW3: w = c.TW3_or_TWC(false); break;
        case AxiomId::TWC: w = c.TW3_or_TWC(true); break;
        case AxiomId::TWA: w = c.TWA(); break;
        case AxiomId::dh: w = c.dh(); break;
        case AxiomId::dh1: w = c.dh1(); break;
        case AxiomId::pt: w = c.pt(); break;
        case AxiomId::SP: w = c.SP(); break;
    }
    AxiomVerdict verdict;
    verdict.axiom = id;
    verdict.satisfied = !w.has_value();
    if (w) {
        verdict.witness = *w;
        verdict.witness_names = witness_names_for(id);
    }
    return verdict;
}

std::vector<AxiomVerdict> check_axioms(const TransitFunction& r,
                                       const std::vector<AxiomId>& ids) {
    std::vector<AxiomVerdict> out;
    out.reserve(ids.size());
    for (AxiomId id : ids) out.push_back(check_axiom(r, id));
    return out;
}

bool satisfies_all(const TransitFunction& r, const std::vector<AxiomId>& ids) {
    for (AxiomId id : ids)
        if (!check_axiom(r, id).satisfied) return false;
    return true;
}

}  // namespace tollwalk

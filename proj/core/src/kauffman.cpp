#include "skeincalc/kauffman.hpp"

#include <algorithm>

#include "skeincalc/invariants.hpp"

namespace skc {

int UnorientedDiagram::crossing_count() const {
    int n = 0;
    for (int8_t a : alive) n += a;
    return n;
}

int UnorientedDiagram::new_crossing() {
    alive.push_back(1);
    mate.insert(mate.end(), 4, -1);
    return static_cast<int>(alive.size()) - 1;
}

UnorientedDiagram forget_orientation(const PlanarDiagram& d) {
    if (d.source_count() != 0)
        throw SkeinError("forget_orientation: closed diagram expected");
    UnorientedDiagram u;
    u.free_circles = static_cast<int>(d.free_circles.size());
    // ccw slot of each oriented port, by crossing sign
    // +1: (under_in, over_out, under_out, over_in)
    // -1: (under_in, over_in, under_out, over_out)
    std::vector<int> base(d.sign.size(), -1);
    for (size_t c = 0; c < d.sign.size(); ++c)
        if (d.sign[c] != 0) base[c] = u.new_crossing();
    auto slot_of_in = [&](EndRef e) {
        int c = ref_crossing(e), role = ref_role(e);
        int s = (role == kUnder) ? 0 : (d.sign[c] > 0 ? 3 : 1);
        return 4 * base[c] + s;
    };
    auto slot_of_out = [&](int c, int role) {
        int s = (role == kUnder) ? 2 : (d.sign[c] > 0 ? 1 : 3);
        return 4 * base[c] + s;
    };
    for (size_t c = 0; c < d.sign.size(); ++c) {
        if (d.sign[c] == 0) continue;
        for (int role = 0; role < 2; ++role) {
            int from = slot_of_out(static_cast<int>(c), role);
            int to = slot_of_in(d.next[2 * c + role]);
            u.mate[from] = to;
            u.mate[to] = from;
        }
    }
    return u;
}

ZForm kauffman_delta() {
    return ZForm::monomial(1, 1, -1) + ZForm::monomial(1, -1, -1) + ZForm(-1);
}

ZForm square_variables(const ZForm& p) {
    ZForm out;
    for (auto& [k, c] : p.terms()) out += ZForm::monomial(c, 2 * k.first, 2 * k.second);
    return out;
}

namespace {

inline int through(int port) { return (port & ~3) | ((port + 2) & 3); }

// curl chirality: a loop joining an under port to its ccw-next port has
// writhe +1; the strand keeps the remaining two ports
struct Curl {
    int crossing = -1;
    int sign = 0;
    int keep_a = 0, keep_b = 0;
};

Curl find_unoriented_curl(const UnorientedDiagram& d) {
    for (size_t c = 0; c < d.alive.size(); ++c) {
        if (!d.alive[c]) continue;
        for (int i = 0; i < 4; ++i) {
            int a = 4 * static_cast<int>(c) + i;
            int b = 4 * static_cast<int>(c) + (i + 1) % 4;
            if (d.mate[a] == b) {
                Curl out;
                out.crossing = static_cast<int>(c);
                // under ports sit at even slots; (even -> ccw next) is +1
                out.sign = (i % 2 == 0) ? 1 : -1;
                out.keep_a = 4 * static_cast<int>(c) + (i + 2) % 4;
                out.keep_b = 4 * static_cast<int>(c) + (i + 3) % 4;
                return out;
            }
        }
    }
    return {};
}

void fuse(UnorientedDiagram& d, int a, int b) {
    int x = d.mate[a], y = d.mate[b];
    if (x == b) {
        d.free_circles += 1;
    } else {
        d.mate[x] = y;
        d.mate[y] = x;
    }
    d.mate[a] = d.mate[b] = -1;
}

void kill(UnorientedDiagram& d, int c) {
    d.alive[c] = 0;
    for (int i = 0; i < 4; ++i) d.mate[4 * c + i] = -1;
}

void switch_unoriented(UnorientedDiagram& d, int c) {
    int m[4];
    for (int i = 0; i < 4; ++i) {
        m[i] = d.mate[4 * c + ((i + 1) % 4)];
        if (m[i] >= 4 * c && m[i] < 4 * c + 4)
            throw SkeinError("switch_unoriented: unexpected self edge");
    }
    for (int i = 0; i < 4; ++i) {
        d.mate[4 * c + i] = m[i];
        d.mate[m[i]] = 4 * c + i;
    }
}

void smooth_unoriented(UnorientedDiagram& d, int c, bool ccw) {
    if (ccw) {
        fuse(d, 4 * c + 0, 4 * c + 1);
        fuse(d, 4 * c + 2, 4 * c + 3);
    } else {
        fuse(d, 4 * c + 0, 4 * c + 3);
        fuse(d, 4 * c + 1, 4 * c + 2);
    }
    kill(d, c);
}

struct UScan {
    int first_bad = -1;
    std::vector<std::vector<int>> comps;  // entry ports per component
    std::vector<int32_t> key;
};

UScan scan(const UnorientedDiagram& d) {
    UScan out;
    size_t nc = d.alive.size();
    std::vector<char> entered(4 * nc, 0), seen(nc, 0);
    std::vector<int> alias(nc, -1), frame(nc, 0);
    int next_alias = 0;
    out.key.push_back(d.free_circles);
    while (true) {
        // prefer over-strand entries (odd slots) for component starts
        int start = -1;
        for (size_t q = 0; q < 4 * nc && start < 0; ++q)
            if (d.alive[q / 4] && !entered[q] && (q % 2 == 1)) start = static_cast<int>(q);
        for (size_t q = 0; q < 4 * nc && start < 0; ++q)
            if (d.alive[q / 4] && !entered[q]) start = static_cast<int>(q);
        if (start < 0) break;
        std::vector<int> comp;
        out.key.push_back(-2);
        int q = start;
        while (!entered[q]) {
            entered[q] = 1;
            entered[through(q)] = 1;  // the exit port is not a fresh entry
            comp.push_back(q);
            int c = q / 4;
            bool first = !seen[c];
            if (first) {
                seen[c] = 1;
                alias[c] = next_alias++;
                frame[c] = q % 4;
                if (q % 2 == 0 && out.first_bad < 0) out.first_bad = c;
            }
            // first visits record the entry parity; later ones the rotation
            // relative to the first entry
            out.key.push_back(alias[c] * 16 +
                              (first ? (8 | (q % 2)) : (q % 4 - frame[c] + 4) % 4));
            q = d.mate[through(q)];
        }
        out.comps.push_back(std::move(comp));
    }
    return out;
}

}  // namespace

ZForm KauffmanEngine::eval_canonical(UnorientedDiagram d) {
    ZForm factor(1);
    bool changed = true;
    while (changed) {
        changed = false;
        if (d.free_circles > 0) {
            for (int i = 0; i < d.free_circles; ++i) factor *= kauffman_delta();
            d.free_circles = 0;
            changed = true;
        }
        Curl cu = find_unoriented_curl(d);
        if (cu.crossing >= 0) {
            factor *= ZForm::monomial(1, -cu.sign, 0);
            fuse(d, cu.keep_a, cu.keep_b);
            kill(d, cu.crossing);
            changed = true;
        }
    }

    UScan sc = scan(d);
    if (sc.first_bad < 0) {
        // descending: split unknots; per component the self-writhe survives
        for (auto& comp : sc.comps) {
            int w = 0;
            for (size_t i = 0; i < comp.size(); ++i)
                for (size_t j = i + 1; j < comp.size(); ++j) {
                    if (comp[i] / 4 != comp[j] / 4) continue;
                    int under = (comp[i] % 2 == 0) ? comp[i] : comp[j];
                    int over = (comp[i] % 2 == 0) ? comp[j] : comp[i];
                    w += ((over - under) % 4 + 4) % 4 == 3 ? 1 : -1;
                }
            factor *= ZForm::monomial(1, -w, 0) * kauffman_delta();
        }
        return factor;
    }

    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = memo_.find(sc.key);
        if (it != memo_.end()) return it->second * factor;
    }

    int c = sc.first_bad;
    UnorientedDiagram sw = d, s1 = d, s2 = d;
    switch_unoriented(sw, c);
    smooth_unoriented(s1, c, true);
    smooth_unoriented(s2, c, false);
    ZForm z = ZForm::monomial(1, 0, 1);
    ZForm value = -eval_canonical(std::move(sw)) + z * eval_canonical(std::move(s1)) +
                  z * eval_canonical(std::move(s2));
    {
        std::lock_guard<std::mutex> lock(mutex_);
        memo_.emplace(sc.key, value);
    }
    return value * factor;
}

ZForm KauffmanEngine::evaluate(const UnorientedDiagram& d, KauffmanNorm norm) {
    ZForm v = eval_canonical(d);
    if (norm == KauffmanNorm::unknot) v = v.divided_by(kauffman_delta());
    return v;
}

KauffmanEngine& shared_kauffman_engine() {
    static KauffmanEngine engine;
    return engine;
}

ZForm kauffman_poly(const UnorientedDiagram& d, KauffmanNorm norm, KauffmanEngine& eng) {
    return eng.evaluate(d, norm);
}

RudolphReport rudolph_check(const FramedTangleKnot& k, SkeinEngine& eng,
                            KauffmanEngine& keng) {
    RudolphReport rep;
    rep.knot = k.name;
    rep.framing = k.framing;
    InvariantReport inv = a_invariant(k, Partition({1}), Partition({1}), eng);
    if (!inv.zform)
        throw SkeinError("rudolph_check: the reverse-parallel invariant left the z-subring");
    rep.homfly_side = mod2_reduce(*inv.zform);
    UnorientedDiagram u = forget_orientation(close_tangle(cable(k, 1, 0), true));
    ZForm f = kauffman_poly(u, KauffmanNorm::unknot, keng);
    rep.kauffman_side = mod2_reduce(square_variables(f));
    for (int s = -16; s <= 16 && !rep.equal; ++s) {
        if (rep.homfly_side == rep.kauffman_side.shifted(1, 2 * s, 0)) {
            rep.equal = true;
            rep.shift = s;
        }
    }
    return rep;
}

}  // namespace skc

#include "skeincalc/diagram.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace skc {

namespace {

constexpr EndRef kDead = std::numeric_limits<EndRef>::min();

struct Pred {
    bool from_src;
    int idx;  // source index or out-slot index
};

Pred find_pred(const PlanarDiagram& d, EndRef target) {
    for (size_t i = 0; i < d.src_next.size(); ++i)
        if (d.src_next[i] == target) return {true, static_cast<int>(i)};
    for (size_t s = 0; s < d.next.size(); ++s)
        if (d.next[s] == target && d.sign[s / 2] != 0)
            return {false, static_cast<int>(s)};
    throw SkeinError("diagram edge structure broken: dangling in-port");
}

void retarget(PlanarDiagram& d, const Pred& p, EndRef to, int add_rad) {
    if (p.from_src) {
        d.src_next[p.idx] = to;
        d.src_rad[p.idx] += add_rad;
    } else {
        d.next[p.idx] = to;
        d.rad[p.idx] += add_rad;
    }
}

}  // namespace

int PlanarDiagram::crossing_count() const {
    int n = 0;
    for (int8_t s : sign)
        if (s != 0) ++n;
    return n;
}

int PlanarDiagram::writhe() const {
    int w = 0;
    for (int8_t s : sign) w += s;
    return w;
}

int PlanarDiagram::new_crossing(int8_t s) {
    sign.push_back(s);
    next.push_back(kDead);
    next.push_back(kDead);
    rad.push_back(0);
    rad.push_back(0);
    return static_cast<int>(sign.size()) - 1;
}

// ---------------------------------------------------------------------------
// traversal and canonical encoding
// ---------------------------------------------------------------------------

namespace {

// walk a closed component from a given entering pass
std::vector<std::pair<int, int>> walk_cycle(const PlanarDiagram& d, int c0, int r0) {
    std::vector<std::pair<int, int>> seq;
    int c = c0, r = r0;
    do {
        seq.emplace_back(c, r);
        EndRef e = d.next[2 * c + r];
        if (e == kDead || is_sink(e))
            throw SkeinError("closed-component walk reached a boundary");
        c = ref_crossing(e);
        r = ref_role(e);
    } while (!(c == c0 && r == r0));
    return seq;
}

// candidate encoding for a cycle against committed alias/visited state
std::vector<int32_t> encode_cycle(const PlanarDiagram& d,
                                  const std::vector<std::pair<int, int>>& seq,
                                  std::vector<int> alias, int next_alias,
                                  std::vector<char> seen) {
    std::vector<int32_t> code;
    code.reserve(seq.size());
    for (auto& [c, r] : seq) {
        if (alias[c] < 0) alias[c] = next_alias++;
        bool first = !seen[c];
        seen[c] = 1;
        code.push_back(alias[c] * 8 + r * 4 + (first ? 2 : 0) +
                       (first && d.sign[c] > 0 ? 1 : 0));
    }
    return code;
}

}  // namespace

TraversalInfo traverse(const PlanarDiagram& d) {
    TraversalInfo out;
    size_t nc = d.sign.size();
    out.pass_strand.assign(2 * nc, -1);
    std::vector<int> alias(nc, -1);
    std::vector<char> seen(nc, 0);
    int next_alias = 0;
    out.key.push_back(static_cast<int32_t>(d.surface.kind));
    out.key.push_back(d.surface.up);
    out.key.push_back(d.surface.down);

    auto visit = [&](int c, int r, int strand_idx) {
        if (alias[c] < 0) alias[c] = next_alias++;
        bool first = !seen[c];
        seen[c] = 1;
        if (first && r == kUnder && out.first_bad < 0) out.first_bad = c;
        out.pass_strand[2 * c + r] = strand_idx;
        out.key.push_back(alias[c] * 8 + r * 4 + (first ? 2 : 0) +
                          (first && d.sign[c] > 0 ? 1 : 0));
    };

    // open arcs in boundary order
    for (int i = 0; i < d.source_count(); ++i) {
        StrandInfo s;
        s.source = i;
        int idx = static_cast<int>(out.strands.size());
        out.key.push_back(-3);
        EndRef e = d.src_next[i];
        s.radial += d.src_rad[i];
        while (!is_sink(e)) {
            int c = ref_crossing(e), r = ref_role(e);
            s.passes.emplace_back(c, r);
            visit(c, r, idx);
            s.radial += d.rad[2 * c + r];
            e = d.next[2 * c + r];
        }
        s.sink = sink_index(e);
        out.key.push_back(-4);
        out.key.push_back(s.sink);
        out.strands.push_back(std::move(s));
    }

    // closed components: repeatedly commit the start with the least encoding
    std::vector<char> pass_done(2 * nc, 0);
    for (size_t i = 0; i < 2 * nc; ++i)
        if (d.sign[i / 2] == 0 || out.pass_strand[i] >= 0) pass_done[i] = 1;
    while (true) {
        int best = -1;
        std::vector<int32_t> best_code;
        std::vector<std::pair<int, int>> best_seq;
        for (size_t i = 0; i < 2 * nc; ++i) {
            if (pass_done[i]) continue;
            auto seq = walk_cycle(d, static_cast<int>(i / 2), static_cast<int>(i % 2));
            auto code = encode_cycle(d, seq, alias, next_alias, seen);
            if (best < 0 || code < best_code) {
                best = static_cast<int>(i);
                best_code = std::move(code);
                best_seq = std::move(seq);
            }
        }
        if (best < 0) break;
        StrandInfo s;
        s.closed = true;
        int idx = static_cast<int>(out.strands.size());
        out.key.push_back(-5);
        for (auto& [c, r] : best_seq) {
            s.passes.emplace_back(c, r);
            visit(c, r, idx);
            s.radial += d.rad[2 * c + r];
            pass_done[2 * c + r] = 1;
        }
        out.strands.push_back(std::move(s));
    }

    out.key.push_back(-6);
    out.key.push_back(static_cast<int32_t>(d.free_circles.size()));
    return out;
}

int descent_first_bad(const PlanarDiagram& d) {
    size_t nc = d.sign.size();
    std::vector<char> seen(nc, 0), pass_done(2 * nc, 0);
    for (size_t i = 0; i < 2 * nc; ++i)
        if (d.sign[i / 2] == 0) pass_done[i] = 1;

    int bad = -1;
    auto walk = [&](EndRef start, bool closed, int stop_c, int stop_r) {
        EndRef e = start;
        while (true) {
            if (is_sink(e)) return;
            int c = ref_crossing(e), r = ref_role(e);
            if (closed && pass_done[2 * c + r]) return;
            pass_done[2 * c + r] = 1;
            if (!seen[c]) {
                seen[c] = 1;
                if (r == kUnder && bad < 0) {
                    bad = c;
                    return;
                }
            }
            e = d.next[2 * c + r];
            if (closed && ref_crossing(e) == stop_c && ref_role(e) == stop_r) return;
        }
    };

    for (int i = 0; i < d.source_count() && bad < 0; ++i)
        walk(d.src_next[i], false, -1, -1);
    while (bad < 0) {
        // start the next component at its smallest over-pass when it has one
        int start = -1;
        for (size_t i = 0; i < 2 * nc && start < 0; ++i)
            if (!pass_done[i] && (i & 1) == static_cast<size_t>(kOver))
                start = static_cast<int>(i);
        for (size_t i = 0; i < 2 * nc && start < 0; ++i)
            if (!pass_done[i]) start = static_cast<int>(i);
        if (start < 0) break;
        walk(in_port(start / 2, start % 2), true, start / 2, start % 2);
    }
    return bad;
}

int null_homotopic_count(const PlanarDiagram& d) {
    bool winding_matters = (d.surface.kind == SurfaceKind::annulus);
    int k = 0;
    for (int r : d.free_circles)
        if (!winding_matters || r == 0) ++k;
    TraversalInfo t = traverse(d);
    for (auto& s : t.strands)
        if (s.closed && (!winding_matters || s.radial == 0)) ++k;
    return k;
}

// ---------------------------------------------------------------------------
// local moves
// ---------------------------------------------------------------------------

void switch_crossing(PlanarDiagram& d, int c) {
    Pred pu = find_pred(d, in_port(c, kUnder));
    Pred po = find_pred(d, in_port(c, kOver));
    retarget(d, pu, in_port(c, kOver), 0);
    retarget(d, po, in_port(c, kUnder), 0);
    std::swap(d.next[2 * c + kUnder], d.next[2 * c + kOver]);
    std::swap(d.rad[2 * c + kUnder], d.rad[2 * c + kOver]);
    d.sign[c] = -d.sign[c];
}

void smooth_crossing(PlanarDiagram& d, int c) {
    // fuse under-in with over-out and over-in with under-out
    for (int role = 0; role < 2; ++role) {
        EndRef in_ref = in_port(c, role);
        int out_slot = 2 * c + (1 - role);
        EndRef target = d.next[out_slot];
        int radd = d.rad[out_slot];
        Pred p = find_pred(d, in_ref);
        if (!p.from_src && p.idx == out_slot) {
            d.free_circles.push_back(radd);
        } else {
            retarget(d, p, target, radd);
        }
    }
    d.sign[c] = 0;
    d.next[2 * c + kUnder] = kDead;
    d.next[2 * c + kOver] = kDead;
}

int find_curl(const PlanarDiagram& d) {
    for (size_t c = 0; c < d.sign.size(); ++c) {
        if (d.sign[c] == 0) continue;
        int ci = static_cast<int>(c);
        if (d.next[2 * c + kUnder] == in_port(ci, kOver) ||
            d.next[2 * c + kOver] == in_port(ci, kUnder))
            return ci;
    }
    return -1;
}

int remove_curl(PlanarDiagram& d, int c) {
    int s = d.sign[c];
    int loop_role;
    if (d.next[2 * c + kUnder] == in_port(c, kOver)) {
        loop_role = kUnder;  // under-out loops into over-in
    } else if (d.next[2 * c + kOver] == in_port(c, kUnder)) {
        loop_role = kOver;
    } else {
        throw SkeinError("remove_curl: crossing has no loop edge");
    }
    int loop_slot = 2 * c + loop_role;
    int out_slot = 2 * c + (1 - loop_role);
    EndRef target = d.next[out_slot];
    int radd = d.rad[loop_slot] + d.rad[out_slot];
    // the surviving strand enters at the loop strand's in-port
    Pred p = find_pred(d, in_port(c, loop_role));
    if (!p.from_src && p.idx == out_slot) {
        d.free_circles.push_back(radd);
    } else {
        retarget(d, p, target, radd);
    }
    d.sign[c] = 0;
    d.next[2 * c + kUnder] = kDead;
    d.next[2 * c + kOver] = kDead;
    return s;
}

// ---------------------------------------------------------------------------
// words, partitions
// ---------------------------------------------------------------------------

int BraidWord::writhe() const {
    int w = 0;
    for (int l : letters) w += (l > 0) ? 1 : -1;
    return w;
}

BraidWord parse_braid(const std::string& text, int strands) {
    BraidWord w;
    std::istringstream is(text);
    int x, maxi = 0;
    while (is >> x) {
        if (x == 0) throw SkeinError("braid letter 0 is not allowed");
        w.letters.push_back(x);
        maxi = std::max(maxi, std::abs(x));
    }
    w.strands = (strands > 0) ? strands : maxi + 1;
    if (maxi + 1 > w.strands) throw SkeinError("braid letter exceeds strand count");
    return w;
}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw SkeinError("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw SkeinError("partition parts must be weakly decreasing");
    }
}

int Partition::size() const {
    int n = 0;
    for (int p : parts) n += p;
    return n;
}

Partition Partition::conjugate() const {
    std::vector<int> out;
    for (int col = 1; !parts.empty() && col <= parts[0]; ++col) {
        int h = 0;
        for (int p : parts)
            if (p >= col) ++h;
        out.push_back(h);
    }
    return Partition(out);
}

std::string Partition::str() const {
    if (parts.empty()) return "()";
    std::string s = "(";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        parts.push_back(std::stoi(tok));
    }
    return Partition(parts);
}

// ---------------------------------------------------------------------------
// braid diagrams
// ---------------------------------------------------------------------------

namespace {

struct OutConn {
    bool from_src;
    int idx;
};

void wire(PlanarDiagram& d, const OutConn& from, EndRef to, int radial = 0) {
    if (from.from_src) {
        d.src_next[from.idx] = to;
        d.src_rad[from.idx] = radial;
    } else {
        d.next[from.idx] = to;
        d.rad[from.idx] = radial;
    }
}

}  // namespace

PlanarDiagram braid_tangle(const BraidWord& w) {
    int m = w.strands;
    PlanarDiagram d;
    d.surface = {SurfaceKind::rectangle, m, 0};
    d.src_next.assign(m, kDead);
    d.src_rad.assign(m, 0);
    std::vector<OutConn> cur(m);
    for (int q = 0; q < m; ++q) cur[q] = {true, q};
    for (int l : w.letters) {
        int q = std::abs(l) - 1;  // 0-based left position
        if (q + 1 >= m) throw SkeinError("braid letter exceeds strand count");
        int c = d.new_crossing(l > 0 ? 1 : -1);
        if (l > 0) {
            // the left strand crosses over, moving to the right position
            wire(d, cur[q], in_port(c, kOver));
            wire(d, cur[q + 1], in_port(c, kUnder));
            cur[q] = {false, 2 * c + kUnder};
            cur[q + 1] = {false, 2 * c + kOver};
        } else {
            wire(d, cur[q], in_port(c, kUnder));
            wire(d, cur[q + 1], in_port(c, kOver));
            cur[q] = {false, 2 * c + kOver};
            cur[q + 1] = {false, 2 * c + kUnder};
        }
    }
    for (int q = 0; q < m; ++q) wire(d, cur[q], sink_ref(q));
    return d;
}

int inversions(const std::vector<int>& perm) {
    int n = 0;
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++n;
    return n;
}

std::vector<int> permutation_word(const std::vector<int>& perm) {
    // bubble the destination sequence; emitted letters read bottom to top
    std::vector<int> a = perm, word;
    bool moved = true;
    while (moved) {
        moved = false;
        for (size_t i = 0; i + 1 < a.size(); ++i) {
            if (a[i] > a[i + 1]) {
                word.push_back(static_cast<int>(i) + 1);
                std::swap(a[i], a[i + 1]);
                moved = true;
            }
        }
    }
    return word;
}

PlanarDiagram permutation_braid(const std::vector<int>& perm) {
    BraidWord w;
    w.strands = static_cast<int>(perm.size());
    w.letters = permutation_word(perm);
    return braid_tangle(w);
}

// ---------------------------------------------------------------------------
// chord-routed basis diagrams
// ---------------------------------------------------------------------------

namespace {

struct Vec2 {
    mpq_class x, y;
};

Vec2 boundary_point(int cyclic, int perturb) {
    // rational point on the unit circle via the tangent half-angle map
    mpq_class t(cyclic);
    t += mpq_class(cyclic * cyclic, perturb);
    mpq_class t2 = t * t;
    return {(1 - t2) / (1 + t2), 2 * t / (1 + t2)};
}

struct Chord {
    Vec2 a, b;  // from source point to sink point
};

mpq_class cross2(const mpq_class& ax, const mpq_class& ay, const mpq_class& bx,
                 const mpq_class& by) {
    return ax * by - ay * bx;
}

// proper intersection parameters of two segments, if any
bool segment_intersect(const Chord& p, const Chord& q, mpq_class& tp, mpq_class& tq) {
    mpq_class rx = p.b.x - p.a.x, ry = p.b.y - p.a.y;
    mpq_class sx = q.b.x - q.a.x, sy = q.b.y - q.a.y;
    mpq_class den = cross2(rx, ry, sx, sy);
    if (den == 0) return false;
    mpq_class qpx = q.a.x - p.a.x, qpy = q.a.y - p.a.y;
    tp = cross2(qpx, qpy, sx, sy) / den;
    tq = cross2(qpx, qpy, rx, ry) / den;
    return tp > 0 && tp < 1 && tq > 0 && tq < 1;
}

}  // namespace

PlanarDiagram basis_diagram(const std::vector<int>& connectivity, int n, int p) {
    int m = n + p;
    if (static_cast<int>(connectivity.size()) != m)
        throw SkeinError("basis_diagram: connectivity arity mismatch");

    auto source_boundary = [&](int i) {  // cyclic index of source i
        if (i < n) return i + 1;         // bottom position i+1
        int pos = n + p - (i - n);       // top position, right to left
        return 2 * m + 1 - pos;
    };
    auto sink_boundary = [&](int k) {
        if (k < n) return 2 * m + 1 - (k + 1);  // top position k+1
        return k + 1;                           // bottom position k+1
    };

    const int perturbs[] = {103, 107, 109, 113, 127};
    for (int pe : perturbs) {
        std::vector<Chord> chords(m);
        for (int i = 0; i < m; ++i) {
            chords[i].a = boundary_point(source_boundary(i), pe);
            chords[i].b = boundary_point(sink_boundary(connectivity[i]), pe);
        }
        struct Hit {
            mpq_class t_over, t_under;
            int over, under, sign;
        };
        std::vector<Hit> hits;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                mpq_class ti, tj;
                if (!segment_intersect(chords[i], chords[j], ti, tj)) continue;
                mpq_class s = cross2(chords[i].b.x - chords[i].a.x,
                                     chords[i].b.y - chords[i].a.y,
                                     chords[j].b.x - chords[j].a.x,
                                     chords[j].b.y - chords[j].a.y);
                hits.push_back({ti, tj, i, j, s > 0 ? 1 : -1});
            }
        // require generic position: distinct parameters along every chord
        bool generic = true;
        for (int i = 0; i < m && generic; ++i) {
            std::vector<mpq_class> ts;
            for (auto& h : hits) {
                if (h.over == i) ts.push_back(h.t_over);
                if (h.under == i) ts.push_back(h.t_under);
            }
            std::sort(ts.begin(), ts.end());
            for (size_t a = 0; a + 1 < ts.size(); ++a)
                if (ts[a] == ts[a + 1]) generic = false;
        }
        if (!generic) continue;

        PlanarDiagram d;
        d.surface = {SurfaceKind::rectangle, n, p};
        d.src_next.assign(m, kDead);
        d.src_rad.assign(m, 0);
        std::vector<int> hit_crossing(hits.size());
        for (size_t h = 0; h < hits.size(); ++h)
            hit_crossing[h] = d.new_crossing(static_cast<int8_t>(hits[h].sign));
        for (int i = 0; i < m; ++i) {
            // (t, (crossing, role)) events along chord i
            std::vector<std::pair<mpq_class, std::pair<int, int>>> along;
            for (size_t h = 0; h < hits.size(); ++h) {
                if (hits[h].over == i)
                    along.push_back({hits[h].t_over, {hit_crossing[h], kOver}});
                if (hits[h].under == i)
                    along.push_back({hits[h].t_under, {hit_crossing[h], kUnder}});
            }
            std::sort(along.begin(), along.end(),
                      [](auto& a, auto& b) { return a.first < b.first; });
            OutConn cur{true, i};
            for (auto& [t, cr] : along) {
                wire(d, cur, in_port(cr.first, cr.second));
                cur = {false, 2 * cr.first + cr.second};
            }
            wire(d, cur, sink_ref(connectivity[i]));
        }
        return d;
    }
    throw SkeinError("basis_diagram: no generic chord layout found");
}

// ---------------------------------------------------------------------------
// gluing: vertical composition and closures
// ---------------------------------------------------------------------------

namespace {

struct GluePair {
    int sink, source, extra_rad;
};

// identify each pair's sink with its source (the strand runs on through),
// then keep only the listed boundary points, in the given order
void glue(PlanarDiagram& d, const std::vector<GluePair>& pairs,
          const std::vector<int>& keep_sources, const std::vector<int>& keep_sinks) {
    int max_sink = 0;
    for (auto& pr : pairs) max_sink = std::max(max_sink, pr.sink);
    std::vector<int> sink_pair(max_sink + 1, -1);
    for (size_t k = 0; k < pairs.size(); ++k)
        sink_pair[pairs[k].sink] = static_cast<int>(k);

    std::vector<char> consumed(pairs.size(), 0);
    for (size_t k = 0; k < pairs.size(); ++k) {
        if (consumed[k]) continue;
        consumed[k] = 1;
        Pred feeder = find_pred(d, sink_ref(pairs[k].sink));
        int acc = 0;
        size_t cur = k;
        EndRef target = kDead;
        bool circle = false;
        while (true) {
            acc += pairs[cur].extra_rad + d.src_rad[pairs[cur].source];
            target = d.src_next[pairs[cur].source];
            if (is_sink(target)) {
                int sid = sink_index(target);
                int pk = (sid <= max_sink) ? sink_pair[sid] : -1;
                if (pk >= 0) {
                    if (static_cast<size_t>(pk) == k) {
                        circle = true;  // pure loop of glued edges
                        break;
                    }
                    if (!consumed[pk]) {
                        consumed[pk] = 1;
                        cur = pk;
                        continue;
                    }
                    throw SkeinError("glue: chain hit an already-consumed pair");
                }
            }
            break;
        }
        if (circle) {
            d.free_circles.push_back(acc);
        } else {
            retarget(d, feeder, target, acc);
        }
    }

    // rebuild the boundary
    std::vector<EndRef> ns;
    std::vector<int32_t> nr;
    for (int s : keep_sources) {
        ns.push_back(d.src_next[s]);
        nr.push_back(d.src_rad[s]);
    }
    d.src_next = std::move(ns);
    d.src_rad = std::move(nr);
    int max_old_sink = max_sink;
    for (int k : keep_sinks) max_old_sink = std::max(max_old_sink, k);
    for (auto e : d.next)
        if (e != kDead && is_sink(e)) max_old_sink = std::max(max_old_sink, sink_index(e));
    std::vector<int> sink_map(max_old_sink + 1, -1);
    for (size_t i = 0; i < keep_sinks.size(); ++i)
        sink_map[keep_sinks[i]] = static_cast<int>(i);
    auto remap = [&](EndRef& e) {
        if (e == kDead || !is_sink(e)) return;
        int old = sink_index(e);
        if (old >= static_cast<int>(sink_map.size()) || sink_map[old] < 0)
            throw SkeinError("glue: reference to a removed sink");
        e = sink_ref(sink_map[old]);
    };
    for (auto& e : d.next) remap(e);
    for (auto& e : d.src_next) remap(e);
}

// append `top` into `out`, shifting crossing and sink indices
int merge_into(PlanarDiagram& out, const PlanarDiagram& top, int sink_offset) {
    int co = static_cast<int>(out.sign.size());
    for (size_t c = 0; c < top.sign.size(); ++c) {
        out.new_crossing(top.sign[c]);
        for (int role = 0; role < 2; ++role) {
            EndRef e = top.next[2 * c + role];
            if (e != kDead) {
                e = is_sink(e) ? sink_ref(sink_index(e) + sink_offset)
                               : in_port(ref_crossing(e) + co, ref_role(e));
            }
            out.next[2 * (co + static_cast<int>(c)) + role] = e;
            out.rad[2 * (co + static_cast<int>(c)) + role] = top.rad[2 * c + role];
        }
    }
    for (size_t i = 0; i < top.src_next.size(); ++i) {
        EndRef e = top.src_next[i];
        if (e != kDead) {
            e = is_sink(e) ? sink_ref(sink_index(e) + sink_offset)
                           : in_port(ref_crossing(e) + co, ref_role(e));
        }
        out.src_next.push_back(e);
        out.src_rad.push_back(top.src_rad[i]);
    }
    for (int fc : top.free_circles) out.free_circles.push_back(fc);
    return co;
}

}  // namespace

PlanarDiagram compose_vertical(const PlanarDiagram& bottom, const PlanarDiagram& top) {
    if (!(bottom.surface == top.surface) || bottom.surface.kind != SurfaceKind::rectangle)
        throw SkeinError("compose_vertical: rectangle surfaces must match");
    int n = bottom.surface.up, p = bottom.surface.down, m = n + p;
    PlanarDiagram d = bottom;
    merge_into(d, top, m);  // top's boundary indices shift by m
    std::vector<GluePair> pairs;
    for (int q = 1; q <= n; ++q)
        pairs.push_back({/*sink=*/q - 1, /*source=*/m + (q - 1), 0});
    for (int q = n + 1; q <= m; ++q)
        pairs.push_back({/*sink=*/m + (q - 1), /*source=*/2 * n + p - q, 0});
    std::vector<int> keep_sources, keep_sinks;
    for (int i = 0; i < n; ++i) keep_sources.push_back(i);
    for (int i = n; i < m; ++i) keep_sources.push_back(m + i);
    for (int k = 0; k < n; ++k) keep_sinks.push_back(m + k);
    for (int k = n; k < m; ++k) keep_sinks.push_back(k);
    glue(d, pairs, keep_sources, keep_sinks);
    return d;
}

PlanarDiagram close_tangle(const PlanarDiagram& t, bool as_plane) {
    if (t.surface.kind != SurfaceKind::rectangle)
        throw SkeinError("close_tangle: rectangle tangle expected");
    int n = t.surface.up, p = t.surface.down, m = n + p;
    PlanarDiagram d = t;
    std::vector<GluePair> pairs;
    for (int q = 1; q <= n; ++q) pairs.push_back({q - 1, q - 1, 1});
    for (int q = n + 1; q <= m; ++q) pairs.push_back({q - 1, 2 * n + p - q, 1});
    glue(d, pairs, {}, {});
    d.surface = {as_plane ? SurfaceKind::plane : SurfaceKind::annulus, 0, 0};
    return d;
}

// ---------------------------------------------------------------------------
// knots
// ---------------------------------------------------------------------------

FramedTangleKnot knot_from_braid(const std::string& name, const BraidWord& w) {
    int m = w.strands;
    // the braid permutation must be an m-cycle for the closure to be a knot
    std::vector<int> dest(m);
    for (int i = 0; i < m; ++i) dest[i] = i;
    for (int l : w.letters) {
        int q = std::abs(l) - 1;
        std::swap(dest[q], dest[q + 1]);
    }
    // dest[final position] = starting position; follow the cycle
    std::vector<char> hit(m, 0);
    int cur = 0;
    for (int step = 0; step < m; ++step) {
        if (hit[cur]) throw SkeinError("braid closure is a link, not a knot");
        hit[cur] = 1;
        for (int i = 0; i < m; ++i)
            if (dest[i] == cur) {
                cur = i;
                break;
            }
    }

    PlanarDiagram d = braid_tangle(w);
    std::vector<GluePair> pairs;
    for (int j = 2; j <= m; ++j) pairs.push_back({j - 1, j - 1, 0});
    glue(d, pairs, {0}, {0});
    d.surface = {SurfaceKind::rectangle, 1, 0};
    FramedTangleKnot k;
    k.name = name;
    k.diagram = std::move(d);
    k.framing = w.writhe();
    return k;
}

FramedTangleKnot census_knot(const std::string& name) {
    if (name == "unknot") {
        PlanarDiagram d;
        d.surface = {SurfaceKind::rectangle, 1, 0};
        d.src_next = {sink_ref(0)};
        d.src_rad = {0};
        return {"unknot", d, 0};
    }
    if (name == "trefoil") return knot_from_braid(name, parse_braid("1 1 1", 2));
    if (name == "trefoil-left") return knot_from_braid(name, parse_braid("-1 -1 -1", 2));
    if (name == "fig8") return knot_from_braid(name, parse_braid("1 -2 1 -2", 3));
    throw SkeinError("unknown census knot: " + name);
}

FramedTangleKnot with_curl(const FramedTangleKnot& k, int curl_sign) {
    FramedTangleKnot out = k;
    PlanarDiagram& d = out.diagram;
    Pred feeder = find_pred(d, sink_ref(0));
    int c = d.new_crossing(static_cast<int8_t>(curl_sign));
    retarget(d, feeder, in_port(c, kUnder), 0);
    d.connect(c, kUnder, in_port(c, kOver), 0);  // the loop edge
    d.connect(c, kOver, sink_ref(0), 0);
    out.framing += curl_sign;
    return out;
}

FramedTangleKnot with_framing_adjust(const FramedTangleKnot& k, int delta) {
    FramedTangleKnot out = k;
    int s = delta > 0 ? 1 : -1;
    for (int i = 0; i < std::abs(delta); ++i) out = with_curl(out, s);
    return out;
}

// ---------------------------------------------------------------------------
// cabling
// ---------------------------------------------------------------------------

namespace {

// connector on one side of a cabled element: an out-slot/source when the
// strand leaves through it, an in-port/sink when the strand enters
struct Conn {
    bool is_out = false;
    OutConn out{};
    EndRef in = kDead;
};

void connect_ref_order(PlanarDiagram& d, const Conn& below, const Conn& above, int orient) {
    // `below` precedes `above` along the reference direction
    if (orient > 0) {
        if (!below.is_out || above.is_out) throw SkeinError("cable wiring out of order");
        wire(d, below.out, above.in);
    } else {
        if (below.is_out || !above.is_out) throw SkeinError("cable wiring out of order");
        wire(d, above.out, below.in);
    }
}

}  // namespace

PlanarDiagram cable(const FramedTangleKnot& k, int n, int p) {
    int w = n + p;
    if (w < 1) throw SkeinError("cable: need at least one strand");
    TraversalInfo t = traverse(k.diagram);
    if (t.strands.size() != 1 || t.strands[0].closed || !k.diagram.free_circles.empty())
        throw SkeinError("cable: knot tangle must be a single open arc");
    const auto& passes = t.strands[0].passes;
    int M = static_cast<int>(passes.size());

    PlanarDiagram d;
    d.surface = {SurfaceKind::rectangle, n, p};
    d.src_next.assign(w, kDead);
    d.src_rad.assign(w, 0);

    auto orient = [&](int copy) { return copy <= n ? 1 : -1; };  // 1-based copy

    // sub-crossing ids per original crossing: block[c][o-1][u-1]
    std::vector<std::vector<std::vector<int>>> block(k.diagram.sign.size());
    for (size_t c = 0; c < k.diagram.sign.size(); ++c) {
        if (k.diagram.sign[c] == 0) continue;
        block[c].assign(w, std::vector<int>(w, -1));
        for (int o = 1; o <= w; ++o)
            for (int u = 1; u <= w; ++u)
                block[c][o - 1][u - 1] = d.new_crossing(
                    static_cast<int8_t>(k.diagram.sign[c] * orient(o) * orient(u)));
    }

    // meeting order along the reference direction within one block
    auto refseq = [&](int c, int role, int copy) {
        std::vector<int> seq;
        int eps = k.diagram.sign[c];
        if (role == kOver) {
            if (eps > 0)
                for (int u = 1; u <= w; ++u) seq.push_back(block[c][copy - 1][u - 1]);
            else
                for (int u = w; u >= 1; --u) seq.push_back(block[c][copy - 1][u - 1]);
        } else {
            if (eps > 0)
                for (int o = w; o >= 1; --o) seq.push_back(block[c][o - 1][copy - 1]);
            else
                for (int o = 1; o <= w; ++o) seq.push_back(block[c][o - 1][copy - 1]);
        }
        return seq;
    };

    auto geo_entry = [&](int sub, int role, int orn) {
        Conn c;
        if (orn > 0) {
            c.is_out = false;
            c.in = in_port(sub, role);
        } else {
            c.is_out = true;
            c.out = {false, 2 * sub + role};
        }
        return c;
    };
    auto geo_exit = [&](int sub, int role, int orn) {
        Conn c;
        if (orn > 0) {
            c.is_out = true;
            c.out = {false, 2 * sub + role};
        } else {
            c.is_out = false;
            c.in = in_port(sub, role);
        }
        return c;
    };

    for (int copy = 1; copy <= w; ++copy) {
        int orn = orient(copy);
        // boundary connectors; the reference direction runs bottom to top
        Conn bottom, top;
        if (orn > 0) {
            bottom.is_out = true;
            bottom.out = {true, copy - 1};
            top.is_out = false;
            top.in = sink_ref(copy - 1);
        } else {
            bottom.is_out = false;
            bottom.in = sink_ref(copy - 1);
            top.is_out = true;
            top.out = {true, 2 * n + p - copy};
        }

        Conn prev_exit = bottom;
        for (int i = 0; i < M; ++i) {
            auto [c, role] = passes[i];
            auto seq = refseq(c, role, copy);
            connect_ref_order(d, prev_exit, geo_entry(seq.front(), role, orn), orn);
            for (size_t j = 0; j + 1 < seq.size(); ++j)
                connect_ref_order(d, geo_exit(seq[j], role, orn),
                                  geo_entry(seq[j + 1], role, orn), orn);
            prev_exit = geo_exit(seq.back(), role, orn);
        }
        connect_ref_order(d, prev_exit, top, orn);
    }
    return d;
}

// ---------------------------------------------------------------------------
// bands
// ---------------------------------------------------------------------------

PlanarDiagram braid_band(int n, int p, int start, const std::vector<int>& word) {
    int w = n + p;
    PlanarDiagram d;
    d.surface = {SurfaceKind::rectangle, n, p};
    d.src_next.assign(w, kDead);
    d.src_rad.assign(w, 0);
    std::vector<OutConn> cur(w + 1);      // up positions, 1-based
    std::vector<EndRef> pending(w + 1);   // down positions, 1-based
    for (int q = 1; q <= n; ++q) cur[q] = {true, q - 1};
    for (int q = n + 1; q <= w; ++q) pending[q] = sink_ref(q - 1);

    for (int l : word) {
        int q = start + std::abs(l) - 1, r = q + 1;
        int eps = l > 0 ? 1 : -1;
        bool up = (q >= 1 && r <= n), down = (q >= n + 1 && r <= w);
        if (!up && !down)
            throw SkeinError("braid_band: word leaves its orientation block");
        int c = d.new_crossing(static_cast<int8_t>(eps));
        if (up) {
            if (eps > 0) {
                wire(d, cur[q], in_port(c, kOver));
                wire(d, cur[r], in_port(c, kUnder));
                cur[q] = {false, 2 * c + kUnder};
                cur[r] = {false, 2 * c + kOver};
            } else {
                wire(d, cur[q], in_port(c, kUnder));
                wire(d, cur[r], in_port(c, kOver));
                cur[q] = {false, 2 * c + kOver};
                cur[r] = {false, 2 * c + kUnder};
            }
        } else {
            // downward strands; the sign survives reversing both strands
            if (eps > 0) {
                d.connect(c, kOver, pending[q]);
                d.connect(c, kUnder, pending[r]);
                pending[q] = in_port(c, kUnder);
                pending[r] = in_port(c, kOver);
            } else {
                d.connect(c, kOver, pending[r]);
                d.connect(c, kUnder, pending[q]);
                pending[q] = in_port(c, kOver);
                pending[r] = in_port(c, kUnder);
            }
        }
    }
    for (int q = 1; q <= n; ++q) wire(d, cur[q], sink_ref(q - 1));
    for (int q = n + 1; q <= w; ++q) d.src_next[2 * n + p - q] = pending[q];
    return d;
}

PlanarDiagram meridian_band(int n, int p) {
    int w = n + p;
    PlanarDiagram d;
    d.surface = {SurfaceKind::rectangle, n, p};
    d.src_next.assign(w, kDead);
    d.src_rad.assign(w, 0);
    auto orient = [&](int c) { return c <= n ? 1 : -1; };
    std::vector<int> O(w + 1), U(w + 1);  // meridian-over / meridian-under rows
    for (int c = 1; c <= w; ++c) {
        O[c] = d.new_crossing(static_cast<int8_t>(-orient(c)));
        U[c] = d.new_crossing(static_cast<int8_t>(-orient(c)));
    }
    // cable strands: upward ones meet U (strand over) first, then O
    for (int c = 1; c <= w; ++c) {
        if (orient(c) > 0) {
            d.src_next[c - 1] = in_port(U[c], kOver);
            d.connect(U[c], kOver, in_port(O[c], kUnder));
            d.connect(O[c], kUnder, sink_ref(c - 1));
        } else {
            d.src_next[2 * n + p - c] = in_port(O[c], kUnder);
            d.connect(O[c], kUnder, in_port(U[c], kOver));
            d.connect(U[c], kOver, sink_ref(c - 1));
        }
    }
    // the meridian: over-pass right to left across O, under-pass left to
    // right across U, closed up
    for (int c = w; c >= 2; --c) d.connect(O[c], kOver, in_port(O[c - 1], kOver));
    d.connect(O[1], kOver, in_port(U[1], kUnder));
    for (int c = 1; c + 1 <= w; ++c) d.connect(U[c], kUnder, in_port(U[c + 1], kUnder));
    d.connect(U[w], kUnder, in_port(O[w], kOver));
    return d;
}

}  // namespace skc

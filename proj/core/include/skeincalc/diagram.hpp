#ifndef SKEINCALC_DIAGRAM_HPP
#define SKEINCALC_DIAGRAM_HPP

/*
 * Oriented diagrams in the plane, the annulus, and the rectangle with n
 * upward and p downward boundary strands.
 *
 * A diagram is a port graph: every crossing has four strand-direction ports
 * (under-in, over-in, under-out, over-out) and every edge runs from an
 * out-port (or boundary source) to an in-port (or boundary sink).  Crossing
 * signs follow the right-hand rule: sign = +1 when the frame (over
 * direction, under direction) is positively oriented.  A positive braid
 * generator crosses the left strand over the right one.
 *
 * Rectangle boundary convention: positions 1..n carry upward strands
 * (sources at the bottom, sinks at the top), positions n+1..n+p downward
 * strands (sources at the top, sinks at the bottom).  Strand traversal
 * order lists open arcs by their initial points counterclockwise from the
 * bottom-left corner (bottom 1..n left to right, then top n+p..n+1), then
 * closed components in a canonical order.
 *
 * Edges carry a signed count of radial-ray crossings so that winding
 * numbers of annulus diagrams are available without curve analysis.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "skeincalc/ring.hpp"

namespace skc {

enum class SurfaceKind { plane, annulus, rectangle };

struct Surface {
    SurfaceKind kind = SurfaceKind::plane;
    int up = 0;    // n, rectangle only
    int down = 0;  // p, rectangle only
    bool operator==(const Surface& o) const = default;
};

// port roles within a crossing
inline constexpr int kUnder = 0;
inline constexpr int kOver = 1;

// EndRef: either an in-port (2*crossing + role, >= 0) or a sink (~sink_index)
using EndRef = int32_t;
inline EndRef in_port(int crossing, int role) { return 2 * crossing + role; }
inline EndRef sink_ref(int sink) { return ~sink; }
inline bool is_sink(EndRef e) { return e < 0; }
inline int sink_index(EndRef e) { return ~e; }
inline int ref_crossing(EndRef e) { return e >> 1; }
inline int ref_role(EndRef e) { return e & 1; }

struct PlanarDiagram {
    Surface surface;
    std::vector<int8_t> sign;      // per crossing; 0 marks a removed crossing
    std::vector<EndRef> next;      // 2*crossing + role -> edge target
    std::vector<int32_t> rad;      // radial count of that edge
    std::vector<EndRef> src_next;  // per boundary source
    std::vector<int32_t> src_rad;
    std::vector<int32_t> free_circles;  // radial counts of crossingless circles

    int crossing_count() const;  // live crossings
    int writhe() const;
    int source_count() const { return static_cast<int>(src_next.size()); }

    int new_crossing(int8_t s);
    void connect(int from_crossing, int role, EndRef to, int radial = 0) {
        next[2 * from_crossing + role] = to;
        rad[2 * from_crossing + role] = radial;
    }
};

// one strand in traversal order
struct StrandInfo {
    bool closed = false;
    int source = -1, sink = -1;               // open arcs only
    std::vector<std::pair<int, int>> passes;  // (crossing, role)
    int radial = 0;                           // total radial count
};

struct TraversalInfo {
    std::vector<StrandInfo> strands;
    std::vector<int> pass_strand;  // indexed by 2*crossing + role; -1 unused
    int first_bad = -1;  // first crossing met as an undercrossing, -1 if none
    std::vector<int32_t> key;  // canonical encoding incl. surface
};

TraversalInfo traverse(const PlanarDiagram& d);

// first crossing met as an undercrossing when walking open arcs in boundary
// order and then closed components, each started at its smallest over-pass
// (falling back to its smallest pass); -1 when totally descending
int descent_first_bad(const PlanarDiagram& d);

// closed components (including crossingless circles) with zero winding;
// in the plane and the rectangle every closed component counts
int null_homotopic_count(const PlanarDiagram& d);

// --- local moves (used by the resolution engines) ---

void switch_crossing(PlanarDiagram& d, int c);
void smooth_crossing(PlanarDiagram& d, int c);
// removes the curl at c; returns its sign. pre: c carries a loop edge
int remove_curl(PlanarDiagram& d, int c);
// crossing with a loop edge, or -1
int find_curl(const PlanarDiagram& d);

// --- builders ---

struct BraidWord {
    int strands = 1;
    std::vector<int> letters;  // i > 0 for a positive sigma_i, i < 0 negative
    int writhe() const;
};
BraidWord parse_braid(const std::string& text, int strands = 0);

struct Partition {
    std::vector<int> parts;  // weakly decreasing, positive
    Partition() = default;
    explicit Partition(std::vector<int> p);
    int size() const;
    bool empty() const { return parts.empty(); }
    Partition conjugate() const;
    std::string str() const;
    bool operator==(const Partition& o) const = default;
    bool operator<(const Partition& o) const { return parts < o.parts; }
};
Partition parse_partition(const std::string& text);

// braid diagram as an (m,0)-tangle
PlanarDiagram braid_tangle(const BraidWord& w);

// positive permutation braid b_pi; perm[i] is the top position reached by
// the strand entering at bottom position i+1 (1-based values)
PlanarDiagram permutation_braid(const std::vector<int>& perm);
std::vector<int> permutation_word(const std::vector<int>& perm);
int inversions(const std::vector<int>& perm);

// canonical totally descending representative of an (n,p) connectivity;
// connectivity[source index] = sink index
PlanarDiagram basis_diagram(const std::vector<int>& connectivity, int n, int p);

// stacks bottom below top (product of (n,p)-tangles)
PlanarDiagram compose_vertical(const PlanarDiagram& bottom, const PlanarDiagram& top);

// joins each top boundary position to the matching bottom position around
// the annulus; the result lives in the annulus (or the plane if as_plane)
PlanarDiagram close_tangle(const PlanarDiagram& d, bool as_plane);

// a knot presented as a (1,1)-tangle with blackboard framing
struct FramedTangleKnot {
    std::string name;
    PlanarDiagram diagram;  // rectangle(1,0), single open arc
    int framing = 0;        // diagram writhe
};

// braid closure leaving strand 1 open; the braid permutation must be a cycle
FramedTangleKnot knot_from_braid(const std::string& name, const BraidWord& w);
// census: unknot | trefoil | trefoil-left | fig8
FramedTangleKnot census_knot(const std::string& name);
// inserts one curl of the given sign at the top of the open arc
FramedTangleKnot with_curl(const FramedTangleKnot& k, int curl_sign);
FramedTangleKnot with_framing_adjust(const FramedTangleKnot& k, int delta);

// blackboard-parallel (n,p)-cable of the tangle arc
PlanarDiagram cable(const FramedTangleKnot& k, int n, int p);

// identity band on n+p strands with a braid word inserted on positions
// [start, start + width) which must lie inside one orientation block
PlanarDiagram braid_band(int n, int p, int start, const std::vector<int>& word);

// band with one meridian circle crossing all n+p strands (over on one pass,
// under on the other)
PlanarDiagram meridian_band(int n, int p);

}  // namespace skc

#endif

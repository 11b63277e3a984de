#ifndef SKEINCALC_SKEIN_HPP
#define SKEINCALC_SKEIN_HPP

/*
 * The resolution engine.  Rewrites a diagram in the plane or the rectangle
 * into the surface basis using the two skein relations, curl removal
 * (factor v^{-sign}) and removal of crossingless null-homotopic circles
 * (factor delta = (v^{-1} - v) z^{-1}).
 *
 * Plane basis: the empty diagram.  A closed link L resolves to
 * P_empty(L) * [empty]; the usual unknot-normalized polynomial is
 * P_empty / delta.  Rectangle(n,p) basis: the (n+p)! totally descending
 * tangles without closed components, identified by their boundary
 * connectivity.
 *
 * Coefficients live in Z[v^{+-1}, z^{+-1}] throughout; every engine step
 * multiplies by z^{+-1}, v^{+-1} or (v^{-1} - v) only.  The trace audit
 * checks the z-power bookkeeping: with k(D) the number of null-homotopic
 * closed curves, every leaf coefficient times z^{k(root) - k(leaf)} must
 * be free of negative z powers.
 */

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "skeincalc/diagram.hpp"
#include "skeincalc/ring.hpp"

namespace skc {

// basis id: empty vector for the plane; source->sink connectivity for the
// rectangle
using BasisId = std::vector<int>;

struct SkeinCombination {
    Surface surface;
    std::map<BasisId, ZForm> terms;

    void add(const BasisId& b, const ZForm& c);
    SkeinCombination scaled(const ZForm& f) const;
    bool operator==(const SkeinCombination& o) const {
        return surface == o.surface && terms == o.terms;
    }
};

// number of arcs joining bottom inputs to bottom outputs in a basis tangle
int basis_turnbacks(const BasisId& b, int n, int p);

struct ResolutionTrace {
    Surface surface;
    int root_k = 0;
    struct Leaf {
        BasisId basis;
        ZForm coeff;
        int k = 0;
    };
    std::vector<Leaf> leaves;
};

struct AuditReport {
    bool pass = true;
    std::string detail;
};

// z-power bookkeeping audit over a resolution trace
AuditReport audit_trace(const ResolutionTrace& t);

class SkeinEngine {
public:
    // expresses d in the basis of its surface (plane or rectangle)
    SkeinCombination resolve(const PlanarDiagram& d, ResolutionTrace* trace = nullptr);

    // coefficient of the empty diagram for a closed plane diagram
    ZForm plane_value(const PlanarDiagram& d, ResolutionTrace* trace = nullptr);

    // unknot-normalized Homfly polynomial of a nonempty closed diagram
    ZForm homfly(const PlanarDiagram& d, ResolutionTrace* trace = nullptr);

    // audit every trace produced by this engine (cheap; used by verify suites)
    void set_audit_all(bool on) { audit_all_ = on; }
    size_t memo_size() const { return memo_.size(); }
    size_t audited_traces() const { return audited_; }

private:
    SkeinCombination resolve_canonical(PlanarDiagram d);

    std::map<std::vector<int32_t>, SkeinCombination> memo_;
    std::mutex mutex_;
    bool audit_all_ = false;
    size_t audited_ = 0;
};

// process-wide engine so callers share one memo table
SkeinEngine& shared_engine();

}  // namespace skc

#endif

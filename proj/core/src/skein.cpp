#include "skeincalc/skein.hpp"

#include <sstream>

namespace skc {

void SkeinCombination::add(const BasisId& b, const ZForm& c) {
    if (c.is_zero()) return;
    auto it = terms.find(b);
    if (it == terms.end()) {
        terms[b] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

SkeinCombination SkeinCombination::scaled(const ZForm& f) const {
    SkeinCombination out;
    out.surface = surface;
    if (f.is_zero()) return out;
    for (auto& [b, c] : terms) out.terms[b] = c * f;
    return out;
}

int basis_turnbacks(const BasisId& b, int n, int p) {
    (void)p;
    int k = 0;
    for (size_t i = 0; i < b.size(); ++i)
        if (static_cast<int>(i) < n && b[i] >= n) ++k;
    return k;
}

AuditReport audit_trace(const ResolutionTrace& t) {
    for (auto& leaf : t.leaves) {
        if (leaf.coeff.is_zero()) continue;
        int allowance = t.root_k - leaf.k;
        if (leaf.coeff.min_z_degree() + allowance < 0) {
            std::ostringstream os;
            os << "leaf coefficient " << leaf.coeff.str() << " times z^" << allowance
               << " has negative z powers";
            return {false, os.str()};
        }
    }
    return {true, ""};
}

namespace {

int strand_self_writhe(const PlanarDiagram& d, const TraversalInfo& t, int strand) {
    // crossings both of whose passes lie on this strand
    int w = 0;
    for (size_t c = 0; c < d.sign.size(); ++c) {
        if (d.sign[c] == 0) continue;
        if (t.pass_strand[2 * c + kUnder] == strand && t.pass_strand[2 * c + kOver] == strand)
            w += d.sign[c];
    }
    return w;
}

}  // namespace

SkeinCombination SkeinEngine::resolve_canonical(PlanarDiagram d) {
    // peel off curls and crossingless circles first; their factors are local
    ZForm factor(1);
    bool changed = true;
    while (changed) {
        changed = false;
        if (!d.free_circles.empty()) {
            for (size_t i = 0; i < d.free_circles.size(); ++i) factor *= ZForm::delta();
            d.free_circles.clear();
            changed = true;
        }
        int c = find_curl(d);
        if (c >= 0) {
            int s = remove_curl(d, c);
            factor *= ZForm::monomial(1, -s, 0);
            changed = true;
        }
    }

    int bad = descent_first_bad(d);
    TraversalInfo t = traverse(d);

    if (bad < 0) {
        // totally descending: closed components split off as framed unknots,
        // open arcs keep only their self-writhe curls
        SkeinCombination out;
        out.surface = d.surface;
        BasisId basis;
        for (size_t s = 0; s < t.strands.size(); ++s) {
            int w = strand_self_writhe(d, t, static_cast<int>(s));
            if (t.strands[s].closed) {
                factor *= ZForm::monomial(1, -w, 0) * ZForm::delta();
            } else {
                factor *= ZForm::monomial(1, -w, 0);
                basis.push_back(t.strands[s].sink);
            }
        }
        out.add(basis, factor);
        return out;
    }

    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = memo_.find(t.key);
        if (it != memo_.end()) return it->second.scaled(factor);
    }

    int c = bad;
    int eps = d.sign[c];
    PlanarDiagram sw = d;
    switch_crossing(sw, c);
    PlanarDiagram sm = d;
    smooth_crossing(sm, c);

    SkeinCombination value = resolve_canonical(std::move(sw));
    SkeinCombination smooth_part = resolve_canonical(std::move(sm));
    ZForm ez = ZForm::monomial(eps, 0, 1);
    for (auto& [b, cf] : smooth_part.terms) value.add(b, cf * ez);

    {
        std::lock_guard<std::mutex> lock(mutex_);
        memo_.emplace(t.key, value);
    }
    return value.scaled(factor);
}

SkeinCombination SkeinEngine::resolve(const PlanarDiagram& d, ResolutionTrace* trace) {
    if (d.surface.kind == SurfaceKind::annulus)
        throw SkeinError("resolve: annulus diagrams are evaluated via their closures");
    int root_k = (trace || audit_all_) ? null_homotopic_count(d) : 0;
    SkeinCombination out = resolve_canonical(d);
    out.surface = d.surface;
    if (trace || audit_all_) {
        ResolutionTrace local;
        ResolutionTrace& tr = trace ? *trace : local;
        tr.surface = d.surface;
        tr.root_k = root_k;
        tr.leaves.clear();
        for (auto& [b, c] : out.terms) tr.leaves.push_back({b, c, 0});
        if (audit_all_) {
            ++audited_;
            AuditReport rep = audit_trace(tr);
            if (!rep.pass)
                throw SkeinError("resolution audit failed: " + rep.detail);
        }
    }
    return out;
}

ZForm SkeinEngine::plane_value(const PlanarDiagram& d, ResolutionTrace* trace) {
    if (d.surface.kind != SurfaceKind::plane)
        throw SkeinError("plane_value: plane diagram expected");
    SkeinCombination c = resolve(d, trace);
    if (c.terms.empty()) return ZForm();
    if (c.terms.size() != 1 || !c.terms.begin()->first.empty())
        throw SkeinError("plane_value: resolution left boundary terms");
    return c.terms.begin()->second;
}

ZForm SkeinEngine::homfly(const PlanarDiagram& d, ResolutionTrace* trace) {
    if (d.crossing_count() == 0 && d.free_circles.empty())
        throw SkeinError("homfly: the empty diagram has no unknot-normalized value");
    return plane_value(d, trace).divided_by(ZForm::delta());
}

SkeinEngine& shared_engine() {
    static SkeinEngine engine;
    return engine;
}

}  // namespace skc

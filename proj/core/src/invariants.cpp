#include "skeincalc/invariants.hpp"

#include <algorithm>

namespace skc {

PlanarDiagram satellite_diagram(const FramedTangleKnot& k, const DecorationTerm& term,
                                bool with_meridian, bool as_plane) {
    int n = term.up_strands(), p = term.down_strands();
    if (n + p == 0) {
        PlanarDiagram empty;
        empty.surface = {as_plane ? SurfaceKind::plane : SurfaceKind::annulus, 0, 0};
        if (with_meridian) empty.free_circles.push_back(0);
        return empty;
    }
    PlanarDiagram d = cable(k, n, p);
    // braid insertions act on contiguous strand groups above the tangle
    int up_pos = 1, down_pos = n + 1;
    for (auto& g : term.groups) {
        int start = g.reversed ? down_pos : up_pos;
        if (!g.braid_word.empty())
            d = compose_vertical(d, braid_band(n, p, start, g.braid_word));
        (g.reversed ? down_pos : up_pos) += g.strands;
    }
    if (with_meridian) d = compose_vertical(meridian_band(n, p), d);
    return close_tangle(d, as_plane);
}

LambdaScalar satellite_homfly(const FramedTangleKnot& k, const AnnulusElement& q,
                              SkeinEngine& eng, bool with_meridian) {
    LambdaScalar acc;
    PatternExpansion px = expand_to_patterns(q);
    for (auto& term : px.terms) {
        PlanarDiagram d = satellite_diagram(k, term, with_meridian);
        acc += term.coeff * LambdaScalar(eng.plane_value(d));
    }
    return acc;
}

InvariantReport a_invariant(const FramedTangleKnot& k, const Partition& lambda,
                            const Partition& mu, SkeinEngine& eng, bool strict) {
    InvariantReport rep;
    rep.knot = k.name;
    rep.framing = k.framing;
    rep.lambda = lambda;
    rep.mu = mu;
    AnnulusElement q = q_element(lambda, mu);
    rep.numerator = satellite_homfly(k, q, eng);
    rep.denominator = satellite_homfly(census_knot("unknot"), q, eng);
    rep.route_a = exact_divide(rep.numerator, rep.denominator);
    auto integral = rep.route_a.to_int_laurent();
    rep.integral = integral.has_value();
    if (!rep.integral) {
        if (strict)
            throw SkeinError("integrality failure for a_" + k.name + lambda.str() +
                             mu.str() + ": " + rep.route_a.str());
        return rep;
    }
    rep.a = *integral;
    try {
        rep.zform = to_z_form(rep.a);
    } catch (const SkeinError&) {
        rep.zform.reset();
    }
    rep.route_b = a_invariant_eigenroute(k, lambda, mu, eng);
    rep.routes_agree = (rep.route_b == rep.route_a);
    if (strict && !rep.routes_agree)
        throw SkeinError("route disagreement for a_" + k.name + lambda.str() + mu.str());
    return rep;
}

LambdaScalar a_invariant_eigenroute(const FramedTangleKnot& k, const Partition& lambda,
                                    const Partition& mu, SkeinEngine& eng) {
    int n = lambda.size(), p = mu.size();
    if (n + p == 0) return LambdaScalar(1);
    auto coeffs = cable_k0_coeffs(k, n, p, eng);
    LambdaScalar acc;
    for (auto& [pair, c] : coeffs) {
        LambdaScalar term(c);
        if (n > 0)
            term *= LambdaScalar(
                contraction_scalar(BraidWord{n, permutation_word(pair.pi)}, lambda, eng));
        if (p > 0)
            term *= LambdaScalar(
                contraction_scalar(BraidWord{p, permutation_word(pair.rho)}, mu, eng));
        acc += term;
    }
    return acc;
}

SymmetryReport check_symmetries(const FramedTangleKnot& k, const Partition& lambda,
                                const Partition& mu, SkeinEngine& eng) {
    SymmetryReport rep;
    rep.a = a_invariant(k, lambda, mu, eng).a;
    rep.a_swapped = a_invariant(k, mu, lambda, eng).a;
    rep.a_conjugate = a_invariant(k, lambda.conjugate(), mu.conjugate(), eng).a;
    rep.swap_ok = (rep.a_swapped == rep.a);
    rep.conjugate_ok = (rep.a_conjugate == rep.a.conjugated());
    return rep;
}

SLaurent specialize(InvariantReport& report, int N) {
    SLaurent v = report.a.specialized(N);
    report.specializations[N] = v;
    return v;
}

MeridianCheckReport meridian_eigencheck(const AnnulusElement& q,
                                        const std::vector<FramedTangleKnot>& knots,
                                        SkeinEngine& eng) {
    if (knots.empty()) throw SkeinError("meridian_eigencheck: no knots given");
    MeridianCheckReport rep;
    std::vector<LambdaScalar> plain, ringed;
    for (auto& k : knots) {
        LambdaScalar base = satellite_homfly(k, q, eng);
        LambdaScalar with_m = satellite_homfly(k, q, eng, /*with_meridian=*/true);
        bool defined = !base.is_zero();
        rep.knots.push_back({k.name, defined});
        if (defined) {
            plain.push_back(base);
            ringed.push_back(with_m);
        }
    }
    for (size_t i = 0; i + 1 < plain.size(); ++i)
        if (!(ringed[i] * plain[i + 1] == ringed[i + 1] * plain[i])) rep.consistent = false;
    return rep;
}

}  // namespace skc

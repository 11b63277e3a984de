#ifndef SKEINCALC_INVARIANTS_HPP
#define SKEINCALC_INVARIANTS_HPP

/*
 * Satellite Homfly values and the (1,1)-tangle invariants a_K(lambda,mu).
 *
 * Satellite values are empty-normalized: P(empty diagram) = 1, so a
 * crossingless circle is worth delta = (v^{-1} - v)/z.  The normalization
 * scales numerator and denominator of a_K alike and drops out of the
 * quotient.
 *
 * Route A evaluates P(K*Q)/P(U*Q) by direct diagram resolution.  Route B
 * combines the turn-back-free cable coefficients with the idempotent
 * contraction scalars; the two must agree exactly.
 */

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skeincalc/annulus.hpp"
#include "skeincalc/diagram.hpp"
#include "skeincalc/hecke.hpp"
#include "skeincalc/ring.hpp"
#include "skeincalc/skein.hpp"

namespace skc {

// the decorated satellite diagram of one concrete decoration term;
// n+p = 0 yields the empty plane diagram
PlanarDiagram satellite_diagram(const FramedTangleKnot& k, const DecorationTerm& term,
                                bool with_meridian, bool as_plane = true);

// empty-normalized P(K*Q) for Q a Lambda-combination of patterns
LambdaScalar satellite_homfly(const FramedTangleKnot& k, const AnnulusElement& q,
                              SkeinEngine& eng = shared_engine(),
                              bool with_meridian = false);

struct InvariantReport {
    std::string knot;
    int framing = 0;
    Partition lambda, mu;
    IntLaurent2 a;                 // the verified integral invariant
    std::optional<ZForm> zform;    // present when a lies in the z-subring
    LambdaScalar numerator;        // P(K*Q), empty-normalized
    LambdaScalar denominator;      // P(U*Q), empty-normalized
    LambdaScalar route_a;          // their exact quotient
    LambdaScalar route_b;          // the contraction-scalar route
    bool integral = false;
    bool routes_agree = false;
    std::map<int, SLaurent> specializations;  // N -> a at v = s^N
};

// both routes, integrality verified; throws on integrality failure or
// route disagreement only if `strict`
InvariantReport a_invariant(const FramedTangleKnot& k, const Partition& lambda,
                            const Partition& mu, SkeinEngine& eng = shared_engine(),
                            bool strict = true);

// Route B on its own: sum of c_{pi,rho}(K) c(b_pi,lambda) c(b_rho,mu)
LambdaScalar a_invariant_eigenroute(const FramedTangleKnot& k, const Partition& lambda,
                                    const Partition& mu,
                                    SkeinEngine& eng = shared_engine());

struct SymmetryReport {
    IntLaurent2 a, a_swapped, a_conjugate;
    bool swap_ok = false;       // a(mu,lambda) = a(lambda,mu)
    bool conjugate_ok = false;  // a(lambda',mu') = a(lambda,mu) at s -> -s^{-1}
};

SymmetryReport check_symmetries(const FramedTangleKnot& k, const Partition& lambda,
                                const Partition& mu, SkeinEngine& eng = shared_engine());

// v -> s^N on the verified invariant; records the value in the report
SLaurent specialize(InvariantReport& report, int N);

}  // namespace skc

#endif

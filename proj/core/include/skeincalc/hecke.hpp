#ifndef SKEINCALC_HECKE_HPP
#define SKEINCALC_HECKE_HPP

/*
 * The tangle algebras H_{n,p} in the totally descending basis.  Basis
 * tangles are identified by boundary connectivity; products stack one
 * tangle above the other and resolve through the skein engine.
 *
 * H_{n,0} carries the symmetrizers and the Young-style idempotents e_lambda
 * built from row symmetrizers and column antisymmetrizers conjugated into
 * place, normalized by the proportionality factor of their square.
 */

#include <map>
#include <vector>

#include "skeincalc/diagram.hpp"
#include "skeincalc/ring.hpp"
#include "skeincalc/skein.hpp"

namespace skc {

struct HeckeElement {
    int n = 0, p = 0;
    std::map<BasisId, LambdaScalar> terms;

    bool is_zero() const { return terms.empty(); }
    void add(const BasisId& b, const LambdaScalar& c);
    HeckeElement scaled(const LambdaScalar& f) const;
    HeckeElement operator+(const HeckeElement& o) const;
    HeckeElement operator-(const HeckeElement& o) const;
    bool operator==(const HeckeElement& o) const {
        return n == o.n && p == o.p && terms == o.terms;
    }
};

HeckeElement hecke_identity(int n, int p);
HeckeElement hecke_from_combination(const SkeinCombination& c);

// stacks x below y and resolves
HeckeElement hecke_multiply(const HeckeElement& x, const HeckeElement& y,
                            SkeinEngine& eng = shared_engine());

// resolves a braid word into H_{m,0}
HeckeElement braid_to_hecke(const BraidWord& w, SkeinEngine& eng = shared_engine());

// a_n = sum_pi s^{l(pi)} b_pi / sum_pi s^{2 l(pi)}; absorbs positive braid
// generators with eigenvalue s
HeckeElement symmetrizer(int n, SkeinEngine& eng = shared_engine());

struct IdempotentRecord {
    Partition lambda;
    HeckeElement element;
    SFraction normalization;  // the proportionality factor that was divided out
};

// e_lambda in H_{|lambda|,0}; verified idempotent (cached per partition)
const IdempotentRecord& young_idempotent(const Partition& lambda,
                                         SkeinEngine& eng = shared_engine());

// scalar c with e_lambda * gamma * e_lambda = c * e_lambda; verified to lie
// in Z[s^{+-1}]
SFraction contraction_scalar(const BraidWord& gamma, const Partition& lambda,
                             SkeinEngine& eng = shared_engine());

// permutation pair indexing the turn-back-free basis tangles b_pi (x) b*_rho
struct PermPair {
    std::vector<int> pi, rho;  // 1-based one-line notation
    bool operator<(const PermPair& o) const {
        return std::tie(pi, rho) < std::tie(o.pi, o.rho);
    }
};

// coefficients of the (n,p)-cable of K on the turn-back-free basis tangles;
// asserts that every resolved coefficient lies in Z[v^{+-1}, z]
std::map<PermPair, ZForm> cable_k0_coeffs(const FramedTangleKnot& k, int n, int p,
                                          SkeinEngine& eng = shared_engine(),
                                          ResolutionTrace* trace = nullptr);

}  // namespace skc

#endif

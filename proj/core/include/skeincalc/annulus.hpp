#ifndef SKEINCALC_ANNULUS_HPP
#define SKEINCALC_ANNULUS_HPP

/*
 * The skein of the annulus as a free commutative algebra over Lambda on the
 * generators h_1, h_2, ... (closed upward symmetrizers) and their reverses
 * h*_1, h*_2, ....  Elements are kept symbolically; expand_to_patterns
 * turns them into concrete decorations (closed braids with coefficients)
 * for the satellite constructions.
 */

#include <map>
#include <string>
#include <vector>

#include "skeincalc/diagram.hpp"
#include "skeincalc/ring.hpp"
#include "skeincalc/skein.hpp"

namespace skc {

struct AnnulusMonomial {
    std::vector<int> up;    // h indices, sorted descending
    std::vector<int> down;  // h* indices, sorted descending
    int up_weight() const;
    int down_weight() const;
    bool operator<(const AnnulusMonomial& o) const {
        return std::tie(up, down) < std::tie(o.up, o.down);
    }
    bool operator==(const AnnulusMonomial& o) const = default;
};

class AnnulusElement {
public:
    AnnulusElement() = default;
    AnnulusElement(long value);
    static AnnulusElement h(int k);      // h_0 = 1, negative indices vanish
    static AnnulusElement hstar(int k);

    bool is_zero() const { return t_.empty(); }
    const std::map<AnnulusMonomial, LambdaScalar>& terms() const { return t_; }

    AnnulusElement operator+(const AnnulusElement& o) const;
    AnnulusElement operator-(const AnnulusElement& o) const;
    AnnulusElement operator*(const AnnulusElement& o) const;
    AnnulusElement& operator+=(const AnnulusElement& o);
    AnnulusElement scaled(const LambdaScalar& f) const;
    bool operator==(const AnnulusElement& o) const { return t_ == o.t_; }

    // turning the annulus over: h_k <-> h*_k
    AnnulusElement star() const;
    std::string str() const;

private:
    std::map<AnnulusMonomial, LambdaScalar> t_;
};

// the shifted-index determinant matrix for the eigenvector Q_{lambda,mu}:
// mu rows first (parts ascending, indices falling to the right), then
// lambda rows (parts descending, indices rising to the right)
std::vector<std::vector<AnnulusElement>> q_matrix(const Partition& lambda,
                                                  const Partition& mu);

// Q_{lambda,mu} = det of q_matrix
AnnulusElement q_element(const Partition& lambda, const Partition& mu);

// one concrete decoration: braids closed in concentric annuli, upward
// groups first
struct DecorationGroup {
    int strands = 0;
    bool reversed = false;          // downward orientation
    std::vector<int> braid_word;    // positive permutation braid word
};

struct DecorationTerm {
    LambdaScalar coeff;
    std::vector<DecorationGroup> groups;
    int up_strands() const;
    int down_strands() const;
};

struct PatternExpansion {
    std::vector<DecorationTerm> terms;
};

// replaces each h_k by the closure of the k-strand symmetrizer and each
// h*_k by its reverse, multiplying monomials out as concentric diagrams
PatternExpansion expand_to_patterns(const AnnulusElement& q);

struct MeridianCheckReport {
    struct Entry {
        std::string knot;
        bool defined = true;  // false when P(K*Q) vanishes; knot skipped
    };
    std::vector<Entry> knots;
    bool consistent = true;  // all defined meridian ratios agree
};

// behavioral eigenvector check: the ratio P(K * meridian-encircled Q) over
// P(K*Q) must not depend on K (compared by cross-multiplication)
MeridianCheckReport meridian_eigencheck(const AnnulusElement& q,
                                        const std::vector<FramedTangleKnot>& knots,
                                        SkeinEngine& eng = shared_engine());

}  // namespace skc

#endif

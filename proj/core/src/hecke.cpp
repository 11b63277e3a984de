#include "skeincalc/hecke.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace skc {

void HeckeElement::add(const BasisId& b, const LambdaScalar& c) {
    if (c.is_zero()) return;
    auto it = terms.find(b);
    if (it == terms.end()) {
        terms[b] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

HeckeElement HeckeElement::scaled(const LambdaScalar& f) const {
    HeckeElement out;
    out.n = n;
    out.p = p;
    if (f.is_zero()) return out;
    for (auto& [b, c] : terms) {
        LambdaScalar v = c * f;
        if (!v.is_zero()) out.terms[b] = v;
    }
    return out;
}

HeckeElement HeckeElement::operator+(const HeckeElement& o) const {
    if (n != o.n || p != o.p) throw SkeinError("hecke: shape mismatch");
    HeckeElement out = *this;
    for (auto& [b, c] : o.terms) out.add(b, c);
    return out;
}

HeckeElement HeckeElement::operator-(const HeckeElement& o) const {
    return *this + o.scaled(LambdaScalar(-1));
}

HeckeElement hecke_identity(int n, int p) {
    HeckeElement e;
    e.n = n;
    e.p = p;
    BasisId id(n + p);
    std::iota(id.begin(), id.end(), 0);
    e.terms[id] = LambdaScalar(1);
    return e;
}

HeckeElement hecke_from_combination(const SkeinCombination& c) {
    if (c.surface.kind != SurfaceKind::rectangle)
        throw SkeinError("hecke_from_combination: rectangle expected");
    HeckeElement out;
    out.n = c.surface.up;
    out.p = c.surface.down;
    for (auto& [b, z] : c.terms) out.add(b, LambdaScalar(z));
    return out;
}

namespace {

// product of two basis tangles, resolved; cached across calls
const SkeinCombination& basis_product(int n, int p, const BasisId& x, const BasisId& y,
                                      SkeinEngine& eng) {
    struct Key {
        int n, p;
        BasisId x, y;
        bool operator<(const Key& o) const {
            return std::tie(n, p, x, y) < std::tie(o.n, o.p, o.x, o.y);
        }
    };
    static std::map<Key, SkeinCombination> cache;
    static std::mutex mu;
    Key k{n, p, x, y};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(k);
        if (it != cache.end()) return it->second;
    }
    PlanarDiagram d = compose_vertical(basis_diagram(x, n, p), basis_diagram(y, n, p));
    SkeinCombination c = eng.resolve(d);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(std::move(k), std::move(c)).first->second;
}

}  // namespace

HeckeElement hecke_multiply(const HeckeElement& x, const HeckeElement& y, SkeinEngine& eng) {
    if (x.n != y.n || x.p != y.p) throw SkeinError("hecke_multiply: shape mismatch");
    HeckeElement out;
    out.n = x.n;
    out.p = x.p;
    for (auto& [bx, cx] : x.terms)
        for (auto& [by, cy] : y.terms) {
            LambdaScalar c = cx * cy;
            if (c.is_zero()) continue;
            const SkeinCombination& prod = basis_product(x.n, x.p, bx, by, eng);
            for (auto& [b, z] : prod.terms) out.add(b, c * LambdaScalar(z));
        }
    return out;
}

HeckeElement braid_to_hecke(const BraidWord& w, SkeinEngine& eng) {
    return hecke_from_combination(eng.resolve(braid_tangle(w)));
}

namespace {

void all_permutations(int n, std::vector<std::vector<int>>& out) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
}

// sum over S_block of x^{l(pi)} b_pi embedded at positions [start, start+k),
// divided by sum of x^{2 l(pi)}; conj flips s to -s^{-1}
HeckeElement embedded_symmetrizer(int n, int start, int k, bool conj) {
    std::vector<std::vector<int>> perms;
    all_permutations(k, perms);
    SLaurent norm;
    HeckeElement out;
    out.n = n;
    out.p = 0;
    for (auto& pi : perms) {
        int len = inversions(pi);
        norm = norm + SLaurent::s_power(2 * len);
        BasisId b(n);
        std::iota(b.begin(), b.end(), 0);
        for (int i = 0; i < k; ++i) b[start + i] = start + pi[i] - 1;
        SLaurent coeff = SLaurent::s_power(len);
        out.add(b, LambdaScalar(SFraction(conj ? coeff.conjugated() : coeff)));
    }
    SFraction inv(SLaurent(1), conj ? norm.conjugated() : norm);
    return out.scaled(LambdaScalar(inv));
}

}  // namespace

HeckeElement symmetrizer(int n, SkeinEngine&) {
    return embedded_symmetrizer(n, 0, n, false);
}

namespace {

// quasi-idempotent: row symmetrizers times conjugated column antisymmetrizers
HeckeElement young_raw(const Partition& lambda, SkeinEngine& eng) {
    int n = lambda.size();
    HeckeElement rows = hecke_identity(n, 0);
    int pos = 0;
    for (int part : lambda.parts) {
        rows = hecke_multiply(rows, embedded_symmetrizer(n, pos, part, false), eng);
        pos += part;
    }
    Partition conj = lambda.conjugate();
    HeckeElement cols = hecke_identity(n, 0);
    pos = 0;
    for (int part : conj.parts) {
        cols = hecke_multiply(cols, embedded_symmetrizer(n, pos, part, true), eng);
        pos += part;
    }
    // w carries the column-reading labels to the row-reading labels
    std::vector<int> w(n);
    {
        std::vector<int> row_start(lambda.parts.size());
        int acc = 0;
        for (size_t r = 0; r < lambda.parts.size(); ++r) {
            row_start[r] = acc;
            acc += lambda.parts[r];
        }
        int col_label = 1;
        for (size_t c = 0; c < conj.parts.size(); ++c)
            for (int r = 0; r < conj.parts[c]; ++r) {
                int row_label = row_start[r] + static_cast<int>(c) + 1;
                w[col_label - 1] = row_label;
                ++col_label;
            }
    }
    BraidWord bw{n, permutation_word(w)};
    BraidWord bw_inv{n, {}};
    for (auto it = bw.letters.rbegin(); it != bw.letters.rend(); ++it)
        bw_inv.letters.push_back(-*it);
    HeckeElement conj_cols = hecke_multiply(
        hecke_multiply(braid_to_hecke(bw_inv, eng), cols, eng), braid_to_hecke(bw, eng), eng);
    return hecke_multiply(rows, conj_cols, eng);
}

LambdaScalar proportionality(const HeckeElement& num, const HeckeElement& den) {
    if (den.is_zero()) throw SkeinError("proportionality: zero reference element");
    auto& [b, c] = *den.terms.begin();
    LambdaScalar ratio;
    auto it = num.terms.find(b);
    if (it != num.terms.end()) ratio = exact_divide(it->second, c);
    if (!(num == den.scaled(ratio)))
        throw SkeinError("proportionality: elements are not proportional");
    return ratio;
}

}  // namespace

const IdempotentRecord& young_idempotent(const Partition& lambda, SkeinEngine& eng) {
    static std::map<Partition, IdempotentRecord> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(lambda);
        if (it != cache.end()) return it->second;
    }
    if (lambda.size() == 0) throw SkeinError("young_idempotent: empty partition");
    HeckeElement raw = young_raw(lambda, eng);
    HeckeElement sq = hecke_multiply(raw, raw, eng);
    LambdaScalar gamma = proportionality(sq, raw);
    if (gamma.is_zero())
        throw SkeinError("young_idempotent: zero normalization for " + lambda.str());
    const auto& gt = gamma.terms();
    if (gt.size() != 1 || gt.begin()->first != 0)
        throw SkeinError("young_idempotent: normalization is not v-free");
    SFraction g = gt.begin()->second;
    HeckeElement e = raw.scaled(LambdaScalar(SFraction(1) / g));
    if (!(hecke_multiply(e, e, eng) == e))
        throw SkeinError("young_idempotent: normalized element is not idempotent");
    IdempotentRecord rec{lambda, std::move(e), g};
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(lambda, std::move(rec)).first->second;
}

SFraction contraction_scalar(const BraidWord& gamma, const Partition& lambda,
                             SkeinEngine& eng) {
    if (gamma.strands != lambda.size())
        throw SkeinError("contraction_scalar: braid strand count must equal |lambda|");
    const HeckeElement& e = young_idempotent(lambda, eng).element;
    HeckeElement mid = hecke_multiply(hecke_multiply(e, braid_to_hecke(gamma, eng), eng), e, eng);
    LambdaScalar c = proportionality(mid, e);
    auto as_int = c.to_int_laurent();
    if (!as_int)
        throw SkeinError("contraction scalar has uncleared denominators for " + lambda.str());
    for (auto& [k, coeff] : as_int->terms())
        if (k.first != 0)
            throw SkeinError("contraction scalar is not v-free for " + lambda.str());
    SFraction out;
    for (auto& [k, coeff] : as_int->terms())
        out += SFraction(SLaurent::monomial(coeff, k.second));
    return out;
}

std::map<PermPair, ZForm> cable_k0_coeffs(const FramedTangleKnot& k, int n, int p,
                                          SkeinEngine& eng, ResolutionTrace* trace) {
    PlanarDiagram d = cable(k, n, p);
    SkeinCombination c = eng.resolve(d, trace);
    std::map<PermPair, ZForm> out;
    for (auto& [b, z] : c.terms) {
        if (z.min_z_degree() < 0)
            throw SkeinError("cable coefficient outside Z[v,z]: " + z.str());
        if (basis_turnbacks(b, n, p) != 0) continue;
        PermPair key;
        key.pi.resize(n);
        key.rho.resize(p);
        for (int i = 0; i < n; ++i) key.pi[i] = b[i] + 1;
        for (int i = n; i < n + p; ++i) {
            int q_rel = p - (i - n);      // top offset of this down-arc's source
            int a = b[i] - n + 1;         // bottom offset of its sink
            key.rho[a - 1] = q_rel;
        }
        out[key] = z;
    }
    return out;
}

}  // namespace skc

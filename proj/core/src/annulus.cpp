#include "skeincalc/annulus.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace skc {

int AnnulusMonomial::up_weight() const {
    return std::accumulate(up.begin(), up.end(), 0);
}

int AnnulusMonomial::down_weight() const {
    return std::accumulate(down.begin(), down.end(), 0);
}

AnnulusElement::AnnulusElement(long value) {
    if (value != 0) t_[AnnulusMonomial{}] = LambdaScalar(value);
}

AnnulusElement AnnulusElement::h(int k) {
    AnnulusElement e;
    if (k < 0) return e;
    AnnulusMonomial m;
    if (k > 0) m.up.push_back(k);
    e.t_[m] = LambdaScalar(1);
    return e;
}

AnnulusElement AnnulusElement::hstar(int k) {
    AnnulusElement e;
    if (k < 0) return e;
    AnnulusMonomial m;
    if (k > 0) m.down.push_back(k);
    e.t_[m] = LambdaScalar(1);
    return e;
}

AnnulusElement& AnnulusElement::operator+=(const AnnulusElement& o) {
    for (auto& [m, c] : o.t_) {
        auto it = t_.find(m);
        if (it == t_.end()) {
            t_[m] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    return *this;
}

AnnulusElement AnnulusElement::operator+(const AnnulusElement& o) const {
    AnnulusElement r = *this;
    r += o;
    return r;
}

AnnulusElement AnnulusElement::operator-(const AnnulusElement& o) const {
    return *this + o.scaled(LambdaScalar(-1));
}

AnnulusElement AnnulusElement::operator*(const AnnulusElement& o) const {
    AnnulusElement r;
    for (auto& [m1, c1] : t_)
        for (auto& [m2, c2] : o.t_) {
            LambdaScalar c = c1 * c2;
            if (c.is_zero()) continue;
            AnnulusMonomial m;
            m.up = m1.up;
            m.up.insert(m.up.end(), m2.up.begin(), m2.up.end());
            std::sort(m.up.rbegin(), m.up.rend());
            m.down = m1.down;
            m.down.insert(m.down.end(), m2.down.begin(), m2.down.end());
            std::sort(m.down.rbegin(), m.down.rend());
            auto it = r.t_.find(m);
            if (it == r.t_.end()) {
                r.t_[m] = c;
            } else {
                it->second += c;
                if (it->second.is_zero()) r.t_.erase(it);
            }
        }
    return r;
}

AnnulusElement AnnulusElement::scaled(const LambdaScalar& f) const {
    AnnulusElement r;
    if (f.is_zero()) return r;
    for (auto& [m, c] : t_) {
        LambdaScalar v = c * f;
        if (!v.is_zero()) r.t_[m] = v;
    }
    return r;
}

AnnulusElement AnnulusElement::star() const {
    AnnulusElement r;
    for (auto& [m, c] : t_) {
        AnnulusMonomial sm;
        sm.up = m.down;
        sm.down = m.up;
        r.t_[sm] = c;
    }
    return r;
}

std::string AnnulusElement::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (int k : m.up) os << "*h" << k;
        for (int k : m.down) os << "*h*" << k;
    }
    return os.str();
}

std::vector<std::vector<AnnulusElement>> q_matrix(const Partition& lambda,
                                                  const Partition& mu) {
    int c = static_cast<int>(lambda.parts.size());
    int r = static_cast<int>(mu.parts.size());
    int m = r + c;
    std::vector<std::vector<AnnulusElement>> M(m, std::vector<AnnulusElement>(m));
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            if (i <= r) {
                // mu parts ascending on the diagonal, indices fall rightward
                int part = mu.parts[r - i];
                M[i - 1][j - 1] = AnnulusElement::hstar(part - (j - i));
            } else {
                int part = lambda.parts[i - r - 1];
                M[i - 1][j - 1] = AnnulusElement::h(part + (j - i));
            }
        }
    return M;
}

namespace {

AnnulusElement det(const std::vector<std::vector<AnnulusElement>>& M) {
    int m = static_cast<int>(M.size());
    if (m == 0) return AnnulusElement(1);
    // Laplace expansion memoized on the set of free columns
    std::map<uint32_t, AnnulusElement> memo;
    std::function<AnnulusElement(int, uint32_t)> go = [&](int row,
                                                          uint32_t cols) -> AnnulusElement {
        if (row == m) return AnnulusElement(1);
        auto it = memo.find(cols);
        if (it != memo.end()) return it->second;
        AnnulusElement acc;
        int parity = 0;
        for (int j = 0; j < m; ++j) {
            if (!(cols & (1u << j))) continue;
            if (!M[row][j].is_zero()) {
                AnnulusElement sub = go(row + 1, cols & ~(1u << j));
                AnnulusElement term = M[row][j] * sub;
                acc += (parity % 2 == 0) ? term : term.scaled(LambdaScalar(-1));
            }
            ++parity;
        }
        return memo.emplace(cols, std::move(acc)).first->second;
    };
    return go(0, (m >= 32) ? ~0u : ((1u << m) - 1));
}

}  // namespace

AnnulusElement q_element(const Partition& lambda, const Partition& mu) {
    return det(q_matrix(lambda, mu));
}

int DecorationTerm::up_strands() const {
    int n = 0;
    for (auto& g : groups)
        if (!g.reversed) n += g.strands;
    return n;
}

int DecorationTerm::down_strands() const {
    int p = 0;
    for (auto& g : groups)
        if (g.reversed) p += g.strands;
    return p;
}

PatternExpansion expand_to_patterns(const AnnulusElement& q) {
    PatternExpansion out;
    for (auto& [mono, coeff] : q.terms()) {
        // per generator: the symmetrizer closure as weighted braid choices
        struct Choice {
            int strands;
            bool reversed;
            std::vector<std::pair<std::vector<int>, SFraction>> options;
        };
        std::vector<Choice> gens;
        auto push_gen = [&](int k, bool reversed) {
            Choice ch;
            ch.strands = k;
            ch.reversed = reversed;
            std::vector<int> perm(k);
            std::iota(perm.begin(), perm.end(), 1);
            SLaurent norm;
            std::vector<std::pair<std::vector<int>, SLaurent>> raw;
            do {
                int len = inversions(perm);
                norm = norm + SLaurent::s_power(2 * len);
                raw.push_back({permutation_word(perm), SLaurent::s_power(len)});
            } while (std::next_permutation(perm.begin(), perm.end()));
            for (auto& [word, weight] : raw)
                ch.options.push_back({word, SFraction(weight, norm)});
            gens.push_back(std::move(ch));
        };
        for (int k : mono.up) push_gen(k, false);
        for (int k : mono.down) push_gen(k, true);

        // cartesian product over the generator choices (upward groups first)
        std::vector<size_t> idx(gens.size(), 0);
        while (true) {
            DecorationTerm term;
            term.coeff = coeff;
            for (size_t g = 0; g < gens.size(); ++g) {
                auto& opt = gens[g].options[idx[g]];
                term.groups.push_back({gens[g].strands, gens[g].reversed, opt.first});
                term.coeff = term.coeff * LambdaScalar(opt.second);
            }
            out.terms.push_back(std::move(term));
            size_t g = 0;
            while (g < gens.size() && ++idx[g] == gens[g].options.size()) {
                idx[g] = 0;
                ++g;
            }
            if (g >= gens.size()) break;
        }
    }
    return out;
}

}  // namespace skc

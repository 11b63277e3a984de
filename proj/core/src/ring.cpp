#include "skeincalc/ring.hpp"

#include <algorithm>
#include <sstream>

namespace skc {

namespace {

Int int_gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// SLaurent
// ---------------------------------------------------------------------------

SLaurent::SLaurent(long value) {
    if (value != 0) coeff_.push_back(Int(value));
}

SLaurent::SLaurent(Int value) {
    if (value != 0) coeff_.push_back(std::move(value));
}

SLaurent SLaurent::monomial(Int coeff, int exp) {
    SLaurent r;
    if (coeff != 0) {
        r.lo_ = exp;
        r.coeff_.push_back(std::move(coeff));
    }
    return r;
}

SLaurent SLaurent::z_power(int k) {
    SLaurent z = monomial(1, 1) + monomial(-1, -1);
    SLaurent r(1);
    for (int i = 0; i < k; ++i) r *= z;
    return r;
}

void SLaurent::normalize() {
    size_t front = 0;
    while (front < coeff_.size() && coeff_[front] == 0) ++front;
    if (front == coeff_.size()) {
        coeff_.clear();
        lo_ = 0;
        return;
    }
    size_t back = coeff_.size();
    while (back > front && coeff_[back - 1] == 0) --back;
    if (front > 0 || back < coeff_.size()) {
        std::vector<Int> trimmed(coeff_.begin() + front, coeff_.begin() + back);
        coeff_ = std::move(trimmed);
        lo_ += static_cast<int>(front);
    }
}

bool SLaurent::is_one() const {
    return coeff_.size() == 1 && lo_ == 0 && coeff_[0] == 1;
}

Int SLaurent::coeff(int exp) const {
    if (is_zero() || exp < lo_ || exp > hi()) return 0;
    return coeff_[exp - lo_];
}

std::map<int, Int> SLaurent::terms() const {
    std::map<int, Int> out;
    for (size_t i = 0; i < coeff_.size(); ++i)
        if (coeff_[i] != 0) out[lo_ + static_cast<int>(i)] = coeff_[i];
    return out;
}

SLaurent SLaurent::operator-() const {
    SLaurent r = *this;
    for (auto& c : r.coeff_) c = -c;
    return r;
}

SLaurent SLaurent::operator+(const SLaurent& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    int nlo = std::min(lo_, o.lo_);
    int nhi = std::max(hi(), o.hi());
    SLaurent r;
    r.lo_ = nlo;
    r.coeff_.assign(nhi - nlo + 1, Int(0));
    for (size_t i = 0; i < coeff_.size(); ++i) r.coeff_[lo_ - nlo + i] += coeff_[i];
    for (size_t i = 0; i < o.coeff_.size(); ++i) r.coeff_[o.lo_ - nlo + i] += o.coeff_[i];
    r.normalize();
    return r;
}

SLaurent SLaurent::operator-(const SLaurent& o) const { return *this + (-o); }

SLaurent SLaurent::operator*(const SLaurent& o) const {
    if (is_zero() || o.is_zero()) return SLaurent();
    SLaurent r;
    r.lo_ = lo_ + o.lo_;
    r.coeff_.assign(coeff_.size() + o.coeff_.size() - 1, Int(0));
    for (size_t i = 0; i < coeff_.size(); ++i) {
        if (coeff_[i] == 0) continue;
        for (size_t j = 0; j < o.coeff_.size(); ++j)
            if (o.coeff_[j] != 0) r.coeff_[i + j] += coeff_[i] * o.coeff_[j];
    }
    r.normalize();
    return r;
}

SLaurent SLaurent::conjugated() const {
    SLaurent r;
    for (size_t i = 0; i < coeff_.size(); ++i) {
        int e = lo_ + static_cast<int>(i);
        if (coeff_[i] == 0) continue;
        Int c = (e % 2 == 0) ? coeff_[i] : -coeff_[i];
        r = r + monomial(c, -e);
    }
    return r;
}

Int SLaurent::signed_content() const {
    if (is_zero()) return 0;
    Int g = 0;
    for (const auto& c : coeff_) g = int_gcd(g, c);
    if (coeff_.back() < 0) g = -g;
    return g;
}

bool SLaurent::is_unit_monomial() const {
    return coeff_.size() == 1 && (coeff_[0] == 1 || coeff_[0] == -1);
}

SLaurent SLaurent::divided_by(const SLaurent& d) const {
    if (d.is_zero()) throw SkeinError("SLaurent division by zero");
    if (is_zero()) return SLaurent();
    // top-down division; an exact quotient has lowest exponent lo() - d.lo()
    SLaurent rem = *this;
    SLaurent q;
    int dh = d.hi();
    int q_floor = lo() - d.lo();
    const Int& dl = d.coeff_[d.coeff_.size() - 1];
    while (!rem.is_zero()) {
        int rh = rem.hi();
        if (rh - dh < q_floor) throw SkeinError("SLaurent division not exact");
        Int lead = rem.coeff(rh);
        Int qc = lead / dl;
        if (qc * dl != lead) throw SkeinError("SLaurent division not exact");
        SLaurent t = monomial(qc, rh - dh);
        q = q + t;
        rem = rem - t * d;
    }
    return q;
}

std::string SLaurent::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms()) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Int a = abs(c);
        if (a != 1 || e == 0) os << a.get_str();
        if (e != 0) {
            if (a != 1) os << "*";
            os << "s";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

namespace {

// plain polynomial views (lowest exponent 0) for gcd work
struct Poly {
    std::vector<Int> c;  // c[i] coeff of s^i, back() nonzero unless empty
    bool zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
};

Poly poly_of(const SLaurent& p) {
    Poly out;
    if (p.is_zero()) return out;
    auto ts = p.terms();
    out.c.assign(p.hi() - p.lo() + 1, Int(0));
    for (auto& [e, co] : ts) out.c[e - p.lo()] = co;
    return out;
}

Poly primitive(Poly p) {
    p.trim();
    if (p.zero()) return p;
    Int g = 0;
    for (auto& x : p.c) g = int_gcd(g, x);
    if (p.c.back() < 0) g = -g;
    for (auto& x : p.c) x /= g;
    return p;
}

Poly scaled_sub(const Poly& a, const Int& fa, const Poly& b, const Int& fb, int shift) {
    // fa*a - fb*s^shift*b
    Poly r;
    size_t n = std::max(a.c.size(), b.c.size() + shift);
    r.c.assign(n, Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = fa * a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i + shift] -= fb * b.c[i];
    r.trim();
    return r;
}

Poly poly_gcd(Poly a, Poly b) {
    a = primitive(a);
    b = primitive(b);
    if (a.zero()) return b;
    if (b.zero()) return a;
    if (a.deg() < b.deg()) std::swap(a, b);
    while (!b.zero()) {
        // primitive pseudo-remainder sequence
        Poly r = a;
        while (!r.zero() && r.deg() >= b.deg()) {
            int shift = r.deg() - b.deg();
            r = scaled_sub(r, b.c.back(), b, r.c.back(), shift);
        }
        a = b;
        b = primitive(r);
    }
    return a;
}

}  // namespace

SLaurent laurent_gcd(const SLaurent& a, const SLaurent& b) {
    if (a.is_zero() && b.is_zero()) return SLaurent();
    if (a.is_zero() || b.is_zero()) {
        const SLaurent& p = a.is_zero() ? b : a;
        Int cont = p.signed_content();
        SLaurent pp = p.divided_by(SLaurent::monomial(cont, p.lo()));
        return SLaurent(cont < 0 ? Int(-cont) : cont) * pp;
    }
    Int cont = int_gcd(a.signed_content(), b.signed_content());
    if (cont < 0) cont = -cont;
    Poly g = poly_gcd(poly_of(a), poly_of(b));
    SLaurent out;
    for (size_t i = 0; i < g.c.size(); ++i)
        out = out + SLaurent::monomial(g.c[i] * cont, static_cast<int>(i));
    return out;
}

// ---------------------------------------------------------------------------
// SFraction
// ---------------------------------------------------------------------------

SFraction::SFraction(SLaurent numerator, SLaurent denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    reduce();
}

void SFraction::reduce() {
    if (den_.is_zero()) throw SkeinError("SFraction with zero denominator");
    if (num_.is_zero()) {
        den_ = SLaurent(1);
        return;
    }
    // move the denominator's s-unit into the numerator
    if (den_.lo() != 0) {
        num_ = num_ * SLaurent::s_power(-den_.lo());
        den_ = den_ * SLaurent::s_power(-den_.lo());
    }
    SLaurent g = laurent_gcd(num_, den_);
    // gcd is unit-free; align its lowest exponent with num's unit part
    if (!g.is_one()) {
        num_ = num_.divided_by(g);
        den_ = den_.divided_by(g);
    }
    if (den_.coeff(den_.hi()) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

SFraction SFraction::operator-() const {
    SFraction r = *this;
    r.num_ = -r.num_;
    return r;
}

SFraction SFraction::operator+(const SFraction& o) const {
    return SFraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

SFraction SFraction::operator-(const SFraction& o) const { return *this + (-o); }

SFraction SFraction::operator*(const SFraction& o) const {
    return SFraction(num_ * o.num_, den_ * o.den_);
}

SFraction SFraction::operator/(const SFraction& o) const {
    if (o.is_zero()) throw SkeinError("SFraction division by zero");
    return SFraction(num_ * o.den_, den_ * o.num_);
}

SFraction SFraction::conjugated() const {
    return SFraction(num_.conjugated(), den_.conjugated());
}

std::string SFraction::str() const {
    if (is_integral()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

// ---------------------------------------------------------------------------
// ZForm
// ---------------------------------------------------------------------------

ZForm::ZForm(long value) {
    if (value != 0) t_[{0, 0}] = value;
}

ZForm ZForm::monomial(Int coeff, int v_exp, int z_exp) {
    ZForm r;
    if (coeff != 0) r.t_[{v_exp, z_exp}] = std::move(coeff);
    return r;
}

ZForm ZForm::delta() {
    return monomial(1, -1, -1) + monomial(-1, 1, -1);
}

Int ZForm::coeff(int v_exp, int z_exp) const {
    auto it = t_.find({v_exp, z_exp});
    return it == t_.end() ? Int(0) : it->second;
}

int ZForm::min_z_degree() const {
    if (is_zero()) throw SkeinError("min_z_degree of zero");
    int m = t_.begin()->first.second;
    for (auto& [k, c] : t_) m = std::min(m, k.second);
    return m;
}

ZForm ZForm::operator-() const {
    ZForm r = *this;
    for (auto& [k, c] : r.t_) c = -c;
    return r;
}

ZForm& ZForm::operator+=(const ZForm& o) {
    for (auto& [k, c] : o.t_) {
        auto it = t_.find(k);
        if (it == t_.end()) {
            t_[k] = c;
        } else {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }
    return *this;
}

ZForm ZForm::operator+(const ZForm& o) const {
    ZForm r = *this;
    r += o;
    return r;
}

ZForm ZForm::operator-(const ZForm& o) const { return *this + (-o); }

ZForm ZForm::operator*(const ZForm& o) const {
    ZForm r;
    for (auto& [k1, c1] : t_)
        for (auto& [k2, c2] : o.t_) {
            auto key = std::make_pair(k1.first + k2.first, k1.second + k2.second);
            auto it = r.t_.find(key);
            if (it == r.t_.end()) {
                r.t_[key] = c1 * c2;
            } else {
                it->second += c1 * c2;
                if (it->second == 0) r.t_.erase(it);
            }
        }
    return r;
}

ZForm ZForm::shifted(Int coeff, int v_exp, int z_exp) const {
    ZForm r;
    if (coeff == 0) return r;
    for (auto& [k, c] : t_) r.t_[{k.first + v_exp, k.second + z_exp}] = c * coeff;
    return r;
}

ZForm ZForm::divided_by(const ZForm& d) const {
    if (d.is_zero()) throw SkeinError("ZForm division by zero");
    if (is_zero()) return ZForm();
    // lex division by a single divisor (v major, z minor); an exact quotient
    // has every exponent bounded below by the min-grade differences
    auto lex_lead = [](const std::map<std::pair<int, int>, Int>& t) {
        return t.rbegin();
    };
    auto min_exps = [](const std::map<std::pair<int, int>, Int>& t) {
        int mv = t.begin()->first.first, mz = t.begin()->first.second;
        for (auto& [k, c] : t) {
            mv = std::min(mv, k.first);
            mz = std::min(mz, k.second);
        }
        return std::make_pair(mv, mz);
    };
    auto dl = lex_lead(d.t_);
    auto [nv, nz] = min_exps(t_);
    auto [dv, dz] = min_exps(d.t_);
    int qv_floor = nv - dv, qz_floor = nz - dz;
    ZForm rem = *this;
    ZForm q;
    while (!rem.is_zero()) {
        auto rl = lex_lead(rem.t_);
        int qv = rl->first.first - dl->first.first;
        int qz = rl->first.second - dl->first.second;
        if (qv < qv_floor || qz < qz_floor)
            throw SkeinError("ZForm division not exact");
        Int qc = rl->second / dl->second;
        if (qc * dl->second != rl->second)
            throw SkeinError("ZForm division not exact");
        q += monomial(qc, qv, qz);
        rem = rem - d.shifted(qc, qv, qz);
    }
    return q;
}

ZForm ZForm::mod2() const {
    ZForm r;
    for (auto& [k, c] : t_)
        if (c % 2 != 0) r.t_[k] = 1;
    return r;
}

ZForm ZForm::mirrored() const {
    ZForm r;
    for (auto& [k, c] : t_) r.t_[{-k.first, k.second}] = c;
    return r;
}

std::string ZForm::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : t_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Int a = abs(c);
        bool unit = (a == 1) && (k.first != 0 || k.second != 0);
        if (!unit) os << a.get_str();
        if (k.first != 0) {
            if (!unit) os << "*";
            os << "v";
            if (k.first != 1) os << "^" << k.first;
            unit = false;
        }
        if (k.second != 0) {
            if (!unit && k.first != 0) os << "*";
            os << "z";
            if (k.second != 1) os << "^" << k.second;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// IntLaurent2
// ---------------------------------------------------------------------------

IntLaurent2::IntLaurent2(long value) {
    if (value != 0) t_[{0, 0}] = value;
}

IntLaurent2 IntLaurent2::monomial(Int coeff, int v_exp, int s_exp) {
    IntLaurent2 r;
    if (coeff != 0) r.t_[{v_exp, s_exp}] = std::move(coeff);
    return r;
}

Int IntLaurent2::coeff(int v_exp, int s_exp) const {
    auto it = t_.find({v_exp, s_exp});
    return it == t_.end() ? Int(0) : it->second;
}

IntLaurent2 IntLaurent2::operator-() const {
    IntLaurent2 r = *this;
    for (auto& [k, c] : r.t_) c = -c;
    return r;
}

IntLaurent2 IntLaurent2::operator+(const IntLaurent2& o) const {
    IntLaurent2 r = *this;
    for (auto& [k, c] : o.t_) {
        auto it = r.t_.find(k);
        if (it == r.t_.end()) {
            r.t_[k] = c;
        } else {
            it->second += c;
            if (it->second == 0) r.t_.erase(it);
        }
    }
    return r;
}

IntLaurent2 IntLaurent2::operator-(const IntLaurent2& o) const { return *this + (-o); }

IntLaurent2 IntLaurent2::operator*(const IntLaurent2& o) const {
    IntLaurent2 r;
    for (auto& [k1, c1] : t_)
        for (auto& [k2, c2] : o.t_) {
            auto key = std::make_pair(k1.first + k2.first, k1.second + k2.second);
            auto it = r.t_.find(key);
            if (it == r.t_.end()) {
                r.t_[key] = c1 * c2;
            } else {
                it->second += c1 * c2;
                if (it->second == 0) r.t_.erase(it);
            }
        }
    return r;
}

IntLaurent2 IntLaurent2::conjugated() const {
    IntLaurent2 r;
    for (auto& [k, c] : t_) {
        Int nc = (k.second % 2 == 0) ? c : -c;
        r.t_[{k.first, -k.second}] = nc;
    }
    return r;
}

SLaurent IntLaurent2::specialized(int N) const {
    SLaurent r;
    for (auto& [k, c] : t_) r = r + SLaurent::monomial(c, N * k.first + k.second);
    return r;
}

IntLaurent2 IntLaurent2::from_z_form(const ZForm& p) {
    IntLaurent2 r;
    for (auto& [k, c] : p.terms()) {
        if (k.second < 0)
            throw SkeinError("from_z_form: negative z power has no Laurent expansion");
        SLaurent zc = SLaurent::z_power(k.second);
        for (auto& [e, cc] : zc.terms())
            r = r + monomial(c * cc, k.first, e);
    }
    return r;
}

std::string IntLaurent2::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : t_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Int a = abs(c);
        bool printed = false;
        if (a != 1 || (k.first == 0 && k.second == 0)) {
            os << a.get_str();
            printed = true;
        }
        if (k.first != 0) {
            if (printed) os << "*";
            os << "v";
            if (k.first != 1) os << "^" << k.first;
            printed = true;
        }
        if (k.second != 0) {
            if (printed) os << "*";
            os << "s";
            if (k.second != 1) os << "^" << k.second;
        }
    }
    return os.str();
}

ZForm to_z_form(const IntLaurent2& p) {
    // column-by-column peeling: subtract c*z^d for the top s-degree term d
    std::map<int, SLaurent> columns;
    for (auto& [k, c] : p.terms())
        columns[k.first] = columns[k.first] + SLaurent::monomial(c, k.second);
    ZForm out;
    for (auto& [v, col] : columns) {
        SLaurent rem = col;
        while (!rem.is_zero()) {
            int d = rem.hi();
            if (d < 0)
                throw SkeinError("to_z_form: element is not in the z-subring");
            Int c = rem.coeff(d);
            out += ZForm::monomial(c, v, d);
            rem = rem - SLaurent(c) * SLaurent::z_power(d);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// LambdaScalar
// ---------------------------------------------------------------------------

LambdaScalar::LambdaScalar(long value) {
    if (value != 0) t_[0] = SFraction(value);
}

LambdaScalar::LambdaScalar(SFraction value) {
    if (!value.is_zero()) t_[0] = std::move(value);
}

LambdaScalar::LambdaScalar(const ZForm& p) {
    for (auto& [k, c] : p.terms()) {
        SFraction f = (k.second >= 0)
                          ? SFraction(SLaurent(c) * SLaurent::z_power(k.second))
                          : SFraction(SLaurent(c), SLaurent::z_power(-k.second));
        auto it = t_.find(k.first);
        if (it == t_.end()) {
            t_[k.first] = f;
        } else {
            it->second += f;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
}

LambdaScalar::LambdaScalar(const IntLaurent2& p) {
    for (auto& [k, c] : p.terms()) {
        SFraction f(SLaurent::monomial(c, k.second));
        auto it = t_.find(k.first);
        if (it == t_.end()) {
            t_[k.first] = f;
        } else {
            it->second += f;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
}

LambdaScalar LambdaScalar::monomial(SFraction coeff, int v_exp) {
    LambdaScalar r;
    if (!coeff.is_zero()) r.t_[v_exp] = std::move(coeff);
    return r;
}

SFraction LambdaScalar::coeff(int v_exp) const {
    auto it = t_.find(v_exp);
    return it == t_.end() ? SFraction() : it->second;
}

LambdaScalar LambdaScalar::operator-() const {
    LambdaScalar r = *this;
    for (auto& [k, c] : r.t_) c = -c;
    return r;
}

LambdaScalar& LambdaScalar::operator+=(const LambdaScalar& o) {
    for (auto& [k, c] : o.t_) {
        auto it = t_.find(k);
        if (it == t_.end()) {
            t_[k] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    return *this;
}

LambdaScalar LambdaScalar::operator+(const LambdaScalar& o) const {
    LambdaScalar r = *this;
    r += o;
    return r;
}

LambdaScalar LambdaScalar::operator-(const LambdaScalar& o) const {
    return *this + (-o);
}

LambdaScalar LambdaScalar::operator*(const LambdaScalar& o) const {
    LambdaScalar r;
    for (auto& [k1, c1] : t_)
        for (auto& [k2, c2] : o.t_) {
            SFraction p = c1 * c2;
            if (p.is_zero()) continue;
            auto it = r.t_.find(k1 + k2);
            if (it == r.t_.end()) {
                r.t_[k1 + k2] = p;
            } else {
                it->second += p;
                if (it->second.is_zero()) r.t_.erase(it);
            }
        }
    return r;
}

LambdaScalar LambdaScalar::conjugated() const {
    LambdaScalar r;
    for (auto& [k, c] : t_) r.t_[k] = c.conjugated();
    return r;
}

std::optional<IntLaurent2> LambdaScalar::to_int_laurent() const {
    IntLaurent2 out;
    for (auto& [v, f] : t_) {
        if (!f.is_integral()) return std::nullopt;
        for (auto& [e, c] : f.num().terms())
            out = out + IntLaurent2::monomial(c, v, e);
    }
    return out;
}

std::string LambdaScalar::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [v, f] : t_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << f.str() << ")";
        if (v != 0) os << "*v^" << v;
    }
    return os.str();
}

LambdaScalar exact_divide(const LambdaScalar& num, const LambdaScalar& den) {
    if (den.is_zero()) throw SkeinError("exact_divide: division by zero");
    if (num.is_zero()) return LambdaScalar();
    const auto& dt = den.terms();
    int den_hi = dt.rbegin()->first;
    int den_lo = dt.begin()->first;
    int num_lo = num.terms().begin()->first;
    LambdaScalar rem = num;
    LambdaScalar q;
    while (!rem.is_zero()) {
        const auto& rt = rem.terms();
        int rh = rt.rbegin()->first;
        int qv = rh - den_hi;
        if (qv < num_lo - den_lo)
            throw SkeinError("exact_divide: quotient is not a Laurent polynomial in v");
        SFraction qc = rt.rbegin()->second / dt.rbegin()->second;
        LambdaScalar t = LambdaScalar::monomial(qc, qv);
        q += t;
        rem = rem - t * den;
    }
    return q;
}

Specialization specialize_v(const LambdaScalar& p, int N) {
    SFraction acc;
    for (auto& [v, f] : p.terms())
        acc += f * SFraction(SLaurent::s_power(N * v));
    return {acc, acc.is_integral()};
}

}  // namespace skc

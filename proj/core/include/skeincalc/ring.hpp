#ifndef SKEINCALC_RING_HPP
#define SKEINCALC_RING_HPP

/*
 * Exact coefficient arithmetic for the skein calculus.
 *
 * Four scalar types, all immutable-after-construction and safe to read
 * concurrently:
 *
 *   SLaurent     integer Laurent polynomials in s
 *   SFraction    quotients of SLaurent, kept in lowest terms
 *   ZForm        integer Laurent polynomials in v and z (z = s - s^{-1})
 *   IntLaurent2  integer Laurent polynomials in v and s
 *   LambdaScalar Laurent polynomials in v with SFraction coefficients
 *
 * The resolution engine works in ZForm (its coefficients provably stay
 * there); LambdaScalar absorbs the quantum-integer denominators coming
 * from symmetrizer normalizations and final quotients.
 */

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace skc {

using Int = mpz_class;

struct SkeinError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// SLaurent: Laurent polynomial in s over Z, dense storage with an offset.
// ---------------------------------------------------------------------------
class SLaurent {
public:
    SLaurent() = default;
    SLaurent(long value);
    explicit SLaurent(Int value);
    static SLaurent monomial(Int coeff, int exp);
    static SLaurent s_power(int exp) { return monomial(1, exp); }
    // (s - s^{-1})^k, k >= 0
    static SLaurent z_power(int k);

    bool is_zero() const { return coeff_.empty(); }
    bool is_one() const;
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(coeff_.size()) - 1; }
    Int coeff(int exp) const;
    // map exponent -> coefficient, zero entries omitted
    std::map<int, Int> terms() const;

    SLaurent operator-() const;
    SLaurent operator+(const SLaurent& o) const;
    SLaurent operator-(const SLaurent& o) const;
    SLaurent operator*(const SLaurent& o) const;
    SLaurent& operator+=(const SLaurent& o) { return *this = *this + o; }
    SLaurent& operator*=(const SLaurent& o) { return *this = *this * o; }
    bool operator==(const SLaurent& o) const {
        return lo_ == o.lo_ && coeff_ == o.coeff_;
    }

    // s -> -s^{-1}
    SLaurent conjugated() const;
    // integer content together with the sign of the leading coefficient
    Int signed_content() const;
    // exact division, throws SkeinError if not divisible
    SLaurent divided_by(const SLaurent& d) const;
    // true when the value is +-s^k
    bool is_unit_monomial() const;

    std::string str() const;

private:
    void normalize();
    int lo_ = 0;
    std::vector<Int> coeff_;  // coeff_[i] multiplies s^(lo_+i); ends nonzero

    friend SLaurent laurent_gcd(const SLaurent& a, const SLaurent& b);
};

// gcd including integer content; result has positive leading coefficient
// and lowest exponent 0
SLaurent laurent_gcd(const SLaurent& a, const SLaurent& b);

// ---------------------------------------------------------------------------
// SFraction: num/den of SLaurent in canonical form: den nonzero with lowest
// exponent 0, positive leading coefficient, gcd(num, den) = 1.
// ---------------------------------------------------------------------------
class SFraction {
public:
    SFraction() : num_(), den_(1) {}
    SFraction(long value) : num_(value), den_(1) {}
    SFraction(SLaurent numerator) : num_(std::move(numerator)), den_(1) {}
    SFraction(SLaurent numerator, SLaurent denominator);

    const SLaurent& num() const { return num_; }
    const SLaurent& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integral() const { return den_.is_one(); }

    SFraction operator-() const;
    SFraction operator+(const SFraction& o) const;
    SFraction operator-(const SFraction& o) const;
    SFraction operator*(const SFraction& o) const;
    SFraction operator/(const SFraction& o) const;
    SFraction& operator+=(const SFraction& o) { return *this = *this + o; }
    bool operator==(const SFraction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

    SFraction conjugated() const;  // s -> -s^{-1}
    std::string str() const;

private:
    void reduce();
    SLaurent num_, den_;
};

// ---------------------------------------------------------------------------
// ZForm: element of Z[v^{+-1}, z^{+-1}], sparse.
// Doubles as the engine coefficient ring and as the z-indexed table form of
// integral invariants (where only z >= 0 occurs).
// ---------------------------------------------------------------------------
class ZForm {
public:
    ZForm() = default;
    ZForm(long value);
    static ZForm monomial(Int coeff, int v_exp, int z_exp);
    // (v^{-1} - v) z^{-1}, the removed-circle value
    static ZForm delta();

    bool is_zero() const { return t_.empty(); }
    const std::map<std::pair<int, int>, Int>& terms() const { return t_; }
    Int coeff(int v_exp, int z_exp) const;
    int min_z_degree() const;  // throws on zero

    ZForm operator-() const;
    ZForm operator+(const ZForm& o) const;
    ZForm operator-(const ZForm& o) const;
    ZForm operator*(const ZForm& o) const;
    ZForm& operator+=(const ZForm& o);
    ZForm& operator*=(const ZForm& o) { return *this = *this * o; }
    bool operator==(const ZForm& o) const { return t_ == o.t_; }

    // multiply by c v^a z^b
    ZForm shifted(Int coeff, int v_exp, int z_exp) const;
    // exact division, throws SkeinError when the quotient does not exist
    ZForm divided_by(const ZForm& d) const;
    // coefficients reduced mod 2 (representatives 0/1)
    ZForm mod2() const;
    // v -> v^{-1}
    ZForm mirrored() const;

    std::string str() const;

private:
    std::map<std::pair<int, int>, Int> t_;  // (v exp, z exp) -> coeff
};

// ---------------------------------------------------------------------------
// IntLaurent2: element of Z[v^{+-1}, s^{+-1}], sparse.
// ---------------------------------------------------------------------------
class IntLaurent2 {
public:
    IntLaurent2() = default;
    IntLaurent2(long value);
    static IntLaurent2 monomial(Int coeff, int v_exp, int s_exp);

    bool is_zero() const { return t_.empty(); }
    const std::map<std::pair<int, int>, Int>& terms() const { return t_; }
    Int coeff(int v_exp, int s_exp) const;

    IntLaurent2 operator-() const;
    IntLaurent2 operator+(const IntLaurent2& o) const;
    IntLaurent2 operator-(const IntLaurent2& o) const;
    IntLaurent2 operator*(const IntLaurent2& o) const;
    bool operator==(const IntLaurent2& o) const { return t_ == o.t_; }

    IntLaurent2 conjugated() const;        // s -> -s^{-1}
    SLaurent specialized(int N) const;     // v -> s^N
    static IntLaurent2 from_z_form(const ZForm& p);  // needs z >= 0
    std::string str() const;

private:
    std::map<std::pair<int, int>, Int> t_;
};

// Rewrites p in Z[v^{+-1}][z] by per-v-power leading-term peeling.
// Throws SkeinError when p is not in the z-subring.
ZForm to_z_form(const IntLaurent2& p);

inline ZForm mod2_reduce(const ZForm& p) { return p.mod2(); }

// ---------------------------------------------------------------------------
// LambdaScalar: Laurent polynomial in v with SFraction coefficients.
// ---------------------------------------------------------------------------
class LambdaScalar {
public:
    LambdaScalar() = default;
    LambdaScalar(long value);
    LambdaScalar(SFraction value);
    LambdaScalar(const ZForm& p);
    LambdaScalar(const IntLaurent2& p);
    static LambdaScalar monomial(SFraction coeff, int v_exp);

    bool is_zero() const { return t_.empty(); }
    const std::map<int, SFraction>& terms() const { return t_; }
    SFraction coeff(int v_exp) const;

    LambdaScalar operator-() const;
    LambdaScalar operator+(const LambdaScalar& o) const;
    LambdaScalar operator-(const LambdaScalar& o) const;
    LambdaScalar operator*(const LambdaScalar& o) const;
    LambdaScalar& operator+=(const LambdaScalar& o);
    LambdaScalar& operator*=(const LambdaScalar& o) { return *this = *this * o; }
    bool operator==(const LambdaScalar& o) const { return t_ == o.t_; }

    LambdaScalar conjugated() const;  // s -> -s^{-1}
    // lossless when every coefficient has unit denominator
    std::optional<IntLaurent2> to_int_laurent() const;
    std::string str() const;

private:
    std::map<int, SFraction> t_;
};

// Exact quotient q with q * den = num; throws SkeinError on den = 0 and when
// no polynomial quotient exists.
LambdaScalar exact_divide(const LambdaScalar& num, const LambdaScalar& den);

struct Specialization {
    SFraction value;
    bool integral;  // true when the result cleared all denominators
};

// v -> s^N, per term, reduced
Specialization specialize_v(const LambdaScalar& p, int N);

}  // namespace skc

#endif

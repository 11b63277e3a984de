#include <doctest.h>

#include <random>

#include "skeincalc/ring.hpp"

using namespace skc;

namespace {

// small random elements for property checks
LambdaScalar random_lambda(std::mt19937& rng) {
    std::uniform_int_distribution<int> exp(-3, 3), coeff(-4, 4), nterms(1, 4);
    LambdaScalar out;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        SLaurent num = SLaurent::monomial(coeff(rng), exp(rng)) +
                       SLaurent::monomial(coeff(rng), exp(rng));
        if (num.is_zero()) continue;
        SLaurent den = SLaurent::z_power(std::abs(exp(rng)) % 3);
        out += LambdaScalar::monomial(SFraction(num, den), exp(rng));
    }
    return out;
}

IntLaurent2 random_int_laurent(std::mt19937& rng) {
    std::uniform_int_distribution<int> exp(-3, 3), coeff(-4, 4), nterms(1, 5);
    IntLaurent2 out;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i)
        out = out + IntLaurent2::monomial(coeff(rng), exp(rng), exp(rng));
    return out;
}

ZForm random_z_form(std::mt19937& rng) {
    std::uniform_int_distribution<int> exp(-2, 3), coeff(-4, 4), nterms(1, 4);
    ZForm out;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i)
        out += ZForm::monomial(coeff(rng), exp(rng), std::abs(exp(rng)));
    return out;
}

}  // namespace

TEST_CASE("SLaurent basics") {
    SLaurent z = SLaurent::z_power(1);
    CHECK(z == SLaurent::monomial(1, 1) + SLaurent::monomial(-1, -1));
    CHECK(SLaurent::z_power(2) ==
          SLaurent::monomial(1, 2) + SLaurent::monomial(-2, 0) + SLaurent::monomial(1, -2));
    CHECK((z * z - SLaurent::z_power(2)).is_zero());
    // s -> -s^{-1} fixes z
    CHECK(z.conjugated() == z);
    SLaurent p = SLaurent::monomial(6, 2) + SLaurent::monomial(-4, 0);
    SLaurent q = SLaurent::monomial(3, 1) + SLaurent::monomial(-2, -1);
    CHECK(p.divided_by(q) == SLaurent::monomial(2, 1));
}

TEST_CASE("SFraction reduction") {
    // {2}/{1} = s + s^{-1}
    SFraction f(SLaurent::monomial(1, 2) + SLaurent::monomial(-1, -2), SLaurent::z_power(1));
    CHECK(f.is_integral());
    CHECK(f.num() == SLaurent::monomial(1, 1) + SLaurent::monomial(1, -1));

    SFraction third(SLaurent(2), SLaurent(6));
    CHECK(third.num() == SLaurent(1));
    CHECK(third.den() == SLaurent(3));

    SFraction g(SLaurent(1), SLaurent::z_power(1));
    CHECK((g * SFraction(SLaurent::z_power(1))) == SFraction(1));
    CHECK_THROWS_AS(SFraction(SLaurent(1), SLaurent()), SkeinError);
}

TEST_CASE("ring axioms on random elements") {
    std::mt19937 rng(7);
    for (int i = 0; i < 40; ++i) {
        LambdaScalar a = random_lambda(rng), b = random_lambda(rng), c = random_lambda(rng);
        CHECK((a + b) == (b + a));
        CHECK((a * b) == (b * a));
        CHECK(((a + b) + c) == (a + (b + c)));
        CHECK(((a * b) * c) == (a * (b * c)));
        CHECK((a * (b + c)) == (a * b + a * c));
        CHECK((a * LambdaScalar(1)) == a);
        CHECK((a + LambdaScalar()) == a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("exact_divide") {
    std::mt19937 rng(11);
    // (s^2 - s^{-2}) / (s - s^{-1}) = s + s^{-1}
    LambdaScalar num{SFraction(SLaurent::monomial(1, 2) + SLaurent::monomial(-1, -2))};
    LambdaScalar den{SFraction(SLaurent::z_power(1))};
    LambdaScalar q = exact_divide(num, den);
    CHECK(q == LambdaScalar{SFraction(SLaurent::monomial(1, 1) + SLaurent::monomial(1, -1))});

    for (int i = 0; i < 30; ++i) {
        LambdaScalar a = random_lambda(rng), b = random_lambda(rng);
        if (b.is_zero()) continue;
        CHECK(exact_divide(a * b, b) == a);
        // x / 1 = x
        CHECK(exact_divide(a, LambdaScalar(1)) == a);
    }
    CHECK_THROWS_AS(exact_divide(LambdaScalar(1), LambdaScalar()), SkeinError);
    // 1 / (1 + v) has no Laurent-polynomial quotient in v
    LambdaScalar onev = LambdaScalar(1) + LambdaScalar::monomial(SFraction(1), 1);
    CHECK_THROWS_AS(exact_divide(LambdaScalar(1), onev), SkeinError);
}

TEST_CASE("to_z_form peeling") {
    // s - s^{-1} -> z
    IntLaurent2 z2 = IntLaurent2::monomial(1, 0, 1) + IntLaurent2::monomial(-1, 0, -1);
    CHECK(to_z_form(z2) == ZForm::monomial(1, 0, 1));
    // s^2 - 2 + s^{-2} -> z^2
    IntLaurent2 sq = IntLaurent2::monomial(1, 0, 2) + IntLaurent2::monomial(-2, 0, 0) +
                     IntLaurent2::monomial(1, 0, -2);
    CHECK(to_z_form(sq) == ZForm::monomial(1, 0, 2));
    // round trip on random z-subring elements
    std::mt19937 rng(3);
    for (int i = 0; i < 40; ++i) {
        ZForm p = random_z_form(rng);
        CHECK(to_z_form(IntLaurent2::from_z_form(p)) == p);
    }
    // elements outside the subring error out
    CHECK_THROWS_AS(to_z_form(IntLaurent2::monomial(1, 0, 1)), SkeinError);
    CHECK_THROWS_AS(
        to_z_form(IntLaurent2::monomial(1, 0, 1) + IntLaurent2::monomial(1, 0, -1)),
        SkeinError);
}

TEST_CASE("specialize_v") {
    // (v^{-1} - v)/(s - s^{-1}) at N=2 -> -(s + s^{-1})
    LambdaScalar p = LambdaScalar::monomial(SFraction(SLaurent(1), SLaurent::z_power(1)), -1) +
                     LambdaScalar::monomial(SFraction(SLaurent(-1), SLaurent::z_power(1)), 1);
    auto sp = specialize_v(p, 2);
    CHECK(sp.integral);
    CHECK(sp.value.num() == SLaurent::monomial(-1, 1) + SLaurent::monomial(-1, -1));

    // v^2 at N=3 -> s^6
    auto v2 = specialize_v(LambdaScalar::monomial(SFraction(1), 2), 3);
    CHECK(v2.integral);
    CHECK(v2.value.num() == SLaurent::s_power(6));

    // multiplicativity
    std::mt19937 rng(5);
    for (int i = 0; i < 25; ++i) {
        LambdaScalar a = random_lambda(rng), b = random_lambda(rng);
        auto lhs = specialize_v(a * b, 2);
        auto rhs = specialize_v(a, 2).value * specialize_v(b, 2).value;
        CHECK(lhs.value == rhs);
    }
}

TEST_CASE("mod2_reduce") {
    // 3 - 2z^2 -> 1
    ZForm p = ZForm::monomial(3, 0, 0) + ZForm::monomial(-2, 0, 2);
    CHECK(mod2_reduce(p) == ZForm(1));
    CHECK(mod2_reduce(ZForm::monomial(4, 1, 1)).is_zero());
}

TEST_CASE("IntLaurent2 conjugation and specialization") {
    IntLaurent2 p = IntLaurent2::monomial(2, 1, 3) + IntLaurent2::monomial(5, -1, 2);
    IntLaurent2 c = p.conjugated();
    CHECK(c == IntLaurent2::monomial(-2, 1, -3) + IntLaurent2::monomial(5, -1, -2));
    CHECK(c.conjugated() == p);
    CHECK(p.specialized(2) == SLaurent::monomial(2, 5) + SLaurent::monomial(5, 0));

    std::mt19937 rng(17);
    for (int i = 0; i < 25; ++i) {
        IntLaurent2 a = random_int_laurent(rng), b = random_int_laurent(rng);
        CHECK((a * b).conjugated() == a.conjugated() * b.conjugated());
    }
}

TEST_CASE("ZForm division and delta") {
    ZForm d = ZForm::delta();
    ZForm prod = d * d * ZForm::monomial(3, 2, 1);
    CHECK(prod.divided_by(d) == d * ZForm::monomial(3, 2, 1));
    CHECK((d * d - ZForm(1)).min_z_degree() == -2);
    CHECK_THROWS_AS(ZForm(1).divided_by(d), SkeinError);

    std::mt19937 rng(23);
    for (int i = 0; i < 30; ++i) {
        ZForm a = random_z_form(rng), b = random_z_form(rng);
        if (b.is_zero()) continue;
        CHECK((a * b).divided_by(b) == a);
    }
}

TEST_CASE("LambdaScalar conversions") {
    // ZForm with negative z powers converts through fractions and back
    ZForm d = ZForm::delta();
    LambdaScalar ld(d);
    LambdaScalar z(ZForm::monomial(1, 0, 1));
    LambdaScalar vdiff(ZForm::monomial(1, -1, 0) + ZForm::monomial(-1, 1, 0));
    CHECK(ld * z == vdiff);

    std::mt19937 rng(29);
    for (int i = 0; i < 25; ++i) {
        IntLaurent2 p = random_int_laurent(rng);
        auto back = LambdaScalar(p).to_int_laurent();
        REQUIRE(back.has_value());
        CHECK(*back == p);
    }
    // non-integral scalars refuse conversion
    LambdaScalar frac{SFraction(SLaurent(1), SLaurent::z_power(1))};
    CHECK_FALSE(frac.to_int_laurent().has_value());
}

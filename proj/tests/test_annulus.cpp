#include <doctest.h>

#include "skeincalc/annulus.hpp"

using namespace skc;

namespace {

AnnulusElement h(int k) { return AnnulusElement::h(k); }
AnnulusElement hs(int k) { return AnnulusElement::hstar(k); }

Partition parts(std::vector<int> p) { return Partition(std::move(p)); }
const Partition phi{};

}  // namespace

TEST_CASE("generator algebra") {
    CHECK(h(0) == AnnulusElement(1));
    CHECK(hs(0) == AnnulusElement(1));
    CHECK(h(-1).is_zero());
    CHECK(h(2) * h(1) == h(1) * h(2));
    CHECK((h(1) * hs(1)) == (hs(1) * h(1)));
    CHECK(h(1) * h(1) * h(1) == h(1) * (h(1) * h(1)));
}

TEST_CASE("determinantal eigenvector elements") {
    // Q_{(1),(1)} = h1 h*1 - 1
    CHECK(q_element(parts({1}), parts({1})) == h(1) * hs(1) - AnnulusElement(1));
    // empty partitions: the empty determinant is 1
    CHECK(q_element(phi, phi) == AnnulusElement(1));
    // single-row lambda: Q_(n) = h_n
    CHECK(q_element(parts({2}), phi) == h(2));
    CHECK(q_element(parts({4}), phi) == h(4));
    // single columns via the shifting rule
    CHECK(q_element(parts({1, 1}), phi) == h(1) * h(1) - h(2));
    CHECK(q_element(parts({2, 1}), phi) == h(2) * h(1) - h(3));
    // mu-only elements mirror the lambda-only ones
    CHECK(q_element(phi, parts({1, 1})) == hs(1) * hs(1) - hs(2));
}

TEST_CASE("the displayed 5x5 matrix") {
    auto M = q_matrix(parts({2, 2, 1}), parts({3, 2}));
    REQUIRE(M.size() == 5);
    auto row = [&](int i) { return M[i]; };
    // h*_2 h*_1 1 0 0
    CHECK(row(0) == std::vector<AnnulusElement>{hs(2), hs(1), AnnulusElement(1),
                                                AnnulusElement(), AnnulusElement()});
    // h*_4 h*_3 h*_2 h*_1 1
    CHECK(row(1) == std::vector<AnnulusElement>{hs(4), hs(3), hs(2), hs(1),
                                                AnnulusElement(1)});
    // 1 h_1 h_2 h_3 h_4
    CHECK(row(2) == std::vector<AnnulusElement>{AnnulusElement(1), h(1), h(2), h(3), h(4)});
    // 0 1 h_1 h_2 h_3
    CHECK(row(3) == std::vector<AnnulusElement>{AnnulusElement(), AnnulusElement(1), h(1),
                                                h(2), h(3)});
    // 0 0 0 1 h_1
    CHECK(row(4) == std::vector<AnnulusElement>{AnnulusElement(), AnnulusElement(),
                                                AnnulusElement(), AnnulusElement(1), h(1)});
}

TEST_CASE("star symmetry") {
    CHECK(h(2).star() == hs(2));
    AnnulusElement q11 = q_element(parts({1}), parts({1}));
    CHECK(q11.star() == q11);
    for (auto& [l, m] : std::vector<std::pair<Partition, Partition>>{
             {parts({1}), parts({1})},
             {parts({2}), parts({1})},
             {parts({2, 1}), parts({2})},
             {parts({2, 2, 1}), parts({3, 2})}}) {
        AnnulusElement q = q_element(l, m);
        CHECK(q.star() == q_element(m, l));
        CHECK(q.star().star() == q);
    }
    // star is an algebra map
    AnnulusElement a = h(2) * hs(1) + h(1);
    AnnulusElement b = hs(2) - h(1) * h(1);
    CHECK((a * b).star() == a.star() * b.star());
}

TEST_CASE("bidegree bookkeeping") {
    for (auto& [l, m] : std::vector<std::pair<Partition, Partition>>{
             {parts({1}), parts({1})},
             {parts({2}), parts({1})},
             {parts({2, 2, 1}), parts({3, 2})}}) {
        AnnulusElement q = q_element(l, m);
        int n = l.size(), p = m.size();
        for (auto& [mono, c] : q.terms()) {
            CHECK(mono.up_weight() - mono.down_weight() == n - p);
            CHECK(mono.up_weight() <= n + std::min(n, p));
        }
    }
}

TEST_CASE("pattern expansion") {
    // h_1: a single one-strand decoration
    PatternExpansion p1 = expand_to_patterns(h(1));
    REQUIRE(p1.terms.size() == 1);
    REQUIRE(p1.terms[0].groups.size() == 1);
    CHECK(p1.terms[0].groups[0].strands == 1);
    CHECK_FALSE(p1.terms[0].groups[0].reversed);
    CHECK(p1.terms[0].coeff == LambdaScalar(1));

    // h_2: identity and sigma_1, weighted 1/(1+s^2) and s/(1+s^2)
    PatternExpansion p2 = expand_to_patterns(h(2));
    REQUIRE(p2.terms.size() == 2);
    SLaurent norm = SLaurent(1) + SLaurent::s_power(2);
    LambdaScalar sum;
    for (auto& t : p2.terms) {
        REQUIRE(t.groups.size() == 1);
        CHECK(t.groups[0].strands == 2);
        if (t.groups[0].braid_word.empty())
            CHECK(t.coeff == LambdaScalar(SFraction(SLaurent(1), norm)));
        else
            CHECK(t.coeff == LambdaScalar(SFraction(SLaurent::s_power(1), norm)));
        sum += t.coeff;
    }

    // h_1 h*_1: one decoration with two concentric groups
    PatternExpansion p11 = expand_to_patterns(h(1) * hs(1));
    REQUIRE(p11.terms.size() == 1);
    REQUIRE(p11.terms[0].groups.size() == 2);
    CHECK(p11.terms[0].up_strands() == 1);
    CHECK(p11.terms[0].down_strands() == 1);

    // expansion respects products: h_2 h*_2 has 2 x 2 decorations
    PatternExpansion p22 = expand_to_patterns(h(2) * hs(2));
    CHECK(p22.terms.size() == 4);
    for (auto& t : p22.terms) {
        CHECK(t.up_strands() == 2);
        CHECK(t.down_strands() == 2);
    }

    // the empty monomial expands to the empty decoration
    PatternExpansion pe = expand_to_patterns(AnnulusElement(1));
    REQUIRE(pe.terms.size() == 1);
    CHECK(pe.terms[0].groups.empty());
}

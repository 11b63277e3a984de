#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "skeincalc/diagram.hpp"
#include "skeincalc/skein.hpp"

using namespace skc;
using skc::testing::oracle_plane;
using skc::testing::random_closed_braid;

namespace {

PlanarDiagram closed_braid(const std::string& word, int strands) {
    return close_tangle(braid_tangle(parse_braid(word, strands)), true);
}

const ZForm kDelta = ZForm::delta();

ZForm frozen_trefoil_value() {
    // 2v^{-1} - v + v^{-1} z^2, the framed value of the sigma_1^3 closure
    return ZForm::monomial(2, -1, 0) + ZForm::monomial(-1, 1, 0) + ZForm::monomial(1, -1, 2);
}

}  // namespace

TEST_CASE("plane basics") {
    SkeinEngine eng;
    // unknot
    CHECK(eng.homfly(closed_braid("", 2)) == ZForm(1) * kDelta);  // two circles: delta
    PlanarDiagram one;
    one.surface = {SurfaceKind::plane, 0, 0};
    one.free_circles = {0};
    CHECK(eng.homfly(one) == ZForm(1));
    // k-component crossingless unlink: delta^{k-1}
    PlanarDiagram unl;
    unl.surface = {SurfaceKind::plane, 0, 0};
    unl.free_circles = {0, 0, 0};
    CHECK(eng.homfly(unl) == kDelta * kDelta);
    // positive curl on a circle: v^{-1}
    CHECK(eng.homfly(closed_braid("1", 2)) == ZForm::monomial(1, -1, 0));
    // unknot with one positive and one negative curl: coefficient 1
    FramedTangleKnot wiggly = with_curl(with_curl(census_knot("unknot"), 1), -1);
    CHECK(eng.homfly(close_tangle(cable(wiggly, 1, 0), true)) == ZForm(1));
}

TEST_CASE("plane frozen values") {
    SkeinEngine eng;
    // Hopf link from sigma_1^2: delta + v^{-1} z
    ZForm hopf = eng.homfly(closed_braid("1 1", 2));
    CHECK(hopf == kDelta + ZForm::monomial(1, -1, 1));
    // framed right trefoil (writhe 3)
    CHECK(eng.homfly(closed_braid("1 1 1", 2)) == frozen_trefoil_value());
    // its mirror
    CHECK(eng.homfly(closed_braid("-1 -1 -1", 2)) == frozen_trefoil_value().mirrored());
    // figure-eight (writhe 0): v^{-2} - 1 + v^2 - z^2
    ZForm f8 = eng.homfly(closed_braid("1 -2 1 -2", 3));
    CHECK(f8 == ZForm::monomial(1, -2, 0) + ZForm::monomial(-1, 0, 0) +
                    ZForm::monomial(1, 2, 0) + ZForm::monomial(-1, 0, 2));
    CHECK(f8 == f8.mirrored());
}

TEST_CASE("skein relation sanity on the rectangle") {
    SkeinEngine eng;
    // sigma_1^{-1} = b_(12) - z * id
    SkeinCombination c = eng.resolve(braid_tangle(parse_braid("-1", 2)));
    REQUIRE(c.terms.size() == 2);
    CHECK(c.terms.at({1, 0}) == ZForm(1));
    CHECK(c.terms.at({0, 1}) == ZForm::monomial(-1, 0, 1));
    // sigma_1^2 = id + z sigma_1
    SkeinCombination sq = eng.resolve(braid_tangle(parse_braid("1 1", 2)));
    REQUIRE(sq.terms.size() == 2);
    CHECK(sq.terms.at({0, 1}) == ZForm(1));
    CHECK(sq.terms.at({1, 0}) == ZForm::monomial(1, 0, 1));
    // positive permutation braids resolve to themselves
    PlanarDiagram b = permutation_braid({3, 1, 2});
    SkeinCombination cb = eng.resolve(b);
    REQUIRE(cb.terms.size() == 1);
    CHECK(cb.terms.begin()->first == BasisId{2, 0, 1});
    CHECK(cb.terms.begin()->second == ZForm(1));
}

TEST_CASE("Reidemeister II and III invariance") {
    SkeinEngine eng;
    CHECK(eng.resolve(braid_tangle(parse_braid("1 -1", 2))) ==
          eng.resolve(braid_tangle(parse_braid("", 2))));
    CHECK(eng.resolve(braid_tangle(parse_braid("-1 1", 2))) ==
          eng.resolve(braid_tangle(parse_braid("", 2))));
    CHECK(eng.resolve(braid_tangle(parse_braid("1 2 1", 3))) ==
          eng.resolve(braid_tangle(parse_braid("2 1 2", 3))));
    // framed R1 pair: opposite curls cancel
    CHECK(eng.homfly(closed_braid("1 -1 2 -2", 3)) == kDelta * kDelta);
}

TEST_CASE("curl covariance") {
    SkeinEngine eng;
    std::mt19937 rng(41);
    int done = 0;
    while (done < 10) {
        std::uniform_int_distribution<int> len(1, 6), gen(1, 2), sgn(0, 1);
        BraidWord w;
        w.strands = 3;
        int L = len(rng);
        for (int j = 0; j < L; ++j) w.letters.push_back(gen(rng) * (sgn(rng) ? 1 : -1));
        FramedTangleKnot k;
        try {
            k = knot_from_braid("r", w);
        } catch (const SkeinError&) {
            continue;  // braid closes to a link; try another word
        }
        ++done;
        ZForm plain = eng.homfly(close_tangle(cable(k, 1, 0), true));
        ZForm pos = eng.homfly(close_tangle(cable(with_curl(k, 1), 1, 0), true));
        ZForm neg = eng.homfly(close_tangle(cable(with_curl(k, -1), 1, 0), true));
        CHECK(pos == plain * ZForm::monomial(1, -1, 0));
        CHECK(neg == plain * ZForm::monomial(1, 1, 0));
    }
}

TEST_CASE("connected sums multiply") {
    SkeinEngine eng;
    FramedTangleKnot tr = census_knot("trefoil");
    FramedTangleKnot tl = census_knot("trefoil-left");
    ZForm ptr = eng.homfly(close_tangle(cable(tr, 1, 0), true));
    ZForm ptl = eng.homfly(close_tangle(cable(tl, 1, 0), true));
    // granny: trefoil # trefoil, square: trefoil # mirror
    PlanarDiagram granny = compose_vertical(tr.diagram, tr.diagram);
    PlanarDiagram square = compose_vertical(tr.diagram, tl.diagram);
    CHECK(eng.homfly(close_tangle(granny, true)) == ptr * ptr);
    CHECK(eng.homfly(close_tangle(square, true)) == ptr * ptl);
    CHECK(ptr == frozen_trefoil_value());
}

TEST_CASE("rectangle dimension bounds") {
    SkeinEngine eng;
    std::mt19937 rng(59);
    for (int i = 0; i < 20; ++i) {
        std::uniform_int_distribution<int> len(0, 6), gen(1, 2), sgn(0, 1);
        BraidWord w;
        w.strands = 3;
        int L = len(rng);
        for (int j = 0; j < L; ++j) w.letters.push_back(gen(rng) * (sgn(rng) ? 1 : -1));
        SkeinCombination c = eng.resolve(braid_tangle(w));
        CHECK(c.terms.size() <= 6);  // (3+0)! / nothing exceeds 3! = 6
    }
    // (2,0): only the two permutation braids appear
    for (int i = 0; i < 20; ++i) {
        std::uniform_int_distribution<int> len(0, 8), sgn(0, 1);
        BraidWord w;
        w.strands = 2;
        int L = len(rng);
        for (int j = 0; j < L; ++j) w.letters.push_back(sgn(rng) ? 1 : -1);
        SkeinCombination c = eng.resolve(braid_tangle(w));
        for (auto& [b, cf] : c.terms)
            CHECK((b == BasisId{0, 1} || b == BasisId{1, 0}));
    }
    // a mixed-orientation tangle: the antiparallel 2-cable of the trefoil
    SkeinCombination m = eng.resolve(cable(census_knot("trefoil"), 1, 1));
    CHECK(m.terms.size() <= 2);
}

TEST_CASE("closure is a skein map") {
    // resolving a tangle and closing basis elements agrees with closing the
    // tangle and resolving in the plane
    SkeinEngine eng;
    std::mt19937 rng(73);
    auto random_tangle = [&](int n, int p) {
        // stacks of random permutation-pair basis diagrams
        auto rand_conn = [&] {
            std::vector<int> up(n), down(p), conn;
            std::iota(up.begin(), up.end(), 0);
            std::iota(down.begin(), down.end(), n);
            std::shuffle(up.begin(), up.end(), rng);
            std::shuffle(down.begin(), down.end(), rng);
            conn.insert(conn.end(), up.begin(), up.end());
            conn.insert(conn.end(), down.begin(), down.end());
            return conn;
        };
        PlanarDiagram acc = basis_diagram(rand_conn(), n, p);
        std::uniform_int_distribution<int> nlayers(0, 2);
        int layers = nlayers(rng);
        for (int l = 0; l < layers; ++l)
            acc = compose_vertical(acc, basis_diagram(rand_conn(), n, p));
        return acc;
    };
    for (auto [n, p] : std::vector<std::pair<int, int>>{{2, 0}, {3, 0}, {1, 1}, {2, 1}}) {
        for (int trial = 0; trial < 8; ++trial) {
            PlanarDiagram t = random_tangle(n, p);
            SkeinCombination res = eng.resolve(t);
            ZForm direct = eng.plane_value(close_tangle(t, true));
            ZForm recombined;
            for (auto& [b, c] : res.terms)
                recombined += c * eng.plane_value(close_tangle(basis_diagram(b, n, p), true));
            CHECK(direct == recombined);
        }
    }
    // the antiparallel trefoil cable, the hard case in H_{1,1}
    PlanarDiagram cab = cable(census_knot("trefoil"), 1, 1);
    SkeinCombination res = eng.resolve(cab);
    ZForm direct = eng.plane_value(close_tangle(cab, true));
    ZForm recombined;
    for (auto& [b, c] : res.terms)
        recombined += c * eng.plane_value(close_tangle(basis_diagram(b, 1, 1), true));
    CHECK(direct == recombined);
}

TEST_CASE("closures are conjugation invariant") {
    // closing AB and BA gives the same link
    SkeinEngine eng;
    std::mt19937 rng(97);
    for (int i = 0; i < 10; ++i) {
        std::uniform_int_distribution<int> len(1, 4), gen(1, 2), sgn(0, 1);
        auto word = [&] {
            BraidWord w{3, {}};
            int L = len(rng);
            for (int j = 0; j < L; ++j) w.letters.push_back(gen(rng) * (sgn(rng) ? 1 : -1));
            return w;
        };
        PlanarDiagram a = braid_tangle(word()), b = braid_tangle(word());
        ZForm ab = eng.plane_value(close_tangle(compose_vertical(a, b), true));
        ZForm ba = eng.plane_value(close_tangle(compose_vertical(b, a), true));
        CHECK(ab == ba);
    }
}

TEST_CASE("memoized engine equals brute-force oracle") {
    SkeinEngine eng;
    std::mt19937 rng(101);
    for (int i = 0; i < 25; ++i) {
        PlanarDiagram d = random_closed_braid(rng, 8);
        ZForm fast = eng.plane_value(d);
        ZForm slow = oracle_plane(d);
        CHECK(fast == slow);
    }
}

TEST_CASE("trace audit") {
    SkeinEngine eng;
    // crossingless circle: single empty-diagram leaf with coefficient delta
    PlanarDiagram circle;
    circle.surface = {SurfaceKind::plane, 0, 0};
    circle.free_circles = {0};
    ResolutionTrace tr;
    eng.resolve(circle, &tr);
    CHECK(tr.root_k == 1);
    REQUIRE(tr.leaves.size() == 1);
    CHECK(tr.leaves[0].coeff == kDelta);
    CHECK(audit_trace(tr).pass);

    // antiparallel trefoil cable: every coefficient obeys the z bookkeeping
    ResolutionTrace tc;
    eng.resolve(cable(census_knot("trefoil"), 1, 1), &tc);
    CHECK(tc.root_k == 0);
    CHECK(audit_trace(tc).pass);
    for (auto& leaf : tc.leaves) CHECK(leaf.coeff.min_z_degree() >= 0);

    // fabricated violation
    ResolutionTrace bad;
    bad.root_k = 0;
    bad.leaves.push_back({{}, ZForm::monomial(1, 0, -5), 0});
    CHECK_FALSE(audit_trace(bad).pass);
}

TEST_CASE("annulus diagrams are rejected") {
    SkeinEngine eng;
    PlanarDiagram a = close_tangle(cable(census_knot("unknot"), 1, 0), false);
    CHECK_THROWS_AS(eng.resolve(a), SkeinError);
}

TEST_CASE("empty diagram handling") {
    SkeinEngine eng;
    PlanarDiagram empty;
    empty.surface = {SurfaceKind::plane, 0, 0};
    CHECK(eng.plane_value(empty) == ZForm(1));
    CHECK_THROWS_AS(eng.homfly(empty), SkeinError);
}

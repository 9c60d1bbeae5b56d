#include "doctest.h"

#include <map>

#include "blowup/character.hpp"
#include "blowup/errors.hpp"
#include "blowup/marked.hpp"
#include "blowup/partition.hpp"

using namespace blowup;

namespace {

const std::vector<std::string> kT12 = {"t1", "t2"};

LaurentPoly m12(int a, int b, int c = 1) { return LaurentPoly::monomial(kT12, {a, b}, c); }

MarkedDiagram figureDiagram() {
    return MarkedDiagram(Partition::parse("5,5,4,3,3,1"), {{1, 4}, {2, 3}, {4, 2}});
}

}  // namespace

TEST_CASE("hom character of mark sets") {
    CHECK(homMarkedCharacter({{0, 2}}, {{1, 0}}) == m12(-1, 2));
    CHECK(homMarkedCharacter({}, {{1, 0}}) == LaurentPoly(kT12));
    // two marks against one: sum of two monomials
    CHECK(homMarkedCharacter({{0, 1}, {2, 0}}, {{0, 1}}) ==
          LaurentPoly::constant(kT12, 1) + m12(2, -1));
}

TEST_CASE("ext1 of a single unmarked box") {
    MarkedDiagram d(Partition::parse("1"), {});
    LaurentPoly e = ext1Character(d, d);
    CHECK(e == m12(0, 1) + m12(1, 0));
    CHECK(ext1Character(d, d, ExtMethod::Subtraction) == e);
}

TEST_CASE("ext1 of a single marked box vanishes") {
    MarkedDiagram d(Partition::parse("1"), {{0, 0}});
    CHECK(ext1Character(d, d).isZero());
    CHECK(ext1Character(d, d, ExtMethod::Subtraction).isZero());
}

TEST_CASE("ext1 dimension of the worked example") {
    MarkedDiagram d = figureDiagram();
    LaurentPoly e = ext1Character(d, d);
    CHECK(e.evalInt({{"t1", 1}, {"t2", 1}}) == 30);
    CHECK(ext1Character(d, d, ExtMethod::Subtraction) == e);
}

TEST_CASE("ext1 between distinct diagrams") {
    MarkedDiagram a(Partition::parse("2,1"), {{0, 1}});
    MarkedDiagram b(Partition::parse("1,1"), {{1, 0}});
    CHECK(ext1Character(a, b) == ext1Character(a, b, ExtMethod::Subtraction));
    CHECK(ext1Character(b, a) == ext1Character(b, a, ExtMethod::Subtraction));
}

TEST_CASE("ext1 methods agree exhaustively") {
    // All ordered pairs of marked diagrams with at most 8 boxes and at most
    // 2 marks each. The subtraction route also certifies that no hom monomial
    // is missing from the unrestricted sums.
    std::vector<MarkedDiagram> all;
    for (int n = 0; n <= 8; ++n)
        for (int m = 0; m * (m + 1) / 2 <= n && m <= 2; ++m)
            for (const MarkedDiagram& d : enumerateMarked(n, m)) all.push_back(d);
    long checked = 0;
    for (const MarkedDiagram& a : all)
        for (const MarkedDiagram& b : all) {
            if (a.diagram().size() + b.diagram().size() > 8) continue;
            LaurentPoly lhs = ext1Character(a, b, ExtMethod::Relevant);
            LaurentPoly rhs = ext1Character(a, b, ExtMethod::Subtraction);
            if (!(lhs == rhs)) {
                CAPTURE(a.diagram().str());
                CAPTURE(b.diagram().str());
                CHECK(lhs == rhs);
            }
            ++checked;
        }
    CHECK(checked > 1000);
}

TEST_CASE("ext1 term count matches the relevant-box count") {
    MarkedDiagram a = figureDiagram();
    MarkedDiagram b(Partition::parse("3,2,1"), {{0, 2}, {2, 0}});
    PairRelevant rel = relevantPair(a, b);
    LaurentPoly e = ext1Character(a, b);
    CHECK(e.evalInt({{"t1", 1}, {"t2", 1}}) ==
          static_cast<long>(rel.relA.size() + rel.relB.size()));
}

TEST_CASE("tangent character variables and blocks") {
    CHECK(characterVars(1) == std::vector<std::string>{"t1", "t2", "e1"});
    CHECK(characterVars(2) == std::vector<std::string>{"t1", "t2", "e1", "e2"});

    // Rank 2, both slots a single unmarked box: diagonal blocks carry no
    // e-weight, off-diagonal blocks carry e2/e1 and e1/e2.
    MarkedDiagram box(Partition::parse("1"), {});
    LaurentPoly t = tangentCharacter(FixedPoint({box, box}));
    CHECK(dimensionOf(t) == 8);
    auto vars = characterVars(2);
    LaurentPoly block = LaurentPoly::monomial(vars, {0, 1, 0, 0}, 1) +
                        LaurentPoly::monomial(vars, {1, 0, 0, 0}, 1);
    LaurentPoly e21 = LaurentPoly::monomial(vars, {0, 0, -1, 1}, 1);
    LaurentPoly e12 = LaurentPoly::monomial(vars, {0, 0, 1, -1}, 1);
    CHECK(t == block * (LaurentPoly::constant(vars, 2) + e21 + e12));
}

TEST_CASE("tangent dimension is twice the relevant box count") {
    for (int n = 1; n <= 9; ++n)
        for (int m = 0; m * (m + 1) / 2 <= n && m <= 3; ++m)
            for (const MarkedDiagram& d : enumerateMarked(n, m)) {
                LaurentPoly t = tangentCharacter(FixedPoint({d}));
                CHECK(dimensionOf(t) == 2 * (n - m * (m + 1) / 2));
            }
}

TEST_CASE("morse index of rank-1 fixed points") {
    // Index = N + m - l(Y) with N the relevant box count.
    for (int n = 1; n <= 9; ++n)
        for (int m = 0; m * (m + 1) / 2 <= n && m <= 3; ++m)
            for (const MarkedDiagram& d : enumerateMarked(n, m)) {
                long index = morseIndex(tangentCharacter(FixedPoint({d})), 1);
                long expected =
                    n - m * (m + 1) / 2 + m - d.diagram().numColumns();
                CAPTURE(d.diagram().str());
                CHECK(index == expected);
            }
}

TEST_CASE("morse index of the worked example") {
    MarkedDiagram d = figureDiagram();
    // N = 15, m = 3, l(Y) = 6
    CHECK(morseIndex(tangentCharacter(FixedPoint({d})), 1) == 12);
}

TEST_CASE("rank-2 tangent dimensions are constant per stratum") {
    std::vector<FixedPoint> points = enumerateFixedPoints(2, 0, 3);
    REQUIRE(!points.empty());
    long dim = -1;
    for (const FixedPoint& f : points) {
        LaurentPoly t = tangentCharacter(f);
        long d = dimensionOf(t);
        if (dim < 0) dim = d;
        CHECK(d == dim);
        long idx = morseIndex(t, 2);
        CHECK(idx >= 0);
        CHECK(idx <= d);
    }
}

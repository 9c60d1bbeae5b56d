#include "doctest.h"

#include <random>

#include "blowup/errors.hpp"
#include "blowup/json_io.hpp"
#include "blowup/laurent.hpp"

using namespace blowup;

namespace {

const std::vector<std::string> kT = {"t"};

LaurentPoly t(int e, int c = 1) { return LaurentPoly::monomial(kT, {e}, c); }

LaurentPoly randomPoly(std::mt19937& rng) {
    std::uniform_int_distribution<int> nTerms(0, 4), exp(-3, 3), coef(-5, 5);
    LaurentPoly p(kT);
    for (int i = nTerms(rng); i > 0; --i) p += t(exp(rng), coef(rng));
    return p;
}

}  // namespace

TEST_CASE("product basics") {
    CHECK((t(0) + t(1)) * (t(0) - t(1)) == t(0) - t(2));
    LaurentPoly p = t(2, 3) + t(-1);
    CHECK(p * t(0) == p);
    LaurentPoly mixed =
        LaurentPoly::monomial({"t1", "t2"}, {1, 0}, 1) +
        LaurentPoly::monomial({"t1", "t2"}, {0, 1}, 1);
    CHECK(mixed * LaurentPoly::monomial({"t1", "t2"}, {-1, 0}, 1) ==
          LaurentPoly::constant({"t1", "t2"}, 1) +
              LaurentPoly::monomial({"t1", "t2"}, {-1, 1}, 1));
}

TEST_CASE("variable mismatch is an error") {
    LaurentPoly a = t(1);
    LaurentPoly b = LaurentPoly::monomial({"u"}, {1}, 1);
    CHECK_THROWS_AS(a * b, VariableMismatch);
    CHECK_THROWS_AS(a + b, VariableMismatch);
    // plain constants embed anywhere
    CHECK(a * LaurentPoly::constant({}, 2) == t(1, 2));
}

TEST_CASE("ring laws on random polynomials") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        LaurentPoly a = randomPoly(rng), b = randomPoly(rng), c = randomPoly(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + (-a) == LaurentPoly(kT));
        CHECK(a * t(0) == a);
    }
}

TEST_CASE("evalInt") {
    CHECK((t(0) - t(2)).evalInt({{"t", 1}}) == 0);
    LaurentPoly twoVars = LaurentPoly::monomial({"t1", "t2"}, {1, 0}, 1) +
                          LaurentPoly::monomial({"t1", "t2"}, {0, 1}, 1);
    CHECK(twoVars.evalInt({{"t1", 1}, {"t2", 1}}) == 2);
    CHECK((t(0) + t(2)).evalInt({{"t", 1}}) == 2);
    CHECK((t(0) + t(2)).evalInt({{"t", -2}}) == 5);
    CHECK(t(-2).evalInt({{"t", -1}}) == 1);
    CHECK_THROWS_AS(t(1).evalInt({}), MissingAssignment);
}

TEST_CASE("hodge substitution") {
    CHECK(toHodge(t(0) + t(2)) ==
          LaurentPoly::constant({"u"}, 1) + LaurentPoly::monomial({"u"}, {1}, 1));
    CHECK(toHodge(LaurentPoly(kT)) == LaurentPoly({"u"}));
    CHECK(toHodge(t(4) + t(2, 2)) ==
          LaurentPoly::monomial({"u"}, {2}, 1) + LaurentPoly::monomial({"u"}, {1}, 2));
    CHECK_THROWS_AS(toHodge(t(3)), OddExponent);
}

TEST_CASE("pretty printer") {
    CHECK(LaurentPoly(kT).str() == "0");
    CHECK((t(0) + t(2)).str() == "1 + t^2");
    CHECK((t(-1) - t(1, 2)).str() == "t^-1 - 2*t");
}

TEST_CASE("json round trip") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        LaurentPoly p = randomPoly(rng);
        CHECK(laurentFromJson(toJson(p)) == p);
    }
    auto j = toJson(t(2));
    CHECK(j["vars"][0] == "t");
    CHECK(j["terms"][0]["coef"] == "1");
    CHECK(j["terms"][0]["exp"]["t"] == 2);
}

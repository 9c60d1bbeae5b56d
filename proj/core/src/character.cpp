#include "blowup/character.hpp"

#include <stdexcept>

#include "blowup/errors.hpp"

namespace blowup {

std::vector<std::string> characterVars(int rank) {
    std::vector<std::string> vars = {"t1", "t2"};
    for (int a = 1; a <= rank; ++a) vars.push_back("e" + std::to_string(a));
    return vars;
}

namespace {

const std::vector<std::string> kT1T2 = {"t1", "t2"};

LaurentPoly mono12(int e1, int e2) { return LaurentPoly::monomial(kT1T2, {e1, e2}, 1); }

}  // namespace

LaurentPoly homMarkedCharacter(const std::vector<Box>& sa, const std::vector<Box>& sb) {
    LaurentPoly r(kT1T2);
    for (const Box& s : sa)
        for (const Box& sp : sb) r += mono12(s.col - sp.col, s.row - sp.row);
    return r;
}

namespace {

// The two summand shapes of the Ext^1 character. Arm is measured in the
// source core diagram, leg in the target diagram (and vice versa).
LaurentPoly extTerms(const Partition& coreA, const Partition& yB,
                     const std::vector<Box>& fromCoreA, const std::vector<Box>& fromYB) {
    LaurentPoly r(kT1T2);
    for (const Box& s : fromCoreA) {
        auto [armA, legB] = std::pair{armLeg(coreA, s).arm, armLeg(yB, s).leg};
        r += mono12(-legB, armA + 1);
    }
    for (const Box& t : fromYB) {
        auto [legA, armB] = std::pair{armLeg(coreA, t).leg, armLeg(yB, t).arm};
        r += mono12(legA + 1, -armB);
    }
    return r;
}

}  // namespace

LaurentPoly ext1Character(const MarkedDiagram& a, const MarkedDiagram& b, ExtMethod method) {
    Partition coreA = a.core();
    const Partition& yB = b.diagram();
    if (method == ExtMethod::Relevant) {
        PairRelevant rel = relevantPair(a, b);
        return extTerms(coreA, yB, rel.relA, rel.relB);
    }
    LaurentPoly full = extTerms(coreA, yB, coreA.boxes(), yB.boxes());
    LaurentPoly result = full - homMarkedCharacter(a.marks(), b.marks());
    for (const auto& [e, c] : result.terms())
        if (c < 0)
            throw InternalInconsistency("subtraction route produced a negative coefficient");
    return result;
}

LaurentPoly tangentCharacter(const FixedPoint& f) {
    int r = f.rank();
    auto vars = characterVars(r);
    LaurentPoly total(vars);
    for (int alpha = 0; alpha < r; ++alpha) {
        for (int beta = 0; beta < r; ++beta) {
            LaurentPoly block = ext1Character(f.part(alpha), f.part(beta)).lifted(vars);
            ExpVec e(vars.size(), 0);
            e[2 + beta] += 1;
            e[2 + alpha] -= 1;
            total += block * LaurentPoly::monomial(vars, std::move(e), 1);
        }
    }
    return total;
}

long dimensionOf(const LaurentPoly& character) {
    std::map<std::string, long> ones;
    for (const auto& v : character.vars()) ones[v] = 1;
    Int d = character.evalInt(ones);
    if (!d.fits_slong_p()) throw std::overflow_error("tangent dimension overflow");
    return d.get_si();
}

long morseIndex(const LaurentPoly& character, int rank) {
    if (character.vars() != characterVars(rank) && !(character.isZero()))
        throw VariableMismatch("morseIndex expects character variables t1,t2,e1..er");
    long index = 0;
    for (const auto& [e, c] : character.terms()) {
        if (c < 0)
            throw InternalInconsistency("character with a negative coefficient");
        // lambda-weight sign: lexicographic on (t2, e1, ..., er, t1).
        int sign = 0;
        if (e[1] != 0) {
            sign = e[1];
        } else {
            for (int a = 0; a < rank && sign == 0; ++a) sign = e[2 + a];
            if (sign == 0) sign = e[0];
        }
        if (sign < 0) {
            if (!c.fits_slong_p()) throw std::overflow_error("morse multiplicity overflow");
            index += c.get_si();
        }
    }
    return index;
}

}  // namespace blowup

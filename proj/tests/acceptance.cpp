// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "blowup/betti.hpp"
#include "blowup/character.hpp"
#include "blowup/marked.hpp"
#include "blowup/partition.hpp"
#include "blowup/qseries.hpp"

using namespace blowup;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << " " << number << ": " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!pass) ++failures;
}

void criterion(int number, const std::string& name, bool (*body)(std::string&)) {
    std::string detail;
    bool pass = false;
    try {
        pass = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    report(number, name, pass, detail);
}

const std::vector<std::string> kT = {"t"};

bool rank1Identity(std::string& detail) {
    for (int m = 0; m <= 3; ++m) {
        QSeries lhs = genFunEnumeration(1, 0, m, Rational(10));
        QSeries rhs = genFunProduct(1, 0, m, Rational(10));
        if (auto mm = lhs.firstMismatch(rhs)) {
            detail = "m=" + std::to_string(m) + " at q^" + mm->qExp.str();
            return false;
        }
    }
    detail = "m=0..3, order 10";
    return true;
}

bool gottscheLimit(std::string& detail) {
    Rational order(8);
    QSeries rhs = cappedProduct(1, order, kT,
                                [](int d) {
                                    return GeometricFactor{
                                        LaurentPoly::monomial({"t"}, {2 * d - 2}, 1),
                                        Rational(d)};
                                },
                                8) *
                  cappedProduct(1, order, kT,
                                [](int d) {
                                    return GeometricFactor{
                                        LaurentPoly::monomial({"t"}, {2 * d}, 1),
                                        Rational(d)};
                                },
                                8);
    QSeries lhs = genFunEnumeration(1, 0, 8, order);
    if (auto mm = lhs.firstMismatch(rhs)) {
        detail = "at q^" + mm->qExp.str();
        return false;
    }
    detail = "m=8, order 8";
    return true;
}

bool extConsistency(std::string& detail) {
    std::vector<MarkedDiagram> all;
    for (int n = 0; n <= 10; ++n)
        for (int m = 0; m <= 3 && m * (m + 1) / 2 <= n; ++m)
            for (const MarkedDiagram& d : enumerateMarked(n, m)) all.push_back(d);
    long pairs = 0;
    for (const MarkedDiagram& a : all)
        for (const MarkedDiagram& b : all) {
            LaurentPoly lhs = ext1Character(a, b, ExtMethod::Relevant);
            LaurentPoly rhs = ext1Character(a, b, ExtMethod::Subtraction);
            if (!(lhs == rhs)) {
                detail = a.diagram().str() + " vs " + b.diagram().str();
                return false;
            }
            ++pairs;
        }
    detail = std::to_string(pairs) + " ordered pairs";
    return true;
}

bool morseAgreement(std::string& detail) {
    long points = 0;
    for (int b = 0; b <= 12; ++b)
        for (int m = 0; m * (m + 1) / 2 <= b; ++m)
            for (const MarkedDiagram& d : enumerateMarked(b, m)) {
                long index = morseIndex(tangentCharacter(FixedPoint({d})), 1);
                long n = b - static_cast<long>(m) * (m + 1) / 2;
                if (index != n + m - d.diagram().numColumns()) {
                    detail = d.diagram().str();
                    return false;
                }
                ++points;
            }
    detail = std::to_string(points) + " fixed points";
    return true;
}

bool bijection(std::string& detail) {
    long cases = 0;
    for (int n = 0; n <= 14; ++n)
        for (int m = 0; m * (m + 1) / 2 <= n; ++m)
            for (const MarkedDiagram& d : enumerateMarked(n, m)) {
                DiagramPair p = split(d);
                if (!(merge(p) == d) ||
                    p.y1.size() + p.y2.size() != n - m * (m + 1) / 2 ||
                    p.y1.numColumns() + m != d.diagram().numColumns()) {
                    detail = "forward " + d.diagram().str();
                    return false;
                }
                ++cases;
            }
    for (int m = 0; m <= 4; ++m)
        for (int n1 = 0; n1 + 0 <= 12; ++n1)
            for (const Partition& y1 : enumeratePartitions(n1))
                for (int n2 = 0; n1 + n2 <= 12; ++n2)
                    for (const Partition& y2 : enumeratePartitions(n2, m)) {
                        DiagramPair p{y1, y2, m};
                        if (!(split(merge(p)) == p)) {
                            detail = "inverse " + y1.str() + " / " + y2.str();
                            return false;
                        }
                        ++cases;
                    }
    DiagramPair figure =
        split(MarkedDiagram(Partition::parse("5,5,4,3,3,1"), {{1, 4}, {2, 3}, {4, 2}}));
    if (!(figure.y1 == Partition::parse("5,3,1")) ||
        !(figure.y2 == Partition::parse("2,2,2"))) {
        detail = "worked example";
        return false;
    }
    detail = std::to_string(cases) + " roundtrips";
    return true;
}

bool higherRank(std::string& detail) {
    for (int m = 0; m <= 1; ++m)
        for (int c1C = -1; c1C <= 1; ++c1C) {
            QSeries lhs = genFunEnumeration(2, c1C, m, Rational(6));
            QSeries rhs = genFunProduct(2, c1C, m, Rational(6));
            if (lhs.denom() != 4 || rhs.denom() != 4) {
                detail = "denominator";
                return false;
            }
            if (auto mm = lhs.firstMismatch(rhs)) {
                detail = "m=" + std::to_string(m) + " c1C=" + std::to_string(c1C) +
                         " at q^" + mm->qExp.str();
                return false;
            }
        }
    detail = "r=2, m=0..1, c1C=-1..1, order 6";
    return true;
}

bool dimensionConstancy(std::string& detail) {
    long spaces = 0;
    for (int r = 1; r <= 2; ++r)
        for (int marks = 0; marks <= (r == 1 ? 4 : 3); ++marks)
            for (int budget = 0; budget <= (r == 1 ? 10 : 6); ++budget) {
                long dim = -1;
                for (const FixedPoint& f : enumerateFixedPoints(r, marks, budget)) {
                    long d = dimensionOf(tangentCharacter(f));
                    if (dim < 0) dim = d;
                    if (d != dim) {
                        detail = "r=" + std::to_string(r) + " varies";
                        return false;
                    }
                    if (r == 1 && d != 2 * (budget - marks * (marks + 1) / 2)) {
                        detail = "rank-1 value off at budget " + std::to_string(budget);
                        return false;
                    }
                }
                ++spaces;
            }
    detail = std::to_string(spaces) + " parameter sets";
    return true;
}

bool eulerSpecialization(std::string& detail) {
    struct Case {
        int r, c1C, m;
        Rational order;
    };
    std::vector<Case> cases = {{1, 0, 0, Rational(6)}, {1, 0, 2, Rational(6)},
                               {2, 0, 0, Rational(3)}, {2, -1, 1, Rational(3)},
                               {2, 1, 0, Rational(3)}};
    for (const Case& c : cases) {
        QSeries s = genFunEnumeration(c.r, c.c1C, c.m, c.order);
        Rational offset = gradingOffset(c.r, c.c1C, c.m);
        for (long b = 0; Rational(b) - offset < c.order; ++b) {
            Rational delta = Rational(b) - offset;
            Int fromSeries = s.coeff(delta).isZero()
                                 ? Int(0)
                                 : s.coeff(delta).evalInt({{"t", 1}});
            if (fromSeries != fixedPointCount(c.r, c.c1C, c.m, delta)) {
                detail = "r=" + std::to_string(c.r) + " delta=" + delta.str();
                return false;
            }
        }
    }
    detail = std::to_string(cases.size()) + " series";
    return true;
}

}  // namespace

int main() {
    criterion(1, "rank-1 wall-crossing identity", rank1Identity);
    criterion(2, "Gottsche limit", gottscheLimit);
    criterion(3, "ext1 method consistency", extConsistency);
    criterion(4, "morse/closed-form agreement", morseAgreement);
    criterion(5, "marked-diagram bijection", bijection);
    criterion(6, "higher-rank identity", higherRank);
    criterion(7, "dimension constancy", dimensionConstancy);
    criterion(8, "Euler specialization", eulerSpecialization);
    return failures == 0 ? 0 : 1;
}

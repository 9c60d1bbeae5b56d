#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blowup/laurent.hpp"
#include "blowup/marked.hpp"
#include "blowup/qseries.hpp"
#include "blowup/rational.hpp"

namespace blowup {

// Numerical data selecting one moduli space: rank, first Chern pairing with
// the exceptional curve, stability index, and a grading (point count N for
// rank 1, or the discriminant Delta in general).
struct ModuliParams {
    int r = 1;
    int c1C = 0;
    int m = 0;
    std::optional<long> n;          // rank-1 grading
    std::optional<Rational> delta;  // general grading, denominator | 2r
};

// Enumeration-level data derived from ModuliParams: total marks of the
// twisted fixed points and the total box count. `satisfiable` is false when
// the grading cannot be realized (zero polynomial, not an error).
struct ResolvedParams {
    int r = 1;
    int marksTotal = 0;
    long boxBudget = 0;
    bool satisfiable = true;
};
ResolvedParams resolveParams(const ModuliParams& p);

// Grading offset: delta = boxBudget - offset, a constant per (r, c1C, m).
Rational gradingOffset(int r, int c1C, int m);

// Half the t-exponent contributed by a fixed point.
long fixedPointExponent(const FixedPoint& f, int rank);

enum class BettiMethod { Closed, Morse, Pairs };

// Poincare polynomial in t. The three methods are independent routes and
// agree exactly: Closed uses the split-pair exponent formula, Morse counts
// negative tangent weights, Pairs enumerates diagram pairs directly.
LaurentPoly poincarePolynomial(const ModuliParams& p, BettiMethod method = BettiMethod::Closed);

// Sum of Poincare polynomials weighted by q^grading, over all gradings below
// `order`. Denominator is 1 for rank 1 and 2r otherwise.
QSeries genFunEnumeration(int r, int c1C, int m, Rational order,
                          BettiMethod method = BettiMethod::Closed, int jobs = 1);

// The closed product side: a sum over twist vectors k of per-slot geometric
// products with the t^{-2<k,rho>} (t^{2r} q)^{(k,k)/2} prefactor.
QSeries genFunProduct(int r, int c1C, int m, Rational order);

// Direct fixed-point count at one grading (Euler number oracle).
long fixedPointCount(int r, int c1C, int m, Rational delta);

enum class Suite { Rank1, HigherRank, Gottsche, WallRatio };

struct VerifyCase {
    std::string params;
    bool pass = false;
    std::optional<QSeries::Mismatch> mismatch;
};

struct VerifyReport {
    Suite suite;
    Rational order;
    std::string params;
    bool pass = true;
    std::vector<VerifyCase> cases;
    long elapsedMs = 0;
};

// Compares the enumeration and product series coefficientwise for every
// parameter combination. Mismatches are reported, never thrown.
VerifyReport verifyIdentity(Suite suite, int r, const std::vector<int>& ms,
                            const std::vector<int>& c1Cs, Rational order, int jobs = 1);

std::string suiteName(Suite s);

}  // namespace blowup

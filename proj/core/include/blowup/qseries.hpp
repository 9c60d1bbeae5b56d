#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "blowup/laurent.hpp"
#include "blowup/rational.hpp"

namespace blowup {

// Truncated formal series in a grading variable q. Exponents are exact
// rationals with a fixed denominator; coefficients are Laurent polynomials.
// Everything at or beyond the truncation order is discarded on entry, so
// arithmetic never consults truncated tails.
class QSeries {
public:
    QSeries(int denom, Rational order, std::vector<std::string> coeffVars);

    static QSeries one(int denom, Rational order, std::vector<std::string> coeffVars);

    int denom() const { return denom_; }
    Rational order() const { return order_; }
    const std::vector<std::string>& coeffVars() const { return coeffVars_; }

    // Keys are exponents scaled by denom().
    const std::map<std::int64_t, LaurentPoly>& scaledCoeffs() const { return coeffs_; }

    void add(Rational qExp, const LaurentPoly& coeff);
    LaurentPoly coeff(Rational qExp) const;  // zero when absent

    QSeries operator+(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;
    // Multiply by c * q^shift.
    QSeries shifted(Rational shift, const LaurentPoly& c) const;

    bool operator==(const QSeries& o) const;

    struct Mismatch {
        Rational qExp;
        LaurentPoly lhs;
        LaurentPoly rhs;
    };
    // First differing q-exponent, comparing up to the smaller order.
    std::optional<Mismatch> firstMismatch(const QSeries& o) const;

    std::string str(const std::string& qName = "q") const;

private:
    std::int64_t scale(Rational r) const;  // throws if denominator does not divide

    int denom_;
    Rational order_;
    std::vector<std::string> coeffVars_;
    std::map<std::int64_t, LaurentPoly> coeffs_;
};

// Truncated expansion 1 + mono*q^e + (mono*q^e)^2 + ... ; requires e > 0
// (throws NonpositiveGrading otherwise).
QSeries expandGeometric(const LaurentPoly& mono, Rational qExp, int denom, Rational order);

// Factor generator for cappedProduct: factor(d) is the monomial and
// q-exponent of the d-th geometric factor 1/(1 - mono_d q^{e_d}).
struct GeometricFactor {
    LaurentPoly mono;
    Rational qExp;
};

// Product of geometric expansions for d = 1..dMax (dMax < 0 means until the
// q-exponent reaches the truncation order; requires e_d nondecreasing in d
// for termination).
QSeries cappedProduct(int denom, Rational order, std::vector<std::string> coeffVars,
                      const std::function<GeometricFactor(int)>& factor, int dMax = -1);

}  // namespace blowup

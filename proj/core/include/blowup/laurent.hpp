#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace blowup {

using Int = mpz_class;
using ExpVec = std::vector<int>;

// Integer-coefficient Laurent polynomial in a fixed ordered set of named
// variables. Terms are kept in a sorted map with no zero coefficients, so
// equality is structural. Coefficients are arbitrary precision.
class LaurentPoly {
public:
    LaurentPoly() = default;  // zero over the empty variable set
    explicit LaurentPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static LaurentPoly constant(std::vector<std::string> vars, Int c);
    static LaurentPoly monomial(std::vector<std::string> vars, ExpVec exps, Int coef);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<ExpVec, Int>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    bool isConstant() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const Int& c) const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

    // Exact evaluation; every variable must be assigned a nonzero integer.
    Int evalInt(const std::map<std::string, long>& assignment) const;

    // Same polynomial over a larger variable set; every used variable must
    // appear in newVars.
    LaurentPoly lifted(std::vector<std::string> newVars) const;

    // Terms ascending by exponent vector, e.g. "1 + 2*t^2 + t^4".
    std::string str() const;

private:
    void addTerm(const ExpVec& exps, const Int& coef);
    // Reconciles variable sets before a binary op; throws VariableMismatch.
    static void align(LaurentPoly& a, LaurentPoly& b);

    std::vector<std::string> vars_;
    std::map<ExpVec, Int> terms_;
};

// Substitutes t^2 -> u. Input must be a polynomial in one variable with all
// exponents even; throws OddExponent otherwise (odd cohomology must not
// occur).
LaurentPoly toHodge(const LaurentPoly& p);

}  // namespace blowup

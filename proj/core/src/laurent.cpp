#include "blowup/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "blowup/errors.hpp"

namespace blowup {

LaurentPoly LaurentPoly::constant(std::vector<std::string> vars, Int c) {
    LaurentPoly p(std::move(vars));
    if (c != 0) p.terms_[ExpVec(p.vars_.size(), 0)] = std::move(c);
    return p;
}

LaurentPoly LaurentPoly::monomial(std::vector<std::string> vars, ExpVec exps, Int coef) {
    if (vars.size() != exps.size())
        throw std::invalid_argument("monomial: exponent vector length mismatch");
    LaurentPoly p(std::move(vars));
    if (coef != 0) p.terms_[std::move(exps)] = std::move(coef);
    return p;
}

bool LaurentPoly::isConstant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

void LaurentPoly::addTerm(const ExpVec& exps, const Int& coef) {
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        if (coef != 0) terms_[exps] = coef;
    } else {
        it->second += coef;
        if (it->second == 0) terms_.erase(it);
    }
}

void LaurentPoly::align(LaurentPoly& a, LaurentPoly& b) {
    if (a.vars_ == b.vars_) return;
    // A constant (or zero) over the empty variable set embeds anywhere.
    if (a.vars_.empty() && a.isConstant()) {
        a = constant(b.vars_, a.isZero() ? Int(0) : a.terms_.begin()->second);
        return;
    }
    if (b.vars_.empty() && b.isConstant()) {
        b = constant(a.vars_, b.isZero() ? Int(0) : b.terms_.begin()->second);
        return;
    }
    throw VariableMismatch("operands use different variable sets");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    LaurentPoly rhs = o;
    align(*this, rhs);
    for (const auto& [e, c] : rhs.terms_) addTerm(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator*(const Int& c) const {
    LaurentPoly r(vars_);
    if (c == 0) return r;
    for (const auto& [e, coef] : terms_) r.terms_[e] = coef * c;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly lhs = *this, rhs = o;
    align(lhs, rhs);
    LaurentPoly r(lhs.vars_);
    ExpVec e(lhs.vars_.size());
    for (const auto& [ea, ca] : lhs.terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.addTerm(e, ca * cb);
        }
    }
    return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
    LaurentPoly la = a, lb = b;
    LaurentPoly::align(la, lb);
    return la.terms_ == lb.terms_;
}

Int LaurentPoly::evalInt(const std::map<std::string, long>& assignment) const {
    std::vector<long> values(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = assignment.find(vars_[i]);
        if (it == assignment.end())
            throw MissingAssignment("no value for variable " + vars_[i]);
        if (it->second == 0)
            throw std::invalid_argument("evalInt: zero assigned to Laurent variable " + vars_[i]);
        values[i] = it->second;
    }
    Int total = 0;
    for (const auto& [e, c] : terms_) {
        mpq_class term(c);
        for (size_t i = 0; i < e.size(); ++i) {
            Int pw;
            mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(std::abs(values[i])),
                          static_cast<unsigned long>(std::abs(e[i])));
            if (values[i] < 0 && e[i] % 2 != 0) pw = -pw;
            if (e[i] >= 0)
                term *= pw;
            else
                term /= pw;
        }
        term.canonicalize();
        if (term.get_den() != 1)
            throw std::invalid_argument("evalInt: assignment yields a non-integer value");
        total += term.get_num();
    }
    return total;
}

LaurentPoly LaurentPoly::lifted(std::vector<std::string> newVars) const {
    std::vector<int> where(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(newVars.begin(), newVars.end(), vars_[i]);
        if (it == newVars.end())
            throw VariableMismatch("lifted: variable " + vars_[i] + " missing from target set");
        where[i] = static_cast<int>(it - newVars.begin());
    }
    LaurentPoly r(std::move(newVars));
    for (const auto& [e, c] : terms_) {
        ExpVec ne(r.vars_.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) ne[where[i]] = e[i];
        r.terms_[std::move(ne)] = c;
    }
    return r;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Int abs = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        std::ostringstream mono;
        bool hasVar = false;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (hasVar) mono << "*";
            mono << vars_[i];
            if (e[i] != 1) mono << "^" << e[i];
            hasVar = true;
        }
        if (!hasVar) {
            out << abs.get_str();
        } else {
            if (abs != 1) out << abs.get_str() << "*";
            out << mono.str();
        }
    }
    return out.str();
}

LaurentPoly toHodge(const LaurentPoly& p) {
    if (p.vars().size() > 1)
        throw VariableMismatch("toHodge expects a polynomial in a single variable");
    LaurentPoly r = LaurentPoly({"u"});
    for (const auto& [e, c] : p.terms()) {
        int exp = e.empty() ? 0 : e[0];
        if (exp % 2 != 0)
            throw OddExponent("odd exponent " + std::to_string(exp) + " in Hodge substitution");
        r += LaurentPoly::monomial({"u"}, {exp / 2}, c);
    }
    return r;
}

}  // namespace blowup

#include "blowup/qseries.hpp"

#include <sstream>
#include <stdexcept>

#include "blowup/errors.hpp"

namespace blowup {

QSeries::QSeries(int denom, Rational order, std::vector<std::string> coeffVars)
    : denom_(denom), order_(order), coeffVars_(std::move(coeffVars)) {
    if (denom < 1) throw std::invalid_argument("QSeries: denominator must be positive");
}

QSeries QSeries::one(int denom, Rational order, std::vector<std::string> coeffVars) {
    QSeries s(denom, order, coeffVars);
    s.add(Rational(0), LaurentPoly::constant(std::move(coeffVars), 1));
    return s;
}

std::int64_t QSeries::scale(Rational r) const {
    if (denom_ % r.den() != 0)
        throw std::invalid_argument("q-exponent " + r.str() + " incompatible with denominator " +
                                    std::to_string(denom_));
    return r.num() * (denom_ / r.den());
}

void QSeries::add(Rational qExp, const LaurentPoly& coeff) {
    if (qExp >= order_ || coeff.isZero()) return;
    std::int64_t key = scale(qExp);
    auto it = coeffs_.find(key);
    if (it == coeffs_.end()) {
        coeffs_.emplace(key, coeff);
    } else {
        it->second += coeff;
        if (it->second.isZero()) coeffs_.erase(it);
    }
}

LaurentPoly QSeries::coeff(Rational qExp) const {
    auto it = coeffs_.find(scale(qExp));
    return it == coeffs_.end() ? LaurentPoly(coeffVars_) : it->second;
}

namespace {

int lcmInt(int a, int b) { return a / std::gcd(a, b) * b; }

}  // namespace

QSeries QSeries::operator+(const QSeries& o) const {
    QSeries r(lcmInt(denom_, o.denom_), std::min(order_, o.order_), coeffVars_);
    for (const auto& [k, p] : coeffs_) r.add(Rational(k, denom_), p);
    for (const auto& [k, p] : o.coeffs_) r.add(Rational(k, o.denom_), p);
    return r;
}

QSeries QSeries::operator*(const QSeries& o) const {
    QSeries r(lcmInt(denom_, o.denom_), std::min(order_, o.order_), coeffVars_);
    for (const auto& [ka, pa] : coeffs_) {
        Rational ea(ka, denom_);
        if (ea >= r.order_) break;
        for (const auto& [kb, pb] : o.coeffs_) {
            Rational e = ea + Rational(kb, o.denom_);
            if (e >= r.order_) break;  // keys ascend
            r.add(e, pa * pb);
        }
    }
    return r;
}

QSeries QSeries::shifted(Rational shift, const LaurentPoly& c) const {
    QSeries r(lcmInt(denom_, static_cast<int>(shift.den())), order_, coeffVars_);
    for (const auto& [k, p] : coeffs_) r.add(Rational(k, denom_) + shift, p * c);
    return r;
}

bool QSeries::operator==(const QSeries& o) const { return !firstMismatch(o).has_value(); }

std::optional<QSeries::Mismatch> QSeries::firstMismatch(const QSeries& o) const {
    Rational bound = std::min(order_, o.order_);
    auto ia = coeffs_.begin();
    auto ib = o.coeffs_.begin();
    while (ia != coeffs_.end() || ib != o.coeffs_.end()) {
        Rational ea = ia != coeffs_.end() ? Rational(ia->first, denom_) : bound;
        Rational eb = ib != o.coeffs_.end() ? Rational(ib->first, o.denom_) : bound;
        Rational e = std::min(ea, eb);
        if (e >= bound) break;
        LaurentPoly ca = ea == e ? ia->second : LaurentPoly(coeffVars_);
        LaurentPoly cb = eb == e ? ib->second : LaurentPoly(o.coeffVars_);
        if (!(ca == cb)) return Mismatch{e, ca, cb};
        if (ea == e) ++ia;
        if (eb == e) ++ib;
    }
    return std::nullopt;
}

std::string QSeries::str(const std::string& qName) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, p] : coeffs_) {
        if (!first) out << " + ";
        first = false;
        Rational e(k, denom_);
        bool wrap = p.terms().size() > 1;
        if (e == Rational(0)) {
            out << p.str();
            continue;
        }
        out << (wrap ? "(" + p.str() + ")" : p.str()) << "*" << qName;
        if (e != Rational(1)) out << "^" << e.str();
    }
    return out.str();
}

QSeries expandGeometric(const LaurentPoly& mono, Rational qExp, int denom, Rational order) {
    if (qExp <= Rational(0))
        throw NonpositiveGrading("geometric factor with q-exponent " + qExp.str());
    QSeries s(denom, order, mono.vars());
    LaurentPoly power = LaurentPoly::constant(mono.vars(), 1);
    Rational e(0);
    while (e < order) {
        s.add(e, power);
        e = e + qExp;
        if (e < order) power = power * mono;
    }
    return s;
}

QSeries cappedProduct(int denom, Rational order, std::vector<std::string> coeffVars,
                      const std::function<GeometricFactor(int)>& factor, int dMax) {
    QSeries result = QSeries::one(denom, order, coeffVars);
    for (int d = 1; dMax < 0 || d <= dMax; ++d) {
        GeometricFactor f = factor(d);
        if (f.qExp >= order) {
            if (dMax < 0) break;  // infinite tail only touches truncated exponents
            continue;
        }
        result = result * expandGeometric(f.mono, f.qExp, denom, order);
    }
    return result;
}

}  // namespace blowup

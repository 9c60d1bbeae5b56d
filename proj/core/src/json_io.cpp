#include "blowup/json_io.hpp"

#include <algorithm>
#include <sstream>

using nlohmann::json;

namespace blowup {

json toJson(const LaurentPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json exp = json::object();
        for (size_t i = 0; i < p.vars().size(); ++i)
            if (e[i] != 0) exp[p.vars()[i]] = e[i];
        terms.push_back({{"exp", exp}, {"coef", c.get_str()}});
    }
    return {{"vars", p.vars()}, {"terms", terms}};
}

LaurentPoly laurentFromJson(const json& j) {
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    LaurentPoly p(vars);
    for (const auto& term : j.at("terms")) {
        ExpVec e(vars.size(), 0);
        for (const auto& [name, value] : term.at("exp").items()) {
            auto it = std::find(vars.begin(), vars.end(), name);
            if (it == vars.end())
                throw std::invalid_argument("exponent on undeclared variable " + name);
            e[it - vars.begin()] = value.get<int>();
        }
        p += LaurentPoly::monomial(vars, std::move(e),
                                   Int(term.at("coef").get<std::string>()));
    }
    return p;
}

json toJson(const QSeries& s) {
    json coeffs = json::array();
    for (const auto& [k, p] : s.scaledCoeffs())
        coeffs.push_back({{"q", Rational(k, s.denom()).str()}, {"poly", toJson(p)}});
    return {{"denom", s.denom()},
            {"order", s.order().str()},
            {"coeffs", coeffs}};
}

QSeries qseriesFromJson(const json& j) {
    int denom = j.at("denom").get<int>();
    Rational order = Rational::parse(j.at("order").get<std::string>());
    std::vector<std::string> vars;
    QSeries s(denom, order, {});
    bool varsKnown = false;
    for (const auto& entry : j.at("coeffs")) {
        LaurentPoly p = laurentFromJson(entry.at("poly"));
        if (!varsKnown) {
            s = QSeries(denom, order, p.vars());
            varsKnown = true;
        }
        s.add(Rational::parse(entry.at("q").get<std::string>()), p);
    }
    return s;
}

namespace {

std::string marksText(const MarkedDiagram& d) {
    std::ostringstream out;
    for (size_t i = 0; i < d.marks().size(); ++i) {
        if (i) out << ',';
        out << d.marks()[i].col + 1;  // 1-based column indices
    }
    return out.str();
}

}  // namespace

json toJson(const MarkedDiagram& d) {
    return {{"diagram", d.diagram().str()}, {"marks", marksText(d)}};
}

json toJson(const FixedPoint& f) {
    json slots = json::array();
    for (const auto& d : f.parts()) slots.push_back(toJson(d));
    return {{"slots", slots}};
}

json toJson(const VerifyReport& r) {
    json cases = json::array();
    json firstMismatch = nullptr;
    for (const auto& c : r.cases) {
        json entry = {{"params", c.params}, {"status", c.pass ? "PASS" : "FAIL"}};
        if (c.mismatch) {
            entry["firstMismatch"] = {{"q", c.mismatch->qExp.str()},
                                      {"lhs", c.mismatch->lhs.str()},
                                      {"rhs", c.mismatch->rhs.str()}};
            if (firstMismatch.is_null()) {
                firstMismatch = entry["firstMismatch"];
                firstMismatch["params"] = c.params;
            }
        }
        cases.push_back(entry);
    }
    return {{"suite", suiteName(r.suite)},
            {"params", r.params},
            {"order", r.order.str()},
            {"status", r.pass ? "PASS" : "FAIL"},
            {"firstMismatch", firstMismatch},
            {"cases", cases},
            {"elapsedMs", r.elapsedMs}};
}

}  // namespace blowup

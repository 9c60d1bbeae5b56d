// Command-line front end: enumeration, Betti numbers, tangent characters,
// the marked-diagram bijection, generating series, and identity checks.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "blowup/betti.hpp"
#include "blowup/character.hpp"
#include "blowup/errors.hpp"
#include "blowup/json_io.hpp"
#include "blowup/marked.hpp"

using nlohmann::json;
using namespace blowup;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "a..b" inclusive, or a single integer.
std::vector<int> parseRange(const std::string& text) {
    size_t dots = text.find("..");
    try {
        if (dots == std::string::npos) return {std::stoi(text)};
        int lo = std::stoi(text.substr(0, dots));
        int hi = std::stoi(text.substr(dots + 2));
        if (hi < lo) throw UsageError("empty range: " + text);
        std::vector<int> out;
        for (int v = lo; v <= hi; ++v) out.push_back(v);
        return out;
    } catch (const std::invalid_argument&) {
        throw UsageError("bad range: '" + text + "'");
    }
}

std::vector<Box> parseMarks(const Partition& y, const std::string& text) {
    std::vector<Box> marks;
    if (text.empty() || text == "-") return marks;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        int col1 = std::stoi(text.substr(pos, comma - pos));
        if (col1 < 1 || col1 > y.numColumns())
            throw UsageError("marked column " + std::to_string(col1) + " out of range");
        marks.push_back({col1 - 1, y.column(col1 - 1) - 1});
        pos = comma + 1;
    }
    return marks;
}

struct Limits {
    long maxBoxBudget = 16;
    Rational maxOrder = Rational(12);
};

void checkBudget(long boxBudget, const Limits& lim) {
    if (boxBudget > lim.maxBoxBudget)
        throw UsageError("box budget " + std::to_string(boxBudget) +
                         " exceeds --max-size " + std::to_string(lim.maxBoxBudget));
}

void checkOrder(Rational order, const Limits& lim) {
    if (order > lim.maxOrder)
        throw UsageError("order " + order.str() + " exceeds --max-size limit " +
                         lim.maxOrder.str());
}

void emit(const json& doc, bool text, const std::string& fallback = "") {
    if (text && !fallback.empty())
        std::cout << fallback << "\n";
    else
        std::cout << doc.dump(2) << "\n";
}

BettiMethod parseMethod(const std::string& name) {
    if (name == "closed") return BettiMethod::Closed;
    if (name == "morse") return BettiMethod::Morse;
    if (name == "pairs") return BettiMethod::Pairs;
    throw UsageError("unknown method: " + name);
}

Suite parseSuite(const std::string& name) {
    if (name == "rank1") return Suite::Rank1;
    if (name == "higherrank") return Suite::HigherRank;
    if (name == "gottsche") return Suite::Gottsche;
    if (name == "wallRatio" || name == "wallratio") return Suite::WallRatio;
    throw UsageError("unknown suite: " + name);
}

ModuliParams makeParams(int rank, int c1c, int m, std::optional<long> n,
                        const std::string& deltaText) {
    ModuliParams p;
    p.r = rank;
    p.c1C = c1c;
    p.m = m;
    p.n = n;
    if (!deltaText.empty()) {
        if (n) throw UsageError("give either --N or --delta, not both");
        p.delta = Rational::parse(deltaText);
    }
    if (!p.n && !p.delta) throw UsageError("a grading is required: --N or --delta");
    return p;
}

int runApp(int argc, char** argv) {
    CLI::App app{"Betti numbers of moduli of framed sheaves on the blown-up plane"};
    app.require_subcommand(1);

    std::string format = "json";
    Limits lim;
    int jobs = 1;
    app.add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    app.add_option("--max-size", lim.maxBoxBudget);
    app.add_option("--jobs", jobs)->check(CLI::PositiveNumber);

    // partitions
    auto* cmdPartitions = app.add_subcommand("partitions", "enumerate partitions of n");
    int pN = 0;
    int pMaxCols = -1;
    cmdPartitions->add_option("--n", pN)->required()->check(CLI::NonNegativeNumber);
    cmdPartitions->add_option("--max-columns", pMaxCols);

    // fixed-points
    auto* cmdFixed = app.add_subcommand("fixed-points", "enumerate torus fixed points");
    int fRank = 1, fC1c = 0, fM = 0;
    std::optional<long> fN;
    std::string fDelta;
    cmdFixed->add_option("--rank", fRank)->check(CLI::PositiveNumber);
    cmdFixed->add_option("--c1c", fC1c);
    cmdFixed->add_option("--m", fM)->check(CLI::NonNegativeNumber);
    cmdFixed->add_option("--N", fN);
    cmdFixed->add_option("--delta", fDelta);

    // betti
    auto* cmdBetti = app.add_subcommand("betti", "Poincare polynomial of one moduli space");
    int bRank = 1, bC1c = 0, bM = 0;
    std::optional<long> bN;
    std::string bDelta, bMethod = "closed";
    bool bCheckAll = false;
    cmdBetti->add_option("--rank", bRank)->check(CLI::PositiveNumber);
    cmdBetti->add_option("--c1c", bC1c);
    cmdBetti->add_option("--m", bM)->check(CLI::NonNegativeNumber);
    cmdBetti->add_option("--N", bN);
    cmdBetti->add_option("--delta", bDelta);
    cmdBetti->add_option("--method", bMethod);
    cmdBetti->add_flag("--check-all", bCheckAll, "verify all three methods agree");

    // character
    auto* cmdChar = app.add_subcommand("character", "tangent character at a fixed point");
    std::vector<std::string> cDiagrams, cMarks;
    cmdChar->add_option("--diagram", cDiagrams)->required();
    cmdChar->add_option("--marks", cMarks);

    // bijection
    auto* cmdBij = app.add_subcommand("bijection", "marked diagram <-> diagram pair");
    std::string jDiagram, jMarks, jY1, jY2;
    int jM = -1;
    cmdBij->add_option("--diagram", jDiagram);
    cmdBij->add_option("--marks", jMarks);
    cmdBij->add_option("--y1", jY1);
    cmdBij->add_option("--y2", jY2);
    cmdBij->add_option("--m", jM);

    // series
    auto* cmdSeries = app.add_subcommand("series", "generating function of Betti numbers");
    int sRank = 1, sC1c = 0, sM = 0;
    std::string sOrder = "6", sSide = "enumeration", sMethod = "closed";
    cmdSeries->add_option("--rank", sRank)->check(CLI::PositiveNumber);
    cmdSeries->add_option("--c1c", sC1c);
    cmdSeries->add_option("--m", sM)->check(CLI::NonNegativeNumber);
    cmdSeries->add_option("--order", sOrder);
    cmdSeries->add_option("--side", sSide)->check(CLI::IsMember({"enumeration", "product"}));
    cmdSeries->add_option("--method", sMethod);

    // verify
    auto* cmdVerify = app.add_subcommand("verify", "check generating-function identities");
    std::string vSuite = "rank1", vM = "0", vC1c = "0", vOrder = "6";
    int vRank = 2;
    cmdVerify->add_option("--suite", vSuite);
    cmdVerify->add_option("--rank", vRank)->check(CLI::PositiveNumber);
    cmdVerify->add_option("--m", vM, "range, e.g. 0..3");
    cmdVerify->add_option("--c1c", vC1c, "range, e.g. -1..1");
    cmdVerify->add_option("--order", vOrder);

    // allow the global flags after the subcommand as well
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints help or the diagnostic
        return code == 0 ? 0 : 2;
    }
    bool text = format == "text";

    if (*cmdPartitions) {
        checkBudget(pN, lim);
        auto list = enumeratePartitions(
            pN, pMaxCols >= 0 ? std::optional<int>(pMaxCols) : std::nullopt);
        json arr = json::array();
        std::string lines;
        for (const auto& y : list) {
            arr.push_back(y.str());
            lines += (y.empty() ? "()" : y.str()) + "\n";
        }
        if (!lines.empty()) lines.pop_back();
        emit({{"n", pN}, {"count", list.size()}, {"partitions", arr}}, text, lines);
        return 0;
    }

    if (*cmdFixed) {
        ModuliParams p = makeParams(fRank, fC1c, fM, fN, fDelta);
        ResolvedParams rp = resolveParams(p);
        json arr = json::array();
        std::string lines;
        if (rp.satisfiable) {
            checkBudget(rp.boxBudget, lim);
            for (const auto& f : enumerateFixedPoints(rp.r, rp.marksTotal, rp.boxBudget)) {
                arr.push_back(toJson(f));
                for (const auto& d : f.parts())
                    lines += "(" + d.diagram().str() + " | " +
                             toJson(d)["marks"].get<std::string>() + ") ";
                lines += "\n";
            }
        }
        if (!lines.empty()) lines.pop_back();
        emit({{"count", arr.size()}, {"fixedPoints", arr}}, text, lines);
        return 0;
    }

    if (*cmdBetti) {
        ModuliParams p = makeParams(bRank, bC1c, bM, bN, bDelta);
        ResolvedParams rp = resolveParams(p);
        if (rp.satisfiable) checkBudget(rp.boxBudget, lim);
        LaurentPoly poly = poincarePolynomial(p, parseMethod(bMethod));
        if (bCheckAll) {
            for (auto other : {BettiMethod::Closed, BettiMethod::Morse, BettiMethod::Pairs})
                if (!(poincarePolynomial(p, other) == poly))
                    throw InternalInconsistency("methods disagree");
        }
        emit({{"poly", toJson(poly)}, {"pretty", poly.str()}}, text, poly.str());
        return 0;
    }

    if (*cmdChar) {
        std::vector<MarkedDiagram> parts;
        for (size_t i = 0; i < cDiagrams.size(); ++i) {
            Partition y = Partition::parse(cDiagrams[i]);
            std::vector<Box> marks =
                i < cMarks.size() ? parseMarks(y, cMarks[i]) : std::vector<Box>{};
            parts.emplace_back(std::move(y), std::move(marks));
        }
        FixedPoint f(std::move(parts));
        checkBudget(f.totalSize(), lim);
        LaurentPoly ch = tangentCharacter(f);
        long dim = dimensionOf(ch);
        long index = morseIndex(ch, f.rank());
        emit({{"character", toJson(ch)},
              {"pretty", ch.str()},
              {"dimension", dim},
              {"morseIndex", index}},
             text, ch.str() + "\ndimension " + std::to_string(dim) + ", morse index " +
                       std::to_string(index));
        return 0;
    }

    if (*cmdBij) {
        if (!jDiagram.empty()) {
            Partition y = Partition::parse(jDiagram);
            MarkedDiagram d(y, parseMarks(y, jMarks));
            DiagramPair p = split(d);
            emit({{"Y1", p.y1.str()}, {"Y2", p.y2.str()}, {"m", p.m}}, text,
                 "Y1=" + p.y1.str() + " Y2=" + p.y2.str() + " m=" + std::to_string(p.m));
        } else if (jM >= 0) {
            MarkedDiagram d = merge({Partition::parse(jY1), Partition::parse(jY2), jM});
            json doc = toJson(d);
            emit(doc, text, "Y=" + d.diagram().str() + " marks=" +
                                doc["marks"].get<std::string>());
        } else {
            throw UsageError("bijection needs --diagram/--marks or --y1/--y2/--m");
        }
        return 0;
    }

    if (*cmdSeries) {
        Rational order = Rational::parse(sOrder);
        checkOrder(order, lim);
        QSeries s = sSide == "product"
                        ? genFunProduct(sRank, sC1c, sM, order)
                        : genFunEnumeration(sRank, sC1c, sM, order, parseMethod(sMethod),
                                            jobs);
        emit({{"series", toJson(s)}, {"pretty", s.str()}}, text, s.str());
        return 0;
    }

    if (*cmdVerify) {
        Rational order = Rational::parse(vOrder);
        checkOrder(order, lim);
        VerifyReport report = verifyIdentity(parseSuite(vSuite), vRank, parseRange(vM),
                                             parseRange(vC1c), order, jobs);
        std::string lines;
        for (const auto& c : report.cases)
            lines += std::string(c.pass ? "PASS " : "FAIL ") + c.params + "\n";
        lines += report.pass ? "PASS" : "FAIL";
        emit(toJson(report), text, lines);
        return report.pass ? 0 : 1;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return runApp(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

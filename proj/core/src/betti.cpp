#include "blowup/betti.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <future>
#include <sstream>
#include <stdexcept>

#include "blowup/character.hpp"

namespace blowup {

namespace {

const std::vector<std::string> kTVar = {"t"};

LaurentPoly tPower(long halfDegree) {
    return LaurentPoly::monomial(kTVar, {static_cast<int>(2 * halfDegree)}, 1);
}

}  // namespace

Rational gradingOffset(int r, int c1C, int m) {
    long total = static_cast<long>(r) * m + c1C;
    return Rational(total, 2) + Rational(total * total, 2L * r);
}

ResolvedParams resolveParams(const ModuliParams& p) {
    if (p.r < 1) throw std::invalid_argument("rank must be >= 1");
    if (p.n && p.delta) throw std::invalid_argument("give either N or delta, not both");
    if (!p.n && !p.delta) throw std::invalid_argument("a grading (N or delta) is required");
    if (p.n && p.r != 1) throw std::invalid_argument("grading N is rank-1 only");

    ResolvedParams out;
    out.r = p.r;
    long marks = static_cast<long>(p.r) * p.m + p.c1C;
    if (marks < 0) {
        out.satisfiable = false;
        return out;
    }
    out.marksTotal = static_cast<int>(marks);
    if (p.n) {
        out.boxBudget = *p.n + marks * (marks + 1) / 2;
    } else {
        Rational b = *p.delta + gradingOffset(p.r, p.c1C, p.m);
        if (!b.isInteger()) {
            out.satisfiable = false;
            return out;
        }
        out.boxBudget = b.num();
    }
    if (out.boxBudget < 0) out.satisfiable = false;
    return out;
}

long fixedPointExponent(const FixedPoint& f, int rank) {
    long total = 0;
    std::vector<int> markCounts;
    for (int alpha = 0; alpha < rank; ++alpha) {
        DiagramPair pair = split(f.part(alpha));
        total += static_cast<long>(rank) * (pair.y1.size() + pair.y2.size()) -
                 static_cast<long>(alpha + 1) * pair.y1.numColumns();
        markCounts.push_back(pair.m);
    }
    for (int alpha = 0; alpha < rank; ++alpha)
        for (int beta = alpha + 1; beta < rank; ++beta) {
            long d = markCounts[alpha] - markCounts[beta];
            total += d * (d - 1) / 2;
        }
    return total;
}

namespace {

LaurentPoly sumOverFixedPoints(const ResolvedParams& rp, BettiMethod method) {
    LaurentPoly total(kTVar);
    for (const FixedPoint& f : enumerateFixedPoints(rp.r, rp.marksTotal, rp.boxBudget)) {
        long exponent = method == BettiMethod::Morse
                            ? morseIndex(tangentCharacter(f), rp.r)
                            : fixedPointExponent(f, rp.r);
        total += tPower(exponent);
    }
    return total;
}

// Pairs route: r-tuples of (m_alpha, Y1, Y2) with sum of marks fixed,
// Y2 bounded by m_alpha columns, and total boxes (staircases included)
// equal to the budget.
void pairsRec(int slot, int rank, int marksLeft, long boxesLeft, long exponentAcc,
              std::vector<int>& markCounts, LaurentPoly& total) {
    if (slot == rank) {
        if (marksLeft != 0 || boxesLeft != 0) return;
        long cross = 0;
        for (int a = 0; a < rank; ++a)
            for (int b = a + 1; b < rank; ++b) {
                long d = markCounts[a] - markCounts[b];
                cross += d * (d - 1) / 2;
            }
        total += tPower(exponentAcc + cross);
        return;
    }
    for (int m = 0; m <= marksLeft; ++m) {
        long staircase = static_cast<long>(m) * (m + 1) / 2;
        if (staircase > boxesLeft) break;
        markCounts.push_back(m);
        long pairBoxes = boxesLeft - staircase;
        for (long n1 = 0; n1 <= pairBoxes; ++n1) {
            for (const Partition& y1 : enumeratePartitions(static_cast<int>(n1))) {
                for (long n2 = 0; n2 + n1 <= pairBoxes; ++n2) {
                    long expo = static_cast<long>(rank) * (n1 + n2) -
                                static_cast<long>(slot + 1) * y1.numColumns();
                    size_t y2Count = enumeratePartitions(static_cast<int>(n2), m).size();
                    for (size_t i = 0; i < y2Count; ++i)
                        pairsRec(slot + 1, rank, marksLeft - m, pairBoxes - n1 - n2,
                                 exponentAcc + expo, markCounts, total);
                }
            }
        }
        markCounts.pop_back();
    }
}

}  // namespace

LaurentPoly poincarePolynomial(const ModuliParams& p, BettiMethod method) {
    ResolvedParams rp = resolveParams(p);
    if (!rp.satisfiable) return LaurentPoly(kTVar);
    if (method != BettiMethod::Pairs) return sumOverFixedPoints(rp, method);
    LaurentPoly total(kTVar);
    std::vector<int> markCounts;
    pairsRec(0, rp.r, rp.marksTotal, rp.boxBudget, 0, markCounts, total);
    return total;
}

QSeries genFunEnumeration(int r, int c1C, int m, Rational order, BettiMethod method,
                          int jobs) {
    int denom = r == 1 ? 1 : 2 * r;
    QSeries series(denom, order, kTVar);
    Rational offset = gradingOffset(r, c1C, m);
    std::vector<long> budgets;
    for (long b = 0; Rational(b) - offset < order; ++b) budgets.push_back(b);

    auto compute = [&](long b) {
        ModuliParams p{r, c1C, m, std::nullopt, Rational(b) - offset};
        return poincarePolynomial(p, method);
    };
    if (jobs > 1) {
        std::vector<std::future<LaurentPoly>> futures;
        futures.reserve(budgets.size());
        for (long b : budgets)
            futures.push_back(std::async(std::launch::async, compute, b));
        for (size_t i = 0; i < budgets.size(); ++i)
            series.add(Rational(budgets[i]) - offset, futures[i].get());
    } else {
        for (long b : budgets) series.add(Rational(b) - offset, compute(b));
    }
    return series;
}

namespace {

// All twist vectors k with k_alpha >= -m, sum k = c1C, whose quadratic
// q-offset stays below the truncation order.
void twistVectors(int r, int c1C, int m, Rational order, std::vector<int>& prefix,
                  std::vector<std::vector<int>>& out) {
    if (static_cast<int>(prefix.size()) == r) {
        long sum = 0, s2 = 0;
        for (int a = 0; a < r; ++a) {
            sum += prefix[a];
            for (int b = a + 1; b < r; ++b) {
                long d = prefix[a] - prefix[b];
                s2 += d * d;
            }
        }
        if (sum == c1C && Rational(s2, 2L * r) < order) out.push_back(prefix);
        return;
    }
    // crude but safe per-component window
    long spread = 2 + static_cast<long>(std::sqrt(2.0 * r * (std::abs(order.num()) + 1)));
    long lo = -m;
    long hi = std::abs(static_cast<long>(c1C)) + static_cast<long>(m) * r + spread;
    for (long k = lo; k <= hi; ++k) {
        prefix.push_back(static_cast<int>(k));
        twistVectors(r, c1C, m, order, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

QSeries genFunProduct(int r, int c1C, int m, Rational order) {
    int denom = r == 1 ? 1 : 2 * r;
    QSeries series(denom, order, kTVar);

    std::vector<std::vector<int>> ks;
    std::vector<int> prefix;
    twistVectors(r, c1C, m, order, prefix, ks);

    for (const auto& k : ks) {
        QSeries slotProduct = QSeries::one(denom, order, kTVar);
        for (int alpha = 1; alpha <= r; ++alpha) {
            slotProduct = slotProduct *
                          cappedProduct(denom, order, kTVar, [&](int d) {
                              return GeometricFactor{
                                  LaurentPoly::monomial(kTVar, {2 * (r * d - alpha)}, 1),
                                  Rational(d)};
                          });
            int cap = m + k[alpha - 1];
            slotProduct = slotProduct *
                          cappedProduct(denom, order, kTVar,
                                        [&](int d) {
                                            return GeometricFactor{
                                                LaurentPoly::monomial(kTVar, {2 * r * d}, 1),
                                                Rational(d)};
                                        },
                                        cap);
        }
        long rho2 = 0, s2 = 0;
        for (int a = 0; a < r; ++a)
            for (int b = a + 1; b < r; ++b) {
                rho2 += k[a] - k[b];
                long d = k[a] - k[b];
                s2 += d * d;
            }
        // t^{-2<k,rho>} (t^{2r} q)^{(k,k)/2}
        LaurentPoly tPrefactor =
            LaurentPoly::monomial(kTVar, {static_cast<int>(-rho2 + s2)}, 1);
        series = series + slotProduct.shifted(Rational(s2, 2L * r), tPrefactor);
    }
    return series;
}

long fixedPointCount(int r, int c1C, int m, Rational delta) {
    ModuliParams p{r, c1C, m, std::nullopt, delta};
    ResolvedParams rp = resolveParams(p);
    if (!rp.satisfiable) return 0;
    return static_cast<long>(
        enumerateFixedPoints(rp.r, rp.marksTotal, rp.boxBudget).size());
}

std::string suiteName(Suite s) {
    switch (s) {
        case Suite::Rank1: return "rank1";
        case Suite::HigherRank: return "higherrank";
        case Suite::Gottsche: return "gottsche";
        case Suite::WallRatio: return "wallRatio";
    }
    return "?";
}

namespace {

VerifyCase compareSeries(std::string params, const QSeries& lhs, const QSeries& rhs) {
    VerifyCase c{std::move(params), false, lhs.firstMismatch(rhs)};
    c.pass = !c.mismatch.has_value();
    return c;
}

QSeries wallFactor(int m, int denom, Rational order) {
    return expandGeometric(LaurentPoly::monomial(kTVar, {2 * (m + 1)}, 1),
                           Rational(m + 1), denom, order);
}

}  // namespace

VerifyReport verifyIdentity(Suite suite, int r, const std::vector<int>& ms,
                            const std::vector<int>& c1Cs, Rational order, int jobs) {
    auto start = std::chrono::steady_clock::now();
    VerifyReport report{suite, order};
    {
        std::ostringstream s;
        s << "r=" << (suite == Suite::HigherRank ? r : 1) << " m={";
        for (size_t i = 0; i < ms.size(); ++i) s << (i ? "," : "") << ms[i];
        s << "} c1C={";
        for (size_t i = 0; i < c1Cs.size(); ++i) s << (i ? "," : "") << c1Cs[i];
        s << "}";
        report.params = s.str();
    }

    std::vector<std::pair<std::string, std::function<VerifyCase()>>> tasks;
    auto label = [&](int rr, int m, int c) {
        std::ostringstream s;
        s << "r=" << rr << " m=" << m << " c1C=" << c;
        return s.str();
    };

    std::vector<int> cs = c1Cs.empty() ? std::vector<int>{0} : c1Cs;
    switch (suite) {
        case Suite::Rank1:
            for (int m : ms)
                for (int c : cs)
                    tasks.emplace_back(label(1, m, c), [=] {
                        return compareSeries(label(1, m, c),
                                             genFunEnumeration(1, c, m, order),
                                             genFunProduct(1, c, m, order));
                    });
            break;
        case Suite::HigherRank:
            for (int m : ms)
                for (int c : cs)
                    tasks.emplace_back(label(r, m, c), [=] {
                        return compareSeries(label(r, m, c),
                                             genFunEnumeration(r, c, m, order),
                                             genFunProduct(r, c, m, order));
                    });
            break;
        case Suite::Gottsche:
            for (int m : ms)
                tasks.emplace_back(label(1, m, 0), [=] {
                    // double product with both factors capped at d <= m
                    QSeries rhs =
                        cappedProduct(1, order, kTVar,
                                      [&](int d) {
                                          return GeometricFactor{
                                              LaurentPoly::monomial(kTVar, {2 * d - 2}, 1),
                                              Rational(d)};
                                      },
                                      m) *
                        cappedProduct(1, order, kTVar,
                                      [&](int d) {
                                          return GeometricFactor{
                                              LaurentPoly::monomial(kTVar, {2 * d}, 1),
                                              Rational(d)};
                                      },
                                      m);
                    return compareSeries(label(1, m, 0), genFunEnumeration(1, 0, m, order),
                                         rhs);
                });
            break;
        case Suite::WallRatio:
            for (int m : ms)
                for (int c : cs)
                    tasks.emplace_back(label(1, m, c), [=] {
                        QSeries factor = wallFactor(m, 1, order);
                        QSeries enumLo = genFunEnumeration(1, c, m, order);
                        QSeries enumHi = genFunEnumeration(1, c, m + 1, order);
                        VerifyCase a = compareSeries(label(1, m, c) + " enum-ratio",
                                                     enumLo * factor, enumHi);
                        if (!a.pass) return a;
                        QSeries prodLo = genFunProduct(1, c, m, order);
                        QSeries prodHi = genFunProduct(1, c, m + 1, order);
                        return compareSeries(label(1, m, c) + " product-ratio",
                                             prodLo * factor, prodHi);
                    });
            break;
    }

    if (jobs > 1) {
        std::vector<std::future<VerifyCase>> futures;
        for (auto& [name, fn] : tasks)
            futures.push_back(std::async(std::launch::async, fn));
        for (auto& f : futures) report.cases.push_back(f.get());
    } else {
        for (auto& [name, fn] : tasks) report.cases.push_back(fn());
    }
    for (const auto& c : report.cases)
        if (!c.pass) report.pass = false;

    report.elapsedMs = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
    return report;
}

}  // namespace blowup

#include "blowup/marked.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "blowup/errors.hpp"

namespace blowup {

MarkedDiagram::MarkedDiagram(Partition y, std::vector<Box> marks)
    : y_(std::move(y)), marks_(std::move(marks)) {
    std::sort(marks_.begin(), marks_.end());
    auto removable = y_.removableBoxes();
    for (const Box& s : marks_) {
        if (std::find(removable.begin(), removable.end(), s) == removable.end())
            throw std::invalid_argument("mark is not a removable box");
    }
    for (size_t i = 0; i + 1 < marks_.size(); ++i)
        if (marks_[i] == marks_[i + 1])
            throw std::invalid_argument("duplicate mark");
}

bool MarkedDiagram::isMarked(Box s) const {
    return std::binary_search(marks_.begin(), marks_.end(), s);
}

Partition MarkedDiagram::core() const {
    std::vector<int> cols = y_.columns();
    for (const Box& s : marks_) cols[s.col] -= 1;
    std::erase(cols, 0);
    return Partition(std::move(cols));
}

int FixedPoint::totalMarks() const {
    int total = 0;
    for (const auto& d : parts_) total += d.numMarks();
    return total;
}

int FixedPoint::totalSize() const {
    int total = 0;
    for (const auto& d : parts_) total += d.diagram().size();
    return total;
}

std::vector<Box> irrelevantBoxesRank1(const MarkedDiagram& d) {
    const Partition& y = d.diagram();
    // Columns whose top box is marked, rows whose rightmost box is marked.
    std::set<int> markedCols, markedRows;
    for (const Box& s : d.marks()) {
        markedCols.insert(s.col);
        markedRows.insert(s.row);
    }
    std::vector<Box> result;
    for (int col : markedCols) {
        for (int row = 0; row < y.column(col); ++row) {
            if (!markedRows.count(row)) continue;
            Box rowEnd{y.rowLength(row) - 1, row};
            if (d.isMarked(rowEnd)) result.push_back({col, row});
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<Box> relevantBoxesRank1(const MarkedDiagram& d) {
    auto irrelevant = irrelevantBoxesRank1(d);
    std::vector<Box> result;
    for (const Box& s : d.diagram().boxes())
        if (!std::binary_search(irrelevant.begin(), irrelevant.end(), s))
            result.push_back(s);
    return result;
}

PairRelevant relevantPair(const MarkedDiagram& a, const MarkedDiagram& b) {
    Partition coreA = a.core();
    std::set<Box> relA, relB;
    for (const Box& s : coreA.boxes()) relA.insert(s);
    for (const Box& s : b.diagram().boxes()) relB.insert(s);

    for (const Box& s : a.marks()) {
        for (const Box& sp : b.marks()) {
            Box u{sp.col, s.row};   // row of s, column of s'
            Box up{s.col, sp.row};  // row of s', column of s
            if (s.row <= sp.row) {
                if (!relB.erase(u))
                    throw InternalInconsistency("designated box u not in Y_B");
                if (coreA.contains(up))
                    throw InternalInconsistency("u' unexpectedly inside Y_A \\ S_A");
            } else {
                if (!relA.erase(up))
                    throw InternalInconsistency("designated box u' not in Y_A \\ S_A");
                if (b.diagram().contains(u))
                    throw InternalInconsistency("u unexpectedly inside Y_B");
            }
        }
    }
    return {{relA.begin(), relA.end()}, {relB.begin(), relB.end()}};
}

DiagramPair split(const MarkedDiagram& d) {
    const Partition& y = d.diagram();
    std::set<int> markedCols;
    for (const Box& s : d.marks()) markedCols.insert(s.col);
    int m = d.numMarks();

    std::vector<int> y1cols, markedHeights;
    for (int i = 0; i < y.numColumns(); ++i) {
        if (markedCols.count(i))
            markedHeights.push_back(y.columns()[i]);
        else
            y1cols.push_back(y.columns()[i]);
    }
    // Marked heights are strictly decreasing left to right; subtracting the
    // staircase m, m-1, ..., 1 of irrelevant boxes leaves Y2.
    std::vector<int> y2cols;
    for (int k = 0; k < m; ++k) {
        int h = markedHeights[k] - (m - k);
        if (h < 0) throw InternalInconsistency("split produced a negative column");
        if (h > 0) y2cols.push_back(h);
    }
    for (size_t k = 0; k + 1 < y2cols.size(); ++k)
        if (y2cols[k] < y2cols[k + 1])
            throw InternalInconsistency("split produced a non-monotone Y2");
    return {Partition(std::move(y1cols)), Partition(std::move(y2cols)), m};
}

MarkedDiagram merge(const DiagramPair& p) {
    if (p.y2.numColumns() > p.m)
        throw std::invalid_argument("merge: Y2 has more than m columns");
    const int m = p.m;
    std::vector<int> markedHeights(m);
    for (int k = 0; k < m; ++k) markedHeights[k] = p.y2.column(k) + (m - k);

    // Merge with Y1, marked columns going right of equal-height unmarked
    // ones so the re-inserted tops stay removable.
    std::vector<int> cols;
    std::vector<bool> marked;
    size_t i = 0;
    int k = 0;
    while (i < p.y1.columns().size() || k < m) {
        bool takeUnmarked;
        if (i >= p.y1.columns().size())
            takeUnmarked = false;
        else if (k >= m)
            takeUnmarked = true;
        else
            takeUnmarked = p.y1.columns()[i] >= markedHeights[k];
        if (takeUnmarked) {
            cols.push_back(p.y1.columns()[i++]);
            marked.push_back(false);
        } else {
            cols.push_back(markedHeights[k++]);
            marked.push_back(true);
        }
    }
    std::vector<Box> marks;
    for (size_t c = 0; c < cols.size(); ++c)
        if (marked[c]) marks.push_back({static_cast<int>(c), cols[c] - 1});
    return MarkedDiagram(Partition(std::move(cols)), std::move(marks));
}

std::vector<MarkedDiagram> enumerateMarked(int totalBoxes, int m) {
    if (m < 0) throw std::invalid_argument("enumerateMarked: negative m");
    if (totalBoxes < m * (m + 1) / 2)
        throw EmptyRange("no diagram with " + std::to_string(totalBoxes) +
                         " boxes admits " + std::to_string(m) + " marked removable boxes");
    std::vector<MarkedDiagram> out;
    for (const Partition& y : enumeratePartitions(totalBoxes)) {
        auto removable = y.removableBoxes();
        int n = static_cast<int>(removable.size());
        if (n < m) continue;
        // All m-subsets of the removable boxes, lexicographic.
        std::vector<int> idx(m);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            std::vector<Box> marks;
            for (int j : idx) marks.push_back(removable[j]);
            out.emplace_back(y, std::move(marks));
            int pos = m - 1;
            while (pos >= 0 && idx[pos] == n - m + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int j = pos + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return out;
}

namespace {

void enumerateFixedRec(int slot, int r, int marksLeft, int boxesLeft,
                       const std::vector<int>& markBounds,
                       std::vector<MarkedDiagram>& prefix,
                       std::vector<FixedPoint>& out) {
    if (slot == r) {
        if (marksLeft == 0 && boxesLeft == 0) out.emplace_back(prefix);
        return;
    }
    int lowMark = slot < static_cast<int>(markBounds.size()) ? std::max(0, markBounds[slot]) : 0;
    for (int m = lowMark; m <= marksLeft; ++m) {
        for (int n = m * (m + 1) / 2; n <= boxesLeft; ++n) {
            for (const MarkedDiagram& d : enumerateMarked(n, m)) {
                prefix.push_back(d);
                enumerateFixedRec(slot + 1, r, marksLeft - m, boxesLeft - n,
                                  markBounds, prefix, out);
                prefix.pop_back();
            }
        }
    }
}

}  // namespace

std::vector<FixedPoint> enumerateFixedPoints(int r, int c1C, int boxBudget,
                                             const std::vector<int>& markBounds) {
    if (r < 1) throw std::invalid_argument("enumerateFixedPoints: rank must be >= 1");
    std::vector<FixedPoint> out;
    if (c1C < 0 || boxBudget < 0) return out;
    std::vector<MarkedDiagram> prefix;
    enumerateFixedRec(0, r, c1C, boxBudget, markBounds, prefix, out);
    return out;
}

}  // namespace blowup

#pragma once

#include <vector>

#include "blowup/partition.hpp"

namespace blowup {

// A Young diagram with a set of marked removable boxes. One rank-1 torus
// fixed point. Marks are kept sorted by column; marked columns automatically
// have pairwise distinct heights.
class MarkedDiagram {
public:
    MarkedDiagram() = default;
    MarkedDiagram(Partition y, std::vector<Box> marks);

    const Partition& diagram() const { return y_; }
    const std::vector<Box>& marks() const { return marks_; }
    int numMarks() const { return static_cast<int>(marks_.size()); }

    bool isMarked(Box s) const;

    // The diagram Y \ S: each marked column loses its top box.
    Partition core() const;

    friend auto operator<=>(const MarkedDiagram& a, const MarkedDiagram& b) {
        if (auto c = a.y_ <=> b.y_; c != 0) return c;
        return a.marks_ <=> b.marks_;
    }
    friend bool operator==(const MarkedDiagram&, const MarkedDiagram&) = default;

private:
    Partition y_;
    std::vector<Box> marks_;
};

// A pair of Young diagrams with a mark count; the second diagram has at most
// m columns. The image of a MarkedDiagram under split().
struct DiagramPair {
    Partition y1;
    Partition y2;
    int m = 0;

    friend bool operator==(const DiagramPair&, const DiagramPair&) = default;
};

// An r-tuple of marked diagrams; one torus fixed point of the moduli space.
class FixedPoint {
public:
    FixedPoint() = default;
    explicit FixedPoint(std::vector<MarkedDiagram> parts) : parts_(std::move(parts)) {}

    int rank() const { return static_cast<int>(parts_.size()); }
    const std::vector<MarkedDiagram>& parts() const { return parts_; }
    const MarkedDiagram& part(int alpha) const { return parts_.at(alpha); }

    int totalMarks() const;
    int totalSize() const;

    friend bool operator==(const FixedPoint&, const FixedPoint&) = default;

private:
    std::vector<MarkedDiagram> parts_;
};

// Boxes whose column top and row end are both marked boxes. The marked boxes
// themselves qualify. There are exactly m(m+1)/2 of them.
std::vector<Box> irrelevantBoxesRank1(const MarkedDiagram& d);

// Y minus the rank-1 irrelevant boxes.
std::vector<Box> relevantBoxesRank1(const MarkedDiagram& d);

// Relevant boxes for an ordered pair of marked diagrams. Each pair of marks
// (s,s') with s in S_A, s' in S_B designates one irrelevant box: if
// row(s) <= row(s') the box (col s', row s) is dropped from Y_B, otherwise
// (col s, row s') is dropped from Y_A \ S_A. Throws InternalInconsistency if
// a designated box is missing from its claimed set.
struct PairRelevant {
    std::vector<Box> relA;  // from Y_A \ S_A
    std::vector<Box> relB;  // from Y_B
};
PairRelevant relevantPair(const MarkedDiagram& a, const MarkedDiagram& b);

// Forward half of the marked-diagram <-> diagram-pair bijection: delete the
// marked columns (giving Y1) and stack the deleted columns minus the
// staircase of irrelevant boxes (giving Y2).
DiagramPair split(const MarkedDiagram& d);

// Inverse: re-grow marked columns of heights y2.column(k) + (m-k) and merge
// them back, each to the right of equal-height unmarked columns.
MarkedDiagram merge(const DiagramPair& p);

// All (Y,S) with |Y| = totalBoxes, |S| = m, in canonical order.
// Throws EmptyRange when totalBoxes < m(m+1)/2.
std::vector<MarkedDiagram> enumerateMarked(int totalBoxes, int m);

// All r-tuples with total marks c1C, total size boxBudget, and per-slot
// lower bounds on the mark counts. Empty when unsatisfiable.
std::vector<FixedPoint> enumerateFixedPoints(int r, int c1C, int boxBudget,
                                             const std::vector<int>& markBounds = {});

}  // namespace blowup

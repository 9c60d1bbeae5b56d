#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace blowup {

// Box coordinates inside (or outside) a Young diagram. `col` is the
// horizontal coordinate (the colength l'), `row` the vertical one (the
// colength a'). Both are 0-based.
struct Box {
    int col = 0;
    int row = 0;

    friend auto operator<=>(const Box&, const Box&) = default;
};

// A Young diagram stored as weakly decreasing column heights. The number of
// columns is the statistic l(Y); marked boxes in later modules are always
// column tops.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> columns);

    // Parses "5,5,4,3,3,1"; the empty string is the empty diagram.
    static Partition parse(std::string_view text);

    int size() const { return size_; }
    int numColumns() const { return static_cast<int>(columns_.size()); }
    bool empty() const { return columns_.empty(); }

    const std::vector<int>& columns() const { return columns_; }

    // Height of column i; 0 when the column is absent.
    int column(int i) const;

    // Number of boxes in row j, i.e. #{i : columns[i] > j}.
    int rowLength(int row) const;

    bool contains(Box s) const;

    Partition conjugate() const;

    // Column tops whose removal leaves a valid diagram, left to right.
    std::vector<Box> removableBoxes() const;

    // All boxes, column by column.
    std::vector<Box> boxes() const;

    std::string str() const;

    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.columns_ <=> b.columns_;
    }
    friend bool operator==(const Partition& a, const Partition& b) {
        return a.columns_ == b.columns_;
    }

private:
    std::vector<int> columns_;
    int size_ = 0;
};

// Arm and leg of box s measured in yref. Arm counts boxes strictly above s
// in its column, leg counts boxes strictly right of s in its row. Both are
// signed: they go negative when s lies outside yref.
struct ArmLeg {
    int arm = 0;
    int leg = 0;
};
ArmLeg armLeg(const Partition& yref, Box s);

// All partitions of n (with at most maxColumns columns when given), in
// lexicographic order on column sequences.
std::vector<Partition> enumeratePartitions(int n,
                                           std::optional<int> maxColumns = std::nullopt);

}  // namespace blowup

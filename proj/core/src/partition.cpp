#include "blowup/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace blowup {

Partition::Partition(std::vector<int> columns) : columns_(std::move(columns)) {
    for (size_t i = 0; i < columns_.size(); ++i) {
        if (columns_[i] < 1)
            throw std::invalid_argument("partition columns must be positive");
        if (i + 1 < columns_.size() && columns_[i] < columns_[i + 1])
            throw std::invalid_argument("partition columns must be weakly decreasing");
    }
    size_ = std::accumulate(columns_.begin(), columns_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> cols;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        int value = 0;
        auto part = text.substr(pos, comma - pos);
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (ec != std::errc{} || ptr != part.data() + part.size())
            throw std::invalid_argument("bad partition entry: '" + std::string(part) + "'");
        cols.push_back(value);
        pos = comma + 1;
    }
    return Partition(std::move(cols));
}

int Partition::column(int i) const {
    if (i < 0) throw std::invalid_argument("negative column index");
    return i < numColumns() ? columns_[i] : 0;
}

int Partition::rowLength(int row) const {
    // columns_ is sorted descending, so the cut is a binary search.
    auto it = std::lower_bound(columns_.begin(), columns_.end(), row,
                               [](int height, int r) { return height > r; });
    return static_cast<int>(it - columns_.begin());
}

bool Partition::contains(Box s) const {
    return s.col >= 0 && s.row >= 0 && s.row < column(s.col);
}

Partition Partition::conjugate() const {
    std::vector<int> rows;
    if (!columns_.empty()) {
        rows.resize(columns_[0]);
        for (int j = 0; j < columns_[0]; ++j) rows[j] = rowLength(j);
    }
    return Partition(std::move(rows));
}

std::vector<Box> Partition::removableBoxes() const {
    std::vector<Box> result;
    for (int i = 0; i < numColumns(); ++i)
        if (columns_[i] > column(i + 1)) result.push_back({i, columns_[i] - 1});
    return result;
}

std::vector<Box> Partition::boxes() const {
    std::vector<Box> result;
    result.reserve(size_);
    for (int i = 0; i < numColumns(); ++i)
        for (int j = 0; j < columns_[i]; ++j) result.push_back({i, j});
    return result;
}

std::string Partition::str() const {
    std::ostringstream out;
    for (size_t i = 0; i < columns_.size(); ++i) {
        if (i) out << ',';
        out << columns_[i];
    }
    return out.str();
}

ArmLeg armLeg(const Partition& yref, Box s) {
    if (s.col < 0 || s.row < 0)
        throw std::invalid_argument("armLeg: box coordinates must be nonnegative");
    return {yref.column(s.col) - s.row - 1, yref.rowLength(s.row) - s.col - 1};
}

namespace {

void enumerateRec(int n, int maxHeight, int colsLeft, std::vector<int>& prefix,
                  std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(prefix);
        return;
    }
    if (colsLeft == 0) return;
    // Smallest admissible first column keeps the remainder fillable; ascending
    // heights give lexicographic order on column sequences.
    int low = (n + colsLeft - 1) / colsLeft;
    for (int h = low; h <= std::min(n, maxHeight); ++h) {
        prefix.push_back(h);
        enumerateRec(n - h, h, colsLeft - 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumeratePartitions(int n, std::optional<int> maxColumns) {
    if (n < 0) throw std::invalid_argument("enumeratePartitions: negative n");
    std::vector<Partition> out;
    std::vector<int> prefix;
    int cols = maxColumns.value_or(n);
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    enumerateRec(n, n, cols, prefix, out);
    return out;
}

}  // namespace blowup

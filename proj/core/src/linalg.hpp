#pragma once

#include <vector>

#include "ssk3/field.hpp"

namespace ssk3::detail {

using Row = std::vector<FFElem>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(const FieldCtx& F, std::vector<Row>& rows);

int rank(const FieldCtx& F, std::vector<Row> rows);

// Basis of {v : M v = 0}, each vector normalized so its last nonzero entry is 1.
std::vector<Row> nullspace(const FieldCtx& F, std::vector<Row> rows, int ncols);

// Incremental echelon basis for rank tracking during subset scans.
class Echelon {
public:
    Echelon(const FieldCtx& F, int ncols) : F_(F), ncols_(ncols) {}
    // Adds a row; returns true if it increased the rank.
    bool add(Row r);
    int rank() const { return static_cast<int>(rows_.size()); }
    void pop() { rows_.pop_back(), pivots_.pop_back(); }

private:
    const FieldCtx& F_;
    int ncols_;
    std::vector<Row> rows_;
    std::vector<int> pivots_;
};

}  // namespace ssk3::detail

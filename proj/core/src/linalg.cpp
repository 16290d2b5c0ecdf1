#include "linalg.hpp"

namespace ssk3::detail {

std::vector<int> rref(const FieldCtx& F, std::vector<Row>& rows) {
    std::vector<int> pivots;
    if (rows.empty()) return pivots;
    int ncols = static_cast<int>(rows[0].size());
    std::size_t r = 0;
    for (int c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        FFElem inv = F.inv(rows[r][c]);
        for (auto& e : rows[r]) e = F.mul(e, inv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            FFElem f = rows[i][c];
            for (int j = c; j < ncols; ++j) rows[i][j] += F.mul(f, rows[r][j]);
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

int rank(const FieldCtx& F, std::vector<Row> rows) { return static_cast<int>(rref(F, rows).size()); }

std::vector<Row> nullspace(const FieldCtx& F, std::vector<Row> rows, int ncols) {
    auto pivots = rref(F, rows);
    std::vector<bool> is_pivot(static_cast<std::size_t>(ncols), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<Row> basis;
    for (int free = 0; free < ncols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        Row v(static_cast<std::size_t>(ncols));
        v[static_cast<std::size_t>(free)] = F.one();
        for (std::size_t i = 0; i < pivots.size(); ++i) v[static_cast<std::size_t>(pivots[i])] = rows[i][free];
        FFElem last{};
        for (auto e : v)
            if (!e.is_zero()) last = e;
        FFElem inv = F.inv(last);
        for (auto& e : v) e = F.mul(e, inv);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool Echelon::add(Row r) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        FFElem f = r[static_cast<std::size_t>(pivots_[i])];
        if (f.is_zero()) continue;
        for (int j = 0; j < ncols_; ++j) r[j] += F_.mul(f, rows_[i][j]);
    }
    int p = 0;
    while (p < ncols_ && r[p].is_zero()) ++p;
    if (p == ncols_) return false;
    FFElem inv = F_.inv(r[p]);
    for (auto& e : r) e = F_.mul(e, inv);
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
}

}  // namespace ssk3::detail

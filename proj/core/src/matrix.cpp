#include "retrieval/matrix.hpp"

#include <algorithm>
#include <string>

namespace retrieval {

Mat::Mat(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (rows < 1 || cols < 1)
        throw DimensionMismatchError("matrix dimensions must be positive");
    if (rows > kMaxRows)
        throw DimensionMismatchError("row count exceeds sanity limit " +
                                     std::to_string(kMaxRows));
}

Mat Mat::from_rows(const Field& field, const std::vector<Vec>& rows) {
    if (rows.empty()) throw DimensionMismatchError("no rows given");
    Mat m(field, rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            throw DimensionMismatchError("ragged rows");
        for (std::size_t j = 0; j < m.cols_; ++j) {
            if (rows[i][j] >= field.modulus())
                throw DimensionMismatchError("entry out of field range");
            m.at(i, j) = rows[i][j];
        }
    }
    return m;
}

Vec Mat::column(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

Vec Mat::row(std::size_t i) const {
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

std::vector<Vec> Mat::columns() const {
    std::vector<Vec> cols(cols_);
    for (std::size_t j = 0; j < cols_; ++j) cols[j] = column(j);
    return cols;
}

bool Mat::operator==(const Mat& other) const {
    return field_ == other.field_ && rows_ == other.rows_ &&
           cols_ == other.cols_ && data_ == other.data_;
}

std::uint64_t pack_gf2(const Vec& v) {
    std::uint64_t w = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i]) w |= (1ull << i);
    return w;
}

IncrementalBasis::IncrementalBasis(const Field& field, std::size_t ambient_dim)
    : field_(field),
      dim_(ambient_dim),
      packed_(field.modulus() == 2 && ambient_dim <= kPackedMaxRows) {}

void IncrementalBasis::reduce(Vec& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Elem c = v[pivots_[r]];
        if (c == 0) continue;
        const Vec& row = rows_[r];
        for (std::size_t j = pivots_[r]; j < dim_; ++j)
            v[j] = field_.sub(v[j], field_.mul(c, row[j]));
    }
}

bool IncrementalBasis::insert(const Vec& v) {
    if (v.size() != dim_)
        throw DimensionMismatchError("vector length does not match ambient dimension");
    if (packed_) return gf2_.insert(pack_gf2(v));

    Vec w = v;
    reduce(w);
    std::size_t pivot = dim_;
    for (std::size_t j = 0; j < dim_; ++j)
        if (w[j] != 0) {
            pivot = j;
            break;
        }
    if (pivot == dim_) return false;
    const Elem inv = field_.inv(w[pivot]);
    for (std::size_t j = pivot; j < dim_; ++j) w[j] = field_.mul(w[j], inv);
    const auto pos = static_cast<std::size_t>(
        std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin());
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(w));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), pivot);
    return true;
}

bool IncrementalBasis::contains(const Vec& v) const {
    if (v.size() != dim_)
        throw DimensionMismatchError("vector length does not match ambient dimension");
    if (packed_) return gf2_.contains(pack_gf2(v));
    Vec w = v;
    reduce(w);
    return std::all_of(w.begin(), w.end(), [](Elem e) { return e == 0; });
}

std::size_t IncrementalBasis::rank() const {
    return packed_ ? static_cast<std::size_t>(gf2_.rank) : rows_.size();
}

std::size_t rank(const Mat& m) {
    IncrementalBasis basis(m.field(), m.rows());
    for (std::size_t j = 0; j < m.cols(); ++j) basis.insert(m.column(j));
    return basis.rank();
}

bool span_contains(const Field& field, const std::vector<Vec>& cols, const Vec& v) {
    IncrementalBasis basis(field, v.size());
    for (const Vec& c : cols) basis.insert(c);
    return basis.contains(v);
}

bool spans_subspace(const Field& field, const std::vector<Vec>& cols,
                    const std::vector<Vec>& basis) {
    if (basis.empty()) return true;
    IncrementalBasis span(field, basis.front().size());
    for (const Vec& c : cols) span.insert(c);
    return std::all_of(basis.begin(), basis.end(),
                       [&](const Vec& b) { return span.contains(b); });
}

std::size_t column_count_in(const Mat& m, const std::vector<Vec>& subspace_basis) {
    IncrementalBasis basis(m.field(), m.rows());
    for (const Vec& b : subspace_basis) {
        if (b.size() != m.rows())
            throw DimensionMismatchError("subspace basis dimension mismatch");
        basis.insert(b);
    }
    std::size_t count = 0;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (basis.contains(m.column(j))) ++count;
    return count;
}

Mat rref(const Mat& m) {
    Mat r = m;
    const Field& f = r.field();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < r.cols() && pivot_row < r.rows(); ++col) {
        std::size_t sel = r.rows();
        for (std::size_t i = pivot_row; i < r.rows(); ++i)
            if (r.at(i, col) != 0) {
                sel = i;
                break;
            }
        if (sel == r.rows()) continue;
        if (sel != pivot_row)
            for (std::size_t j = 0; j < r.cols(); ++j)
                std::swap(r.at(sel, j), r.at(pivot_row, j));
        const Elem inv = f.inv(r.at(pivot_row, col));
        for (std::size_t j = 0; j < r.cols(); ++j)
            r.at(pivot_row, j) = f.mul(r.at(pivot_row, j), inv);
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == pivot_row) continue;
            const Elem c = r.at(i, col);
            if (c == 0) continue;
            for (std::size_t j = 0; j < r.cols(); ++j)
                r.at(i, j) = f.sub(r.at(i, j), f.mul(c, r.at(pivot_row, j)));
        }
        ++pivot_row;
    }
    return r;
}

}  // namespace retrieval

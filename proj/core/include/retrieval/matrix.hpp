#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "retrieval/field.hpp"

namespace retrieval {

using Vec = std::vector<Elem>;

inline constexpr std::size_t kMaxRows = 512;
inline constexpr std::size_t kPackedMaxRows = 64;

/// Dense matrix over GF(p), row-major, immutable by convention once built.
class Mat {
public:
    Mat(const Field& field, std::size_t rows, std::size_t cols);
    static Mat from_rows(const Field& field, const std::vector<Vec>& rows);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Elem& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    Vec column(std::size_t j) const;
    Vec row(std::size_t i) const;
    std::vector<Vec> columns() const;

    bool operator==(const Mat& other) const;

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Elem> data_;
};

/// XOR basis over GF(2) with rows packed into machine words (dim <= 64).
/// The hot loop of the subset enumeration.
struct Gf2Basis {
    std::array<std::uint64_t, kPackedMaxRows> rows{};
    int rank = 0;

    bool insert(std::uint64_t v) {
        while (v) {
            const int b = 63 - __builtin_clzll(v);
            if (rows[static_cast<std::size_t>(b)] == 0) {
                rows[static_cast<std::size_t>(b)] = v;
                ++rank;
                return true;
            }
            v ^= rows[static_cast<std::size_t>(b)];
        }
        return false;
    }

    bool contains(std::uint64_t v) const {
        while (v) {
            const int b = 63 - __builtin_clzll(v);
            const std::uint64_t row = rows[static_cast<std::size_t>(b)];
            if (row == 0) return false;
            v ^= row;
        }
        return true;
    }
};

/// Pack a GF(2) vector into a word, coordinate i -> bit i.
std::uint64_t pack_gf2(const Vec& v);

/// Incremental reduced basis supporting one-vector-at-a-time insertion.
/// Uses the packed GF(2) path when possible, generic row reduction otherwise.
/// Single-owner mutable state; copies are cheap and independent.
class IncrementalBasis {
public:
    IncrementalBasis(const Field& field, std::size_t ambient_dim);

    /// Returns true iff v was outside the current span (rank increased by 1).
    bool insert(const Vec& v);
    bool contains(const Vec& v) const;
    std::size_t rank() const;
    std::size_t ambient_dim() const { return dim_; }
    bool packed() const { return packed_; }

    // Packed-path access for hot loops; only valid when packed().
    bool insert_packed(std::uint64_t v) { return gf2_.insert(v); }
    bool contains_packed(std::uint64_t v) const { return gf2_.contains(v); }

private:
    Field field_;
    std::size_t dim_;
    bool packed_;
    Gf2Basis gf2_;
    // generic path: rows normalized to pivot 1, kept sorted by pivot column
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;

    void reduce(Vec& v) const;
};

std::size_t rank(const Mat& m);

/// True iff v lies in the span of cols. Empty span contains only zero.
bool span_contains(const Field& field, const std::vector<Vec>& cols, const Vec& v);

/// True iff every basis vector lies in the span of cols.
bool spans_subspace(const Field& field, const std::vector<Vec>& cols,
                    const std::vector<Vec>& basis);

/// Number of columns of m contained in the span of subspace_basis
/// (any spanning set; reduced internally). Zero columns always count.
std::size_t column_count_in(const Mat& m, const std::vector<Vec>& subspace_basis);

/// Reduced row echelon form; leftmost pivot, first nonzero row tie-break.
Mat rref(const Mat& m);

}  // namespace retrieval

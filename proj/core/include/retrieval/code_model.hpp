#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "retrieval/matrix.hpp"

namespace retrieval {

/// Two-file split of the k information coordinates. File 1 always occupies
/// the leading s1 coordinates, file 2 the trailing s2.
struct FilePartition {
    std::size_t s1 = 0;
    std::size_t s2 = 0;
};

/// A rank-k generator matrix together with a two-file partition.
class CodeSpec {
public:
    /// Throws RankDeficientError when rank < k, BadPartitionError when s1 is
    /// not in [1, k-1] or n < k.
    CodeSpec(Mat matrix, std::size_t s1);

    const Mat& matrix() const { return matrix_; }
    const FilePartition& partition() const { return partition_; }
    const Field& field() const { return matrix_.field(); }
    std::size_t k() const { return matrix_.rows(); }
    std::size_t n() const { return matrix_.cols(); }

    std::size_t file_dim(int file) const;
    /// Standard basis vectors spanning file 1 or file 2.
    std::vector<Vec> file_basis(int file) const;

private:
    Mat matrix_;
    FilePartition partition_;
};

/// Column indices are 1-based, matching the usual generator-matrix notation.
struct ColumnClassification {
    std::vector<std::size_t> pure1;  // nonzero, zero on the file-2 coordinates
    std::vector<std::size_t> pure2;  // nonzero, zero on the file-1 coordinates
    std::vector<std::size_t> mixed;  // nonzero on both projections
    std::vector<std::size_t> zero;   // all-zero columns, never useful
    std::size_t n_f1 = 0;            // columns contained in the file-1 subspace
    std::size_t n_f2 = 0;            // columns contained in the file-2 subspace
    std::size_t m_mix = 0;
};

ColumnClassification classify_columns(const CodeSpec& code);

/// The s_i x n matrix of per-file coordinates of every column. Zero columns
/// of the result correspond exactly to columns pure in the other file (or
/// all-zero columns).
Mat project_columns(const CodeSpec& code, int file);

/// Matrix text format: optional '#' comment lines, then "q k n", then k rows
/// of n space-separated entries in [0, q). An optional "# family: ..." comment
/// carries a construction tag (used by the CLI's closed-form method).
struct MatrixFile {
    Mat matrix;
    std::string family_tag;  // empty when untagged
};

MatrixFile read_matrix_text(std::istream& in);
MatrixFile read_matrix_file(const std::string& path);
void write_matrix_text(std::ostream& out, const Mat& m,
                       const std::string& family_tag = "");
void write_matrix_file(const std::string& path, const Mat& m,
                       const std::string& family_tag = "");

}  // namespace retrieval

#include "retrieval/code_model.hpp"

#include <fstream>
#include <sstream>

namespace retrieval {

CodeSpec::CodeSpec(Mat matrix, std::size_t s1) : matrix_(std::move(matrix)) {
    const std::size_t k = matrix_.rows();
    const std::size_t n = matrix_.cols();
    if (s1 < 1 || s1 > k - 1)
        throw BadPartitionError("s1 must be in [1, k-1], got " + std::to_string(s1));
    if (n < k) throw BadPartitionError("need n >= k");
    if (rank(matrix_) != k)
        throw RankDeficientError("generator matrix does not have full rank");
    partition_ = FilePartition{s1, k - s1};
}

std::size_t CodeSpec::file_dim(int file) const {
    return file == 1 ? partition_.s1 : partition_.s2;
}

std::vector<Vec> CodeSpec::file_basis(int file) const {
    const std::size_t k = this->k();
    const std::size_t offset = file == 1 ? 0 : partition_.s1;
    std::vector<Vec> basis;
    basis.reserve(file_dim(file));
    for (std::size_t i = 0; i < file_dim(file); ++i) {
        Vec e(k, 0);
        e[offset + i] = 1;
        basis.push_back(std::move(e));
    }
    return basis;
}

ColumnClassification classify_columns(const CodeSpec& code) {
    const Mat& g = code.matrix();
    const std::size_t s1 = code.partition().s1;
    ColumnClassification c;
    for (std::size_t j = 0; j < g.cols(); ++j) {
        bool top_nonzero = false, bottom_nonzero = false;
        for (std::size_t i = 0; i < s1; ++i)
            if (g.at(i, j) != 0) top_nonzero = true;
        for (std::size_t i = s1; i < g.rows(); ++i)
            if (g.at(i, j) != 0) bottom_nonzero = true;
        const std::size_t idx = j + 1;
        if (top_nonzero && bottom_nonzero)
            c.mixed.push_back(idx);
        else if (top_nonzero)
            c.pure1.push_back(idx);
        else if (bottom_nonzero)
            c.pure2.push_back(idx);
        else
            c.zero.push_back(idx);
    }
    // N(F_i) is subspace membership, so all-zero columns count in both.
    c.n_f1 = c.pure1.size() + c.zero.size();
    c.n_f2 = c.pure2.size() + c.zero.size();
    c.m_mix = c.mixed.size();
    return c;
}

Mat project_columns(const CodeSpec& code, int file) {
    const Mat& g = code.matrix();
    const std::size_t s_i = code.file_dim(file);
    const std::size_t offset = file == 1 ? 0 : code.partition().s1;
    Mat p(code.field(), s_i, g.cols());
    for (std::size_t i = 0; i < s_i; ++i)
        for (std::size_t j = 0; j < g.cols(); ++j)
            p.at(i, j) = g.at(offset + i, j);
    return p;
}

MatrixFile read_matrix_text(std::istream& in) {
    std::string line;
    std::string family_tag;
    std::uint64_t q = 0;
    std::size_t k = 0, n = 0;
    bool header_read = false;
    std::vector<Vec> rows;

    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            const std::string prefix = "# family:";
            if (line.rfind(prefix, 0) == 0) {
                family_tag = line.substr(prefix.size());
                const auto start = family_tag.find_first_not_of(' ');
                family_tag = start == std::string::npos ? "" : family_tag.substr(start);
            }
            continue;
        }
        std::istringstream ls(line);
        if (!header_read) {
            if (!(ls >> q >> k >> n)) throw ParseError("bad header line: " + line);
            header_read = true;
            continue;
        }
        Vec row;
        std::uint64_t e;
        while (ls >> e) {
            if (e >= q) throw ParseError("entry out of field range: " + line);
            row.push_back(static_cast<Elem>(e));
        }
        if (!ls.eof()) throw ParseError("non-numeric entry: " + line);
        if (row.size() != n) throw ParseError("expected " + std::to_string(n) +
                                              " entries per row");
        rows.push_back(std::move(row));
        if (rows.size() == k) break;
    }
    if (!header_read) throw ParseError("missing header line");
    if (rows.size() != k) throw ParseError("expected " + std::to_string(k) + " rows");
    try {
        return MatrixFile{Mat::from_rows(Field(q), rows), family_tag};
    } catch (const ParseError&) {
        throw;
    } catch (const InputError& e) {
        throw ParseError(e.what());
    }
}

MatrixFile read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_matrix_text(in);
}

void write_matrix_text(std::ostream& out, const Mat& m,
                       const std::string& family_tag) {
    if (!family_tag.empty()) out << "# family: " << family_tag << "\n";
    out << m.field().modulus() << " " << m.rows() << " " << m.cols() << "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << " ";
            out << m.at(i, j);
        }
        out << "\n";
    }
}

void write_matrix_file(const std::string& path, const Mat& m,
                       const std::string& family_tag) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    write_matrix_text(out, m, family_tag);
    if (!out) throw std::runtime_error("write failure: " + path);
}

}  // namespace retrieval

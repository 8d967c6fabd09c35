#include "doctest.h"

#include <sstream>

#include "retrieval/code_model.hpp"
#include "retrieval/constructions.hpp"

using namespace retrieval;

namespace {

CodeSpec cycle8() { return make_hybrid_cycle(4, 1); }

}  // namespace

TEST_CASE("code spec validation") {
    Mat ok = Mat::from_rows(Field(2), {{1, 0, 1}, {0, 1, 1}});
    CHECK_NOTHROW(CodeSpec(ok, 1));
    CHECK_THROWS_AS(CodeSpec(ok, 0), BadPartitionError);
    CHECK_THROWS_AS(CodeSpec(ok, 2), BadPartitionError);

    Mat deficient = Mat::from_rows(Field(2), {{1, 0, 1}, {1, 0, 1}});
    CHECK_THROWS_AS(CodeSpec(deficient, 1), RankDeficientError);

    Mat wide = Mat::from_rows(Field(2), {{1, 0}, {0, 1}, {1, 1}});
    CHECK_THROWS_AS(CodeSpec(wide, 1), BadPartitionError);  // n < k
}

TEST_CASE("file basis and dimensions") {
    const CodeSpec code = cycle8();
    CHECK(code.file_dim(1) == 1);
    CHECK(code.file_dim(2) == 3);
    const auto b1 = code.file_basis(1);
    REQUIRE(b1.size() == 1);
    CHECK(b1[0] == Vec{1, 0, 0, 0});
    const auto b2 = code.file_basis(2);
    REQUIRE(b2.size() == 3);
    CHECK(b2[0] == Vec{0, 1, 0, 0});
}

TEST_CASE("column classification of the cycle code") {
    const ColumnClassification c = classify_columns(cycle8());
    CHECK(c.pure1 == std::vector<std::size_t>{1});
    CHECK(c.pure2 == std::vector<std::size_t>{2, 3, 4, 6, 7});
    CHECK(c.mixed == std::vector<std::size_t>{5, 8});
    CHECK(c.zero.empty());
    CHECK(c.n_f1 == 1);
    CHECK(c.n_f2 == 5);
    CHECK(c.m_mix == 2);
}

TEST_CASE("zero columns count toward both files") {
    Mat g = Mat::from_rows(Field(2), {{1, 0, 0}, {0, 1, 0}});
    const CodeSpec code(g, 1);
    const ColumnClassification c = classify_columns(code);
    CHECK(c.zero == std::vector<std::size_t>{3});
    CHECK(c.n_f1 == 2);
    CHECK(c.n_f2 == 2);
}

TEST_CASE("projection matrix") {
    const Mat p2 = project_columns(cycle8(), 2);
    CHECK(p2.rows() == 3);
    CHECK(p2.cols() == 8);
    // column 1 is pure file 1: projects to zero
    for (std::size_t i = 0; i < 3; ++i) CHECK(p2.at(i, 0) == 0);
    // column 5 (mixed) keeps its file-2 part
    CHECK(p2.at(0, 4) == 1);
}

TEST_CASE("matrix text round trip") {
    const Mat g = cycle8().matrix();
    std::ostringstream out;
    write_matrix_text(out, g, format_family_tag(hybrid_cycle_tag(4, 1)));
    std::istringstream in(out.str());
    const MatrixFile file = read_matrix_text(in);
    CHECK(file.matrix == g);
    CHECK(file.family_tag == "hybrid_cycle k=4 s1=1");
}

TEST_CASE("matrix text parse errors") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return read_matrix_text(in);
    };
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("4 2 3\n1 0 1\n0 1 1\n"), ParseError);  // q not prime
    CHECK_THROWS_AS(parse("2 2 3\n1 0 1\n"), ParseError);         // missing row
    CHECK_THROWS_AS(parse("2 2 3\n1 0 2\n0 1 1\n"), ParseError);  // entry >= q
    CHECK_NOTHROW(parse("# comment\n2 2 3\n1 0 1\n0 1 1\n"));
}

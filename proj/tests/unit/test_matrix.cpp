#include <doctest.h>

#include <sstream>

#include "cdc/errors.hpp"
#include "cdc/matrix.hpp"
#include "oracles.hpp"

using namespace cdc;

TEST_SUITE("matrix") {

TEST_CASE("construction validates entries") {
    const auto f = make_field_of_order(3);
    CHECK_THROWS_AS(Matrix(f, 2, 2, {0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Matrix(f, 1, 2, {0, 3}), std::invalid_argument);
    const Matrix id = Matrix::identity(f, 3);
    CHECK(id(1, 1) == 1);
    CHECK(id(1, 2) == 0);
    CHECK(id.transpose() == id);
}

TEST_CASE("concatenation and arithmetic") {
    const auto f = make_field_of_order(5);
    const Matrix a(f, 2, 2, {1, 2, 3, 4});
    const Matrix b(f, 2, 1, {4, 4});
    const Matrix ab = hconcat(a, b);
    CHECK(ab.cols() == 3);
    CHECK(ab(1, 2) == 4);
    const Matrix s = a + a;
    CHECK(s(1, 1) == 3);
    CHECK((s - a) == a);
    CHECK(scaled(a, 2) == s);
    CHECK(vconcat(a, a).rows() == 4);
    CHECK_THROWS_AS(hconcat(a, Matrix(f, 3, 1)), std::invalid_argument);
}

TEST_CASE("rref of a fixed matrix over GF(2)") {
    const auto f = make_field_of_order(2);
    const Matrix m(f, 3, 4, {1, 1, 0, 1,  //
                             1, 1, 1, 0,  //
                             0, 0, 1, 1});
    const auto r = rref(m);
    CHECK(r.rank == 2);
    CHECK(r.pivots == std::vector<std::size_t>{0, 2});
    CHECK(r.reduced == Matrix(f, 3, 4, {1, 1, 0, 1, 0, 0, 1, 1, 0, 0, 0, 0}));
}

TEST_CASE("rank equals log_q of the row space size") {
    std::mt19937_64 rng(11);
    for (unsigned q : {2u, 3u, 4u, 5u}) {
        const auto f = make_field_of_order(q);
        for (int t = 0; t < 60; ++t) {
            const std::size_t rows = 1 + rng() % 4;
            const std::size_t cols = 1 + rng() % 5;
            const auto m = oracle::random_matrix(f, rows, cols, rng);
            CAPTURE(q);
            CHECK(rank(m) == oracle::rank_by_counting(m));
        }
    }
}

TEST_CASE("rref is canonical: same row space, reduced form, idempotent") {
    std::mt19937_64 rng(12);
    for (unsigned q : {2u, 3u, 7u, 9u}) {
        const auto f = make_field_of_order(q);
        for (int t = 0; t < 40; ++t) {
            const auto m = oracle::random_matrix(f, 3, 5, rng);
            const auto r = rref(m);
            CHECK(oracle::span_set(r.reduced) == oracle::span_set(m));
            CHECK(rref(r.reduced).reduced == r.reduced);
            for (std::size_t i = 0; i < r.rank; ++i) {
                CHECK(r.reduced(i, r.pivots[i]) == 1);
                for (std::size_t j = 0; j < m.rows(); ++j)
                    if (j != i) CHECK(r.reduced(j, r.pivots[i]) == 0);
                for (std::size_t c = 0; c < r.pivots[i]; ++c) CHECK(r.reduced(i, c) == 0);
            }
            // left multiplication by an invertible matrix leaves the rref unchanged
            const auto g = oracle::random_full_rank(f, 3, 3, rng);
            Matrix gm(f, 3, 5);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 5; ++j) {
                    Element s = 0;
                    for (std::size_t l = 0; l < 3; ++l) s = f->add(s, f->mul(g(i, l), m(l, j)));
                    gm(i, j) = s;
                }
            CHECK(rref(gm).reduced == r.reduced);
        }
    }
}

TEST_CASE("matrix text round trip") {
    std::mt19937_64 rng(13);
    const auto f = make_field_of_order(8);
    const auto m = oracle::random_matrix(f, 3, 4, rng);
    std::stringstream s;
    s << "# leading comment\n\n";
    write_matrix(s, m);
    const Matrix back = read_matrix(s);
    CHECK(back == m);
    CHECK(back.field()->order() == 8);
}

TEST_CASE("malformed matrix blocks") {
    std::istringstream bad_header("q=2 rows=2\n1 0\n0 1\n");
    CHECK_THROWS_AS(read_matrix(bad_header), ParseError);
    std::istringstream short_rows("q=2 rows=2 cols=2\n1 0\n");
    CHECK_THROWS_AS(read_matrix(short_rows), ParseError);
    std::istringstream big_entry("q=3 rows=1 cols=2\n1 3\n");
    CHECK_THROWS_AS(read_matrix(big_entry), ParseError);
}

}  // TEST_SUITE

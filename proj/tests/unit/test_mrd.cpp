#include <doctest.h>

#include <sstream>

#include "cdc/errors.hpp"
#include "cdc/mrd.hpp"
#include "cdc/subspace.hpp"
#include "oracles.hpp"

using namespace cdc;

TEST_SUITE("mrd") {

TEST_CASE("gabidulin parameters meet the singleton-like bound") {
    struct Case {
        std::size_t k, m, delta;
        unsigned q;
    };
    for (const auto c : {Case{3, 3, 2, 2}, Case{4, 4, 2, 2}, Case{4, 4, 3, 2}, Case{2, 3, 2, 3}, Case{3, 2, 2, 3},
                         Case{3, 5, 3, 2}, Case{4, 2, 2, 2}, Case{2, 2, 1, 4}, Case{3, 4, 2, 2}}) {
        CAPTURE(c.k);
        CAPTURE(c.m);
        CAPTURE(c.delta);
        CAPTURE(c.q);
        const auto f = make_field_of_order(c.q);
        const auto code = gabidulin(c.k, c.m, c.delta, f);
        const std::size_t big = std::max(c.k, c.m), small = std::min(c.k, c.m);
        CHECK(code.rows == c.k);
        CHECK(code.cols == c.m);
        CHECK(code.dimension() == big * (small - c.delta + 1));
        CHECK(linearly_independent(code.basis));
        CHECK(min_rank_distance(code) == std::optional<std::size_t>(c.delta));
    }
}

TEST_CASE("minimum rank checked against a counting oracle") {
    for (unsigned q : {2u, 3u}) {
        const auto f = make_field_of_order(q);
        const auto code = gabidulin(3, 3, 2, f);
        const auto words = codewords(code, 100000);
        CHECK(words.size() == static_cast<std::size_t>(code.size().get_ui()));
        CHECK(words.front().is_zero());
        std::size_t least = 99;
        for (std::size_t i = 1; i < words.size(); ++i) least = std::min(least, oracle::rank_by_counting(words[i]));
        CHECK(least == 2);
        // codewords are pairwise distinct
        std::set<std::vector<Element>> seen;
        for (const auto& w : words) seen.insert(w.entries());
        CHECK(seen.size() == words.size());
    }
}

TEST_CASE("full-distance code and delta range") {
    const auto f = make_field_of_order(2);
    const auto code = gabidulin(3, 3, 3, f);
    CHECK(code.dimension() == 3);
    CHECK(min_rank_distance(code) == std::optional<std::size_t>(3));
    CHECK_THROWS_AS(gabidulin(3, 3, 4, f), std::invalid_argument);
    CHECK_THROWS_AS(gabidulin(3, 3, 0, f), std::invalid_argument);
}

TEST_CASE("span enumeration and budgets") {
    const auto f = make_field_of_order(2);
    const auto code = gabidulin(4, 4, 2, f);
    CHECK(code.size() == 4096);
    CHECK_THROWS_AS(codewords(code, 1000), BudgetExceeded);
    CHECK_THROWS_AS(min_rank_distance(code, 1000), BudgetExceeded);
    std::size_t visited = 0;
    for_each_span_element(code.basis, [&](const Matrix&) { ++visited; });
    CHECK(visited == 4096);
    RankMetricCode empty{3, 3, f, 1, {}};
    CHECK_FALSE(min_rank_distance(empty).has_value());
    CHECK(codewords(empty).size() == 1);
}

TEST_CASE("linear independence") {
    const auto f = make_field_of_order(3);
    const Matrix a(f, 1, 2, {1, 2});
    const Matrix b(f, 1, 2, {2, 1});
    const Matrix c(f, 1, 2, {0, 1});
    CHECK(linearly_independent(std::vector<Matrix>{a, c}));
    CHECK_FALSE(linearly_independent(std::vector<Matrix>{a, b}));  // b = 2a
}

TEST_CASE("lifted MRD sets have subspace distance twice the rank distance") {
    const auto f = make_field_of_order(2);
    const auto set = lifted_mrd_set(3, 6, 2, f);
    CHECK(set.size() == 64);
    std::vector<Subspace> spaces;
    for (const auto& m : set) {
        CHECK(m.rows() == 3);
        CHECK(m.cols() == 6);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) CHECK(m(i, j) == (i == j ? 1 : 0));
        spaces.push_back(Subspace::from_generators(m));
    }
    CHECK(min_subspace_distance(spaces).distance == 4);
    const auto degenerate = lifted_mrd_set(3, 4, 2, f);
    REQUIRE(degenerate.size() == 1);
    CHECK(degenerate.front() == hconcat(Matrix::identity(f, 3), Matrix(f, 3, 1)));
}

TEST_CASE("rank code text round trip") {
    const auto f = make_field_of_order(4);
    const auto code = gabidulin(2, 3, 2, f);
    std::stringstream s;
    write_rank_code(s, code);
    const auto back = read_rank_code(s);
    CHECK(back.rows == code.rows);
    CHECK(back.cols == code.cols);
    CHECK(back.delta == code.delta);
    CHECK(back.basis == code.basis);
    std::istringstream bad("k=2 m=3 q=4 delta=2\n");
    CHECK_THROWS_AS(read_rank_code(bad), ParseError);
}

}  // TEST_SUITE

#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "cdc/errors.hpp"
#include "cdc/subspace.hpp"
#include "oracles.hpp"

using namespace cdc;

TEST_SUITE("subspace") {

TEST_CASE("canonical form does not depend on the generators") {
    std::mt19937_64 rng(21);
    for (unsigned q : {2u, 3u, 4u}) {
        const auto f = make_field_of_order(q);
        for (int t = 0; t < 30; ++t) {
            const auto g = oracle::random_full_rank(f, 3, 6, rng);
            const auto mix = oracle::random_full_rank(f, 3, 3, rng);
            Matrix h(f, 3, 6);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 6; ++j) {
                    Element s = 0;
                    for (std::size_t l = 0; l < 3; ++l) s = f->add(s, f->mul(mix(i, l), g(l, j)));
                    h(i, j) = s;
                }
            CHECK(Subspace::from_generators(g) == Subspace::from_generators(h));
            CHECK(Subspace::from_generators(g).dimension() == 3);
        }
    }
    const auto f = make_field_of_order(2);
    CHECK_THROWS_AS(Subspace::from_generators(Matrix(f, 2, 3)), std::invalid_argument);
    // redundant generators collapse
    const Matrix dup(f, 3, 3, {1, 0, 1, 1, 0, 1, 0, 1, 0});
    CHECK(Subspace::from_generators(dup).dimension() == 2);
}

TEST_CASE("subspace distance matches the intersection formula on random pairs") {
    std::mt19937_64 rng(22);
    for (unsigned q : {2u, 3u}) {
        const auto f = make_field_of_order(q);
        for (int t = 0; t < 80; ++t) {
            const std::size_t a = 1 + rng() % 3, b = 1 + rng() % 3;
            const auto u = oracle::random_full_rank(f, a, 5, rng);
            const auto w = oracle::random_full_rank(f, b, 5, rng);
            const auto su = Subspace::from_generators(u), sw = Subspace::from_generators(w);
            CHECK(subspace_distance(su, sw) == oracle::distance_by_intersection(u, w));
            CHECK(subspace_distance(su, sw) == subspace_distance(sw, su));
        }
    }
}

TEST_CASE("distance axioms on Gr(2, 4) over GF(3)") {
    const auto f = make_field_of_order(3);
    const auto all = enumerate_grassmannian(4, 2, f);
    REQUIRE(all.size() == 130);
    std::mt19937_64 rng(23);
    for (int t = 0; t < 500; ++t) {
        const auto& x = all[rng() % all.size()];
        const auto& y = all[rng() % all.size()];
        const auto& z = all[rng() % all.size()];
        CHECK((subspace_distance(x, y) == 0) == (x == y));
        CHECK(subspace_distance(x, z) <= subspace_distance(x, y) + subspace_distance(y, z));
        CHECK(subspace_distance(x, y) % 2 == 0);
    }
}

TEST_CASE("distance rejects mismatched spaces") {
    const auto f2 = make_field_of_order(2);
    const auto f3 = make_field_of_order(3);
    const auto a = Subspace::from_generators(Matrix(f2, 1, 3, {1, 0, 0}));
    const auto b = Subspace::from_generators(Matrix(f2, 1, 4, {1, 0, 0, 0}));
    const auto c = Subspace::from_generators(Matrix(f3, 1, 3, {1, 0, 0}));
    CHECK_THROWS_AS(subspace_distance(a, b), std::invalid_argument);
    CHECK_THROWS_AS(subspace_distance(a, c), std::invalid_argument);
}

TEST_CASE("gaussian binomial values") {
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    CHECK(gaussian_binomial(5, 2, 2) == 155);
    CHECK(gaussian_binomial(6, 3, 2) == 1395);
    CHECK(gaussian_binomial(4, 2, 3) == 130);
    CHECK(gaussian_binomial(7, 0, 5) == 1);
    CHECK(gaussian_binomial(3, 4, 2) == 0);
    // symmetry
    for (unsigned n = 1; n <= 8; ++n)
        for (unsigned k = 0; k <= n; ++k) CHECK(gaussian_binomial(n, k, 3) == gaussian_binomial(n, n - k, 3));
}

TEST_CASE("grassmannian enumeration is complete and duplicate free") {
    struct Case {
        std::size_t n, k;
        unsigned q;
    };
    for (const auto c : {Case{4, 2, 2}, Case{5, 2, 2}, Case{6, 3, 2}, Case{4, 1, 4}, Case{5, 3, 3}, Case{3, 3, 2}}) {
        CAPTURE(c.n);
        CAPTURE(c.k);
        const auto f = make_field_of_order(c.q);
        const auto all = enumerate_grassmannian(c.n, c.k, f);
        CHECK(BigInt(static_cast<unsigned long>(all.size())) ==
              gaussian_binomial(static_cast<unsigned>(c.n), static_cast<unsigned>(c.k), c.q));
        CHECK(std::is_sorted(all.begin(), all.end()));
        CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
        for (const auto& s : all) CHECK(s.dimension() == c.k);
    }
    CHECK_THROWS_AS(enumerate_grassmannian(8, 4, make_field_of_order(2), 1000), BudgetExceeded);
}

TEST_CASE("grassmannian count for Gr(2,4) over GF(2) by brute force") {
    // collect row spaces of all 2x4 binary matrices of rank 2
    const auto f = make_field_of_order(2);
    std::set<std::set<oracle::Vec>> spaces;
    for (unsigned bits = 0; bits < 256; ++bits) {
        std::vector<Element> e(8);
        for (int i = 0; i < 8; ++i) e[i] = static_cast<Element>((bits >> i) & 1);
        const Matrix m(f, 2, 4, e);
        const auto s = oracle::span_set(m);
        if (s.size() == 4) spaces.insert(s);
    }
    CHECK(spaces.size() == enumerate_grassmannian(4, 2, f).size());
}

TEST_CASE("identifying vectors") {
    const auto v = IdentifyingVector::parse("110000001100");
    CHECK(v.size() == 12);
    CHECK(v.weight() == 4);
    CHECK(v.pivots() == std::vector<std::size_t>{0, 1, 8, 9});
    CHECK(v.weight_in(8, 12) == 2);
    CHECK(v.str() == "110000001100");
    CHECK(IdentifyingVector::from_pivots(12, v.pivots()) == v);
    CHECK(hamming_distance(v, IdentifyingVector::parse("101000001010")) == 4);
    CHECK_THROWS_AS(IdentifyingVector::parse("1102"), ParseError);
    CHECK_THROWS_AS(IdentifyingVector::parse(""), ParseError);
    CHECK(IdentifyingVector::parse("0011") < IdentifyingVector::parse("0101"));

    const auto f = make_field_of_order(3);
    const Matrix m(f, 2, 5, {0, 2, 1, 0, 1, 0, 0, 0, 1, 2});
    CHECK(identifying_vector(Subspace::from_generators(m)).str() == "01010");
}

TEST_CASE("pair kernel agrees with subspace_distance") {
    std::mt19937_64 rng(24);
    for (unsigned q : {2u, 3u}) {
        const auto f = make_field_of_order(q);
        std::vector<Subspace> words;
        for (int t = 0; t < 25; ++t) words.push_back(Subspace::from_generators(oracle::random_full_rank(f, 3, 7, rng)));
        PairDistance kernel(words);
        for (std::size_t i = 0; i < words.size(); ++i)
            for (std::size_t j = 0; j < words.size(); ++j) {
                CHECK(kernel.distance(i, j) == subspace_distance(words[i], words[j]));
                CHECK(kernel.sum_dimension(i, j) == sum_dimension(words[i], words[j]));
            }
    }
}

TEST_CASE("pair kernel on wide binary spaces") {
    // packed path for n up to 64
    std::mt19937_64 rng(25);
    const auto f = make_field_of_order(2);
    std::vector<Subspace> words;
    for (int t = 0; t < 12; ++t) words.push_back(Subspace::from_generators(oracle::random_full_rank(f, 4, 64, rng)));
    PairDistance kernel(words);
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j)
            CHECK(kernel.distance(i, j) == subspace_distance(words[i], words[j]));
}

TEST_CASE("minimum distance with witness") {
    const auto f = make_field_of_order(2);
    const auto all = enumerate_grassmannian(4, 2, f);
    const auto w = min_subspace_distance(all);
    CHECK(w.distance == 2);
    CHECK(subspace_distance(all[w.first], all[w.second]) == 2);
    CHECK_THROWS_AS(min_subspace_distance(std::span<const Subspace>(all.data(), 1)), std::invalid_argument);
    const auto early = min_subspace_distance(all, 4);
    CHECK(early.stopped_early);
    CHECK(early.distance < 4);
}

TEST_CASE("code file round trip") {
    std::mt19937_64 rng(26);
    const auto f = make_field_of_order(4);
    std::vector<Subspace> code;
    std::vector<std::string> notes;
    for (int t = 0; t < 6; ++t) {
        code.push_back(Subspace::from_generators(oracle::random_full_rank(f, 2, 5, rng)));
        notes.push_back("part=test" + std::to_string(t));
    }
    std::stringstream s;
    const std::vector<std::string> header{"generated by a test"};
    write_code_file(s, code, notes, header);
    const auto back = read_code_file(s);
    REQUIRE(back.size() == code.size());
    for (std::size_t i = 0; i < code.size(); ++i) {
        CHECK(back[i].space == code[i]);
        CHECK(back[i].note == notes[i]);
    }
}

TEST_CASE("malformed code files") {
    std::istringstream empty("");
    CHECK_THROWS_AS(read_code_file(empty), ParseError);
    std::istringstream wrong_count("q=2 n=3 k=1 count=2\n\nq=2 rows=1 cols=3\n1 0 0\n");
    CHECK_THROWS_AS(read_code_file(wrong_count), ParseError);
    std::istringstream deficient("q=2 n=3 k=2 count=1\n\nq=2 rows=2 cols=3\n1 0 0\n1 0 0\n");
    CHECK_THROWS_AS(read_code_file(deficient), ParseError);
}

TEST_CASE("vector files carry dim annotations") {
    std::istringstream in("# header\n# dim=12\n110000001100\n\n000000001111\n# dim=0\n000000001111\n");
    const auto v = read_vector_file(in);
    REQUIRE(v.size() == 3);
    CHECK(v[0].annotated_dim == std::optional<std::size_t>(12));
    CHECK_FALSE(v[1].annotated_dim.has_value());
    CHECK(v[2].annotated_dim == std::optional<std::size_t>(0));
    std::istringstream bad("# dim=x\n1100\n");
    CHECK_THROWS_AS(read_vector_file(bad), ParseError);
    std::istringstream bad_bits("1120\n");
    CHECK_THROWS_AS(read_vector_file(bad_bits), ParseError);
}

}  // TEST_SUITE

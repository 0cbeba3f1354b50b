#include <doctest.h>

#include <stdexcept>

#include "cdc/field.hpp"
#include "oracles.hpp"

using namespace cdc;

namespace {

const unsigned kOrders[] = {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32};

}  // namespace

TEST_SUITE("field") {

TEST_CASE("prime power factorisation") {
    unsigned p = 0, e = 0;
    CHECK(prime_power(8, p, e));
    CHECK(p == 2);
    CHECK(e == 3);
    CHECK(prime_power(25, p, e));
    CHECK(p == 5);
    CHECK(e == 2);
    CHECK_FALSE(prime_power(6, p, e));
    CHECK_FALSE(prime_power(1, p, e));
    CHECK(is_prime(509));
    CHECK_FALSE(is_prime(511));
}

TEST_CASE("unsupported orders are rejected") {
    CHECK_THROWS_AS(make_field_of_order(6), std::invalid_argument);
    CHECK_THROWS_AS(make_field_of_order(0), std::invalid_argument);
    CHECK_THROWS_AS(make_field_of_order(1024), std::invalid_argument);
    CHECK_THROWS_AS(make_field(4, 1), std::invalid_argument);
    CHECK_NOTHROW(make_field_of_order(512));
}

TEST_CASE("field axioms hold exhaustively") {
    for (unsigned q : kOrders) {
        CAPTURE(q);
        const auto f = make_field_of_order(q);
        REQUIRE(f->order() == q);
        for (unsigned a = 0; a < q; ++a) {
            const auto x = static_cast<Element>(a);
            CHECK(f->add(x, 0) == x);
            CHECK(f->mul(x, 1) == x);
            CHECK(f->add(x, f->neg(x)) == 0);
            if (a != 0) CHECK(f->mul(x, f->inv(x)) == 1);
            for (unsigned b = 0; b < q; ++b) {
                const auto y = static_cast<Element>(b);
                CHECK(f->add(x, y) == f->add(y, x));
                CHECK(f->mul(x, y) == f->mul(y, x));
                CHECK(f->sub(f->add(x, y), y) == x);
            }
        }
        // associativity and distributivity on a fixed sample of triples
        std::mt19937_64 rng(q);
        for (int t = 0; t < 2000; ++t) {
            const auto x = static_cast<Element>(rng() % q);
            const auto y = static_cast<Element>(rng() % q);
            const auto z = static_cast<Element>(rng() % q);
            CHECK(f->mul(f->mul(x, y), z) == f->mul(x, f->mul(y, z)));
            CHECK(f->add(f->add(x, y), z) == f->add(x, f->add(y, z)));
            CHECK(f->mul(x, f->add(y, z)) == f->add(f->mul(x, y), f->mul(x, z)));
        }
    }
}

TEST_CASE("characteristic and digit encoding of addition") {
    for (unsigned q : kOrders) {
        CAPTURE(q);
        const auto f = make_field_of_order(q);
        const unsigned p = f->characteristic();
        for (unsigned a = 0; a < q; ++a) {
            Element s = 0;
            for (unsigned i = 0; i < p; ++i) s = f->add(s, static_cast<Element>(a));
            CHECK(s == 0);
            for (unsigned b = 0; b < q; ++b) {
                // addition is digit-wise mod p in the base-p encoding
                unsigned expect = 0, scale = 1, x = a, y = b;
                for (unsigned i = 0; i < f->degree(); ++i) {
                    expect += ((x % p + y % p) % p) * scale;
                    x /= p;
                    y /= p;
                    scale *= p;
                }
                CHECK(f->add(static_cast<Element>(a), static_cast<Element>(b)) == expect);
            }
        }
    }
}

TEST_CASE("multiplicative group is cyclic of order q-1") {
    for (unsigned q : kOrders) {
        CAPTURE(q);
        const auto f = make_field_of_order(q);
        bool found = false;
        for (unsigned g = 1; g < q && !found; ++g) {
            unsigned order = 1;
            Element x = static_cast<Element>(g);
            while (x != 1) {
                x = f->mul(x, static_cast<Element>(g));
                ++order;
            }
            found = order == q - 1;
        }
        CHECK(found);
        for (unsigned a = 1; a < q; ++a) CHECK(f->pow(static_cast<Element>(a), q - 1) == 1);
        CHECK(f->pow(0, 0) == 1);
        CHECK(f->pow(0, 3) == 0);
    }
}

TEST_CASE("inverse of zero throws") {
    const auto f = make_field_of_order(9);
    CHECK_THROWS_AS(f->inv(0), std::domain_error);
}

TEST_CASE("modulus is the smallest irreducible in c0-first order") {
    for (unsigned q : kOrders) {
        CAPTURE(q);
        const auto f = make_field_of_order(q);
        const unsigned p = f->characteristic();
        const unsigned e = f->degree();
        const auto& mod = f->modulus();
        REQUIRE(mod.size() == e + 1);
        CHECK(mod.back() == 1);
        if (e == 1) {
            CHECK(mod == std::vector<unsigned>{0, 1});
            continue;
        }
        CHECK(oracle::irreducible_trial_division(mod, p));
        // walk candidates in order: c0 most significant, then c1, ...
        std::vector<unsigned> cand(e + 1, 0);
        cand[e] = 1;
        std::vector<unsigned> first;
        while (first.empty()) {
            if (oracle::irreducible_trial_division(cand, p)) first = cand;
            std::size_t i = e;
            while (i-- > 0) {
                if (++cand[i] < p) break;
                cand[i] = 0;
            }
        }
        CHECK(mod == first);
    }
}

TEST_CASE("known moduli") {
    CHECK(make_field(2, 2)->modulus() == std::vector<unsigned>{1, 1, 1});
    CHECK(make_field(2, 3)->modulus() == std::vector<unsigned>{1, 0, 1, 1});
    CHECK(make_field(3, 2)->modulus() == std::vector<unsigned>{1, 0, 1});
}

TEST_CASE("Rabin test agrees with trial division over GF(2) and GF(3)") {
    for (unsigned p : {2u, 3u}) {
        const auto f = make_field(p, 1);
        for (unsigned deg = 1; deg <= 6; ++deg) {
            std::vector<unsigned> c(deg + 1, 0);
            c[deg] = 1;
            while (true) {
                Poly poly(c.begin(), c.end());
                CAPTURE(deg);
                CHECK(poly_is_irreducible(*f, poly) == oracle::irreducible_trial_division(c, p));
                std::size_t i = 0;
                while (i < deg && ++c[i] == p) c[i++] = 0;
                if (i == deg) break;
            }
        }
    }
}

}  // TEST_SUITE

#pragma once

// Brute-force reference computations used to cross-check the library. They
// only work at toy sizes and deliberately avoid the library's elimination code.

#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "cdc/field.hpp"
#include "cdc/matrix.hpp"
#include "cdc/subspace.hpp"

namespace oracle {

using Vec = std::vector<cdc::Element>;

// Every vector of the row space, by running over all q^rows coefficient tuples.
inline std::set<Vec> span_set(const cdc::Matrix& m) {
    const auto& f = *m.field();
    const unsigned q = f.order();
    std::set<Vec> out;
    std::vector<unsigned> coef(m.rows(), 0);
    while (true) {
        Vec v(m.cols(), 0);
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                v[c] = f.add(v[c], f.mul(static_cast<cdc::Element>(coef[r]), m(r, c)));
        out.insert(v);
        std::size_t i = 0;
        while (i < coef.size() && ++coef[i] == q) coef[i++] = 0;
        if (i == coef.size()) break;
    }
    return out;
}

// log_q of a power of q.
inline std::size_t log_q(std::size_t count, unsigned q) {
    std::size_t e = 0;
    while (count > 1) {
        count /= q;
        ++e;
    }
    return e;
}

inline std::size_t rank_by_counting(const cdc::Matrix& m) { return log_q(span_set(m).size(), m.field()->order()); }

// dim U + dim W - 2 dim(U ∩ W), with the intersection counted vector by vector.
inline std::size_t distance_by_intersection(const cdc::Matrix& u, const cdc::Matrix& w) {
    const auto a = span_set(u);
    const auto b = span_set(w);
    std::size_t common = 0;
    for (const auto& v : a) common += b.count(v);
    const unsigned q = u.field()->order();
    return log_q(a.size(), q) + log_q(b.size(), q) - 2 * log_q(common, q);
}

// Irreducibility over GF(p) by trial division with every monic polynomial of
// degree 1..deg/2. Coefficients low-to-high, plain integers mod p.
inline bool irreducible_trial_division(const std::vector<unsigned>& f, unsigned p) {
    const std::size_t deg = f.size() - 1;
    for (std::size_t dd = 1; dd <= deg / 2; ++dd) {
        std::vector<unsigned> g(dd + 1, 0);
        g[dd] = 1;
        while (true) {
            std::vector<unsigned> r = f;
            for (std::size_t top = deg; top >= dd; --top) {
                const unsigned lead = r[top] % p;
                if (lead == 0) continue;
                for (std::size_t j = 0; j <= dd; ++j)
                    r[top - dd + j] = (r[top - dd + j] + p * p - lead * g[j] % p) % p;
            }
            bool zero = true;
            for (std::size_t j = 0; j < dd; ++j) zero = zero && r[j] % p == 0;
            if (zero) return false;
            std::size_t i = 0;
            while (i < dd && ++g[i] == p) g[i++] = 0;
            if (i == dd) break;
        }
    }
    return true;
}

inline cdc::Matrix random_matrix(const cdc::FieldPtr& field, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    std::vector<cdc::Element> e(rows * cols);
    for (auto& x : e) x = static_cast<cdc::Element>(rng() % field->order());
    return cdc::Matrix(field, rows, cols, std::move(e));
}

inline cdc::Matrix random_full_rank(const cdc::FieldPtr& field, std::size_t rows, std::size_t cols,
                                    std::mt19937_64& rng) {
    while (true) {
        auto m = random_matrix(field, rows, cols, rng);
        if (rank_by_counting(m) == rows) return m;
    }
}

inline std::size_t popcount_binomial(std::size_t n, std::size_t k) {
    std::size_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
        count += static_cast<std::size_t>(__builtin_popcountll(mask)) == k;
    return count;
}

}  // namespace oracle

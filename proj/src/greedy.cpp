#include "cdc/greedy.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "cdc/ferrers.hpp"

namespace cdc {

namespace {

BigInt binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace

void check_selection_params(const SelectionParams& p) {
    if (p.d == 0 || p.d % 2 != 0) throw std::invalid_argument("d must be even");
    const std::size_t h = p.half_d();
    if (p.k == 0) throw std::invalid_argument("k must be positive");
    if (h > p.k) throw std::invalid_argument("d/2 must not exceed k");
    if (h > p.n2) throw std::invalid_argument("d/2 must not exceed n2");
    if (p.k - h > p.n1) throw std::invalid_argument("k - d/2 must not exceed n1");
    if (p.prefix_condition && p.k < p.d) throw std::invalid_argument("the prefix condition requires k >= d");
}

BigInt candidate_count_formula(const SelectionParams& p) {
    check_selection_params(p);
    const std::size_t h = p.half_d();
    BigInt total = 0;
    for (std::size_t t = 0; t <= p.k - h; ++t) {
        if (p.prefix_condition && p.k - h - t < h) continue;
        total += binomial(p.n1, p.k - h - t) * binomial(p.n2, h + t);
    }
    return total;
}

std::vector<IdentifyingVector> candidates(const SelectionParams& p) {
    check_selection_params(p);
    const std::size_t n = p.n();
    const std::size_t h = p.half_d();
    std::vector<IdentifyingVector> out;
    // walk k-subsets of positions, keep those meeting the weight conditions
    std::vector<std::size_t> pos(p.k);
    for (std::size_t i = 0; i < p.k; ++i) pos[i] = i;
    while (true) {
        const std::size_t suffix =
            static_cast<std::size_t>(std::count_if(pos.begin(), pos.end(), [&](std::size_t x) { return x >= p.n1; }));
        const std::size_t prefix = p.k - suffix;
        if (suffix >= h && (!p.prefix_condition || prefix >= h)) out.push_back(IdentifyingVector::from_pivots(n, pos));
        std::size_t i = p.k;
        while (i > 0 && pos[i - 1] == n - p.k + (i - 1)) --i;
        if (i == 0) break;
        ++pos[i - 1];
        for (std::size_t j = i; j < p.k; ++j) pos[j] = pos[j - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> SelectionResult::dims() const {
    std::vector<std::size_t> out;
    out.reserve(selection.size());
    for (const auto& s : selection) out.push_back(s.dim);
    return out;
}

SelectionResult greedy_select(const SelectionParams& params) {
    SelectionResult result;
    result.params = params;
    const auto cands = candidates(params);
    result.candidate_count = cands.size();
    if (cands.empty()) return result;

    const std::size_t delta = params.half_d();
    std::vector<SelectedVector> pool;
    pool.reserve(cands.size());
    for (const auto& v : cands) pool.push_back({v, dim_bound(diagram_from_vector(v), delta)});
    // candidates are already lexicographic; a stable sort keeps that order within a level
    std::stable_sort(pool.begin(), pool.end(),
                     [](const SelectedVector& a, const SelectedVector& b) { return a.dim > b.dim; });

    result.max_dim = pool.front().dim;
    std::vector<bool> used(pool.size(), false);
    std::vector<bool> blocked(pool.size(), false);
    auto add = [&](std::size_t idx) {
        used[idx] = true;
        result.selection.push_back(pool[idx]);
        for (std::size_t j = 0; j < pool.size(); ++j)
            if (!used[j] && !blocked[j] && hamming_distance(pool[j].vector, pool[idx].vector) < params.d)
                blocked[j] = true;
    };

    add(0);
    result.trace.push_back({result.max_dim, {0}});

    for (std::size_t level = result.max_dim + 1; level-- > 0;) {
        GreedyRound round{level, {}};
        while (true) {
            const IdentifyingVector& latest = result.selection.back().vector;
            std::size_t best = pool.size();
            std::size_t best_dist = std::numeric_limits<std::size_t>::max();
            for (std::size_t j = 0; j < pool.size(); ++j) {
                if (used[j] || blocked[j] || pool[j].dim != level) continue;
                const std::size_t dist = hamming_distance(pool[j].vector, latest);
                if (dist < best_dist) {
                    best_dist = dist;
                    best = j;
                }
            }
            if (best == pool.size()) break;
            add(best);
            round.picks.push_back(result.selection.size() - 1);
        }
        if (level == result.max_dim) {
            auto& seed_round = result.trace.front();
            seed_round.picks.insert(seed_round.picks.end(), round.picks.begin(), round.picks.end());
        } else {
            result.trace.push_back(std::move(round));
        }
    }
    return result;
}

SelectionReport validate_selection(std::span<const IdentifyingVector> vectors, const SelectionParams& p,
                                   std::span<const std::optional<std::size_t>> expected_dims) {
    SelectionReport report;
    const std::size_t n = p.n();
    const std::size_t h = p.d / 2;
    using Kind = SelectionViolation::Kind;
    std::vector<bool> usable(vectors.size(), true);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        const auto& v = vectors[i];
        const std::string tag = "vector " + std::to_string(i + 1) + " (" + v.str() + ")";
        if (v.size() != n) {
            report.violations.push_back({Kind::Length, i, 0, tag + " has length " + std::to_string(v.size()) +
                                                                 ", expected " + std::to_string(n)});
            usable[i] = false;
            report.dims.push_back(0);
            continue;
        }
        if (v.weight() != p.k) {
            report.violations.push_back(
                {Kind::Weight, i, 0, tag + " has weight " + std::to_string(v.weight()) + ", expected " + std::to_string(p.k)});
        }
        if (v.weight_in(p.n1, n) < h)
            report.violations.push_back({Kind::SuffixWeight, i, 0,
                                         tag + " has fewer than " + std::to_string(h) + " ones in the last n2 positions"});
        if (p.prefix_condition && v.weight_in(0, p.n1) < h)
            report.violations.push_back({Kind::PrefixWeight, i, 0,
                                         tag + " has fewer than " + std::to_string(h) + " ones in the first n1 positions"});
        const std::size_t dim = v.weight() == 0 || h == 0 ? 0 : dim_bound(diagram_from_vector(v), h);
        report.dims.push_back(dim);
        if (i < expected_dims.size() && expected_dims[i] && *expected_dims[i] != dim)
            report.violations.push_back({Kind::DimMismatch, i, 0,
                                         tag + " has dim " + std::to_string(dim) + ", annotated " +
                                             std::to_string(*expected_dims[i])});
    }
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (!usable[i]) continue;
        for (std::size_t j = i + 1; j < vectors.size(); ++j) {
            if (!usable[j]) continue;
            const std::size_t dh = hamming_distance(vectors[i], vectors[j]);
            if (dh < p.d)
                report.violations.push_back({Kind::Distance, i, j,
                                             "vectors " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                                 " are at Hamming distance " + std::to_string(dh) + " < " +
                                                 std::to_string(p.d)});
        }
    }
    return report;
}

}  // namespace cdc

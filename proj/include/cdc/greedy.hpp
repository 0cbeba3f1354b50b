#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cdc/bigint.hpp"
#include "cdc/subspace.hpp"

namespace cdc {

struct SelectionParams {
    std::size_t n1 = 0;
    std::size_t n2 = 0;
    std::size_t k = 0;
    std::size_t d = 0;
    /// Also require d/2 ones among the first n1 positions (the stricter
    /// admissibility used by the three-part combining construction).
    bool prefix_condition = false;

    std::size_t n() const { return n1 + n2; }
    std::size_t half_d() const { return d / 2; }
};

/// Throws std::invalid_argument unless d is even and positive, d/2 <= k,
/// d/2 <= n2 and k - d/2 <= n1.
void check_selection_params(const SelectionParams& params);

/// Sum over t = 0..k-d/2 of C(n1, k-d/2-t) * C(n2, d/2+t).
BigInt candidate_count_formula(const SelectionParams& params);

/// Weight-k vectors of length n1+n2 with at least d/2 ones in the last n2
/// positions (and at least d/2 in the first n1 with prefix_condition), in
/// lexicographic order of their 0/1 strings.
std::vector<IdentifyingVector> candidates(const SelectionParams& params);

struct SelectedVector {
    IdentifyingVector vector;
    std::size_t dim = 0;
};

struct GreedyRound {
    std::size_t level = 0;
    std::vector<std::size_t> picks;  // indices into SelectionResult::selection
};

struct SelectionResult {
    SelectionParams params;
    std::size_t candidate_count = 0;
    std::size_t max_dim = 0;
    std::vector<SelectedVector> selection;
    std::vector<GreedyRound> trace;

    std::vector<std::size_t> dims() const;
};

/// Sorts the candidates by dim_bound(delta = d/2), seeds the selection with the
/// best one and then, level by level from the top dimension down to 0, keeps
/// adding the compatible vector of that level closest in Hamming distance to
/// the most recently added vector. Ties go to the lexicographically smaller
/// vector.
SelectionResult greedy_select(const SelectionParams& params);

struct SelectionViolation {
    enum class Kind { Length, Weight, SuffixWeight, PrefixWeight, Distance, DimMismatch };
    Kind kind;
    std::size_t first = 0;
    std::size_t second = 0;  // only meaningful for Distance
    std::string message;
};

struct SelectionReport {
    std::vector<std::size_t> dims;  // recomputed dim_bound per vector (0 when unusable)
    std::vector<SelectionViolation> violations;

    bool clean() const { return violations.empty(); }
};

/// Checks weight, the suffix (and optionally prefix) weight condition, pairwise
/// Hamming distance >= d, and compares recomputed dims against `expected_dims`
/// where given.
SelectionReport validate_selection(std::span<const IdentifyingVector> vectors, const SelectionParams& params,
                                   std::span<const std::optional<std::size_t>> expected_dims = {});

}  // namespace cdc

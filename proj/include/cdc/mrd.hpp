#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "cdc/bigint.hpp"
#include "cdc/matrix.hpp"

namespace cdc {

inline constexpr std::uint64_t kDefaultExhaustiveBudget = 1'000'000;

/// Linear rank-metric code of rows x cols matrices, given by a basis.
struct RankMetricCode {
    std::size_t rows = 0;
    std::size_t cols = 0;
    FieldPtr field;
    std::size_t delta = 1;  // designed minimum rank distance
    std::vector<Matrix> basis;

    std::size_t dimension() const { return basis.size(); }
    BigInt size() const { return big_pow(field->order(), basis.size()); }
};

/// Gabidulin MRD code in GF(q)^{k x m} with minimum rank distance delta and
/// dimension max(k,m) * (min(k,m) - delta + 1).
RankMetricCode gabidulin(std::size_t k, std::size_t m, std::size_t delta, const FieldPtr& field);

/// Visits every element of the GF(q)-span of `basis` (zero first).
void for_each_span_element(std::span<const Matrix> basis, const std::function<void(const Matrix&)>& visit);

/// Minimum rank over the nonzero span elements; nullopt for an empty basis.
/// Throws BudgetExceeded when q^|basis| exceeds `budget`.
std::optional<std::size_t> span_min_rank(std::span<const Matrix> basis, const FieldPtr& field,
                                         std::uint64_t budget = kDefaultExhaustiveBudget);

/// Exact minimum rank distance (= minimum nonzero codeword rank by linearity).
/// nullopt stands for the zero-dimensional code.
std::optional<std::size_t> min_rank_distance(const RankMetricCode& code,
                                             std::uint64_t budget = kDefaultExhaustiveBudget);

/// Every codeword of the code; zero matrix first.
std::vector<Matrix> codewords(const RankMetricCode& code, std::uint64_t budget = kDefaultExhaustiveBudget);

/// True when the matrices are linearly independent over their field.
bool linearly_independent(std::span<const Matrix> basis);

/// SC-representation set {(I_k | A) : A in gabidulin(k, n-k, delta)} of a lifted
/// MRD code in GF(q)^n. Degenerates to {I_k | 0} when n - k < delta.
std::vector<Matrix> lifted_mrd_set(std::size_t k, std::size_t n, std::size_t delta, const FieldPtr& field,
                                   std::uint64_t budget = kDefaultExhaustiveBudget);

/// `k=<k> m=<m> q=<q> delta=<delta> dim=<b>` followed by the basis matrix blocks.
void write_rank_code(std::ostream& out, const RankMetricCode& code);
RankMetricCode read_rank_code(std::istream& in);

}  // namespace cdc

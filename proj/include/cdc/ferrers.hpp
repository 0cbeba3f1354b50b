#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cdc/matrix.hpp"
#include "cdc/mrd.hpp"
#include "cdc/subspace.hpp"

namespace cdc {

/// Right-justified dot diagram. Row i holds row_lengths[i] dots in the last
/// columns of a rows() x top_row() frame.
class FerrersDiagram {
public:
    FerrersDiagram() = default;
    /// Throws std::invalid_argument unless the row lengths are non-increasing.
    explicit FerrersDiagram(std::vector<std::size_t> row_lengths);
    /// Comma-separated row lengths, e.g. "8,8,2,2".
    static FerrersDiagram parse(std::string_view text);

    const std::vector<std::size_t>& row_lengths() const { return rows_; }
    std::size_t rows() const { return rows_.size(); }
    std::size_t total_dots() const;
    /// Dots in the top row (the frame width).
    std::size_t top_row() const { return rows_.empty() ? 0 : rows_.front(); }
    /// Dots in the rightmost column, i.e. the number of nonempty rows.
    std::size_t rightmost_column() const;
    bool contains(std::size_t row, std::size_t col) const { return col < top_row() && col + rows_[row] >= top_row(); }
    std::string str() const;

    friend bool operator==(const FerrersDiagram&, const FerrersDiagram&) = default;

private:
    std::vector<std::size_t> rows_;
};

/// With pivots p_1 < ... < p_k (1-based), row i has n - p_i - (k - i) dots.
/// Throws std::invalid_argument for a zero-weight vector.
FerrersDiagram diagram_from_vector(const IdentifyingVector& v);

/// Upper bound on the dimension of an FDRM code with minimum rank distance
/// delta: min over i < delta of the dots outside the first i rows and outside
/// the rightmost delta-1-i columns.
std::size_t dim_bound(const FerrersDiagram& diagram, std::size_t delta);

/// Linear code of rows() x top_row() matrices supported on the diagram.
struct FdrmCode {
    FerrersDiagram diagram;
    std::size_t delta = 1;
    FieldPtr field;
    std::vector<Matrix> basis;

    std::size_t dimension() const { return basis.size(); }
};

struct FdrmSearchOptions {
    std::size_t restarts = 100;
    std::uint64_t seed = 0;
    /// Largest support space q^dots handled with the exact forbidden-set search.
    std::uint64_t support_budget = std::uint64_t{1} << 22;
    /// Largest span q^dim enumerated by the sampling search.
    std::uint64_t span_budget = kDefaultExhaustiveBudget;
    std::size_t samples_per_step = 20000;
};

struct FdrmSearchResult {
    FdrmCode code;
    std::size_t target = 0;  // dim_bound(diagram, delta)
    bool attained = false;
    std::uint64_t winning_seed = 0;
    std::size_t attempts = 0;
};

/// Randomised greedy basis extension with restarts. Attempt t uses seed
/// options.seed + t; the best code found is returned. Deterministic for a
/// fixed seed. Throws BudgetExceeded when neither search mode fits its budget.
FdrmSearchResult search_fdrm(const FerrersDiagram& diagram, std::size_t delta, const FieldPtr& field,
                             const FdrmSearchOptions& options = {});

/// The RREF matrix with pivots at the ones of v and `tableau` (a code matrix)
/// placed on the free positions.
Subspace lift_tableau(const IdentifyingVector& v, const FerrersDiagram& diagram, const Matrix& tableau);

/// Inverse of lift_tableau: deletes pivot columns and keeps the diagram frame.
Matrix ferrers_tableau(const Subspace& u);

/// Lifts every codeword. Throws std::invalid_argument on a diagram mismatch.
std::vector<Subspace> lift_fdrm(const IdentifyingVector& v, const FdrmCode& code,
                                std::uint64_t budget = kDefaultExhaustiveBudget);

/// `v=<bits> delta=<delta> q=<q> dim=<b>` followed by basis matrix blocks.
void write_fdrm_code(std::ostream& out, const IdentifyingVector& v, const FdrmCode& code);

}  // namespace cdc

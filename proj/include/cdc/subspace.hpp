#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cdc/bigint.hpp"
#include "cdc/matrix.hpp"

namespace cdc {

/// A k-dimensional subspace of GF(q)^n held by its reduced row echelon basis.
/// Two subspaces are equal iff their bases are identical.
class Subspace {
public:
    /// Canonicalises the row space of `generators`. Throws std::invalid_argument
    /// if the generators have rank 0.
    static Subspace from_generators(const Matrix& generators);

    std::size_t ambient() const { return basis_.cols(); }
    std::size_t dimension() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const FieldPtr& field() const { return basis_.field(); }
    /// 0-based pivot columns of the basis.
    std::vector<std::size_t> pivots() const;

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
    friend bool operator<(const Subspace& a, const Subspace& b);

private:
    explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}
    Matrix basis_;
};

struct SubspaceHash {
    std::size_t operator()(const Subspace& s) const noexcept;
};

Subspace canonicalize(const Matrix& generators);

/// dim(U + W), the rank of the stacked bases.
std::size_t sum_dimension(const Subspace& u, const Subspace& w);

/// 2 dim(U+W) - dim U - dim W. Throws std::invalid_argument on ambient or field mismatch.
std::size_t subspace_distance(const Subspace& u, const Subspace& w);

/// Binary string of length n and weight k marking pivot positions.
class IdentifyingVector {
public:
    IdentifyingVector() = default;
    explicit IdentifyingVector(std::vector<std::uint8_t> bits);
    /// Parses a string over {0,1}; throws ParseError otherwise.
    static IdentifyingVector parse(std::string_view text);
    static IdentifyingVector from_pivots(std::size_t n, std::span<const std::size_t> pivots);

    std::size_t size() const { return bits_.size(); }
    std::size_t weight() const;
    bool operator[](std::size_t i) const { return bits_[i] != 0; }
    /// 0-based positions of the ones.
    std::vector<std::size_t> pivots() const;
    /// Number of ones among positions [begin, end).
    std::size_t weight_in(std::size_t begin, std::size_t end) const;
    std::string str() const;

    friend bool operator==(const IdentifyingVector&, const IdentifyingVector&) = default;
    /// Lexicographic order of the 0/1 strings.
    friend auto operator<=>(const IdentifyingVector& a, const IdentifyingVector& b) { return a.bits_ <=> b.bits_; }

private:
    std::vector<std::uint8_t> bits_;
};

std::size_t hamming_distance(const IdentifyingVector& a, const IdentifyingVector& b);

IdentifyingVector identifying_vector(const Subspace& u);

/// q-binomial coefficient [n choose k]_q, exact.
BigInt gaussian_binomial(unsigned n, unsigned k, unsigned q);

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// All k-dimensional subspaces of GF(q)^n, each once, sorted lexicographically
/// by their basis entries (row-major). Throws BudgetExceeded above `cap`.
std::vector<Subspace> enumerate_grassmannian(std::size_t n, std::size_t k, const FieldPtr& field,
                                             std::uint64_t cap = kDefaultEnumerationCap);

struct DistanceWitness {
    std::size_t distance = 0;
    std::size_t first = 0;
    std::size_t second = 0;
    /// True when the scan stopped early because a pair below the threshold was found.
    bool stopped_early = false;
};

/// Computes subspace distances for pairs of a fixed codeword list. Uses packed
/// bit rows over GF(2) and generic elimination otherwise.
class PairDistance {
public:
    explicit PairDistance(std::span<const Subspace> codewords);
    std::size_t sum_dimension(std::size_t i, std::size_t j);
    std::size_t distance(std::size_t i, std::size_t j);

private:
    std::span<const Subspace> words_;
    bool packed_ = false;
    std::vector<std::uint64_t> bits_;          // k rows per codeword when packed
    std::vector<std::uint64_t> pivot_masks_;   // one pivot bit per row when packed
    std::vector<std::uint64_t> scratch_bits_;
    std::vector<Element> scratch_;
};

/// Minimum pairwise subspace distance with a witnessing pair. With a threshold,
/// the scan stops at the first pair whose distance is below it. Throws
/// std::invalid_argument for fewer than two codewords or mixed ambient spaces.
DistanceWitness min_subspace_distance(std::span<const Subspace> code,
                                      std::optional<std::size_t> threshold = std::nullopt);

// --- file formats ----------------------------------------------------------

struct CodeFileEntry {
    Subspace space;
    std::string note;  // text of the last `#` comment preceding the block
};

/// `q=<q> n=<n> k=<k> count=<N>` then one matrix block per codeword separated by
/// blank lines; `notes` (parallel to `code`, may be empty) are written as `# ...`
/// lines before their block.
void write_code_file(std::ostream& out, std::span<const Subspace> code, std::span<const std::string> notes = {},
                     std::span<const std::string> header_comments = {});
std::vector<CodeFileEntry> read_code_file(std::istream& in);

struct VectorFileEntry {
    IdentifyingVector vector;
    std::optional<std::size_t> annotated_dim;  // from a preceding `# dim=<v>` line
};

/// One 0/1 string per line; `#` lines are comments, and `# dim=<v>` annotates
/// the vector that follows it.
std::vector<VectorFileEntry> read_vector_file(std::istream& in);

}  // namespace cdc

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cdc/bigint.hpp"
#include "cdc/ferrers.hpp"
#include "cdc/mrd.hpp"
#include "cdc/subspace.hpp"

namespace cdc {

/// Which part of a combined construction a codeword comes from.
enum class Part {
    Linkage,     // im(U | M)
    Lifted,      // lifted FDRM codeword for one identifying vector
    ZeroPrefix,  // im(0 | U) of the three-part construction
};

const char* part_name(Part part);

struct SelectionEntry {
    IdentifyingVector vector;
    FdrmCode code;
};

struct ConstructionSpec {
    std::size_t n1 = 0;
    std::size_t n2 = 0;
    std::size_t k = 0;
    std::size_t d = 0;
    FieldPtr field;
    std::vector<Matrix> u1;  // SC-representation set, k x n1
    RankMetricCode rank_code;
    std::vector<SelectionEntry> selection;
};

struct AssembledCode {
    std::size_t n = 0;
    std::size_t k = 0;
    FieldPtr field;
    std::vector<Subspace> codewords;
    std::vector<Part> parts;                // parallel to codewords
    std::vector<std::string> sources;       // identifying vector for lifted codewords, else empty
    BigInt formula_size = 0;                // size predicted by the construction formula
    std::vector<std::string> notes;         // boundary-case flags and similar remarks

    std::size_t size() const { return codewords.size(); }
    std::size_t count(Part part) const;
};

inline constexpr std::uint64_t kDefaultCodeBudget = 2'000'000;

/// Checks that every matrix has rank k, row spaces are pairwise distinct and,
/// when `min_distance` is given and the pair count fits `pair_budget`, that the
/// pairwise subspace distance is at least that. Throws ConstructionError.
void check_sc_representation(std::span<const Matrix> set, std::size_t k, std::optional<std::size_t> min_distance,
                             std::uint64_t pair_budget = 100'000'000);

/// {im(U | M) : U in u_set, M in rank_code}.
AssembledCode linkage(std::span<const Matrix> u_set, const RankMetricCode& rank_code,
                      std::uint64_t budget = kDefaultCodeBudget);

/// C1 = linkage(U1, C_R) united with the lifted FDRM codes of the selection.
/// Throws ConstructionError naming the offending vector or matrix.
AssembledCode general_construct(const ConstructionSpec& spec, std::uint64_t budget = kDefaultCodeBudget);

/// Three-part variant: adds {im(0_{k x n1} | U) : U in u2} and requires k >= d
/// and d/2 ones in both halves of every selection vector.
AssembledCode li_construct(const ConstructionSpec& spec, std::span<const Matrix> u2,
                           std::uint64_t budget = kDefaultCodeBudget);

inline constexpr std::uint64_t kDefaultPairBudget = 100'000'000;

struct VerificationReport {
    std::size_t codewords = 0;
    bool dimensions_ok = true;
    std::size_t duplicates = 0;
    bool exhaustive = true;
    std::uint64_t pairs_checked = 0;
    std::optional<std::size_t> min_distance;  // nullopt with fewer than two codewords
    std::optional<std::pair<std::size_t, std::size_t>> witness;
    std::size_t required = 0;

    bool passed() const;
    /// key=value lines: codewords, dimensions_ok, duplicates, mode, pairs, min_distance, witness, required, status.
    std::string to_text() const;
};

/// Exhaustive pairwise check when the pair count fits `pair_budget`, otherwise
/// `sample_pairs` random pairs (seeded) plus the exact structural checks.
VerificationReport verify_cdc(std::span<const Subspace> code, std::size_t k, std::size_t d,
                              std::uint64_t pair_budget = kDefaultPairBudget, std::uint64_t sample_pairs = 1'000'000,
                              std::uint64_t seed = 0);

/// Writes the code file with `# part=...` provenance comments.
void write_assembled_code(std::ostream& out, const AssembledCode& code);

}  // namespace cdc

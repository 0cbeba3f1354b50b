#pragma once

#include <compare>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cdc/bigint.hpp"
#include "cdc/subspace.hpp"

namespace cdc {

/// Polynomial in q with nonnegative integer coefficients.
class QPolynomial {
public:
    QPolynomial() = default;

    /// Parses sums of terms like `3q^{12}`, `2q^9`, `q`, `7`; spaces are ignored.
    static QPolynomial parse(std::string_view text);

    void add_term(unsigned exponent, unsigned long coefficient);
    unsigned long coefficient(unsigned exponent) const;
    const std::map<unsigned, unsigned long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Sum of coefficients, i.e. the number of dimension entries it was built from.
    unsigned long term_count() const;

    /// Descending powers, e.g. `q^12+2q^10+1`; `0` for the zero polynomial.
    std::string str() const;

    friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

private:
    std::map<unsigned, unsigned long> terms_;
};

/// Coefficient of q^e is the multiplicity of e in dims.
QPolynomial dims_to_poly(std::span<const std::size_t> dims);

/// Exact value at q; throws std::invalid_argument for q < 2.
BigInt eval_poly(const QPolynomial& p, unsigned long q);

/// q^{max(k,n2) * (min(k,n2) - delta + 1)}; throws unless 1 <= delta <= min(k,n2).
BigInt mrd_size(std::size_t k, std::size_t n2, std::size_t delta, unsigned long q);

/// N1 * mrd_size(k, n2, delta, q) + poly(q).
BigInt compute_bound(const BigInt& n1_size, std::size_t k, std::size_t n2, std::size_t delta, const QPolynomial& poly,
                     unsigned long q);

struct BoundKey {
    unsigned long q = 0;
    std::size_t n = 0;
    std::size_t d = 0;
    std::size_t k = 0;
    friend auto operator<=>(const BoundKey&, const BoundKey&) = default;
};

std::string describe(const BoundKey& key);

struct RegistryEntry {
    BigInt value;
    std::string provenance;
};

/// Known lower bounds A_q(n,d,k) used as base-code sizes.
class BoundRegistry {
public:
    /// Throws std::invalid_argument for non-positive values or empty provenance.
    void set(const BoundKey& key, BigInt value, std::string provenance);
    const RegistryEntry* find(const BoundKey& key) const;
    bool erase(const BoundKey& key) { return entries_.erase(key) > 0; }
    const std::map<BoundKey, RegistryEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    /// One entry per line: `A q n d k = value # provenance`.
    static BoundRegistry read(std::istream& in);
    void write(std::ostream& out) const;

private:
    std::map<BoundKey, RegistryEntry> entries_;
};

/// A published lower bound to reproduce.
struct BoundClaim {
    BoundKey key;
    BigInt claimed;
    std::optional<BigInt> previous;  // prior best bound, where listed
    std::string source;              // "table" for the A_q(n,4,4) table, "text" for standalone claims
};

/// How a bound on A_q(n,d,k) decomposes: N1 = A_q(n1,d,k) times the MRD size
/// for (k, n2, d/2), plus a q-polynomial. When identifying vectors are attached,
/// the polynomial is also recomputed from their Ferrers-diagram dims.
struct BoundExpression {
    std::size_t n = 0, d = 0, k = 0, n1 = 0, n2 = 0;
    QPolynomial poly;
    std::string vector_file;
    std::vector<IdentifyingVector> vectors;
};

/// A closed-form expression stated for a base code size.
struct BaseExpression {
    std::size_t n = 0, d = 0, k = 0;
    QPolynomial poly;
};

struct BoundData {
    std::vector<BoundClaim> claims;
    std::vector<BoundExpression> expressions;
    std::vector<BaseExpression> base_expressions;

    const BoundExpression* expression_for(std::size_t n, std::size_t d, std::size_t k) const;
};

/// CSV `q,n,d,k,claimed,previous,source` with a header line.
std::vector<BoundClaim> read_claims(std::istream& in);

/// Lines `expr n= d= k= n1= n2= poly= [vectors=]` and `base n= d= k= poly=`.
void read_expressions(std::istream& in, BoundData& data);

/// Loads `claims.csv`, `expressions.txt` and the vector files they name.
/// Throws ParseError / std::runtime_error for missing or malformed files.
BoundData load_bound_data(const std::filesystem::path& dir);

/// Polynomial recomputed from attached vectors (dims with delta = d/2), or the
/// stated polynomial when no vectors are attached.
QPolynomial effective_poly(const BoundExpression& expr);

struct DerivedRow {
    BoundClaim claim;
    BoundKey base;                 // (q, n1, d, k)
    std::optional<BigInt> n1_value;  // set when the division is exact
    std::string note;
};

struct DerivationResult {
    BoundRegistry registry;
    std::vector<DerivedRow> rows;
    std::vector<std::string> flags;  // inexact divisions, inconsistencies, base-expression disagreements

    bool consistent() const;
};

/// Back-solves N1 = (claimed - poly(q)) / mrd_size(k, n2, d/2, q) for every
/// claim that has an expression. Exact and mutually consistent values per base
/// key become registry entries; anything else is flagged.
DerivationResult derive_registry(std::span<const BoundClaim> claims, const BoundData& data);

struct ComparisonRow {
    BoundClaim claim;
    std::optional<BigInt> computed;
    bool match = false;
    std::string note;
};

struct ComparisonReport {
    std::vector<ComparisonRow> rows;

    std::size_t matches() const;
    bool all_match() const { return matches() == rows.size(); }
    /// `q,n,d,k,expected,computed,match`.
    std::string to_csv() const;
    std::string to_text() const;
};

/// Recomputes every claim from the registry and the dimension data.
ComparisonReport reproduce_tables(const BoundRegistry& registry, const BoundData& data,
                                  std::span<const BoundClaim> claims);

}  // namespace cdc

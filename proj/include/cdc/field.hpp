#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace cdc {

/// Field element code: the base-p digits of the integer are the polynomial
/// coefficients of the element, lowest degree first.
using Element = std::uint16_t;

inline constexpr unsigned kMaxFieldOrder = 512;

/// GF(p^e) with full addition/multiplication tables. Immutable after
/// construction; share it through FieldPtr.
class Field {
public:
    unsigned characteristic() const { return p_; }
    unsigned degree() const { return e_; }
    unsigned order() const { return q_; }

    /// Defining polynomial over GF(p), coefficients low-to-high, monic, length e+1.
    const std::vector<unsigned>& modulus() const { return modulus_; }

    bool contains(unsigned value) const { return value < q_; }

    Element add(Element a, Element b) const { return add_[a * q_ + b]; }
    Element sub(Element a, Element b) const { return add_[a * q_ + neg_[b]]; }
    Element neg(Element a) const { return neg_[a]; }
    Element mul(Element a, Element b) const { return mul_[a * q_ + b]; }
    /// Throws std::domain_error on zero.
    Element inv(Element a) const;
    Element div(Element a, Element b) const { return mul(a, inv(b)); }
    Element pow(Element a, std::uint64_t exponent) const;

    // Row kernels used by elimination code: dst[i] += factor * src[i].
    void axpy(std::span<Element> dst, Element factor, std::span<const Element> src) const;
    void scale(std::span<Element> row, Element factor) const;

private:
    friend std::shared_ptr<const Field> make_field(unsigned p, unsigned e);
    Field(unsigned p, unsigned e, std::vector<unsigned> modulus);

    unsigned p_;
    unsigned e_;
    unsigned q_;
    std::vector<unsigned> modulus_;
    std::vector<Element> add_;
    std::vector<Element> mul_;
    std::vector<Element> neg_;
    std::vector<Element> inv_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Builds GF(p^e) using the lexicographically smallest (comparing c_0, c_1, ...)
/// monic irreducible polynomial of degree e over GF(p). For e = 1 the modulus is x.
/// Throws std::invalid_argument for non-prime p, e == 0 or p^e > 512.
FieldPtr make_field(unsigned p, unsigned e);

/// Factors q = p^e and forwards to make_field.
FieldPtr make_field_of_order(unsigned q);

bool is_prime(unsigned value);

/// Returns true when q is a prime power p^e; fills p and e.
bool prime_power(unsigned q, unsigned& p, unsigned& e);

// ---------------------------------------------------------------------------
// Dense univariate polynomials over a Field, coefficients low-to-high.
// Used for the modulus search and for extension-field arithmetic.

using Poly = std::vector<Element>;

void poly_trim(Poly& f);
Poly poly_mod(const Field& field, Poly a, const Poly& modulus);
Poly poly_mulmod(const Field& field, const Poly& a, const Poly& b, const Poly& modulus);
Poly poly_gcd(const Field& field, Poly a, Poly b);

/// Rabin's irreducibility test for a monic polynomial of degree >= 1.
bool poly_is_irreducible(const Field& field, const Poly& f);

/// Lexicographically smallest (c_0 first) monic irreducible polynomial of the
/// given degree over `field`.
Poly smallest_irreducible(const Field& field, unsigned degree);

}  // namespace cdc

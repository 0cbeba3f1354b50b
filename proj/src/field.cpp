#include "cdc/field.hpp"

#include <stdexcept>
#include <string>

namespace cdc {

bool is_prime(unsigned value) {
    if (value < 2) return false;
    for (unsigned d = 2; d * d <= value; ++d)
        if (value % d == 0) return false;
    return true;
}

bool prime_power(unsigned q, unsigned& p, unsigned& e) {
    if (q < 2) return false;
    unsigned d = 2;
    while (q % d != 0) ++d;
    unsigned rest = q;
    unsigned count = 0;
    while (rest % d == 0) {
        rest /= d;
        ++count;
    }
    if (rest != 1) return false;
    p = d;
    e = count;
    return true;
}

Field::Field(unsigned p, unsigned e, std::vector<unsigned> modulus)
    : p_(p), e_(e), q_(1), modulus_(std::move(modulus)) {
    for (unsigned i = 0; i < e; ++i) q_ *= p;
    add_.resize(static_cast<std::size_t>(q_) * q_);
    mul_.resize(static_cast<std::size_t>(q_) * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);

    // digit vectors of every element
    std::vector<std::vector<unsigned>> digits(q_, std::vector<unsigned>(e, 0));
    for (unsigned a = 0; a < q_; ++a) {
        unsigned v = a;
        for (unsigned i = 0; i < e; ++i) {
            digits[a][i] = v % p;
            v /= p;
        }
    }
    auto encode = [&](const std::vector<unsigned>& d) {
        unsigned v = 0;
        for (unsigned i = e; i-- > 0;) v = v * p + d[i];
        return static_cast<Element>(v);
    };

    std::vector<unsigned> tmp(e);
    for (unsigned a = 0; a < q_; ++a) {
        for (unsigned b = 0; b < q_; ++b) {
            for (unsigned i = 0; i < e; ++i) tmp[i] = (digits[a][i] + digits[b][i]) % p;
            add_[a * q_ + b] = encode(tmp);
        }
        for (unsigned i = 0; i < e; ++i) tmp[i] = (p - digits[a][i]) % p;
        neg_[a] = encode(tmp);
    }

    // schoolbook product reduced by the monic modulus
    std::vector<unsigned> prod(2 * e, 0);
    for (unsigned a = 0; a < q_; ++a) {
        for (unsigned b = a; b < q_; ++b) {
            std::fill(prod.begin(), prod.end(), 0);
            for (unsigned i = 0; i < e; ++i) {
                if (digits[a][i] == 0) continue;
                for (unsigned j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + digits[a][i] * digits[b][j]) % p;
            }
            for (unsigned deg = 2 * e - 1; deg >= e; --deg) {
                unsigned c = prod[deg];
                if (c == 0) continue;
                prod[deg] = 0;
                for (unsigned i = 0; i < e; ++i)
                    prod[deg - e + i] = (prod[deg - e + i] + (p - c) * modulus_[i]) % p;
            }
            for (unsigned i = 0; i < e; ++i) tmp[i] = prod[i];
            Element r = encode(tmp);
            mul_[a * q_ + b] = r;
            mul_[b * q_ + a] = r;
        }
    }

    for (unsigned a = 1; a < q_; ++a) {
        if (inv_[a] != 0) continue;
        for (unsigned b = 1; b < q_; ++b) {
            if (mul_[a * q_ + b] == 1) {
                inv_[a] = static_cast<Element>(b);
                inv_[b] = static_cast<Element>(a);
                break;
            }
        }
        if (inv_[a] == 0) throw std::logic_error("field modulus is not irreducible");
    }
}

Element Field::inv(Element a) const {
    if (a == 0 || a >= q_) throw std::domain_error("inverse of zero or invalid element");
    return inv_[a];
}

Element Field::pow(Element a, std::uint64_t exponent) const {
    Element result = 1;
    Element base = a;
    while (exponent != 0) {
        if (exponent & 1U) result = mul(result, base);
        base = mul(base, base);
        exponent >>= 1U;
    }
    return result;
}

void Field::axpy(std::span<Element> dst, Element factor, std::span<const Element> src) const {
    if (factor == 0) return;
    const Element* mrow = &mul_[static_cast<std::size_t>(factor) * q_];
    for (std::size_t i = 0; i < dst.size(); ++i) {
        if (src[i] != 0) dst[i] = add_[static_cast<std::size_t>(dst[i]) * q_ + mrow[src[i]]];
    }
}

void Field::scale(std::span<Element> row, Element factor) const {
    const Element* mrow = &mul_[static_cast<std::size_t>(factor) * q_];
    for (auto& x : row) x = mrow[x];
}

FieldPtr make_field(unsigned p, unsigned e) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    if (e == 0) throw std::invalid_argument("field extension degree must be at least 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) {
        q *= p;
        if (q > kMaxFieldOrder)
            throw std::invalid_argument("field order exceeds the supported maximum of " +
                                        std::to_string(kMaxFieldOrder));
    }
    if (e == 1) return FieldPtr(new Field(p, 1, {0, 1}));

    FieldPtr prime = make_field(p, 1);
    Poly f = smallest_irreducible(*prime, e);
    std::vector<unsigned> modulus(f.begin(), f.end());
    return FieldPtr(new Field(p, e, std::move(modulus)));
}

FieldPtr make_field_of_order(unsigned q) {
    unsigned p = 0;
    unsigned e = 0;
    if (!prime_power(q, p, e)) throw std::invalid_argument("field order " + std::to_string(q) + " is not a prime power");
    return make_field(p, e);
}

// --- polynomials -----------------------------------------------------------

void poly_trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod(const Field& field, Poly a, const Poly& modulus) {
    poly_trim(a);
    const std::size_t dm = modulus.size() - 1;
    const Element lead_inv = field.inv(modulus.back());
    while (a.size() > dm) {
        const std::size_t shift = a.size() - 1 - dm;
        const Element c = field.mul(a.back(), lead_inv);
        for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = field.sub(a[shift + i], field.mul(c, modulus[i]));
        poly_trim(a);
    }
    return a;
}

Poly poly_mulmod(const Field& field, const Poly& a, const Poly& b, const Poly& modulus) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = field.add(prod[i + j], field.mul(a[i], b[j]));
    }
    return poly_mod(field, std::move(prod), modulus);
}

Poly poly_gcd(const Field& field, Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(field, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const Element li = field.inv(a.back());
        for (auto& c : a) c = field.mul(c, li);
    }
    return a;
}

namespace {

Poly poly_powmod(const Field& field, Poly base, std::uint64_t exponent, const Poly& modulus) {
    Poly result{1};
    result = poly_mod(field, result, modulus);
    base = poly_mod(field, base, modulus);
    while (exponent != 0) {
        if (exponent & 1U) result = poly_mulmod(field, result, base, modulus);
        exponent >>= 1U;
        if (exponent != 0) base = poly_mulmod(field, base, base, modulus);
    }
    return result;
}

std::vector<unsigned> prime_divisors(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

bool poly_is_irreducible(const Field& field, const Poly& f_in) {
    Poly f = f_in;
    poly_trim(f);
    if (f.size() < 2) return false;
    const unsigned n = static_cast<unsigned>(f.size() - 1);
    if (n == 1) return true;

    const Poly x = poly_mod(field, Poly{0, 1}, f);
    // frob[i] = x^(Q^i) mod f
    std::vector<Poly> frob(n + 1);
    frob[0] = x;
    for (unsigned i = 1; i <= n; ++i) frob[i] = poly_powmod(field, frob[i - 1], field.order(), f);

    Poly diff = frob[n];
    diff.resize(std::max(diff.size(), x.size()), 0);
    for (std::size_t i = 0; i < x.size(); ++i) diff[i] = field.sub(diff[i], x[i]);
    poly_trim(diff);
    if (!diff.empty()) return false;

    for (unsigned r : prime_divisors(n)) {
        Poly h = frob[n / r];
        h.resize(std::max(h.size(), x.size()), 0);
        for (std::size_t i = 0; i < x.size(); ++i) h[i] = field.sub(h[i], x[i]);
        Poly g = poly_gcd(field, h, f);
        if (g.size() != 1) return false;
    }
    return true;
}

Poly smallest_irreducible(const Field& field, unsigned degree) {
    if (degree == 0) throw std::invalid_argument("irreducible polynomial degree must be positive");
    const unsigned q = field.order();
    Poly f(degree + 1, 0);
    f[degree] = 1;
    // odometer: c_0 is the most significant digit, c_{degree-1} the least
    while (true) {
        if (poly_is_irreducible(field, f)) return f;
        std::size_t i = degree;
        while (i-- > 0) {
            if (++f[i] < q) break;
            f[i] = 0;
            if (i == 0) throw std::logic_error("no irreducible polynomial found");
        }
    }
}

}  // namespace cdc

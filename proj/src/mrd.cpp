#include "cdc/mrd.hpp"

#include <algorithm>
#include <limits>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "cdc/errors.hpp"

namespace cdc {

namespace {

// GF(Q^N) as GF(Q)[x]/(f) with f the smallest monic irreducible of degree N.
class Extension {
public:
    Extension(const FieldPtr& base, std::size_t degree)
        : base_(base), degree_(degree), modulus_(smallest_irreducible(*base, static_cast<unsigned>(degree))) {}

    Poly monomial(std::size_t power) const {
        Poly x(power + 1, 0);
        x[power] = 1;
        return poly_mod(*base_, std::move(x), modulus_);
    }

    Poly mul(const Poly& a, const Poly& b) const { return poly_mulmod(*base_, a, b, modulus_); }

    Poly frobenius(const Poly& a) const {
        Poly result{1};
        Poly b = a;
        std::uint64_t e = base_->order();
        while (e != 0) {
            if (e & 1U) result = mul(result, b);
            e >>= 1U;
            if (e != 0) b = mul(b, b);
        }
        return result;
    }

    /// Coordinates over the polynomial basis 1, x, ..., x^{N-1}.
    std::vector<Element> coordinates(const Poly& a) const {
        std::vector<Element> c(degree_, 0);
        for (std::size_t i = 0; i < a.size() && i < degree_; ++i) c[i] = a[i];
        return c;
    }

private:
    FieldPtr base_;
    std::size_t degree_;
    Poly modulus_;
};

void check_budget(const FieldPtr& field, std::size_t dimension, std::uint64_t budget) {
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < dimension; ++i) {
        size *= field->order();
        if (size > budget)
            throw BudgetExceeded("span of dimension " + std::to_string(dimension) + " over GF(" +
                                 std::to_string(field->order()) + ") exceeds the exhaustive budget of " +
                                 std::to_string(budget));
    }
}

}  // namespace

RankMetricCode gabidulin(std::size_t k, std::size_t m, std::size_t delta, const FieldPtr& field) {
    if (k == 0 || m == 0) throw std::invalid_argument("gabidulin: matrix dimensions must be positive");
    const std::size_t small = std::min(k, m);
    const std::size_t large = std::max(k, m);
    if (delta < 1 || delta > small)
        throw std::invalid_argument("gabidulin: delta " + std::to_string(delta) + " outside [1, " +
                                    std::to_string(small) + "]");

    const Extension ext(field, large);
    // evaluation points x^r, r < small, and their q^i-th powers
    const std::size_t max_qdeg = small - delta;
    std::vector<std::vector<Poly>> frob(small);
    for (std::size_t r = 0; r < small; ++r) {
        frob[r].push_back(ext.monomial(r));
        for (std::size_t i = 1; i <= max_qdeg; ++i) frob[r].push_back(ext.frobenius(frob[r].back()));
    }

    RankMetricCode code;
    code.rows = k;
    code.cols = m;
    code.field = field;
    code.delta = delta;
    for (std::size_t i = 0; i <= max_qdeg; ++i) {
        for (std::size_t j = 0; j < large; ++j) {
            // f(x) = x^j * X^{q^i}; row r holds the coordinates of f(x^r)
            const Poly beta = ext.monomial(j);
            Matrix word(field, small, large);
            for (std::size_t r = 0; r < small; ++r) {
                const auto coords = ext.coordinates(ext.mul(beta, frob[r][i]));
                for (std::size_t c = 0; c < large; ++c) word(r, c) = coords[c];
            }
            code.basis.push_back(k > m ? word.transpose() : std::move(word));
        }
    }
    return code;
}

void for_each_span_element(std::span<const Matrix> basis, const std::function<void(const Matrix&)>& visit) {
    if (basis.empty()) return;
    const FieldPtr& field = basis.front().field();
    const unsigned q = field->order();
    Matrix current(field, basis.front().rows(), basis.front().cols());
    std::vector<Element> digits(basis.size(), 0);
    auto add_multiple = [&](std::size_t i, Element factor) {
        for (std::size_t r = 0; r < current.rows(); ++r) field->axpy(current.row(r), factor, basis[i].row(r));
    };
    while (true) {
        visit(current);
        std::size_t i = 0;
        while (i < digits.size()) {
            const Element old = digits[i];
            const Element next = static_cast<Element>(static_cast<unsigned>(old) + 1 == q ? 0 : old + 1);
            add_multiple(i, field->sub(next, old));
            digits[i] = next;
            if (next != 0) break;
            ++i;
        }
        if (i == digits.size()) break;
    }
}

std::optional<std::size_t> span_min_rank(std::span<const Matrix> basis, const FieldPtr& field, std::uint64_t budget) {
    if (basis.empty()) return std::nullopt;
    check_budget(field, basis.size(), budget);
    std::size_t best = std::numeric_limits<std::size_t>::max();
    bool first = true;
    for_each_span_element(basis, [&](const Matrix& m) {
        if (first) {
            first = false;
            return;
        }
        best = std::min(best, rank(m));
    });
    return best;
}

std::optional<std::size_t> min_rank_distance(const RankMetricCode& code, std::uint64_t budget) {
    return span_min_rank(code.basis, code.field, budget);
}

std::vector<Matrix> codewords(const RankMetricCode& code, std::uint64_t budget) {
    if (code.basis.empty()) return {Matrix(code.field, code.rows, code.cols)};
    check_budget(code.field, code.basis.size(), budget);
    std::vector<Matrix> out;
    for_each_span_element(code.basis, [&](const Matrix& m) { out.push_back(m); });
    return out;
}

bool linearly_independent(std::span<const Matrix> basis) {
    if (basis.empty()) return true;
    const std::size_t len = basis.front().rows() * basis.front().cols();
    if (len == 0) return false;
    Matrix stacked(basis.front().field(), basis.size(), len);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto& e = basis[i].entries();
        std::copy(e.begin(), e.end(), stacked.row(i).begin());
    }
    return rank(stacked) == basis.size();
}

std::vector<Matrix> lifted_mrd_set(std::size_t k, std::size_t n, std::size_t delta, const FieldPtr& field,
                                   std::uint64_t budget) {
    if (k == 0 || n < k) throw std::invalid_argument("lifted MRD set requires 1 <= k <= n");
    const Matrix id = Matrix::identity(field, k);
    if (n - k < delta) return {hconcat(id, Matrix(field, k, n - k))};
    std::vector<Matrix> out;
    for (const Matrix& a : codewords(gabidulin(k, n - k, delta, field), budget)) out.push_back(hconcat(id, a));
    return out;
}

void write_rank_code(std::ostream& out, const RankMetricCode& code) {
    out << "k=" << code.rows << " m=" << code.cols << " q=" << code.field->order() << " delta=" << code.delta
        << " dim=" << code.basis.size() << '\n';
    for (const auto& b : code.basis) {
        out << '\n';
        write_matrix(out, b);
    }
}

RankMetricCode read_rank_code(std::istream& in) {
    std::string line;
    while (std::getline(in, line) && (line.empty() || line[0] == '#')) {
    }
    std::istringstream header(line);
    std::string token;
    unsigned long k = 0, m = 0, q = 0, delta = 0, dim = 0;
    int seen = 0;
    while (header >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) throw ParseError("malformed rank code header: '" + line + "'");
        const std::string key = token.substr(0, eq);
        unsigned long value = 0;
        try {
            value = std::stoul(token.substr(eq + 1));
        } catch (const std::exception&) {
            throw ParseError("malformed rank code header: '" + line + "'");
        }
        if (key == "k") k = value, seen |= 1;
        else if (key == "m") m = value, seen |= 2;
        else if (key == "q") q = value, seen |= 4;
        else if (key == "delta") delta = value, seen |= 8;
        else if (key == "dim") dim = value, seen |= 16;
    }
    if (seen != 31) throw ParseError("rank code header must name k, m, q, delta and dim");
    RankMetricCode code;
    code.rows = k;
    code.cols = m;
    code.delta = delta;
    try {
        code.field = make_field_of_order(static_cast<unsigned>(q));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    for (unsigned long i = 0; i < dim; ++i) {
        Matrix b = read_matrix(in, code.field);
        if (b.rows() != k || b.cols() != m) throw ParseError("rank code basis matrix has the wrong shape");
        code.basis.push_back(std::move(b));
    }
    return code;
}

}  // namespace cdc

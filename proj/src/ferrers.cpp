#include "cdc/ferrers.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "cdc/errors.hpp"

namespace cdc {

FerrersDiagram::FerrersDiagram(std::vector<std::size_t> row_lengths) : rows_(std::move(row_lengths)) {
    for (std::size_t i = 1; i < rows_.size(); ++i)
        if (rows_[i] > rows_[i - 1]) throw std::invalid_argument("Ferrers diagram rows must be non-increasing");
}

FerrersDiagram FerrersDiagram::parse(std::string_view text) {
    std::vector<std::size_t> rows;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            const long v = std::stol(item, &used);
            if (used != item.size() || v < 0) throw std::invalid_argument("negative");
            rows.push_back(static_cast<std::size_t>(v));
        } catch (const std::exception&) {
            throw ParseError("malformed diagram row length '" + item + "'");
        }
    }
    if (rows.empty()) throw ParseError("empty diagram");
    try {
        return FerrersDiagram(std::move(rows));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::size_t FerrersDiagram::total_dots() const {
    std::size_t t = 0;
    for (auto r : rows_) t += r;
    return t;
}

std::size_t FerrersDiagram::rightmost_column() const {
    return static_cast<std::size_t>(std::count_if(rows_.begin(), rows_.end(), [](std::size_t r) { return r > 0; }));
}

std::string FerrersDiagram::str() const {
    std::string s;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(rows_[i]);
    }
    return s;
}

FerrersDiagram diagram_from_vector(const IdentifyingVector& v) {
    const auto piv = v.pivots();
    if (piv.empty()) throw std::invalid_argument("identifying vector has weight zero");
    const std::size_t n = v.size();
    const std::size_t k = piv.size();
    std::vector<std::size_t> rows(k);
    // 0-based pivot p in row i (0-based): n - (p+1) - (k - (i+1)) = n - p - k + i
    for (std::size_t i = 0; i < k; ++i) rows[i] = n - piv[i] - k + i;
    return FerrersDiagram(std::move(rows));
}

std::size_t dim_bound(const FerrersDiagram& diagram, std::size_t delta) {
    if (delta < 1) throw std::invalid_argument("dim_bound requires delta >= 1");
    const auto& rows = diagram.row_lengths();
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < delta; ++i) {
        const std::size_t excluded_cols = delta - 1 - i;
        std::size_t w = 0;
        for (std::size_t j = i; j < rows.size(); ++j)
            if (rows[j] > excluded_cols) w += rows[j] - excluded_cols;
        best = std::min(best, w);
    }
    return best;
}

// --- FDRM search -------------------------------------------------------------

namespace {

// Matrices supported on a diagram, indexed by base-q digit strings over the dots.
class SupportSpace {
public:
    SupportSpace(const FerrersDiagram& diagram, FieldPtr field) : diagram_(diagram), field_(std::move(field)) {
        for (std::size_t r = 0; r < diagram.rows(); ++r)
            for (std::size_t c = 0; c < diagram.top_row(); ++c)
                if (diagram.contains(r, c)) dots_.emplace_back(r, c);
    }

    std::size_t dots() const { return dots_.size(); }
    unsigned q() const { return field_->order(); }

    /// q^dots if it does not exceed `cap`, otherwise nullopt.
    std::optional<std::uint64_t> size_within(std::uint64_t cap) const {
        std::uint64_t s = 1;
        for (std::size_t i = 0; i < dots_.size(); ++i) {
            s *= q();
            if (s > cap) return std::nullopt;
        }
        return s;
    }

    void decode(std::uint64_t index, std::vector<Element>& digits) const {
        digits.resize(dots_.size());
        for (std::size_t t = 0; t < dots_.size(); ++t) {
            digits[t] = static_cast<Element>(index % q());
            index /= q();
        }
    }

    std::uint64_t encode(const std::vector<Element>& digits) const {
        std::uint64_t index = 0;
        for (std::size_t t = dots_.size(); t-- > 0;) index = index * q() + digits[t];
        return index;
    }

    Matrix to_matrix(const std::vector<Element>& digits) const {
        Matrix m(field_, diagram_.rows(), diagram_.top_row());
        for (std::size_t t = 0; t < dots_.size(); ++t) m(dots_[t].first, dots_[t].second) = digits[t];
        return m;
    }

    std::size_t rank_of(const std::vector<Element>& digits, std::vector<Element>& scratch) const {
        const std::size_t rows = diagram_.rows();
        const std::size_t cols = diagram_.top_row();
        scratch.assign(rows * cols, 0);
        for (std::size_t t = 0; t < dots_.size(); ++t) scratch[dots_[t].first * cols + dots_[t].second] = digits[t];
        return rref_in_place(*field_, scratch, rows, cols);
    }

    /// index(x + factor * a) for digit vectors.
    std::uint64_t add_scaled(std::uint64_t x, Element factor, const std::vector<Element>& a,
                             std::vector<Element>& tmp) const {
        if (q() == 2) return x ^ encode(a);
        decode(x, tmp);
        for (std::size_t t = 0; t < tmp.size(); ++t) tmp[t] = field_->add(tmp[t], field_->mul(factor, a[t]));
        return encode(tmp);
    }

private:
    const FerrersDiagram& diagram_;
    FieldPtr field_;
    std::vector<std::pair<std::size_t, std::size_t>> dots_;
};

// Exact mode: keep forbidden = (low-rank matrices) + span and the span itself as
// bitmaps over the support space; any index outside both extends the code.
std::vector<Matrix> exact_attempt(const SupportSpace& space, std::uint64_t size, const std::vector<std::uint8_t>& bad,
                                  std::size_t target, std::mt19937_64& rng) {
    std::vector<std::uint8_t> forbidden = bad;
    std::vector<std::uint8_t> span(size, 0);
    span[0] = 1;
    std::vector<Matrix> basis;
    std::vector<Element> a, tmp;
    std::vector<std::uint64_t> allowed;
    const unsigned q = space.q();
    while (basis.size() < target) {
        allowed.clear();
        for (std::uint64_t x = 0; x < size; ++x)
            if (!forbidden[x] && !span[x]) allowed.push_back(x);
        if (allowed.empty()) break;
        const std::uint64_t pick = allowed[rng() % allowed.size()];
        space.decode(pick, a);
        basis.push_back(space.to_matrix(a));

        std::vector<std::uint8_t> next_forbidden = forbidden;
        std::vector<std::uint8_t> next_span = span;
        if (q == 2) {
            for (std::uint64_t x = 0; x < size; ++x) {
                next_forbidden[x ^ pick] |= forbidden[x];
                next_span[x ^ pick] |= span[x];
            }
            forbidden.swap(next_forbidden);
            span.swap(next_span);
            continue;
        }
        for (std::uint64_t x = 0; x < size; ++x) {
            if (!forbidden[x] && !span[x]) continue;
            for (unsigned c = 1; c < q; ++c) {
                const std::uint64_t y = space.add_scaled(x, static_cast<Element>(c), a, tmp);
                if (forbidden[x]) next_forbidden[y] = 1;
                if (span[x]) next_span[y] = 1;
            }
        }
        forbidden.swap(next_forbidden);
        span.swap(next_span);
    }
    return basis;
}

// Sampling mode: draw random supported matrices and test every coset element.
std::vector<Matrix> sampling_attempt(const SupportSpace& space, const FieldPtr& field, std::size_t delta,
                                     std::size_t target, std::size_t samples, std::mt19937_64& rng) {
    std::vector<Matrix> basis;
    std::vector<Matrix> span_elements{space.to_matrix(std::vector<Element>(space.dots(), 0))};
    std::vector<Element> digits(space.dots());
    while (basis.size() < target) {
        bool extended = false;
        for (std::size_t s = 0; s < samples && !extended; ++s) {
            for (auto& d : digits) d = static_cast<Element>(rng() % space.q());
            const Matrix a = space.to_matrix(digits);
            bool ok = true;
            for (const Matrix& e : span_elements) {
                if (rank(a + e) < delta) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            extended = true;
            std::vector<Matrix> grown;
            grown.reserve(span_elements.size() * space.q());
            for (unsigned c = 0; c < space.q(); ++c) {
                const Matrix ca = scaled(a, static_cast<Element>(c));
                for (const Matrix& e : span_elements) grown.push_back(e + ca);
            }
            span_elements.swap(grown);
            basis.push_back(a);
        }
        if (!extended) break;
    }
    (void)field;
    return basis;
}

}  // namespace

FdrmSearchResult search_fdrm(const FerrersDiagram& diagram, std::size_t delta, const FieldPtr& field,
                             const FdrmSearchOptions& options) {
    if (delta < 1) throw std::invalid_argument("search_fdrm requires delta >= 1");
    FdrmSearchResult result;
    result.target = dim_bound(diagram, delta);
    result.code = FdrmCode{diagram, delta, field, {}};
    result.winning_seed = options.seed;
    if (result.target == 0) {
        result.attained = true;
        return result;
    }

    const SupportSpace space(diagram, field);
    const auto exact_size = space.size_within(options.support_budget);
    std::vector<std::uint8_t> bad;
    if (exact_size) {
        bad.assign(*exact_size, 0);
        std::vector<Element> digits, scratch;
        for (std::uint64_t x = 1; x < *exact_size; ++x) {
            space.decode(x, digits);
            bad[x] = space.rank_of(digits, scratch) < delta;
        }
    } else {
        std::uint64_t span = 1;
        for (std::size_t i = 0; i < result.target; ++i) {
            span *= field->order();
            if (span > options.span_budget)
                throw BudgetExceeded("FDRM search: support space and span of diagram " + diagram.str() +
                                     " exceed the search budgets");
        }
    }

    const std::size_t attempts = std::max<std::size_t>(1, options.restarts);
    for (std::size_t t = 0; t < attempts; ++t) {
        const std::uint64_t seed = options.seed + t;
        std::mt19937_64 rng(seed);
        std::vector<Matrix> basis = exact_size ? exact_attempt(space, *exact_size, bad, result.target, rng)
                                               : sampling_attempt(space, field, delta, result.target,
                                                                  options.samples_per_step, rng);
        result.attempts = t + 1;
        if (basis.size() > result.code.basis.size() || t == 0) {
            result.code.basis = std::move(basis);
            result.winning_seed = seed;
        }
        if (result.code.basis.size() == result.target) {
            result.attained = true;
            break;
        }
    }
    return result;
}

// --- lifting ---------------------------------------------------------------------

Subspace lift_tableau(const IdentifyingVector& v, const FerrersDiagram& diagram, const Matrix& tableau) {
    const auto piv = v.pivots();
    const std::size_t n = v.size();
    const std::size_t k = piv.size();
    if (tableau.rows() != k || tableau.cols() != diagram.top_row())
        throw std::invalid_argument("tableau shape does not match the diagram");
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!v[c]) free_cols.push_back(c);
    const std::size_t offset = free_cols.size() - diagram.top_row();
    Matrix m(tableau.field(), k, n);
    for (std::size_t r = 0; r < k; ++r) {
        m(r, piv[r]) = 1;
        for (std::size_t c = 0; c < tableau.cols(); ++c) {
            const Element x = tableau(r, c);
            if (x == 0) continue;
            if (!diagram.contains(r, c)) throw std::invalid_argument("tableau has an entry outside the diagram");
            m(r, free_cols[offset + c]) = x;
        }
    }
    return Subspace::from_generators(m);
}

Matrix ferrers_tableau(const Subspace& u) {
    const IdentifyingVector v = identifying_vector(u);
    const FerrersDiagram diagram = diagram_from_vector(v);
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < v.size(); ++c)
        if (!v[c]) free_cols.push_back(c);
    const std::size_t offset = free_cols.size() - diagram.top_row();
    Matrix t(u.field(), u.dimension(), diagram.top_row());
    for (std::size_t r = 0; r < u.dimension(); ++r)
        for (std::size_t c = 0; c < diagram.top_row(); ++c) t(r, c) = u.basis()(r, free_cols[offset + c]);
    return t;
}

std::vector<Subspace> lift_fdrm(const IdentifyingVector& v, const FdrmCode& code, std::uint64_t budget) {
    if (diagram_from_vector(v) != code.diagram)
        throw std::invalid_argument("FDRM code diagram " + code.diagram.str() + " does not belong to vector " + v.str());
    std::vector<Subspace> out;
    if (code.basis.empty()) {
        out.push_back(lift_tableau(v, code.diagram, Matrix(code.field, code.diagram.rows(), code.diagram.top_row())));
        return out;
    }
    RankMetricCode as_rank{code.diagram.rows(), code.diagram.top_row(), code.field, code.delta, code.basis};
    for (const Matrix& m : codewords(as_rank, budget)) out.push_back(lift_tableau(v, code.diagram, m));
    return out;
}

void write_fdrm_code(std::ostream& out, const IdentifyingVector& v, const FdrmCode& code) {
    out << "v=" << v.str() << " delta=" << code.delta << " q=" << code.field->order() << " dim=" << code.basis.size()
        << '\n';
    out << "# diagram=" << code.diagram.str() << '\n';
    for (const auto& b : code.basis) {
        out << '\n';
        write_matrix(out, b);
    }
}

}  // namespace cdc

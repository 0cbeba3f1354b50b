#include "cdc/matrix.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "cdc/errors.hpp"

namespace cdc {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (!field_) throw std::invalid_argument("matrix requires a field");
}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Element> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (!field_) throw std::invalid_argument("matrix requires a field");
    if (data_.size() != rows * cols) throw std::invalid_argument("matrix entry count does not match its shape");
    for (Element x : data_)
        if (!field_->contains(x)) throw std::invalid_argument("matrix entry " + std::to_string(x) + " is not a field element");
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool Matrix::is_zero() const {
    for (Element x : data_)
        if (x != 0) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

namespace {

void require_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shape mismatch");
    if (a.field()->order() != b.field()->order()) throw std::invalid_argument("matrix field mismatch");
}

}  // namespace

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    Matrix out = a;
    const Field& f = *a.field();
    for (std::size_t r = 0; r < a.rows(); ++r) f.axpy(out.row(r), 1, b.row(r));
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    Matrix out = a;
    const Field& f = *a.field();
    const Element minus_one = f.neg(1);
    for (std::size_t r = 0; r < a.rows(); ++r) f.axpy(out.row(r), minus_one, b.row(r));
    return out;
}

Matrix scaled(const Matrix& a, Element factor) {
    Matrix out = a;
    for (std::size_t r = 0; r < a.rows(); ++r) a.field()->scale(out.row(r), factor);
    return out;
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hconcat: row count mismatch");
    Matrix out(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
    }
    return out;
}

Matrix vconcat(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vconcat: column count mismatch");
    std::vector<Element> data = a.entries();
    data.insert(data.end(), b.entries().begin(), b.entries().end());
    return Matrix(a.field(), a.rows() + b.rows(), a.cols(), std::move(data));
}

std::size_t rref_in_place(const Field& field, std::span<Element> data, std::size_t rows, std::size_t cols,
                          std::vector<std::size_t>* pivots) {
    if (pivots) pivots->clear();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pr = rank;
        while (pr < rows && data[pr * cols + c] == 0) ++pr;
        if (pr == rows) continue;
        std::span<Element> prow = data.subspan(pr * cols, cols);
        if (pr != rank) {
            std::span<Element> target = data.subspan(rank * cols, cols);
            std::swap_ranges(prow.begin(), prow.end(), target.begin());
            prow = target;
        }
        const Element lead = prow[c];
        if (lead != 1) field.scale(prow, field.inv(lead));
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank) continue;
            const Element x = data[r * cols + c];
            if (x != 0) field.axpy(data.subspan(r * cols, cols), field.neg(x), prow);
        }
        if (pivots) pivots->push_back(c);
        ++rank;
    }
    return rank;
}

RrefResult rref(const Matrix& m) {
    RrefResult result;
    result.reduced = m;
    if (m.rows() == 0 || m.cols() == 0) return result;
    std::vector<Element> data = m.entries();
    result.rank = rref_in_place(*m.field(), data, m.rows(), m.cols(), &result.pivots);
    result.reduced = Matrix(m.field(), m.rows(), m.cols(), std::move(data));
    return result;
}

std::size_t rank(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    std::vector<Element> data = m.entries();
    return rref_in_place(*m.field(), data, m.rows(), m.cols());
}

void write_matrix(std::ostream& out, const Matrix& m) {
    out << "q=" << m.field()->order() << " rows=" << m.rows() << " cols=" << m.cols() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out << ' ';
            out << m(r, c);
        }
        out << '\n';
    }
}

namespace {

bool parse_key(const std::string& token, const std::string& key, unsigned long& value) {
    if (token.rfind(key + "=", 0) != 0) return false;
    try {
        std::size_t used = 0;
        value = std::stoul(token.substr(key.size() + 1), &used);
        return used == token.size() - key.size() - 1;
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace

Matrix read_matrix(std::istream& in, FieldPtr field) {
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        break;
    }
    if (!in && line.empty()) throw ParseError("expected a matrix header, found end of input");

    std::istringstream header(line);
    std::string tq, tr, tc;
    unsigned long q = 0, rows = 0, cols = 0;
    if (!(header >> tq >> tr >> tc) || !parse_key(tq, "q", q) || !parse_key(tr, "rows", rows) ||
        !parse_key(tc, "cols", cols))
        throw ParseError("malformed matrix header: '" + line + "'");

    if (field) {
        if (field->order() != q) throw ParseError("matrix header field q=" + std::to_string(q) + " does not match");
    } else {
        try {
            field = make_field_of_order(static_cast<unsigned>(q));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }

    std::vector<Element> data;
    data.reserve(rows * cols);
    for (unsigned long r = 0; r < rows; ++r) {
        if (!std::getline(in, line)) throw ParseError("matrix block truncated");
        std::istringstream row(line);
        long value = 0;
        unsigned long count = 0;
        while (row >> value) {
            if (value < 0 || !field->contains(static_cast<unsigned>(value)))
                throw ParseError("invalid field element " + std::to_string(value));
            data.push_back(static_cast<Element>(value));
            ++count;
        }
        if (!row.eof()) throw ParseError("non-numeric matrix entry in '" + line + "'");
        if (count != cols) throw ParseError("matrix row has " + std::to_string(count) + " entries, expected " +
                                            std::to_string(cols));
    }
    return Matrix(field, rows, cols, std::move(data));
}

}  // namespace cdc

#include "cdc/subspace.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cdc/errors.hpp"

namespace cdc {

// --- Subspace ----------------------------------------------------------------

Subspace Subspace::from_generators(const Matrix& generators) {
    RrefResult r = rref(generators);
    if (r.rank == 0) throw std::invalid_argument("cannot canonicalize a rank-0 generator matrix");
    std::vector<Element> data(r.reduced.entries().begin(),
                              r.reduced.entries().begin() + static_cast<std::ptrdiff_t>(r.rank * generators.cols()));
    return Subspace(Matrix(generators.field(), r.rank, generators.cols(), std::move(data)));
}

std::vector<std::size_t> Subspace::pivots() const {
    std::vector<std::size_t> out;
    out.reserve(dimension());
    for (std::size_t r = 0; r < basis_.rows(); ++r) {
        std::size_t c = 0;
        while (basis_(r, c) == 0) ++c;
        out.push_back(c);
    }
    return out;
}

bool operator<(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) return a.ambient() < b.ambient();
    if (a.dimension() != b.dimension()) return a.dimension() < b.dimension();
    return a.basis_.entries() < b.basis_.entries();
}

std::size_t SubspaceHash::operator()(const Subspace& s) const noexcept {
    std::size_t h = 1469598103934665603ULL ^ s.ambient();
    for (Element x : s.basis().entries()) h = (h ^ x) * 1099511628211ULL;
    return h;
}

Subspace canonicalize(const Matrix& generators) { return Subspace::from_generators(generators); }

namespace {

void require_compatible(const Subspace& u, const Subspace& w) {
    if (u.ambient() != w.ambient()) throw std::invalid_argument("subspaces live in different ambient spaces");
    if (u.field()->order() != w.field()->order()) throw std::invalid_argument("subspaces are over different fields");
}

}  // namespace

std::size_t sum_dimension(const Subspace& u, const Subspace& w) {
    require_compatible(u, w);
    return rank(vconcat(u.basis(), w.basis()));
}

std::size_t subspace_distance(const Subspace& u, const Subspace& w) {
    return 2 * sum_dimension(u, w) - u.dimension() - w.dimension();
}

// --- IdentifyingVector -------------------------------------------------------

IdentifyingVector::IdentifyingVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto& b : bits_)
        if (b > 1) throw std::invalid_argument("identifying vector entries must be 0 or 1");
}

IdentifyingVector IdentifyingVector::parse(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') throw ParseError("identifying vector '" + std::string(text) + "' is not a 0/1 string");
        bits.push_back(c == '1' ? 1 : 0);
    }
    if (bits.empty()) throw ParseError("empty identifying vector");
    return IdentifyingVector(std::move(bits));
}

IdentifyingVector IdentifyingVector::from_pivots(std::size_t n, std::span<const std::size_t> pivots) {
    std::vector<std::uint8_t> bits(n, 0);
    for (std::size_t p : pivots) {
        if (p >= n) throw std::invalid_argument("pivot position outside the vector");
        bits[p] = 1;
    }
    return IdentifyingVector(std::move(bits));
}

std::size_t IdentifyingVector::weight() const { return weight_in(0, bits_.size()); }

std::size_t IdentifyingVector::weight_in(std::size_t begin, std::size_t end) const {
    std::size_t w = 0;
    for (std::size_t i = begin; i < end && i < bits_.size(); ++i) w += bits_[i];
    return w;
}

std::vector<std::size_t> IdentifyingVector::pivots() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i]) out.push_back(i);
    return out;
}

std::string IdentifyingVector::str() const {
    std::string s;
    s.reserve(bits_.size());
    for (auto b : bits_) s.push_back(b ? '1' : '0');
    return s;
}

std::size_t hamming_distance(const IdentifyingVector& a, const IdentifyingVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("hamming distance of vectors with different lengths");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

IdentifyingVector identifying_vector(const Subspace& u) {
    auto piv = u.pivots();
    return IdentifyingVector::from_pivots(u.ambient(), piv);
}

// --- Grassmannian ------------------------------------------------------------

BigInt gaussian_binomial(unsigned n, unsigned k, unsigned q) {
    if (k > n) return 0;
    BigInt num = 1;
    BigInt den = 1;
    for (unsigned i = 0; i < k; ++i) {
        num *= big_pow(q, n - i) - 1;
        den *= big_pow(q, i + 1) - 1;
    }
    return num / den;
}

std::vector<Subspace> enumerate_grassmannian(std::size_t n, std::size_t k, const FieldPtr& field, std::uint64_t cap) {
    if (k == 0 || k > n) throw std::invalid_argument("grassmannian requires 1 <= k <= n");
    const BigInt count = gaussian_binomial(static_cast<unsigned>(n), static_cast<unsigned>(k), field->order());
    if (count > BigInt(std::to_string(cap)))
        throw BudgetExceeded("grassmannian has " + count.get_str() + " elements, above the cap of " + std::to_string(cap));

    const unsigned q = field->order();
    std::vector<Subspace> out;
    out.reserve(count.get_ui());

    std::vector<std::size_t> piv(k);
    for (std::size_t i = 0; i < k; ++i) piv[i] = i;
    while (true) {
        // free positions: row r, columns right of its pivot that are not pivots
        std::vector<bool> is_pivot(n, false);
        for (auto p : piv) is_pivot[p] = true;
        std::vector<std::pair<std::size_t, std::size_t>> free;
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = piv[r] + 1; c < n; ++c)
                if (!is_pivot[c]) free.emplace_back(r, c);

        Matrix m(field, k, n);
        for (std::size_t r = 0; r < k; ++r) m(r, piv[r]) = 1;
        std::vector<Element> digits(free.size(), 0);
        while (true) {
            for (std::size_t i = 0; i < free.size(); ++i) m(free[i].first, free[i].second) = digits[i];
            out.push_back(Subspace::from_generators(m));
            std::size_t i = 0;
            while (i < digits.size() && ++digits[i] == q) digits[i++] = 0;
            if (i == digits.size()) break;
        }

        // next k-combination of {0..n-1}
        std::size_t i = k;
        while (i > 0 && piv[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++piv[i - 1];
        for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// --- pairwise distance kernel ---------------------------------------------------

PairDistance::PairDistance(std::span<const Subspace> codewords) : words_(codewords) {
    if (words_.empty()) return;
    const std::size_t n = words_.front().ambient();
    const unsigned q = words_.front().field()->order();
    std::size_t max_k = 0;
    for (const auto& w : words_) {
        if (w.ambient() != n) throw std::invalid_argument("codewords live in different ambient spaces");
        if (w.field()->order() != q) throw std::invalid_argument("codewords are over different fields");
        max_k = std::max(max_k, w.dimension());
    }
    packed_ = q == 2 && n <= 64 && std::all_of(words_.begin(), words_.end(), [&](const Subspace& s) {
                  return s.dimension() == max_k;
              });
    if (packed_) {
        bits_.resize(words_.size() * max_k);
        pivot_masks_.resize(words_.size() * max_k);
        for (std::size_t w = 0; w < words_.size(); ++w) {
            const Matrix& b = words_[w].basis();
            for (std::size_t r = 0; r < max_k; ++r) {
                std::uint64_t row = 0;
                std::uint64_t pivot = 0;
                for (std::size_t c = 0; c < n; ++c) {
                    if (b(r, c)) {
                        row |= std::uint64_t{1} << c;
                        if (!pivot) pivot = std::uint64_t{1} << c;
                    }
                }
                bits_[w * max_k + r] = row;
                pivot_masks_[w * max_k + r] = pivot;
            }
        }
        scratch_bits_.resize(max_k);
    } else {
        scratch_.resize(2 * max_k * n);
    }
}

std::size_t PairDistance::sum_dimension(std::size_t i, std::size_t j) {
    const Subspace& u = words_[i];
    const Subspace& w = words_[j];
    if (packed_) {
        const std::size_t k = u.dimension();
        const std::uint64_t* urows = &bits_[i * k];
        const std::uint64_t* upiv = &pivot_masks_[i * k];
        const std::uint64_t* wrows = &bits_[j * k];
        // clear u's pivot columns from w's rows; u is reduced so one pass suffices
        std::size_t m = 0;
        for (std::size_t r = 0; r < k; ++r) {
            std::uint64_t x = wrows[r];
            for (std::size_t t = 0; t < k; ++t)
                if (x & upiv[t]) x ^= urows[t];
            if (x) scratch_bits_[m++] = x;
        }
        std::size_t extra = 0;
        for (std::size_t r = 0; r < m; ++r) {
            std::uint64_t x = scratch_bits_[r];
            if (!x) continue;
            ++extra;
            const std::uint64_t low = x & (~x + 1);
            for (std::size_t t = r + 1; t < m; ++t)
                if (scratch_bits_[t] & low) scratch_bits_[t] ^= x;
        }
        return k + extra;
    }
    const std::size_t n = u.ambient();
    const auto& ue = u.basis().entries();
    const auto& we = w.basis().entries();
    std::copy(ue.begin(), ue.end(), scratch_.begin());
    std::copy(we.begin(), we.end(), scratch_.begin() + static_cast<std::ptrdiff_t>(ue.size()));
    const std::size_t rows = u.dimension() + w.dimension();
    return rref_in_place(*u.field(), std::span<Element>(scratch_.data(), rows * n), rows, n);
}

std::size_t PairDistance::distance(std::size_t i, std::size_t j) {
    return 2 * sum_dimension(i, j) - words_[i].dimension() - words_[j].dimension();
}

DistanceWitness min_subspace_distance(std::span<const Subspace> code, std::optional<std::size_t> threshold) {
    if (code.size() < 2) throw std::invalid_argument("minimum distance needs at least two codewords");
    PairDistance kernel(code);
    DistanceWitness best;
    best.distance = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < code.size(); ++i) {
        for (std::size_t j = i + 1; j < code.size(); ++j) {
            const std::size_t d = kernel.distance(i, j);
            if (d < best.distance) {
                best.distance = d;
                best.first = i;
                best.second = j;
                if (threshold && d < *threshold) {
                    best.stopped_early = true;
                    return best;
                }
            }
        }
    }
    return best;
}

// --- file formats ----------------------------------------------------------------

void write_code_file(std::ostream& out, std::span<const Subspace> code, std::span<const std::string> notes,
                     std::span<const std::string> header_comments) {
    const unsigned q = code.empty() ? 0 : code.front().field()->order();
    const std::size_t n = code.empty() ? 0 : code.front().ambient();
    const std::size_t k = code.empty() ? 0 : code.front().dimension();
    out << "q=" << q << " n=" << n << " k=" << k << " count=" << code.size() << '\n';
    for (const auto& c : header_comments) out << "# " << c << '\n';
    for (std::size_t i = 0; i < code.size(); ++i) {
        out << '\n';
        if (i < notes.size() && !notes[i].empty()) out << "# " << notes[i] << '\n';
        write_matrix(out, code[i].basis());
    }
}

namespace {

unsigned long header_value(const std::string& line, const std::string& key) {
    std::istringstream in(line);
    std::string token;
    while (in >> token) {
        if (token.rfind(key + "=", 0) == 0) {
            try {
                return std::stoul(token.substr(key.size() + 1));
            } catch (const std::exception&) {
                break;
            }
        }
    }
    throw ParseError("code file header lacks a valid '" + key + "=' field: '" + line + "'");
}

std::string strip(std::string s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
    std::size_t b = 0;
    while (b < s.size() && (s[b] == ' ' || s[b] == '\t')) ++b;
    return s.substr(b);
}

}  // namespace

std::vector<CodeFileEntry> read_code_file(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        line = strip(line);
        if (!line.empty() && line[0] != '#') break;
    }
    if (line.empty()) throw ParseError("code file is empty");
    const unsigned long q = header_value(line, "q");
    const unsigned long n = header_value(line, "n");
    const unsigned long k = header_value(line, "k");
    const unsigned long count = header_value(line, "count");
    FieldPtr field;
    try {
        field = make_field_of_order(static_cast<unsigned>(q));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }

    std::vector<CodeFileEntry> out;
    std::string note;
    while (true) {
        const int c = in.peek();
        if (c == std::char_traits<char>::eof()) break;
        if (c == '#' || c == '\n' || c == '\r') {
            std::getline(in, line);
            line = strip(line);
            if (!line.empty() && line[0] == '#') note = strip(line.substr(1));
            continue;
        }
        Matrix m = read_matrix(in, field);
        if (m.cols() != n || m.rows() != k)
            throw ParseError("codeword " + std::to_string(out.size()) + " has shape " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()) + ", expected " + std::to_string(k) + "x" + std::to_string(n));
        Subspace s = Subspace::from_generators(m);
        if (s.dimension() != k) throw ParseError("codeword " + std::to_string(out.size()) + " is rank deficient");
        out.push_back({std::move(s), note});
        note.clear();
    }
    if (out.size() != count)
        throw ParseError("code file declares " + std::to_string(count) + " codewords but holds " +
                         std::to_string(out.size()));
    return out;
}

std::vector<VectorFileEntry> read_vector_file(std::istream& in) {
    std::vector<VectorFileEntry> out;
    std::optional<std::size_t> pending;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip(line);
        if (line.empty()) continue;
        if (line[0] == '#') {
            const std::string body = strip(line.substr(1));
            if (body.rfind("dim=", 0) == 0) {
                try {
                    pending = std::stoul(body.substr(4));
                } catch (const std::exception&) {
                    throw ParseError("line " + std::to_string(lineno) + ": bad dim annotation");
                }
            }
            continue;
        }
        try {
            out.push_back({IdentifyingVector::parse(line), pending});
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
        pending.reset();
    }
    return out;
}

}  // namespace cdc

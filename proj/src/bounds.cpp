#include "cdc/bounds.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cdc/errors.hpp"
#include "cdc/ferrers.hpp"

namespace cdc {

// --- QPolynomial -----------------------------------------------------------------

namespace {

unsigned long parse_ulong(std::string_view s, const std::string& context) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError("expected a nonnegative integer in " + context);
    try {
        return std::stoul(std::string(s));
    } catch (const std::exception&) {
        throw ParseError("integer out of range in " + context);
    }
}

BigInt parse_bigint(const std::string& s, const std::string& context) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError("expected a nonnegative integer in " + context + ", got '" + s + "'");
    return BigInt(s);
}

std::string trim(std::string s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    std::size_t b = 0;
    while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    return s.substr(b);
}

}  // namespace

QPolynomial QPolynomial::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '{' && c != '}') s.push_back(c);
    QPolynomial p;
    if (s.empty() || s == "0") return p;
    std::size_t start = 0;
    while (start <= s.size()) {
        const std::size_t plus = s.find('+', start);
        const std::string term = s.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
        const std::string context = "polynomial term '" + term + "'";
        if (term.empty()) throw ParseError("empty term in polynomial '" + std::string(text) + "'");
        const std::size_t qpos = term.find('q');
        unsigned long coef = 1;
        unsigned exponent = 0;
        if (qpos == std::string::npos) {
            coef = parse_ulong(term, context);
        } else {
            if (qpos > 0) coef = parse_ulong(std::string_view(term).substr(0, qpos), context);
            const std::string rest = term.substr(qpos + 1);
            if (rest.empty()) {
                exponent = 1;
            } else {
                if (rest[0] != '^') throw ParseError("malformed " + context);
                exponent = static_cast<unsigned>(parse_ulong(std::string_view(rest).substr(1), context));
            }
        }
        p.add_term(exponent, coef);
        if (plus == std::string::npos) break;
        start = plus + 1;
    }
    return p;
}

void QPolynomial::add_term(unsigned exponent, unsigned long coefficient) {
    if (coefficient == 0) return;
    terms_[exponent] += coefficient;
}

unsigned long QPolynomial::coefficient(unsigned exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
}

unsigned long QPolynomial::term_count() const {
    unsigned long t = 0;
    for (const auto& [e, c] : terms_) t += c;
    return t;
}

std::string QPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto [e, c] = *it;
        if (!out.empty()) out += '+';
        if (e == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c);
        out += 'q';
        if (e != 1) out += '^' + std::to_string(e);
    }
    return out;
}

QPolynomial dims_to_poly(std::span<const std::size_t> dims) {
    QPolynomial p;
    for (auto d : dims) p.add_term(static_cast<unsigned>(d), 1);
    return p;
}

BigInt eval_poly(const QPolynomial& p, unsigned long q) {
    if (q < 2) throw std::invalid_argument("polynomial evaluation requires q >= 2");
    BigInt total = 0;
    for (const auto& [e, c] : p.terms()) total += BigInt(c) * big_pow(q, e);
    return total;
}

BigInt mrd_size(std::size_t k, std::size_t n2, std::size_t delta, unsigned long q) {
    const std::size_t small = std::min(k, n2);
    const std::size_t large = std::max(k, n2);
    if (delta < 1 || delta > small)
        throw std::invalid_argument("mrd_size: delta " + std::to_string(delta) + " outside [1, " + std::to_string(small) +
                                    "]");
    return big_pow(q, large * (small - delta + 1));
}

BigInt compute_bound(const BigInt& n1_size, std::size_t k, std::size_t n2, std::size_t delta, const QPolynomial& poly,
                     unsigned long q) {
    return n1_size * mrd_size(k, n2, delta, q) + eval_poly(poly, q);
}

// --- registry --------------------------------------------------------------------

std::string describe(const BoundKey& key) {
    return "A_" + std::to_string(key.q) + "(" + std::to_string(key.n) + "," + std::to_string(key.d) + "," +
           std::to_string(key.k) + ")";
}

void BoundRegistry::set(const BoundKey& key, BigInt value, std::string provenance) {
    if (value <= 0) throw std::invalid_argument("registry values must be positive");
    if (provenance.empty()) throw std::invalid_argument("registry entries need a provenance note");
    entries_[key] = RegistryEntry{std::move(value), std::move(provenance)};
}

const RegistryEntry* BoundRegistry::find(const BoundKey& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
}

BoundRegistry BoundRegistry::read(std::istream& in) {
    BoundRegistry reg;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const std::string where = "registry line " + std::to_string(lineno);
        const auto hash = line.find('#');
        if (hash == std::string::npos) throw ParseError(where + ": missing provenance");
        const std::string provenance = trim(line.substr(hash + 1));
        std::istringstream body(line.substr(0, hash));
        std::string a, q, n, d, k, eq, value, extra;
        if (!(body >> a >> q >> n >> d >> k >> eq >> value) || a != "A" || eq != "=" || (body >> extra))
            throw ParseError(where + ": expected 'A q n d k = value # provenance'");
        const BoundKey key{parse_ulong(q, where), parse_ulong(n, where), parse_ulong(d, where), parse_ulong(k, where)};
        try {
            reg.set(key, parse_bigint(value, where), provenance);
        } catch (const std::invalid_argument& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    return reg;
}

void BoundRegistry::write(std::ostream& out) const {
    for (const auto& [key, entry] : entries_)
        out << "A " << key.q << ' ' << key.n << ' ' << key.d << ' ' << key.k << " = " << entry.value.get_str() << " # "
            << entry.provenance << '\n';
}

// --- data files ------------------------------------------------------------------

const BoundExpression* BoundData::expression_for(std::size_t n, std::size_t d, std::size_t k) const {
    for (const auto& e : expressions)
        if (e.n == n && e.d == d && e.k == k) return &e;
    return nullptr;
}

std::vector<BoundClaim> read_claims(std::istream& in) {
    std::vector<BoundClaim> out;
    std::string line;
    std::size_t lineno = 0;
    bool header = true;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        if (header) {
            header = false;
            if (line.rfind("q,", 0) == 0) continue;
        }
        std::vector<std::string> fields;
        std::string item;
        std::istringstream row(line);
        while (std::getline(row, item, ',')) fields.push_back(trim(item));
        if (line.back() == ',') fields.emplace_back();
        const std::string where = "claims line " + std::to_string(lineno);
        if (fields.size() != 7) throw ParseError(where + ": expected 7 fields");
        BoundClaim c;
        c.key = {parse_ulong(fields[0], where), parse_ulong(fields[1], where), parse_ulong(fields[2], where),
                 parse_ulong(fields[3], where)};
        c.claimed = parse_bigint(fields[4], where);
        if (!fields[5].empty()) c.previous = parse_bigint(fields[5], where);
        c.source = fields[6];
        out.push_back(std::move(c));
    }
    return out;
}

void read_expressions(std::istream& in, BoundData& data) {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const std::string where = "expressions line " + std::to_string(lineno);
        std::istringstream tokens(line);
        std::string kind;
        tokens >> kind;
        std::map<std::string, std::string> kv;
        std::string tok;
        while (tokens >> tok) {
            const auto eq = tok.find('=');
            if (eq == std::string::npos) throw ParseError(where + ": expected key=value, got '" + tok + "'");
            kv[tok.substr(0, eq)] = tok.substr(eq + 1);
        }
        auto need = [&](const std::string& key) -> const std::string& {
            auto it = kv.find(key);
            if (it == kv.end()) throw ParseError(where + ": missing '" + key + "='");
            return it->second;
        };
        if (kind == "expr") {
            BoundExpression e;
            e.n = parse_ulong(need("n"), where);
            e.d = parse_ulong(need("d"), where);
            e.k = parse_ulong(need("k"), where);
            e.n1 = parse_ulong(need("n1"), where);
            e.n2 = parse_ulong(need("n2"), where);
            if (e.n1 + e.n2 != e.n) throw ParseError(where + ": n1 + n2 must equal n");
            e.poly = QPolynomial::parse(need("poly"));
            if (kv.count("vectors")) e.vector_file = kv["vectors"];
            data.expressions.push_back(std::move(e));
        } else if (kind == "base") {
            BaseExpression b;
            b.n = parse_ulong(need("n"), where);
            b.d = parse_ulong(need("d"), where);
            b.k = parse_ulong(need("k"), where);
            b.poly = QPolynomial::parse(need("poly"));
            data.base_expressions.push_back(std::move(b));
        } else {
            throw ParseError(where + ": unknown record kind '" + kind + "'");
        }
    }
}

BoundData load_bound_data(const std::filesystem::path& dir) {
    auto open = [&](const std::filesystem::path& p) {
        std::ifstream in(p);
        if (!in) throw std::runtime_error("cannot open data file " + p.string());
        return in;
    };
    BoundData data;
    {
        auto in = open(dir / "claims.csv");
        data.claims = read_claims(in);
    }
    {
        auto in = open(dir / "expressions.txt");
        read_expressions(in, data);
    }
    for (auto& e : data.expressions) {
        if (e.vector_file.empty()) continue;
        auto in = open(dir / e.vector_file);
        for (auto& entry : read_vector_file(in)) e.vectors.push_back(std::move(entry.vector));
    }
    return data;
}

QPolynomial effective_poly(const BoundExpression& expr) {
    if (expr.vectors.empty()) return expr.poly;
    std::vector<std::size_t> dims;
    dims.reserve(expr.vectors.size());
    for (const auto& v : expr.vectors) dims.push_back(dim_bound(diagram_from_vector(v), expr.d / 2));
    return dims_to_poly(dims);
}

// --- derivation and reproduction -------------------------------------------------

bool DerivationResult::consistent() const { return flags.empty(); }

DerivationResult derive_registry(std::span<const BoundClaim> claims, const BoundData& data) {
    DerivationResult result;
    std::map<BoundKey, std::vector<std::size_t>> by_base;
    for (const auto& claim : claims) {
        DerivedRow row;
        row.claim = claim;
        const BoundExpression* expr = data.expression_for(claim.key.n, claim.key.d, claim.key.k);
        if (!expr) {
            row.note = "no expression";
            result.rows.push_back(std::move(row));
            continue;
        }
        row.base = {claim.key.q, expr->n1, claim.key.d, claim.key.k};
        const BigInt remainder = claim.claimed - eval_poly(effective_poly(*expr), claim.key.q);
        const BigInt divisor = mrd_size(claim.key.k, expr->n2, claim.key.d / 2, claim.key.q);
        if (remainder <= 0 || remainder % divisor != 0) {
            row.note = "inexact division";
            result.flags.push_back(describe(claim.key) + " = " + claim.claimed.get_str() +
                                   ": (claimed - poly) is not a positive multiple of " + divisor.get_str());
        } else {
            row.n1_value = remainder / divisor;
            by_base[row.base].push_back(result.rows.size());
        }
        result.rows.push_back(std::move(row));
    }

    for (const auto& [base, idx] : by_base) {
        const BigInt& first = *result.rows[idx.front()].n1_value;
        bool same = true;
        std::string sources;
        for (auto i : idx) {
            if (*result.rows[i].n1_value != first) same = false;
            if (!sources.empty()) sources += ",";
            sources += std::to_string(result.rows[i].claim.key.n);
        }
        if (!same) {
            std::string values;
            for (auto i : idx) values += " " + result.rows[i].n1_value->get_str();
            result.flags.push_back(describe(base) + ": inconsistent back-solved values" + values);
            for (auto i : idx) result.rows[i].note = "inconsistent";
            continue;
        }
        std::string provenance = "back-solved from the A_q(n," + std::to_string(base.d) + "," + std::to_string(base.k) +
                                 ") lower bounds for n=" + sources;
        for (const auto& b : data.base_expressions) {
            if (b.n != base.n || b.d != base.d || b.k != base.k) continue;
            const BigInt closed = eval_poly(b.poly, base.q);
            if (closed == first) {
                provenance += "; matches closed form " + b.poly.str();
            } else {
                provenance += "; closed form " + b.poly.str() + " gives " + closed.get_str() + " instead";
                result.flags.push_back(describe(base) + ": closed form " + b.poly.str() + " evaluates to " +
                                       closed.get_str() + ", back-solved value is " + first.get_str());
            }
        }
        result.registry.set(base, first, provenance);
    }
    return result;
}

std::size_t ComparisonReport::matches() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const ComparisonRow& r) { return r.match; }));
}

std::string ComparisonReport::to_csv() const {
    std::ostringstream out;
    out << "q,n,d,k,expected,computed,match\n";
    for (const auto& r : rows)
        out << r.claim.key.q << ',' << r.claim.key.n << ',' << r.claim.key.d << ',' << r.claim.key.k << ','
            << r.claim.claimed.get_str() << ',' << (r.computed ? r.computed->get_str() : std::string()) << ','
            << (r.match ? "true" : "false") << '\n';
    return out.str();
}

std::string ComparisonReport::to_text() const {
    std::size_t wexp = 8, wcomp = 8;
    for (const auto& r : rows) {
        wexp = std::max(wexp, r.claim.claimed.get_str().size());
        if (r.computed) wcomp = std::max(wcomp, r.computed->get_str().size());
    }
    std::ostringstream out;
    out << std::left << std::setw(14) << "bound" << std::right << std::setw(static_cast<int>(wexp) + 2) << "expected"
        << std::setw(static_cast<int>(wcomp) + 2) << "computed" << "  result\n";
    for (const auto& r : rows) {
        out << std::left << std::setw(14) << describe(r.claim.key) << std::right
            << std::setw(static_cast<int>(wexp) + 2) << r.claim.claimed.get_str()
            << std::setw(static_cast<int>(wcomp) + 2) << (r.computed ? r.computed->get_str() : std::string("-"))
            << "  " << (r.match ? "match" : "MISMATCH");
        if (!r.note.empty()) out << "  (" << r.note << ")";
        out << '\n';
    }
    out << matches() << '/' << rows.size() << " rows match\n";
    return out.str();
}

ComparisonReport reproduce_tables(const BoundRegistry& registry, const BoundData& data,
                                  std::span<const BoundClaim> claims) {
    ComparisonReport report;
    for (const auto& claim : claims) {
        ComparisonRow row;
        row.claim = claim;
        const BoundExpression* expr = data.expression_for(claim.key.n, claim.key.d, claim.key.k);
        if (!expr) {
            row.note = "no expression for " + describe(claim.key);
            report.rows.push_back(std::move(row));
            continue;
        }
        const BoundKey base{claim.key.q, expr->n1, claim.key.d, claim.key.k};
        const RegistryEntry* entry = registry.find(base);
        if (!entry) {
            row.note = "missing registry entry " + describe(base);
            report.rows.push_back(std::move(row));
            continue;
        }
        const QPolynomial poly = effective_poly(*expr);
        if (!expr->vectors.empty() && poly != expr->poly)
            row.note = "dims from vectors give " + poly.str() + ", stated " + expr->poly.str();
        row.computed = compute_bound(entry->value, claim.key.k, expr->n2, claim.key.d / 2, poly, claim.key.q);
        row.match = *row.computed == claim.claimed;
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace cdc

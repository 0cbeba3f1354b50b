#include "cdc/construction.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <unordered_set>

#include "cdc/errors.hpp"

namespace cdc {

const char* part_name(Part part) {
    switch (part) {
        case Part::Linkage: return "linkage";
        case Part::Lifted: return "lifted";
        case Part::ZeroPrefix: return "zero-prefix";
    }
    return "?";
}

std::size_t AssembledCode::count(Part part) const {
    return static_cast<std::size_t>(std::count(parts.begin(), parts.end(), part));
}

namespace {

std::string describe(const Matrix& m) {
    std::ostringstream out;
    write_matrix(out, m);
    return out.str();
}

void add_codeword(AssembledCode& code, Subspace s, Part part, std::string source, std::uint64_t budget) {
    if (code.codewords.size() >= budget)
        throw BudgetExceeded("assembled code exceeds the budget of " + std::to_string(budget) + " codewords");
    code.codewords.push_back(std::move(s));
    code.parts.push_back(part);
    code.sources.push_back(std::move(source));
}

void require_no_duplicates(const AssembledCode& code) {
    std::unordered_set<Subspace, SubspaceHash> seen;
    seen.reserve(code.codewords.size());
    for (std::size_t i = 0; i < code.codewords.size(); ++i) {
        if (!seen.insert(code.codewords[i]).second)
            throw ConstructionError(std::string("duplicate codeword in part ") + part_name(code.parts[i]) +
                                    (code.sources[i].empty() ? "" : " from vector " + code.sources[i]));
    }
}

void check_common(const ConstructionSpec& spec) {
    if (!spec.field) throw ConstructionError("construction requires a field");
    if (spec.d == 0 || spec.d % 2 != 0) throw ConstructionError("d must be even");
    if (spec.k == 0) throw ConstructionError("k must be positive");
    if (spec.n1 < spec.k || spec.n2 < spec.k) throw ConstructionError("the construction requires n1 >= k and n2 >= k");
    const std::size_t h = spec.d / 2;
    if (spec.rank_code.rows != spec.k || spec.rank_code.cols != spec.n2)
        throw ConstructionError("rank-metric code must consist of k x n2 matrices");
    if (spec.rank_code.delta != h) throw ConstructionError("rank-metric code must have delta = d/2");
    if (spec.rank_code.field->order() != spec.field->order()) throw ConstructionError("rank-metric code field mismatch");
    if (!linearly_independent(spec.rank_code.basis))
        throw ConstructionError("rank-metric code basis is not linearly independent");
    for (const auto& u : spec.u1)
        if (u.rows() != spec.k || u.cols() != spec.n1) throw ConstructionError("U1 matrices must be k x n1");
    check_sc_representation(spec.u1, spec.k, spec.d);

    const std::size_t n = spec.n1 + spec.n2;
    for (std::size_t i = 0; i < spec.selection.size(); ++i) {
        const auto& v = spec.selection[i].vector;
        const auto& c = spec.selection[i].code;
        const std::string tag = "selection vector " + v.str();
        if (v.size() != n) throw ConstructionError(tag + " does not have length n1 + n2");
        if (v.weight() != spec.k) throw ConstructionError(tag + " does not have weight k");
        if (v.weight_in(spec.n1, n) < h) throw ConstructionError(tag + " has fewer than d/2 ones in the last n2 positions");
        if (c.diagram != diagram_from_vector(v)) throw ConstructionError(tag + " is paired with an FDRM code of another diagram");
        if (c.delta != h) throw ConstructionError(tag + " is paired with an FDRM code whose delta is not d/2");
        if (c.field->order() != spec.field->order()) throw ConstructionError(tag + " FDRM code field mismatch");
        for (std::size_t j = 0; j < i; ++j) {
            if (hamming_distance(v, spec.selection[j].vector) < spec.d)
                throw ConstructionError("selection vectors " + spec.selection[j].vector.str() + " and " + v.str() +
                                        " are at Hamming distance below d");
        }
    }
}

BigInt lifted_sizes(const ConstructionSpec& spec) {
    BigInt total = 0;
    for (const auto& e : spec.selection) total += big_pow(spec.field->order(), e.code.dimension());
    return total;
}

void append_lifted(AssembledCode& code, const ConstructionSpec& spec, std::uint64_t budget) {
    for (const auto& e : spec.selection) {
        for (auto& s : lift_fdrm(e.vector, e.code, budget))
            add_codeword(code, std::move(s), Part::Lifted, e.vector.str(), budget);
    }
}

}  // namespace

void check_sc_representation(std::span<const Matrix> set, std::size_t k, std::optional<std::size_t> min_distance,
                             std::uint64_t pair_budget) {
    std::vector<Subspace> spaces;
    spaces.reserve(set.size());
    std::unordered_set<Subspace, SubspaceHash> seen;
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (rank(set[i]) != k)
            throw ConstructionError("SC-representation matrix " + std::to_string(i) + " is rank deficient:\n" +
                                    describe(set[i]));
        Subspace s = Subspace::from_generators(set[i]);
        if (!seen.insert(s).second)
            throw ConstructionError("SC-representation matrix " + std::to_string(i) + " repeats a row space:\n" +
                                    describe(set[i]));
        spaces.push_back(std::move(s));
    }
    const std::uint64_t pairs = spaces.size() * (spaces.size() - (spaces.empty() ? 0 : 1)) / 2;
    if (min_distance && spaces.size() >= 2 && pairs <= pair_budget) {
        const auto w = min_subspace_distance(spaces, *min_distance);
        if (w.distance < *min_distance)
            throw ConstructionError("SC-representation matrices " + std::to_string(w.first) + " and " +
                                    std::to_string(w.second) + " are at subspace distance " +
                                    std::to_string(w.distance));
    }
}

AssembledCode linkage(std::span<const Matrix> u_set, const RankMetricCode& rank_code, std::uint64_t budget) {
    if (u_set.empty()) throw ConstructionError("linkage needs a nonempty SC-representation set");
    const std::size_t k = u_set.front().rows();
    if (rank_code.rows != k) throw ConstructionError("rank-metric code must have k rows");
    for (const auto& u : u_set)
        if (u.rows() != k || u.cols() != u_set.front().cols()) throw ConstructionError("SC-representation shapes differ");
    check_sc_representation(u_set, k, std::nullopt);

    AssembledCode code;
    code.k = k;
    code.n = u_set.front().cols() + rank_code.cols;
    code.field = u_set.front().field();
    const auto words = codewords(rank_code, budget);
    for (const auto& u : u_set)
        for (const auto& m : words) add_codeword(code, Subspace::from_generators(hconcat(u, m)), Part::Linkage, {}, budget);
    code.formula_size = BigInt(static_cast<unsigned long>(u_set.size())) * rank_code.size();
    return code;
}

AssembledCode general_construct(const ConstructionSpec& spec, std::uint64_t budget) {
    check_common(spec);
    AssembledCode code = spec.u1.empty() ? AssembledCode{} : linkage(spec.u1, spec.rank_code, budget);
    code.n = spec.n1 + spec.n2;
    code.k = spec.k;
    code.field = spec.field;
    append_lifted(code, spec, budget);
    require_no_duplicates(code);
    code.formula_size = BigInt(static_cast<unsigned long>(spec.u1.size())) * spec.rank_code.size() + lifted_sizes(spec);
    return code;
}

AssembledCode li_construct(const ConstructionSpec& spec, std::span<const Matrix> u2, std::uint64_t budget) {
    if (spec.k < spec.d) throw ConstructionError("the three-part construction requires k >= d");
    check_common(spec);
    const std::size_t h = spec.d / 2;
    for (const auto& e : spec.selection)
        if (e.vector.weight_in(0, spec.n1) < h)
            throw ConstructionError("selection vector " + e.vector.str() + " has fewer than d/2 ones in the first n1 positions");
    for (const auto& u : u2)
        if (u.rows() != spec.k || u.cols() != spec.n2) throw ConstructionError("U2 matrices must be k x n2");
    check_sc_representation(u2, spec.k, spec.d);

    AssembledCode code = spec.u1.empty() ? AssembledCode{} : linkage(spec.u1, spec.rank_code, budget);
    code.n = spec.n1 + spec.n2;
    code.k = spec.k;
    code.field = spec.field;
    if (spec.n1 == spec.k || spec.n2 == spec.k)
        code.notes.push_back("boundary case: three-part construction is stated for n1 > k and n2 > k");
    const Matrix zero(spec.field, spec.k, spec.n1);
    for (const auto& u : u2) add_codeword(code, Subspace::from_generators(hconcat(zero, u)), Part::ZeroPrefix, {}, budget);
    append_lifted(code, spec, budget);
    require_no_duplicates(code);
    code.formula_size = BigInt(static_cast<unsigned long>(u2.size())) +
                        BigInt(static_cast<unsigned long>(spec.u1.size())) * spec.rank_code.size() + lifted_sizes(spec);
    return code;
}

// --- verification --------------------------------------------------------------

bool VerificationReport::passed() const {
    if (!dimensions_ok || duplicates != 0) return false;
    return !min_distance || *min_distance >= required;
}

std::string VerificationReport::to_text() const {
    std::ostringstream out;
    out << "codewords=" << codewords << '\n';
    out << "dimensions_ok=" << (dimensions_ok ? "true" : "false") << '\n';
    out << "duplicates=" << duplicates << '\n';
    out << "mode=" << (exhaustive ? "exhaustive" : "sampled") << '\n';
    out << "pairs=" << pairs_checked << '\n';
    out << "min_distance=" << (min_distance ? std::to_string(*min_distance) : std::string("undefined")) << '\n';
    if (witness) out << "witness=" << witness->first << ',' << witness->second << '\n';
    out << "required=" << required << '\n';
    out << "status=" << (passed() ? "pass" : "fail") << '\n';
    return out.str();
}

VerificationReport verify_cdc(std::span<const Subspace> code, std::size_t k, std::size_t d, std::uint64_t pair_budget,
                              std::uint64_t sample_pairs, std::uint64_t seed) {
    VerificationReport report;
    report.codewords = code.size();
    report.required = d;
    for (const auto& s : code)
        if (s.dimension() != k) report.dimensions_ok = false;
    std::unordered_set<Subspace, SubspaceHash> seen;
    for (const auto& s : code)
        if (!seen.insert(s).second) ++report.duplicates;
    if (code.size() < 2) return report;

    PairDistance kernel(code);
    const std::uint64_t m = code.size();
    const std::uint64_t pairs = m * (m - 1) / 2;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    auto consider = [&](std::size_t i, std::size_t j) {
        const std::size_t dist = kernel.distance(i, j);
        ++report.pairs_checked;
        if (dist < best) {
            best = dist;
            report.witness = std::make_pair(i, j);
        }
    };
    if (pairs <= pair_budget) {
        for (std::size_t i = 0; i < code.size(); ++i)
            for (std::size_t j = i + 1; j < code.size(); ++j) consider(i, j);
    } else {
        report.exhaustive = false;
        std::mt19937_64 rng(seed);
        for (std::uint64_t s = 0; s < sample_pairs; ++s) {
            const std::size_t i = rng() % m;
            std::size_t j = rng() % (m - 1);
            if (j >= i) ++j;
            consider(std::min(i, j), std::max(i, j));
        }
    }
    report.min_distance = best;
    return report;
}

void write_assembled_code(std::ostream& out, const AssembledCode& code) {
    std::vector<std::string> notes;
    notes.reserve(code.size());
    for (std::size_t i = 0; i < code.size(); ++i) {
        std::string note = std::string("part=") + part_name(code.parts[i]);
        if (!code.sources[i].empty()) note += " v=" + code.sources[i];
        notes.push_back(std::move(note));
    }
    std::vector<std::string> header{"size_formula=" + code.formula_size.get_str(),
                                    "linkage=" + std::to_string(code.count(Part::Linkage)) +
                                        " lifted=" + std::to_string(code.count(Part::Lifted)) +
                                        " zero_prefix=" + std::to_string(code.count(Part::ZeroPrefix))};
    for (const auto& n : code.notes) header.push_back("note: " + n);
    write_code_file(out, code.codewords, notes, header);
}

}  // namespace cdc

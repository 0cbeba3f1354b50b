#include "cdc/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cdc/bounds.hpp"
#include "cdc/construction.hpp"
#include "cdc/errors.hpp"
#include "cdc/ferrers.hpp"
#include "cdc/greedy.hpp"
#include "cdc/mrd.hpp"

#ifndef CDC_DEFAULT_DATA_DIR
#define CDC_DEFAULT_DATA_DIR "data"
#endif

namespace cdc {

namespace {

struct RunConfig {
    std::size_t n1 = 0, n2 = 0, d = 0, k = 0;
    unsigned q = 2;
    std::size_t delta = 2;
    std::string mode = "general";
    std::string vector;
    std::string input;
    std::string out_path;
    std::string csv_path;
    std::string registry_path;
    std::string data_dir = CDC_DEFAULT_DATA_DIR;
    std::string scope = "table";
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> budget;
    std::uint64_t samples = 1'000'000;
    std::size_t restarts = 100;
    bool verify = false;
    bool strict = false;
};

std::ofstream open_output(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    return f;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return f;
}

SelectionParams selection_params(const RunConfig& c) {
    if (c.mode != "general" && c.mode != "li") throw std::invalid_argument("--mode must be general or li");
    return SelectionParams{c.n1, c.n2, c.k, c.d, c.mode == "li"};
}

int cmd_dim(const RunConfig& c, std::ostream& out) {
    const auto v = IdentifyingVector::parse(c.vector);
    const auto diagram = diagram_from_vector(v);
    out << "rows=" << diagram.str() << " dim=" << dim_bound(diagram, c.delta) << '\n';
    return kExitOk;
}

void write_selection(std::ostream& out, const SelectionResult& r) {
    const auto& p = r.params;
    out << "# greedy selection n1=" << p.n1 << " n2=" << p.n2 << " k=" << p.k << " d=" << p.d
        << (p.prefix_condition ? " mode=li" : " mode=general") << '\n';
    out << "# candidates=" << r.candidate_count << " selected=" << r.selection.size() << '\n';
    for (const auto& s : r.selection) out << "# dim=" << s.dim << '\n' << s.vector.str() << '\n';
}

int cmd_greedy(const RunConfig& c, std::ostream& out) {
    const auto params = selection_params(c);
    const auto result = greedy_select(params);
    if (!c.out_path.empty()) {
        auto f = open_output(c.out_path);
        write_selection(f, result);
    } else {
        write_selection(out, result);
    }
    const auto dims = result.dims();
    const auto poly = dims_to_poly(dims);
    out << "candidates=" << result.candidate_count << '\n';
    out << "selected=" << result.selection.size() << '\n';
    out << "poly=" << poly.str() << '\n';
    out << "value_at_q" << c.q << '=' << eval_poly(poly, c.q).get_str() << '\n';
    return kExitOk;
}

int cmd_verify_set(const RunConfig& c, std::ostream& out) {
    const auto params = selection_params(c);
    auto in = open_input(c.input);
    const auto entries = read_vector_file(in);
    std::vector<IdentifyingVector> vectors;
    std::vector<std::optional<std::size_t>> annotated;
    for (const auto& e : entries) {
        vectors.push_back(e.vector);
        annotated.push_back(e.annotated_dim);
    }
    const auto report = validate_selection(vectors, params, annotated);
    for (std::size_t i = 0; i < vectors.size(); ++i)
        out << i + 1 << ' ' << vectors[i].str() << " dim=" << report.dims[i] << '\n';
    for (const auto& v : report.violations) out << "violation: " << v.message << '\n';
    const auto poly = dims_to_poly(report.dims);
    out << "vectors=" << vectors.size() << '\n';
    out << "poly=" << poly.str() << '\n';
    out << "value_at_q" << c.q << '=' << eval_poly(poly, c.q).get_str() << '\n';
    out << "violations=" << report.violations.size() << '\n';
    out << "status=" << (report.clean() ? "clean" : "invalid") << '\n';
    return report.clean() ? kExitOk : kExitValidation;
}

int cmd_construct(const RunConfig& c, std::ostream& out) {
    const auto params = selection_params(c);
    check_selection_params(params);
    const bool li = c.mode == "li";
    const auto field = make_field_of_order(c.q);
    const std::size_t h = c.d / 2;
    const std::uint64_t budget = c.budget.value_or(kDefaultCodeBudget);

    ConstructionSpec spec;
    spec.n1 = c.n1;
    spec.n2 = c.n2;
    spec.k = c.k;
    spec.d = c.d;
    spec.field = field;
    if (c.n1 < c.k || c.n2 < c.k) throw std::invalid_argument("construct requires n1 >= k and n2 >= k");
    spec.u1 = lifted_mrd_set(c.k, c.n1, h, field, budget);
    spec.rank_code = gabidulin(c.k, c.n2, h, field);

    const auto selection = greedy_select(params);
    FdrmSearchOptions options;
    options.seed = c.seed;
    options.restarts = c.restarts;
    std::vector<std::string> fdrm_lines;
    for (const auto& s : selection.selection) {
        const auto diagram = diagram_from_vector(s.vector);
        auto found = search_fdrm(diagram, h, field, options);
        fdrm_lines.push_back(s.vector.str() + " target=" + std::to_string(found.target) +
                             " achieved=" + std::to_string(found.code.dimension()) +
                             " seed=" + std::to_string(found.winning_seed));
        spec.selection.push_back({s.vector, std::move(found.code)});
    }

    AssembledCode code;
    if (li) {
        const auto u2 = lifted_mrd_set(c.k, c.n2, h, field, budget);
        code = li_construct(spec, u2, budget);
    } else {
        code = general_construct(spec, budget);
    }

    if (!c.out_path.empty()) {
        auto f = open_output(c.out_path);
        write_assembled_code(f, code);
    }
    out << "mode=" << c.mode << '\n';
    out << "size=" << code.size() << '\n';
    out << "formula_size=" << code.formula_size.get_str() << '\n';
    out << "linkage=" << code.count(Part::Linkage) << '\n';
    out << "lifted=" << code.count(Part::Lifted) << '\n';
    if (li) out << "zero_prefix=" << code.count(Part::ZeroPrefix) << '\n';
    for (const auto& line : fdrm_lines) out << "fdrm " << line << '\n';
    for (const auto& note : code.notes) out << "note: " << note << '\n';
    if (BigInt(static_cast<unsigned long>(code.size())) != code.formula_size) {
        out << "status=size-mismatch\n";
        return kExitValidation;
    }
    if (c.verify) {
        const auto report = verify_cdc(code.codewords, c.k, c.d, kDefaultPairBudget, c.samples, c.seed);
        out << report.to_text();
        return report.passed() ? kExitOk : kExitValidation;
    }
    return kExitOk;
}

int cmd_checkdist(const RunConfig& c, std::ostream& out) {
    auto in = open_input(c.input);
    const auto entries = read_code_file(in);
    std::vector<Subspace> code;
    code.reserve(entries.size());
    for (const auto& e : entries) code.push_back(e.space);
    const std::size_t k = code.empty() ? 0 : code.front().dimension();
    const auto report = verify_cdc(code, k, c.d, c.budget.value_or(kDefaultPairBudget), c.samples, c.seed);
    out << report.to_text();
    return report.passed() ? kExitOk : kExitValidation;
}

std::vector<BoundClaim> claims_in_scope(const BoundData& data, const std::string& scope) {
    if (scope == "all") return data.claims;
    if (scope != "table") throw std::invalid_argument("--scope must be table or all");
    std::vector<BoundClaim> out;
    for (const auto& claim : data.claims)
        if (claim.source == "table") out.push_back(claim);
    return out;
}

int cmd_tables(const RunConfig& c, std::ostream& out) {
    const auto data = load_bound_data(c.data_dir);
    const std::string registry_path =
        c.registry_path.empty() ? (std::filesystem::path(c.data_dir) / "registry.txt").string() : c.registry_path;
    auto in = open_input(registry_path);
    const auto registry = BoundRegistry::read(in);
    const auto claims = claims_in_scope(data, c.scope);
    const auto report = reproduce_tables(registry, data, claims);
    out << report.to_text();
    if (!c.csv_path.empty()) {
        auto f = open_output(c.csv_path);
        f << report.to_csv();
    }
    return report.all_match() ? kExitOk : kExitValidation;
}

int cmd_derive_registry(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const auto data = load_bound_data(c.data_dir);
    const auto claims = claims_in_scope(data, c.scope);
    const auto result = derive_registry(claims, data);
    if (!c.out_path.empty()) {
        auto f = open_output(c.out_path);
        result.registry.write(f);
    } else {
        result.registry.write(out);
    }
    for (const auto& flag : result.flags) err << "flag: " << flag << '\n';
    return c.strict && !result.consistent() ? kExitValidation : kExitOk;
}

int cmd_fdrm(const RunConfig& c, std::ostream& out) {
    const auto v = IdentifyingVector::parse(c.vector);
    const auto field = make_field_of_order(c.q);
    FdrmSearchOptions options;
    options.seed = c.seed;
    options.restarts = c.restarts;
    const auto result = search_fdrm(diagram_from_vector(v), c.delta, field, options);
    if (!c.out_path.empty()) {
        auto f = open_output(c.out_path);
        write_fdrm_code(f, v, result.code);
    }
    out << "rows=" << result.code.diagram.str() << " target=" << result.target
        << " achieved=" << result.code.dimension() << " attained=" << (result.attained ? "true" : "false")
        << " seed=" << result.winning_seed << " attempts=" << result.attempts << '\n';
    return kExitOk;
}

void add_params(CLI::App* sub, RunConfig& c, bool with_q) {
    sub->add_option("--n1", c.n1, "length of the prefix part")->required();
    sub->add_option("--n2", c.n2, "length of the suffix part")->required();
    sub->add_option("--k", c.k, "subspace dimension")->required();
    sub->add_option("--d", c.d, "minimum subspace distance (even)")->required();
    if (with_q) sub->add_option("--q", c.q, "field order");
    sub->add_option("--mode", c.mode, "general or li");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app{"Constant-dimension subspace code toolkit", "cdc"};
    app.require_subcommand(1);

    auto* dim = app.add_subcommand("dim", "Ferrers diagram and dimension bound of an identifying vector");
    dim->add_option("vector", c.vector, "0/1 string")->required();
    dim->add_option("--delta", c.delta, "minimum rank distance");

    auto* greedy = app.add_subcommand("greedy", "greedy selection of identifying vectors");
    add_params(greedy, c, true);
    greedy->add_option("--out", c.out_path, "selection file");

    auto* verify_set = app.add_subcommand("verify-set", "validate an identifying-vector file");
    verify_set->add_option("file", c.input)->required();
    add_params(verify_set, c, true);

    auto* construct = app.add_subcommand("construct", "assemble a code explicitly");
    add_params(construct, c, true);
    construct->add_option("--out", c.out_path, "code file");
    construct->add_option("--seed", c.seed, "FDRM search seed");
    construct->add_option("--restarts", c.restarts, "FDRM search restarts per diagram");
    construct->add_option("--budget", c.budget, "maximum number of codewords");
    construct->add_flag("--verify", c.verify, "check the minimum distance after assembly");
    construct->add_option("--samples", c.samples, "sampled pairs when the code is too large for an exhaustive check");

    auto* checkdist = app.add_subcommand("checkdist", "minimum subspace distance of a code file");
    checkdist->add_option("file", c.input)->required();
    checkdist->add_option("--d", c.d, "required minimum distance")->required();
    checkdist->add_option("--budget", c.budget, "largest pair count checked exhaustively");
    checkdist->add_option("--samples", c.samples, "sampled pairs beyond the budget");
    checkdist->add_option("--seed", c.seed, "sampling seed");

    auto* tables = app.add_subcommand("tables", "recompute published lower bounds");
    tables->add_option("--registry", c.registry_path, "registry file (default <data>/registry.txt)");
    tables->add_option("--data", c.data_dir, "data directory");
    tables->add_option("--csv", c.csv_path, "write the comparison as CSV");
    tables->add_option("--scope", c.scope, "table or all");

    auto* derive = app.add_subcommand("derive-registry", "back-solve base code sizes from published bounds");
    derive->add_option("--data", c.data_dir, "data directory");
    derive->add_option("--out", c.out_path, "registry file");
    derive->add_option("--scope", c.scope, "table or all");
    derive->add_flag("--strict", c.strict, "fail when any row is flagged");

    auto* fdrm = app.add_subcommand("fdrm", "search an FDRM code for one identifying vector");
    fdrm->add_option("vector", c.vector, "0/1 string")->required();
    fdrm->add_option("--delta", c.delta, "minimum rank distance");
    fdrm->add_option("--q", c.q, "field order");
    fdrm->add_option("--seed", c.seed, "search seed");
    fdrm->add_option("--restarts", c.restarts, "restarts");
    fdrm->add_option("--out", c.out_path, "code file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (dim->parsed()) return cmd_dim(c, out);
        if (greedy->parsed()) return cmd_greedy(c, out);
        if (verify_set->parsed()) return cmd_verify_set(c, out);
        if (construct->parsed()) return cmd_construct(c, out);
        if (checkdist->parsed()) return cmd_checkdist(c, out);
        if (tables->parsed()) return cmd_tables(c, out);
        if (derive->parsed()) return cmd_derive_registry(c, out, err);
        if (fdrm->parsed()) return cmd_fdrm(c, out);
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const ConstructionError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace cdc

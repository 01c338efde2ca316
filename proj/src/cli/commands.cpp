#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "weyrkit/basisgen.hpp"
#include "weyrkit/cli.hpp"
#include "weyrkit/errors.hpp"
#include "weyrkit/exactmat/linalg.hpp"
#include "weyrkit/io.hpp"
#include "weyrkit/kernelcalc.hpp"
#include "weyrkit/sylvester.hpp"
#include "weyrkit/weyrform.hpp"

namespace weyrkit::cli {

namespace {

using io::json;

class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

struct Options {
    bool json = false;
    bool oracle = false;
    std::vector<std::string> declared;
    std::size_t k = 0;  // 0 means "use the default"
    std::string coords = "weyr";
    std::vector<std::string> paths;
};

struct Operand {
    std::string path;
    std::optional<Matrix> matrix;
    EigenStructure structure;
    std::string source;
};

template <typename Range>
std::string join(const Range& values, const char* sep = " ") {
    std::ostringstream os;
    bool first = true;
    for (const auto& v : values) {
        os << (first ? "" : sep) << v;
        first = false;
    }
    return os.str();
}

std::vector<std::size_t> cumulative(const Partition& p) {
    std::vector<std::size_t> sums;
    std::size_t total = 0;
    for (std::size_t part : p.parts()) {
        sums.push_back(total += part);
    }
    return sums;
}

Operand load_operand(const std::string& path, const std::string& declared_path) {
    auto loaded = io::load_operand(path);
    Operand op{path, std::nullopt, {}, {}};
    if (auto* declared = std::get_if<EigenStructure>(&loaded)) {
        if (!declared_path.empty()) {
            throw InputError(path + " is already a structure file; --declared does not apply");
        }
        op.structure = std::move(*declared);
        op.source = "declared (unverified)";
        return op;
    }
    op.matrix = std::move(std::get<Matrix>(loaded));
    if (!op.matrix->is_square()) {
        throw InputError(path + ": matrix must be square");
    }
    if (!declared_path.empty()) {
        EigenStructure s = io::load_structure(declared_path);
        if (auto problem = check_declared_structure(*op.matrix, s)) {
            throw InputError(declared_path + ": " + *problem);
        }
        op.structure = std::move(s);
        op.source = "declared (verified)";
    } else {
        op.structure = eigen_structure(*op.matrix);
        op.source = "computed";
    }
    return op;
}

std::vector<Operand> load_operands(const Options& opts, std::size_t expected) {
    if (opts.paths.size() != expected) {
        throw InputError("expected " + std::to_string(expected) + " input file(s), got " +
                         std::to_string(opts.paths.size()));
    }
    if (opts.declared.size() > expected) {
        throw InputError("more --declared files than inputs");
    }
    std::vector<Operand> ops;
    for (std::size_t i = 0; i < expected; ++i) {
        std::string declared = i < opts.declared.size() ? opts.declared[i] : "";
        if (declared == "-") {
            declared.clear();
        }
        ops.push_back(load_operand(opts.paths[i], declared));
    }
    return ops;
}

const Matrix& require_matrix(const Operand& op, const std::string& why) {
    if (!op.matrix) {
        throw InputError(op.path + " holds only a declared structure; " + why +
                         " needs the matrix itself");
    }
    return *op.matrix;
}

std::string dense_rows(const Matrix& m, const std::string& indent) {
    std::string text = to_string(m);
    std::string out;
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);) {
        out += indent + line + "\n";
    }
    return out;
}

json structure_json(const EigenStructure& s) {
    json blocks = json::array();
    for (const auto& b : s.blocks()) {
        blocks.push_back({{"eigenvalue", b.eigenvalue.get_str()},
                          {"characteristic", b.characteristic.parts()},
                          {"index", b.index()},
                          {"nullity_chain", cumulative(b.characteristic)},
                          {"segre", dual_partition(b.characteristic).parts()}});
    }
    return blocks;
}

void print_structure(std::ostream& out, const Operand& op) {
    out << "matrix " << op.path << ": " << op.structure.dim() << "x" << op.structure.dim()
        << ", structure " << op.source << "\n";
    for (const auto& b : op.structure.blocks()) {
        out << "eigenvalue " << b.eigenvalue.get_str() << "\n"
            << "  index           " << b.index() << "\n"
            << "  nullity chain   " << join(cumulative(b.characteristic)) << "\n"
            << "  Weyr structure  " << to_string(b.characteristic) << "\n"
            << "  Segre (dual)    " << to_string(dual_partition(b.characteristic)) << "\n";
    }
}

int cmd_structure(const Options& opts, std::ostream& out) {
    const auto ops = load_operands(opts, 1);
    const Operand& a = ops[0];
    if (opts.json) {
        out << json{{"command", "structure"},
                    {"dim", a.structure.dim()},
                    {"source", a.source},
                    {"eigenvalues", structure_json(a.structure)}}
                   .dump(2)
            << "\n";
    } else {
        print_structure(out, a);
    }
    return kSuccess;
}

int cmd_form(const Options& opts, std::ostream& out) {
    const auto ops = load_operands(opts, 1);
    const Operand& a = ops[0];
    const WeyrDecomposition d = weyr_transform(require_matrix(a, "form"), a.structure);
    if (opts.json) {
        out << json{{"command", "form"},
                    {"source", a.source},
                    {"eigenvalues", structure_json(d.structure)},
                    {"weyr", io::matrix_to_json(d.weyr)},
                    {"P", io::matrix_to_json(d.p)},
                    {"P_inv", io::matrix_to_json(d.p_inv)}}
                   .dump(2)
            << "\n";
        return kSuccess;
    }
    print_structure(out, a);
    out << "Weyr form W = P^-1 A P:\n"
        << dense_rows(d.weyr, "  ") << "P:\n"
        << dense_rows(d.p, "  ") << "P^-1:\n"
        << dense_rows(d.p_inv, "  ");
    return kSuccess;
}

int cmd_kernel_dims(const Options& opts, std::ostream& out) {
    const auto ops = load_operands(opts, 2);
    const EigenStructure& sa = ops[0].structure;
    const EigenStructure& sb = ops[1].structure;
    const std::size_t k_max =
        opts.k > 0 ? opts.k : std::max<std::size_t>(1, operator_index(sa, sb, 0));
    const KernelDimReport report = kernel_dim_report(sa, sb, k_max);

    std::vector<std::size_t> oracle;
    bool match = true;
    if (opts.oracle) {
        const SylvesterOperator op(require_matrix(ops[0], "--oracle"),
                                   require_matrix(ops[1], "--oracle"));
        oracle = oracle_kernel_dims(op, k_max);
        match = oracle == report.totals;
    }

    if (opts.json) {
        json pairs = json::array();
        for (const auto& [ij, d] : report.per_pair) {
            const auto& a = sa.blocks()[ij.first];
            const auto& b = sb.blocks()[ij.second];
            pairs.push_back({{"i", ij.first + 1},
                             {"j", ij.second + 1},
                             {"eigenvalue", a.eigenvalue.get_str()},
                             {"alpha", a.characteristic.parts()},
                             {"beta", b.characteristic.parts()},
                             {"d", d}});
        }
        json j{{"command", "kernel-dims"},
               {"k_max", k_max},
               {"pairs", std::move(pairs)},
               {"totals", report.totals}};
        if (opts.oracle) {
            j["oracle"] = oracle;
            j["match"] = match;
        }
        out << j.dump(2) << "\n";
    } else {
        for (const auto& [ij, d] : report.per_pair) {
            const auto& a = sa.blocks()[ij.first];
            const auto& b = sb.blocks()[ij.second];
            out << "pair (" << ij.first + 1 << "," << ij.second + 1 << ")  eigenvalue "
                << a.eigenvalue.get_str() << "  alpha " << to_string(a.characteristic)
                << "  beta " << to_string(b.characteristic) << "  d_k: " << join(d) << "\n";
        }
        if (report.per_pair.empty()) {
            out << "no shared eigenvalues: every kernel is zero\n";
        }
        out << "k  dim ker phi^k" << (opts.oracle ? "  oracle  verdict" : "") << "\n";
        for (std::size_t k = 1; k <= k_max; ++k) {
            out << k << "  " << report.totals[k - 1];
            if (opts.oracle) {
                out << "  " << oracle[k - 1] << "  "
                    << (oracle[k - 1] == report.totals[k - 1] ? "MATCH" : "MISMATCH");
            }
            out << "\n";
        }
    }
    return match ? kSuccess : kInternalError;
}

int cmd_basis(const Options& opts, std::ostream& out) {
    if (opts.coords != "weyr" && opts.coords != "original") {
        throw InputError("--coords must be 'weyr' or 'original'");
    }
    const auto ops = load_operands(opts, 2);
    const EigenStructure& sa = ops[0].structure;
    const EigenStructure& sb = ops[1].structure;
    const std::size_t k = opts.k > 0 ? opts.k : 1;
    const auto symbolic = operator_kernel_basis(sa, sb, k);
    std::vector<Matrix> dense = materialize(symbolic, sa, sb);

    Verdict verdict;
    if (opts.coords == "weyr") {
        verdict = verify_kernel_basis(SylvesterOperator(weyr_matrix(sa), weyr_matrix(sb)), k, dense);
    } else {
        const Matrix& a = require_matrix(ops[0], "--coords original");
        const Matrix& b = require_matrix(ops[1], "--coords original");
        dense = pullback_basis(weyr_transform(a, sa), weyr_transform(b, sb), dense);
        verdict = verify_kernel_basis(SylvesterOperator(a, b), k, dense);
    }

    if (opts.json) {
        json elements = json::array();
        for (std::size_t i = 0; i < symbolic.size(); ++i) {
            const auto& e = symbolic[i];
            json coeffs = json::array();
            for (const auto& x : e.inner.coefficients) {
                coeffs.push_back(x.get_str());
            }
            elements.push_back({{"pair", {e.outer_i, e.outer_j}},
                                {"r", e.inner.r},
                                {"s", e.inner.s},
                                {"l", e.inner.chain_length() - 1},
                                {"level", e.inner.level},
                                {"u", e.inner.u},
                                {"v", e.inner.v},
                                {"coefficients", std::move(coeffs)},
                                {"symbol", e.inner.symbol()},
                                {"matrix", io::matrix_to_json(dense[i])}});
        }
        out << json{{"command", "basis"},
                    {"k", k},
                    {"coords", opts.coords},
                    {"count", symbolic.size()},
                    {"elements", std::move(elements)},
                    {"verdict", {{"holds", verdict.holds}, {"reason", verdict.reason}}}}
                   .dump(2)
            << "\n";
    } else {
        out << "basis of ker phi^" << k << " in " << opts.coords << " coordinates: "
            << symbolic.size() << " elements\n";
        for (std::size_t i = 0; i < symbolic.size(); ++i) {
            const auto& e = symbolic[i];
            out << "[" << i + 1 << "] pair (" << e.outer_i << "," << e.outer_j << ")  (r,s,l)=("
                << e.inner.r << "," << e.inner.s << "," << e.inner.chain_length() - 1 << ")  level "
                << e.inner.level << "  "
                << (opts.coords == "original" ? "P [" + e.inner.symbol() + "] Q^-1"
                                              : e.inner.symbol())
                << "\n"
                << dense_rows(dense[i], "    ");
        }
        out << "verdict: " << (verdict.holds ? "holds" : "FAILS: " + verdict.reason) << "\n";
    }
    return verdict.holds ? kSuccess : kInternalError;
}

json table_json(const InvariantTable& t) {
    json rows = json::array();
    for (const auto& [lambda, w] : t) {
        rows.push_back({{"eigenvalue", lambda.get_str()},
                        {"characteristic", w.parts()},
                        {"index", w.length()},
                        {"kernel_dims", cumulative(w)}});
    }
    return rows;
}

int cmd_invariants(const Options& opts, std::ostream& out) {
    const auto ops = load_operands(opts, 2);
    const InvariantTable table = invariant_table(ops[0].structure, ops[1].structure);

    std::map<Rational, std::vector<std::size_t>> oracle;
    bool match = true;
    if (opts.oracle) {
        const Matrix& a = require_matrix(ops[0], "--oracle");
        const Matrix& b = require_matrix(ops[1], "--oracle");
        for (const auto& [lambda, w] : table) {
            Matrix shifted = a;
            for (std::size_t i = 0; i < shifted.rows(); ++i) {
                shifted(i, i) -= lambda;
            }
            auto dims = oracle_kernel_dims_until_stable(SylvesterOperator(shifted, b));
            dims.pop_back();
            match = match && dims == cumulative(w);
            oracle.emplace(lambda, std::move(dims));
        }
    }

    if (opts.json) {
        json j{{"command", "invariants"}, {"invariants", table_json(table)}};
        if (opts.oracle) {
            json o = json::array();
            for (const auto& [lambda, dims] : oracle) {
                o.push_back({{"eigenvalue", lambda.get_str()}, {"kernel_dims", dims}});
            }
            j["oracle"] = std::move(o);
            j["match"] = match;
        }
        out << j.dump(2) << "\n";
    } else {
        out << "operator eigenvalue -> Weyr characteristic of phi_AB\n";
        for (const auto& [lambda, w] : table) {
            out << "  " << lambda.get_str() << ": " << to_string(w) << "  index " << w.length()
                << "  dim ker: " << join(cumulative(w));
            if (opts.oracle) {
                out << "  oracle: " << join(oracle.at(lambda))
                    << (oracle.at(lambda) == cumulative(w) ? "  MATCH" : "  MISMATCH");
            }
            out << "\n";
        }
    }
    return match ? kSuccess : kInternalError;
}

int cmd_compare(const Options& opts, std::ostream& out) {
    const auto ops = load_operands(opts, 4);
    const InvariantTable left = invariant_table(ops[0].structure, ops[1].structure);
    const InvariantTable right = invariant_table(ops[2].structure, ops[3].structure);
    const auto witness = first_difference(left, right);
    const bool similar = !witness.has_value();
    if (opts.json) {
        json j{{"command", "compare"},
               {"similar", similar},
               {"left", table_json(left)},
               {"right", table_json(right)}};
        if (witness) {
            j["witness"] = {{"eigenvalue", witness->eigenvalue.get_str()},
                            {"k", witness->k},
                            {"left", witness->left},
                            {"right", witness->right}};
        }
        out << j.dump(2) << "\n";
    } else if (similar) {
        out << "SIMILAR\n";
    } else {
        out << "NOT SIMILAR\n"
            << "witness: eigenvalue " << witness->eigenvalue.get_str() << ", k = " << witness->k
            << ": dim ker " << witness->left << " vs " << witness->right << "\n";
    }
    return similar ? kSuccess : kNotSimilar;
}

int cmd_centralizer(const Options& opts, std::ostream& out) {
    const auto ops = load_operands(opts, 1);
    const std::size_t formula = centralizer_dim(ops[0].structure);
    std::optional<std::size_t> oracle;
    if (opts.oracle) {
        oracle = oracle_centralizer_dim(require_matrix(ops[0], "--oracle"));
    }
    const bool match = !oracle || *oracle == formula;
    if (opts.json) {
        json j{{"command", "centralizer"}, {"dim", formula}};
        if (oracle) {
            j["oracle"] = *oracle;
            j["match"] = match;
        }
        out << j.dump(2) << "\n";
    } else {
        out << "centralizer dimension: " << formula;
        if (oracle) {
            out << "  oracle: " << *oracle << "  " << (match ? "MATCH" : "MISMATCH");
        }
        out << "\n";
    }
    return match ? kSuccess : kInternalError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weyr characteristics and kernels of powers of X -> AX - XB", "weyrkit"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opts;
    app.add_flag("--json", opts.json, "Machine-readable JSON output");
    app.add_flag("--oracle", opts.oracle, "Cross-check against the brute-force vectorization");
    app.add_option("--declared", opts.declared,
                   "Declared eigen-structure per input matrix, in input order ('-' skips one)");

    auto* structure = app.add_subcommand("structure", "Eigenvalues, nullity chains, Weyr structures");
    structure->add_option("matrix", opts.paths)->required()->expected(1);

    auto* form = app.add_subcommand("form", "Weyr canonical form W and P with P^-1 A P = W");
    form->add_option("matrix", opts.paths)->required()->expected(1);

    auto* kdims = app.add_subcommand("kernel-dims", "dim ker phi_AB^k from the Weyr formulas");
    kdims->add_option("a", opts.paths)->required()->expected(2);
    kdims->add_option("--k", opts.k, "Largest power (default: index of eigenvalue 0)")
        ->check(CLI::PositiveNumber);

    auto* basis = app.add_subcommand("basis", "Explicit basis of ker phi^k");
    basis->add_option("a", opts.paths)->required()->expected(2);
    basis->add_option("--k", opts.k, "Power (default 1)")->check(CLI::PositiveNumber);
    basis->add_option("--coords", opts.coords, "weyr or original")
        ->check(CLI::IsMember({"weyr", "original"}));

    auto* inv = app.add_subcommand("invariants", "Similarity invariants of phi_AB");
    inv->add_option("a", opts.paths)->required()->expected(2);

    auto* cmp = app.add_subcommand("compare", "Decide whether phi_AB and phi_CD are similar");
    cmp->add_option("a", opts.paths)->required()->expected(4);

    auto* cent = app.add_subcommand("centralizer", "Dimension of the centralizer of A");
    cent->add_option("matrix", opts.paths)->required()->expected(1);

    std::vector<std::string> storage{"weyrkit"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : storage) {
        argv.push_back(s.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    try {
        if (structure->parsed()) return cmd_structure(opts, out);
        if (form->parsed()) return cmd_form(opts, out);
        if (kdims->parsed()) return cmd_kernel_dims(opts, out);
        if (basis->parsed()) return cmd_basis(opts, out);
        if (inv->parsed()) return cmd_invariants(opts, out);
        if (cmp->parsed()) return cmd_compare(opts, out);
        if (cent->parsed()) return cmd_centralizer(opts, out);
    } catch (const IrrationalSpectrum& e) {
        err << "error: irrational spectrum: " << e.what() << "\n";
        return kIrrationalSpectrum;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const ShapeError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
    return kInternalError;
}

}  // namespace weyrkit::cli

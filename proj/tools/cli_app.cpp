#include "cli_app.hpp"

#include "lebnorm/gram.hpp"
#include "lebnorm/oracle.hpp"
#include "lebnorm/sequences.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace lebnorm::cli {

namespace {

constexpr std::int64_t kOracleGridPerCell = 256;
constexpr std::size_t kMaxPrintedFailures = 8;

std::string join_indices(const std::vector<std::int64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

void print_failures(const CheckReport& r, std::ostream& out) {
    const std::size_t shown = std::min(r.failures.size(), kMaxPrintedFailures);
    for (std::size_t i = 0; i < shown; ++i) {
        const CheckFailure& f = r.failures[i];
        out << "[FAIL] " << r.name << ": " << f.identity << " at " << f.location
            << ": lhs=" << f.lhs << " rhs=" << f.rhs << "\n";
    }
    if (r.failures.size() > shown)
        out << "[FAIL] " << r.name << ": (" << r.failures.size() - shown << " more)\n";
}

struct NormsOptions {
    std::int64_t max_n = 1;
    bool with_oracle = false;
    std::string format = "csv";
    std::string out_path;
};

int run_norms(const NormsOptions& opt, std::ostream& out, std::ostream& err) {
    std::vector<OutputRecord> records;
    records.reserve(static_cast<std::size_t>(opt.max_n));
    LebesgueEval eval;
    for (std::int64_t n = 1; n <= opt.max_n; ++n) {
        OutputRecord rec = make_record(eval.norm(n));
        if (opt.with_oracle) {
            const OracleResult o = oracle_norm(n, kOracleGridPerCell * n);
            rec.oracle_value = o.norm_estimate;
            rec.oracle_dev = std::abs(o.norm_estimate - rec.norm_float);
        }
        records.push_back(std::move(rec));
    }

    std::ostringstream body;
    if (opt.format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const OutputRecord& rec : records) {
            nlohmann::ordered_json row;
            row["n"] = rec.n;
            row["norm_exact"] = rec.norm_exact;
            row["norm_float"] = rec.norm_float;
            row["argmax_k"] = rec.argmax_k;
            row["gap_float"] = rec.gap_float;
            if (rec.oracle_value) row["oracle_value"] = *rec.oracle_value;
            if (rec.oracle_dev) row["oracle_dev"] = *rec.oracle_dev;
            arr.push_back(std::move(row));
        }
        body << arr.dump(2) << "\n";
    } else {
        body << csv_header(opt.with_oracle) << "\n";
        for (const OutputRecord& rec : records) body << csv_row(rec) << "\n";
    }

    if (opt.out_path.empty()) {
        out << body.str();
        return 0;
    }
    std::ofstream file(opt.out_path, std::ios::binary);
    if (!file) {
        err << "error: cannot open output path: " << opt.out_path << "\n";
        return 1;
    }
    file << body.str();
    if (!file.flush()) {
        err << "error: write failed: " << opt.out_path << "\n";
        return 1;
    }
    return 0;
}

struct VerifyOptions {
    std::int64_t max_n = 50;
    std::int64_t max_k = 500;
    std::optional<std::int64_t> inject_fault_a;
};

SeqTable make_sequence_table(const VerifyOptions& opt) {
    if (!opt.inject_fault_a) return SeqTable();
    // Recompute the recurrence here and perturb one A value; the corrupted
    // table exercises the failure paths of every sequence check.
    const std::int64_t top = std::max(opt.max_k + 1, *opt.inject_fault_a) + 1;
    std::vector<Int> a{1};
    std::vector<Int> b{0};
    for (std::int64_t k = 0; k < top; ++k) {
        a.push_back(2 * a.back() + 3 * b.back());
        b.push_back(a[a.size() - 2] + 2 * b.back());
    }
    a[static_cast<std::size_t>(*opt.inject_fault_a)] += 1;
    return SeqTable(std::move(a), std::move(b));
}

int run_verify(const VerifyOptions& opt, std::ostream& out) {
    std::vector<CheckReport> reports;
    SeqTable table = make_sequence_table(opt);
    reports.push_back(check_lambda_powers(table, opt.max_k));
    reports.push_back(check_pell(table, opt.max_k));
    reports.push_back(check_growth_bounds(table, opt.max_k));
    reports.push_back(check_downward_recurrence(table, opt.max_k));
    reports.push_back(check_sum_identities(table, opt.max_k));
    reports.push_back(check_addition_identities_range(table, opt.max_k));

    CheckReport inverse_all{.name = "gram-inverse", .range = "1<=n<=" + std::to_string(opt.max_n)};
    inverse_all.max_defect = Rational(0);
    CheckReport quota_all{.name = "quota", .range = "1<=n<=" + std::to_string(opt.max_n)};
    for (std::int64_t n = 1; n <= opt.max_n; ++n) {
        const GramSpec spec(n);
        CheckReport inv = check_inverse(spec);
        inverse_all.checked += inv.checked;
        if (*inv.max_defect > *inverse_all.max_defect) inverse_all.max_defect = inv.max_defect;
        std::move(inv.failures.begin(), inv.failures.end(), std::back_inserter(inverse_all.failures));
        CheckReport q = check_quota(spec);
        quota_all.checked += q.checked;
        std::move(q.failures.begin(), q.failures.end(), std::back_inserter(quota_all.failures));
    }
    reports.push_back(std::move(inverse_all));
    reports.push_back(std::move(quota_all));

    reports.push_back(check_g_routes(std::min<std::int64_t>(opt.max_n, 32)));
    for (CheckReport& r : verify_theorems(opt.max_n)) reports.push_back(std::move(r));

    out << std::left << std::setw(26) << "check" << std::setw(22) << "range" << std::right
        << std::setw(9) << "checked"
        << "  result\n";
    bool all_pass = true;
    for (const CheckReport& r : reports) {
        out << std::left << std::setw(26) << r.name << std::setw(22) << r.range << std::right
            << std::setw(9) << r.checked << "  " << (r.passed() ? "pass" : "FAIL") << "\n";
        all_pass = all_pass && r.passed();
    }
    for (const CheckReport& r : reports) print_failures(r, out);
    out << (all_pass ? "all checks passed\n" : "verification FAILED\n");
    return all_pass ? 0 : 1;
}

struct OracleOptions {
    std::int64_t n = 1;
    std::int64_t grid = 0;  // 0: default 256 n
    double tol = 1e-8;
};

int run_oracle(const OracleOptions& opt, std::ostream& out) {
    const std::int64_t grid = opt.grid > 0 ? opt.grid : kOracleGridPerCell * opt.n;
    const OracleResult result = oracle_norm(opt.n, grid);
    const NormReport exact = norm(opt.n);
    const double dev = std::abs(result.norm_estimate - exact.norm_float);
    out << "n              " << result.n << "\n";
    out << "grid_size      " << result.grid_size << "\n";
    out << "norm_estimate  " << format_double(result.norm_estimate) << "\n";
    out << "argmax_x       " << format_double(result.argmax_x) << "\n";
    out << "knot_max       " << format_double(result.knot_max) << "\n";
    out << "gram_defect    " << format_double(result.gram_defect) << "\n";
    out << "exact          " << exact.norm_exact.str() << "\n";
    out << "exact_float    " << format_double(exact.norm_float) << "\n";
    out << "deviation      " << format_double(dev) << "\n";
    const bool ok = dev <= opt.tol;
    out << "result         " << (ok ? "pass" : "FAIL") << " (tol " << format_double(opt.tol)
        << ")\n";
    return ok ? 0 : 1;
}

struct GramOptions {
    std::int64_t n = 1;
    bool inverse = false;
};

int run_gram(const GramOptions& opt, std::ostream& out) {
    const GramSpec spec(opt.n);
    if (opt.inverse) {
        const InverseGram inv(spec);
        for (std::int64_t i = 0; i <= opt.n; ++i) {
            for (std::int64_t k = 0; k <= opt.n; ++k) {
                if (k > 0) out << ",";
                out << inv.entry(i, k).str();
            }
            out << "\n";
        }
    } else {
        const SymTridiag m = gram_matrix(spec);
        for (std::int64_t i = 0; i <= opt.n; ++i) {
            for (std::int64_t k = 0; k <= opt.n; ++k) {
                if (k > 0) out << ",";
                out << m.entry(i, k).str();
            }
            out << "\n";
        }
    }
    return 0;
}

}  // namespace

OutputRecord make_record(const NormReport& report) {
    OutputRecord rec;
    rec.n = report.n;
    rec.norm_exact = report.norm_exact.str();
    rec.norm_float = report.norm_float;
    rec.argmax_k = join_indices(report.argmax_indices);
    rec.gap_float = to_double(report.gap);
    return rec;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (const char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool in_quotes = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            in_quotes = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

std::string csv_header(bool with_oracle) {
    std::string h = "n,norm_exact,norm_float,argmax_k,gap_float";
    if (with_oracle) h += ",oracle_value,oracle_dev";
    return h;
}

std::string csv_row(const OutputRecord& rec) {
    std::string row = std::to_string(rec.n);
    row += ',';
    row += csv_field(rec.norm_exact);
    row += ',';
    row += format_double(rec.norm_float);
    row += ',';
    row += csv_field(rec.argmax_k);
    row += ',';
    row += format_double(rec.gap_float);
    if (rec.oracle_value) {
        row += ',';
        row += format_double(*rec.oracle_value);
        row += ',';
        row += format_double(*rec.oracle_dev);
    }
    return row;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Lebesgue constants of L2 projections onto uniform linear splines"};
    app.require_subcommand(1);

    NormsOptions norms_opt;
    CLI::App* norms_cmd = app.add_subcommand("norms", "emit the norm table for n = 1..N");
    norms_cmd->add_option("--max-n", norms_opt.max_n, "largest n")
        ->required()
        ->check(CLI::PositiveNumber);
    norms_cmd->add_flag("--with-oracle", norms_opt.with_oracle,
                        "add float-oracle value and deviation columns");
    norms_cmd->add_option("--format", norms_opt.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    norms_cmd->add_option("--out", norms_opt.out_path, "write to this path instead of stdout");

    VerifyOptions verify_opt;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run every exact identity and theorem check");
    verify_cmd->add_option("--max-n", verify_opt.max_n, "largest partition size")
        ->required()
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--max-k", verify_opt.max_k, "largest sequence index for identity checks")
        ->check(CLI::PositiveNumber);
    std::int64_t fault_index = -1;
    verify_cmd
        ->add_option("--inject-fault-a", fault_index,
                     "testing aid: perturb A at this index before checking")
        ->check(CLI::NonNegativeNumber);

    OracleOptions oracle_opt;
    CLI::App* oracle_cmd = app.add_subcommand("oracle", "float brute force for one n");
    oracle_cmd->add_option("--n", oracle_opt.n, "partition size")
        ->required()
        ->check(CLI::PositiveNumber);
    oracle_cmd->add_option("--grid", oracle_opt.grid, "x-grid cell count (default 256 n)")
        ->check(CLI::PositiveNumber);
    oracle_cmd->add_option("--tol", oracle_opt.tol, "max allowed |oracle - exact|")
        ->check(CLI::PositiveNumber);

    GramOptions gram_opt;
    CLI::App* gram_cmd = app.add_subcommand("gram", "dump the exact Gram matrix as CSV");
    gram_cmd->add_option("--n", gram_opt.n, "partition size")
        ->required()
        ->check(CLI::PositiveNumber);
    gram_cmd->add_flag("--inverse", gram_opt.inverse, "dump the closed-form inverse instead");
    std::string gram_format = "csv";
    gram_cmd->add_option("--format", gram_format, "output format")->check(CLI::IsMember({"csv"}));

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("lebnorm");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    if (fault_index >= 0) verify_opt.inject_fault_a = fault_index;

    try {
        if (norms_cmd->parsed()) return run_norms(norms_opt, out, err);
        if (verify_cmd->parsed()) return run_verify(verify_opt, out);
        if (oracle_cmd->parsed()) return run_oracle(oracle_opt, out);
        if (gram_cmd->parsed()) return run_gram(gram_opt, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace lebnorm::cli

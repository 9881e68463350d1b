#include "cobord/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cobord/errors.hpp"
#include "cobord/expr.hpp"
#include "cobord/verify.hpp"
#include "json.hpp"

namespace cobord {

namespace {

using nlohmann::ordered_json;

struct Options {
    long prime = 0;
    int max_degree = 10;
    std::string format = "text";
    unsigned long long seed = 0;
    std::string out;
    std::string expr_text;
};

std::string indices_str(const std::vector<std::pair<std::string, long>>& idx) {
    std::ostringstream os;
    for (size_t k = 0; k < idx.size(); ++k) {
        if (k) os << " ";
        os << idx[k].first << "=" << idx[k].second;
    }
    return os.str();
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

struct TableEntry {
    std::string symbol;
    long i, l, j;  // -1 marks "not applicable" for i; l doubles as k for "a"
    long degree;
    std::string value;
};

int cmd_tables(const Options& opt, std::ostream& os) {
    FGLContext ctx(opt.prime, opt.max_degree);
    long p = opt.prime;
    int D = opt.max_degree;
    std::vector<TableEntry> entries;
    for (int j = 0; j <= D + 1; ++j)
        entries.push_back(
            {"c", -1, -1, j, 2L * (j - 1), coeff_str(ctx.p_series_coeff(j), ctx)});
    for (int i = 1; i <= p - 1; ++i)
        for (int k = 0; k <= D + 1; ++k)
            for (int j = 0; k + j <= D + 1; ++j)
                entries.push_back({"a", i, k, j, 2L * (k + j - 1),
                                   coeff_str(ctx.shifted(i, k, j), ctx)});
    for (int i = 1; i <= p - 1; ++i)
        for (int l = 0; l <= D; ++l)
            for (int j = -(l + 1); l + j + 1 <= D; ++j)
                entries.push_back(
                    {"t", i, l, j, 2L * (l + j + 1), coeff_str(ctx.t(i, l, j), ctx)});

    if (opt.format == "csv") {
        os << "symbol,i,l,j,degree,value\n";
        for (const auto& e : entries) {
            os << e.symbol << ",";
            if (e.i >= 0) os << e.i;
            os << ",";
            if (e.l >= 0 || e.symbol == "t") os << e.l;
            os << "," << e.j << "," << e.degree << "," << csv_quote(e.value) << "\n";
        }
    } else if (opt.format == "json") {
        for (const auto& e : entries) {
            ordered_json row;
            row["symbol"] = e.symbol;
            if (e.i >= 0)
                row["i"] = e.i;
            else
                row["i"] = nullptr;
            if (e.l >= 0 || e.symbol == "t")
                row["l"] = e.l;
            else
                row["l"] = nullptr;
            row["j"] = e.j;
            row["degree"] = e.degree;
            row["value"] = e.value;
            os << row.dump() << "\n";
        }
    } else {
        for (const auto& e : entries) {
            if (e.symbol == "c")
                os << "c(" << e.j << ") = " << e.value << "\n";
            else if (e.symbol == "a")
                os << "a(i=" << e.i << "; k=" << e.l << ", j=" << e.j << ") = " << e.value
                   << "\n";
            else
                os << "t(i=" << e.i << "; l=" << e.l << ", j=" << e.j << ") = " << e.value
                   << "\n";
        }
    }
    return 0;
}

ordered_json element_json(const PresentationElement& x, const FGLContext& ctx) {
    ordered_json j;
    auto deg = x.homogeneous_degree();
    if (deg)
        j["degree"] = *deg;
    else
        j["degree"] = nullptr;
    ordered_json terms = ordered_json::array();
    for (const auto& [m, c] : x.terms()) {
        ordered_json t;
        t["basis"] = m.str();
        t["coeff"] = coeff_str(c, ctx);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

int cmd_nf(const Options& opt, std::ostream& os) {
    // parse before paying for the context so malformed input fails fast
    ExprAst ast = parse_expr(opt.expr_text, ExprMode::Omega, opt.prime);
    FGLContext ctx(opt.prime, opt.max_degree);
    OmegaRing ring(ctx);
    PresentationElement x = eval_omega(ast, ring);
    if (opt.format == "json") {
        os << element_json(x, ctx).dump() << "\n";
    } else if (opt.format == "csv") {
        os << "basis,coeff\n";
        for (const auto& [m, c] : x.terms())
            os << csv_quote(m.str()) << "," << csv_quote(coeff_str(c, ctx)) << "\n";
    } else {
        os << print_element(x, ctx) << "\n";
    }
    return 0;
}

int cmd_eval(const Options& opt, std::ostream& os) {
    ExprAst ast = parse_expr(opt.expr_text, ExprMode::Mu, opt.prime);
    FGLContext ctx(opt.prime, opt.max_degree);
    PullbackRing ring(ctx);
    PullbackElement x = eval_mu(ast, ring);
    if (opt.format == "json") {
        ordered_json j;
        j["word"] = x.word;
        j["rho"] = x.rho.str();
        j["kappa"] = x.kappa.str();
        os << j.dump() << "\n";
    } else if (opt.format == "csv") {
        os << "field,value\n";
        os << "word," << csv_quote(x.word) << "\n";
        os << "rho," << csv_quote(x.rho.str()) << "\n";
        os << "kappa," << csv_quote(x.kappa.str()) << "\n";
    } else {
        os << "word:  " << x.word << "\n";
        os << "rho:   " << x.rho.str() << "\n";
        os << "kappa: " << x.kappa.str() << "\n";
    }
    return 0;
}

int cmd_verify(const Options& opt, std::ostream& os) {
    FGLContext ctx(opt.prime, opt.max_degree);
    std::vector<RelationReport> reports;
    auto absorb = [&](std::vector<RelationReport> v) {
        reports.insert(reports.end(), v.begin(), v.end());
    };
    absorb(verify_mu_presentation(ctx));
    absorb(verify_omega_presentation(ctx));
    absorb(verify_basis(ctx, opt.seed));
    absorb(verify_gamma(ctx, opt.seed));
    absorb(kosniowski_reports(ctx));
    sort_reports(reports);
    long failures = 0;
    for (const auto& r : reports)
        if (!r.pass) ++failures;

    if (opt.format == "json") {
        for (const auto& r : reports) os << report_json(r) << "\n";
        ordered_json summary;
        summary["summary"]["total"] = static_cast<long>(reports.size());
        summary["summary"]["failures"] = failures;
        summary["summary"]["seed"] = opt.seed;
        os << summary.dump() << "\n";
    } else if (opt.format == "csv") {
        os << "id,indices,channel,status,detail\n";
        for (const auto& r : reports)
            os << r.id << "," << csv_quote(indices_str(r.indices)) << "," << r.channel << ","
               << (r.pass ? "pass" : "fail") << "," << csv_quote(r.detail) << "\n";
    } else {
        for (const auto& r : reports) {
            os << (r.pass ? "pass" : "FAIL") << " " << r.id;
            if (!r.indices.empty()) os << " [" << indices_str(r.indices) << "]";
            os << " (" << r.channel << "): " << r.detail << "\n";
        }
        os << "summary: " << reports.size() << " checks, " << failures << " failures\n";
    }
    return failures ? 1 : 0;
}

int cmd_kosniowski(const Options& opt, std::ostream& os) {
    FGLContext ctx(opt.prime, opt.max_degree);
    auto entries = kosniowski_catalog(ctx);
    long failures = 0;
    for (const auto& e : entries)
        if (!e.pass) ++failures;
    if (opt.format == "json") {
        for (const auto& e : entries) os << entry_json(e) << "\n";
        ordered_json summary;
        summary["summary"]["total"] = static_cast<long>(entries.size());
        summary["summary"]["failures"] = failures;
        os << summary.dump() << "\n";
    } else if (opt.format == "csv") {
        os << "tag,i,m,claimed,target,N,M,status,detail\n";
        for (const auto& e : entries)
            os << csv_quote(e.tag) << "," << e.i << "," << e.m << "," << csv_quote(e.claimed)
               << "," << csv_quote(e.target) << "," << e.n_value << "," << csv_quote(e.m_value)
               << "," << (e.pass ? "pass" : "fail") << "," << csv_quote(e.detail) << "\n";
    } else {
        for (const auto& e : entries) {
            os << (e.pass ? "pass" : "FAIL") << " " << e.tag;
            if (e.i) os << " i=" << e.i;
            if (e.m) os << " m=" << e.m;
            os << "\n  claimed: " << e.claimed << "\n  target:  " << e.target << "\n";
            if (!e.n_value.empty()) os << "  N = " << e.n_value << "\n";
            if (!e.m_value.empty()) os << "  M = " << e.m_value << "\n";
            os << "  " << e.detail << "\n";
        }
        os << "summary: " << entries.size() << " entries, " << failures << " failures\n";
    }
    return failures ? 1 : 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
    Options opt;
    CLI::App app{"cobordism-forge: exact coefficient rings of C_p-equivariant complex cobordism"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--prime", opt.prime, "odd-friendly prime p (2 allowed)")->required();
        sub->add_option("--max-degree", opt.max_degree, "truncation D; tables exact to degree 2D")
            ->default_val(10);
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"json", "csv", "text"}))
            ->default_val("text");
        sub->add_option("--seed", opt.seed, "seed for randomized checks")->default_val(0);
        sub->add_option("--out", opt.out, "write output to a file instead of stdout");
    };

    CLI::App* tables = app.add_subcommand("tables", "emit the c, a and t coefficient tables");
    CLI::App* eval = app.add_subcommand("eval", "evaluate a MU-mode expression to its (rho, kappa) pair");
    CLI::App* nf = app.add_subcommand("nf", "normal form of an Omega-mode expression");
    CLI::App* verify = app.add_subcommand("verify", "run every verification suite");
    CLI::App* kos = app.add_subcommand("kosniowski", "emit the Kosniowski generator catalog");
    for (CLI::App* sub : {tables, eval, nf, verify, kos}) add_common(sub);
    eval->add_option("expression", opt.expr_text, "expression to evaluate")->required();
    nf->add_option("expression", opt.expr_text, "expression to reduce")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        std::ofstream file;
        std::ostream* os = &std::cout;
        if (!opt.out.empty()) {
            file.open(opt.out);
            if (!file) {
                std::cerr << "error: cannot open output file " << opt.out << "\n";
                return 2;
            }
            os = &file;
        }
        if (tables->parsed()) return cmd_tables(opt, *os);
        if (eval->parsed()) return cmd_eval(opt, *os);
        if (nf->parsed()) return cmd_nf(opt, *os);
        if (verify->parsed()) return cmd_verify(opt, *os);
        if (kos->parsed()) return cmd_kosniowski(opt, *os);
        return 2;
    } catch (const TruncationError& e) {
        std::cerr << "truncation overflow: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "parse error at " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace cobord

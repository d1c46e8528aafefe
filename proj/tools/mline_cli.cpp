#include "mline/dictionary.hpp"
#include "mline/report.hpp"
#include "mline/steenrod.hpp"
#include "mline/stems.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

int run_verify(const std::string& suite, const mline::SuiteParams& params,
               const std::string& format, const std::string& outPath) {
    mline::SuiteReport report;
    try {
        report = mline::run_suite(suite, params);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::string payload = (format == "tsv") ? mline::to_tsv(report)
                                            : mline::to_json(report).dump(2) + "\n";
    if (outPath.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(outPath, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open " << outPath << "\n";
            return 2;
        }
        out << payload;
    }

    std::cerr << report.suite << ": " << report.pass_count() << " passed, "
              << report.fail_count() << " failed, " << report.wallSeconds << "s\n";
    if (!report.pass()) {
        for (const auto& it : report.items)
            if (!it.pass) {
                std::cerr << "first failure: " << it.key << " expected " << it.expected
                          << " computed " << it.computed << "\n";
                break;
            }
        return 1;
    }
    return 0;
}

/* Accepts "X(8)" or plain "8". */
bool parse_column(const std::string& s, int& m) {
    std::string digits = s;
    if (s.size() >= 4 && (s.rfind("X(", 0) == 0 || s.rfind("x(", 0) == 0) && s.back() == ')')
        digits = s.substr(2, s.size() - 3);
    try {
        size_t pos = 0;
        m = std::stoi(digits, &pos);
        return pos == digits.size() && m >= 0;
    } catch (...) {
        return false;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic verifier for the Pin(2) Mahowald-line computations"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    verify->add_option("suite", suite, "one of: appendix-a, chern, steenrod, ro, ahss, mahowald, stems, all")
        ->required();
    mline::SuiteParams params;
    std::string format = "json";
    std::string outPath;
    verify->add_option("--kmax", params.kmax, "largest k in k-indexed sweeps");
    verify->add_option("--mmax", params.mmax, "largest m in the Steenrod sweep");
    verify->add_option("--pmax", params.pmax, "largest p in the dictionary grid");
    verify->add_option("--qmax", params.qmax, "largest q in the dictionary grid");
    verify->add_option("--deg-bound", params.degBound, "degree bound for the mod-2A system");
    verify->add_option("--jobs", params.jobs, "worker threads (output is identical)");
    verify->add_option("--format", format, "json or tsv")
        ->check(CLI::IsMember({"json", "tsv"}));
    verify->add_option("--out", outPath, "write the report to a file");

    auto* diagram = app.add_subcommand("diagram", "print a cell diagram of X(m)");
    std::string column;
    int lo = 0, hi = 0;
    bool dot = false;
    diagram->add_option("column", column, "column, e.g. X(8)")->required();
    diagram->add_option("a", lo, "lowest dimension")->required();
    diagram->add_option("b", hi, "highest dimension")->required();
    diagram->add_flag("--dot", dot, "emit graphviz instead of text");

    auto* grid = app.add_subcommand("grid", "level-(p,q) existence grid as TSV");
    long gpmax = 32, gqmax = 80;
    grid->add_option("--pmax", gpmax, "largest p");
    grid->add_option("--qmax", gqmax, "largest q");

    auto* staircase = app.add_subcommand("staircase", "the Mahowald line as a two-column table");
    long smax = 64;
    staircase->add_option("--mmax", smax, "largest m");

    auto* geography = app.add_subcommand("geography", "spin-realizability verdict as JSON");
    long gp = 0, gq = 0;
    geography->add_option("p", gp, "number of 2E8 summands")->required();
    geography->add_option("q", gq, "number of hyperbolic summands")->required();

    auto* stemsTable = app.add_subcommand("stems-table", "dump the stable-stem table as TSV");

    CLI11_PARSE(app, argc, argv);

    if (verify->parsed()) {
        bool known = false;
        for (const auto& name : mline::kSuiteNames)
            known = known || name == suite;
        if (!known) {
            std::cerr << "error: unknown suite '" << suite << "'\n";
            return 2;
        }
        return run_verify(suite, params, format, outPath);
    }

    if (diagram->parsed()) {
        int m = 0;
        if (!parse_column(column, m)) {
            std::cerr << "error: cannot parse column '" << column << "'\n";
            return 2;
        }
        if (lo > hi) {
            std::cerr << "error: empty range\n";
            return 2;
        }
        mline::CellComplexDesc d = mline::build_cell_diagram(m, lo, hi);
        std::cout << (dot ? mline::diagram_dot(d) : mline::diagram_text(d));
        return 0;
    }

    if (grid->parsed()) {
        std::cout << "p\\q";
        for (long q = 0; q <= gqmax; ++q)
            std::cout << '\t' << q;
        std::cout << '\n';
        for (long p = 1; p <= gpmax; ++p) {
            std::cout << p;
            for (long q = 0; q <= gqmax; ++q)
                std::cout << '\t' << (mline::fm_exists(p, q).exists ? 1 : 0);
            std::cout << '\n';
        }
        return 0;
    }

    if (staircase->parsed()) {
        std::cout << "m\tL(m)\n";
        for (long m = 0; m <= smax; ++m)
            std::cout << m << '\t' << mline::mahowald_line(m) << '\n';
        return 0;
    }

    if (geography->parsed()) {
        mline::GeoVerdict v = mline::spin_geography(gp, gq);
        nlohmann::json j;
        j["p"] = gp;
        j["q"] = gq;
        j["verdict"] = v.verdict == mline::Geography::Obstructed ? "obstructed"
                                                                 : "not-obstructed-here";
        j["reason"] = v.reason;
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    // stems-table
    (void)stemsTable;
    std::cout << "n\torder\tgenerators\tcitation\n";
    for (int n = 0; n <= 20; ++n) {
        const mline::StemGroup& g = mline::stem_group(n);
        std::cout << n << '\t' << (g.infinite ? "Z" : std::to_string(g.order)) << '\t';
        for (size_t i = 0; i < g.generators.size(); ++i)
            std::cout << (i ? ", " : "") << g.generators[i].name << " (order "
                      << g.generators[i].order << ")";
        if (g.generators.empty())
            std::cout << "-";
        std::cout << '\t' << g.citation << '\n';
    }
    return 0;
}

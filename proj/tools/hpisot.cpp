#include <iostream>

#include <CLI11.hpp>

#include "hpisot/cli.hpp"
#include "hpisot/error.hpp"

using namespace hpisot;

int main(int argc, char** argv) {
    CLI::App app{"Exact analysis of one-dimensional substitutions"};
    app.require_subcommand(1);
    app.fallthrough();

    cli::GlobalOptions g;
    app.add_flag("--json", g.json, "Print the JSON report");
    app.add_option("--seed", g.seed, "Seed recorded in the report; the pipelines themselves are deterministic");
    app.add_option("--precision-bits", g.precision_bits, "Width 2^-bits of reported dilatation intervals")
        ->check(CLI::Range(16U, 4096U));

    AnalysisOptions ao;
    std::string path;

    auto* analyze = app.add_subcommand("analyze", "Full pipeline on a substitution file");
    analyze->add_option("path", path, "Substitution JSON")->required();
    analyze->add_option("--max-word-length", ao.max_word_length, "Measures for all words up to this length");
    analyze->add_flag("--assert-lattices-equal", ao.assert_lattices_equal, "Assert tile lattice = return lattice");
    analyze->add_option("--erp-patches", ao.erp_patches, "Number of ERP patches (0: all words of length <= 3)");
    analyze->add_option("--sample-len", ao.sample_len, "Fixed-point prefix length for ERP samples");

    cli::CoverOptions co;
    bool example4 = false;
    std::string m0_text;
    std::optional<unsigned> k;
    std::string out;
    auto* cover = app.add_subcommand("cover", "Build and validate a triple cover");
    cover->add_option("path", path, "Cover spec JSON");
    cover->add_flag("--example4", example4, "Generate the arbitrary-degree construction from --m0");
    cover->add_option("--m0", m0_text, "Primitive Pisot matrix with odd determinant, e.g. [[1,1],[1,0]]");
    cover->add_option("--k", k, "Power of M0; searched when omitted");
    cover->add_option("--max-word-length", co.max_word_length, "Word length for the lift check");
    cover->add_option("--out", out, "Where to write the cover substitution");

    auto* corpus = app.add_subcommand("corpus", "Analyze a corpus directory against its expectations");
    corpus->add_option("dir", path, "Corpus directory")->required();
    corpus->add_option("--sample-len", ao.sample_len, "Fixed-point prefix length for ERP samples");
    corpus->add_option("--erp-patches", ao.erp_patches, "Number of ERP patches");

    auto* erp = app.add_subcommand("erp", "Empirical exact regularity check");
    erp->add_option("path", path, "Substitution JSON")->required();
    erp->add_option("--erp-patches", ao.erp_patches, "Number of patches (0: all words of length <= 3)");
    erp->add_option("--sample-len", ao.sample_len, "Fixed-point prefix length");

    std::vector<std::string> patches;
    auto* measure = app.add_subcommand("measure", "Exact cylinder measures");
    measure->add_option("path", path, "Substitution JSON")->required();
    measure->add_option("--patch", patches, "Patch word; repeatable");
    measure->add_option("--max-word-length", ao.max_word_length, "All words up to this length when no --patch");
    measure->add_flag("--assert-lattices-equal", ao.assert_lattices_equal, "Assert tile lattice = return lattice");

    auto* cr = app.add_subcommand("cr", "Coincidence rank and the coincidence rank conjecture check");
    cr->add_option("path", path, "Substitution JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cli::kExitParse;
    }
    ao.precision_bits = g.precision_bits;

    cli::Outcome o;
    try {
        if (analyze->parsed()) {
            o = cli::cmd_analyze(path, ao);
        } else if (cover->parsed()) {
            if (!out.empty()) co.out = out;
            if (example4) {
                if (m0_text.empty()) throw ParseError("--example4 needs --m0");
                o = cli::cmd_example4(cli::parse_matrix(m0_text), k, co);
            } else {
                if (path.empty()) throw ParseError("cover needs a spec path or --example4");
                o = cli::cmd_cover(path, co);
            }
        } else if (corpus->parsed()) {
            o = cli::cmd_corpus(path, ao);
        } else if (erp->parsed()) {
            o = cli::cmd_erp(path, ao.erp_patches, ao.sample_len);
        } else if (measure->parsed()) {
            o = cli::cmd_measure(path, patches, ao.max_word_length, ao.assert_lattices_equal, g.precision_bits);
        } else if (cr->parsed()) {
            o = cli::cmd_cr(path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::exit_code_for(e);
    }
    if (g.json) {
        o.json["seed"] = g.seed;
        std::cout << o.json.dump(2) << "\n";
    } else {
        std::cout << o.text;
    }
    return o.exit_code;
}

#include "moonshine/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "moonshine/corpus_io.hpp"
#include "moonshine/decomposition.hpp"
#include "moonshine/modular_series.hpp"
#include "moonshine/verification.hpp"
#include "moonshine/virasoro.hpp"

namespace moonshine::cli {

namespace {

std::string exponent_label(long e24) {
    const long g = std::gcd(std::labs(e24), 24L);
    const long num = e24 / g;
    const long den = 24 / g;
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

void print_series(const GradedSeries& s, char variable, std::ostream& out) {
    for (std::size_t i = 0; i < s.order(); ++i)
        out << variable << '^'
            << exponent_label(s.offset24() + 24 * static_cast<long>(i)) << ": "
            << to_string(s[i]) << '\n';
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

const CharacterColumn& find_column(const CorpusFile& corpus, int chi) {
    for (const auto& col : corpus.columns)
        if (col.chi == chi) return col;
    throw std::runtime_error("chi=" + std::to_string(chi) +
                             " not present in the corpus");
}

void print_branch(const EmbeddingBranch& branch, std::ostream& out) {
    out << "  delta=" << (branch.delta > 0 ? "+1" : "-1")
        << ": beta^2 = " << to_string(branch.beta_squared);
    if (branch.betas.empty()) {
        out << ", no integer solution\n";
        return;
    }
    out << ", beta = +-" << to_string(branch.betas.front()) << ", alpha = "
        << (branch.delta > 0 ? "beta" : "-beta") << ", alpha*beta "
        << (branch.alpha_beta_sign > 0 ? "> 0" : "< 0") << ", identities "
        << (branch.identities_hold ? "hold" : "FAIL") << '\n';
}

void print_report(const EmbeddingReport& report, std::ostream& out) {
    out << "h=" << report.height << '\n';
    print_branch(report.plus, out);
    print_branch(report.minus, out);
    out << "  epsilon: product = " << to_string(report.epsilon_product)
        << ", sum = " << to_string(report.epsilon_sum)
        << ", power sum = " << to_string(report.epsilon_power_sum) << '\n';
    if (report.verdict == ModuleVerdict::UniqueSubmoduleHeightOne)
        out << "  verdict: unique submodule at height 1, isomorphic to M(1,24)\n";
    else
        out << "  verdict: irreducible\n";
}

GradedSeries make_series(const std::string& kind, std::size_t terms) {
    if (kind == "partition") return partition_series(terms);
    if (kind == "euler") return euler_function(terms);
    if (kind == "eta") return eta_series(terms);
    if (kind == "eta23") return eta_power(23, terms);
    if (kind == "delta") return delta_series(terms);
    if (kind == "e4") return eisenstein_series(4, terms);
    if (kind == "e6") return eisenstein_series(6, terms);
    if (kind == "j") return j_series(terms);
    if (kind == "bigJ") return big_j_series(terms);
    throw std::runtime_error("unknown series kind: " + kind);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{
        "Exact q-series tools for the Virasoro-module decomposition of the "
        "Monster module"};
    app.require_subcommand(1);

    std::size_t terms = 52;
    long height = 0;
    long hmax_classify = -1;
    int chi = 1;
    std::string kind;
    std::string corpus_path;
    std::string degrees_path;
    std::string checksums_path;
    std::string format = "text";
    long hmax_verify = 5;

    auto* series_cmd =
        app.add_subcommand("series", "print a named q-expansion");
    series_cmd->add_option("--kind", kind, "series to expand")
        ->required()
        ->check(CLI::IsMember({"partition", "euler", "eta", "eta23", "delta",
                               "e4", "e6", "j", "bigJ"}));
    series_cmd->add_option("--terms", terms, "term count")
        ->check(CLI::PositiveNumber);

    auto* verma_cmd =
        app.add_subcommand("verma", "print char M(h,24) in the variable x");
    verma_cmd->add_option("--height", height, "highest weight h")
        ->required()
        ->check(CLI::NonNegativeNumber);
    verma_cmd->add_option("--terms", terms, "term count")
        ->check(CLI::PositiveNumber);

    auto* vacuum_cmd =
        app.add_subcommand("vacuum", "print the L(0,24) character");
    vacuum_cmd->add_option("--terms", terms, "term count")
        ->check(CLI::PositiveNumber);

    auto* classify_cmd = app.add_subcommand(
        "classify", "embedding analysis and verdict for M(h,24)");
    classify_cmd->add_option("--height", height, "height h")
        ->required()
        ->check(CLI::NonNegativeNumber);
    classify_cmd->add_option("--max", hmax_classify, "report heights h..max")
        ->check(CLI::NonNegativeNumber);

    auto* deconvolve_cmd = app.add_subcommand(
        "deconvolve", "multiplicities c_{hk} from a corpus column");
    deconvolve_cmd->add_option("--chi", chi, "character index")->required();
    deconvolve_cmd->add_option("--corpus", corpus_path, "corpus CSV")
        ->required();
    deconvolve_cmd->add_option("--terms", terms, "term count")
        ->check(CLI::PositiveNumber);

    auto* thompson_cmd = app.add_subcommand(
        "thompson", "McKay-Thompson series prefix from a corpus column");
    thompson_cmd->add_option("--chi", chi, "character index")->required();
    thompson_cmd->add_option("--corpus", corpus_path, "corpus CSV")
        ->required();
    thompson_cmd->add_option("--terms", terms, "term count")
        ->check(CLI::PositiveNumber);

    auto* verify_cmd =
        app.add_subcommand("verify", "run the corpus verification suite");
    verify_cmd->add_option("--corpus", corpus_path, "corpus CSV")->required();
    verify_cmd->add_option("--degrees", degrees_path, "degree CSV");
    verify_cmd->add_option("--checksums", checksums_path,
                           "transcription checksum CSV");
    verify_cmd->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"text", "json"}));
    verify_cmd->add_option("--hmax", hmax_verify,
                           "dimension-identity reach (default 5)")
        ->check(CLI::PositiveNumber);

    std::vector<const char*> argv;
    argv.push_back("moonshine");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (series_cmd->parsed()) {
            print_series(make_series(kind, terms), 'q', out);
            return 0;
        }
        if (verma_cmd->parsed()) {
            print_series(verma_character(height, terms).series, 'x', out);
            return 0;
        }
        if (vacuum_cmd->parsed()) {
            print_series(trivial_vacuum_series(terms), 'x', out);
            return 0;
        }
        if (classify_cmd->parsed()) {
            const long last = std::max(height, hmax_classify);
            for (long h = height; h <= last; ++h)
                print_report(feigin_fuchs_solutions(h), out);
            return 0;
        }
        if (deconvolve_cmd->parsed()) {
            CorpusFile corpus = parse_corpus(read_file(corpus_path));
            MultiplicitySequence seq =
                multiplicities_from_column(find_column(corpus, chi), terms);
            for (std::size_t h = 0; h < seq.values.size(); ++h)
                out << "h=" << h << ": " << to_string(seq.values[h]) << '\n';
            return 0;
        }
        if (thompson_cmd->parsed()) {
            CorpusFile corpus = parse_corpus(read_file(corpus_path));
            print_series(
                thompson_prefix_from_column(find_column(corpus, chi), terms),
                'q', out);
            return 0;
        }
        if (verify_cmd->parsed()) {
            CorpusFile corpus =
                parse_corpus_structural(read_file(corpus_path));
            std::optional<std::map<int, Int>> degrees;
            if (!degrees_path.empty())
                degrees = parse_degrees(read_file(degrees_path)).entries;
            VerifyOptions options;
            options.hmax = hmax_verify;
            if (!checksums_path.empty())
                options.checksums =
                    parse_checksums(read_file(checksums_path)).rows;
            VerificationReport report =
                verify_corpus(corpus.columns, degrees, options);
            out << emit_report(report, format == "json" ? ReportFormat::Json
                                                        : ReportFormat::Text);
            if (format == "json") out << '\n';
            return report.overall() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace moonshine::cli

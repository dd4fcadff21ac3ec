#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "moonshine/cli.hpp"
#include "moonshine/corpus_io.hpp"
#include "test_util.hpp"

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = moonshine::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

const std::string kCorpus = testutil::data_path("corpus.csv");
const std::string kDegrees = testutil::data_path("degrees.csv");
const std::string kChecksums = testutil::data_path("corpus_checksums.csv");

}  // namespace

TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"series"}).code == 2);                      // --kind required
    CHECK(run({"series", "--kind", "nope"}).code == 2);    // bad choice
    CHECK(run({"series", "--kind", "j", "--bogus"}).code == 2);
    CHECK(run({"verify", "--corpus", "/no/such/file.csv"}).code == 2);
    CHECK(run({"verify", "--corpus", kCorpus, "--format", "xml"}).code == 2);
}

TEST_CASE("help exits 0") {
    auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("series") != std::string::npos);
}

TEST_CASE("series output is exact, one coefficient per line") {
    auto r = run({"series", "--kind", "bigJ", "--terms", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "q^-1: 1\nq^0: 0\nq^1: 196884\n");

    auto eta = run({"series", "--kind", "eta", "--terms", "2"});
    CHECK(eta.out == "q^1/24: 1\nq^25/24: -1\n");

    auto e4 = run({"series", "--kind", "e4", "--terms", "3"});
    CHECK(e4.out == "q^0: 1\nq^1: 240\nq^2: 2160\n");
}

TEST_CASE("verma and vacuum output") {
    auto verma = run({"verma", "--height", "1", "--terms", "3"});
    CHECK(verma.code == 0);
    CHECK(verma.out == "x^1: 1\nx^2: 1\nx^3: 2\n");

    auto vac = run({"vacuum", "--terms", "4"});
    CHECK(vac.out == "x^0: 1\nx^1: 0\nx^2: 1\nx^3: 1\n");
}

TEST_CASE("classify output") {
    auto r = run({"classify", "--height", "0"});
    CHECK(r.code == 0);
    CHECK(r.out.find("unique submodule") != std::string::npos);
    CHECK(r.out.find("M(1,24)") != std::string::npos);

    auto irr = run({"classify", "--height", "7"});
    CHECK(irr.out.find("irreducible") != std::string::npos);

    auto range = run({"classify", "--height", "0", "--max", "2"});
    CHECK(range.out.find("h=0") != std::string::npos);
    CHECK(range.out.find("h=1") != std::string::npos);
    CHECK(range.out.find("h=2") != std::string::npos);
}

TEST_CASE("deconvolve and thompson against the shipped corpus") {
    auto dec = run({"deconvolve", "--chi", "2", "--corpus", kCorpus, "--terms",
                    "6"});
    CHECK(dec.code == 0);
    CHECK(dec.out == "h=0: 0\nh=1: 0\nh=2: 1\nh=3: 1\nh=4: 2\nh=5: 3\n");

    auto th = run({"thompson", "--chi", "1", "--corpus", kCorpus, "--terms",
                   "3"});
    CHECK(th.code == 0);
    CHECK(th.out == "q^-1: 1\nq^0: 0\nq^1: 1\n");

    auto missing =
        run({"deconvolve", "--chi", "16", "--corpus", kCorpus});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("not present") != std::string::npos);
}

TEST_CASE("verify: shipped fixtures pass, exit 0") {
    auto r = run({"verify", "--corpus", kCorpus, "--degrees", kDegrees,
                  "--checksums", kChecksums, "--format", "json"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("{\"overall\":\"pass\"", 0) == 0);

    auto text = run({"verify", "--corpus", kCorpus});
    CHECK(text.code == 0);
    CHECK(text.out.find("OVERALL pass") != std::string::npos);
}

TEST_CASE("verify: a corrupted coefficient fails with exit 1") {
    moonshine::CorpusFile corpus = testutil::load_corpus();
    corpus.columns[4].coeffs[30] += 1;

    auto tmp = std::filesystem::temp_directory_path() /
               "moonshine_cli_test_corrupt.csv";
    {
        std::ofstream out(tmp);
        out << moonshine::emit_corpus(corpus);
    }
    auto r = run({"verify", "--corpus", tmp.string(), "--checksums",
                  kChecksums, "--format", "json"});
    std::filesystem::remove(tmp);

    CHECK(r.code == 1);
    CHECK(r.out.find("\"status\":\"fail\"") != std::string::npos);
    const int chi = corpus.columns[4].chi;
    CHECK(r.out.find("\"chi\":" + std::to_string(chi) + ",\"h\":30") !=
          std::string::npos);
}

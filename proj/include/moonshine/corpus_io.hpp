#pragma once

// Fixture parsing and report emission. All integers are parsed exactly; no
// floating point anywhere.
//
// corpus.csv     header `chi,a0,...,a51`, one row per transcribed column,
//                `#` comment lines allowed; leading comments form the
//                provenance note.
// degrees.csv    header `chi,degree`.
// checksums.csv  header `chi,sum0,sum1` (double-entry transcription check).
//
// Report JSON:   {"overall": "pass"|"fail", "checks": [{name, chi?, h?,
//                status, expected?, actual?}]} with keys in that order.

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "moonshine/decomposition.hpp"
#include "moonshine/verification.hpp"

namespace moonshine {

struct CorpusFile {
    std::vector<CharacterColumn> columns;  // chi strictly increasing
    std::string source_note;               // leading comment lines, joined
};

struct DegreeFile {
    std::map<int, Int> entries;
};

struct ChecksumFile {
    std::map<int, RowChecksum> rows;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, long line, std::string field);

    long line() const { return line_; }
    const std::string& field() const { return field_; }

private:
    long line_;
    std::string field_;
};

// Strict: structural problems (column count, non-integer cells, duplicate or
// out-of-range chi, non-increasing order) and sign-pattern violations all
// throw ParseError naming the line and field.
CorpusFile parse_corpus(std::string_view bytes);

// Structural checks only; sign-pattern problems are left in the columns for
// verify_corpus to report as failing checks.
CorpusFile parse_corpus_structural(std::string_view bytes);

DegreeFile parse_degrees(std::string_view bytes);
ChecksumFile parse_checksums(std::string_view bytes);

std::string emit_corpus(const CorpusFile& corpus);

enum class ReportFormat { Text, Json };
std::string emit_report(const VerificationReport& report, ReportFormat format);

}  // namespace moonshine

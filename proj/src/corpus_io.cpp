#include "moonshine/corpus_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace moonshine {

namespace {

constexpr std::size_t kTableDepth = 52;

struct Line {
    long number = 0;
    std::string text;
};

std::vector<Line> split_lines(std::string_view bytes) {
    std::vector<Line> lines;
    long number = 1;
    std::size_t start = 0;
    while (start <= bytes.size()) {
        std::size_t end = bytes.find('\n', start);
        if (end == std::string_view::npos) end = bytes.size();
        std::string text(bytes.substr(start, end - start));
        if (!text.empty() && text.back() == '\r') text.pop_back();
        lines.push_back({number++, std::move(text)});
        if (end == bytes.size()) break;
        start = end + 1;
    }
    // drop a trailing blank produced by a final newline
    while (!lines.empty() && lines.back().text.empty()) lines.pop_back();
    return lines;
}

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_cells(const std::string& text) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) {
            cells.push_back(trim(std::string_view(text).substr(start)));
            break;
        }
        cells.push_back(
            trim(std::string_view(text).substr(start, comma - start)));
        start = comma + 1;
    }
    return cells;
}

bool looks_like_integer(const std::string& cell) {
    if (cell.empty()) return false;
    std::size_t i = cell[0] == '-' ? 1 : 0;
    if (i == cell.size()) return false;
    return std::all_of(cell.begin() + static_cast<long>(i), cell.end(),
                       [](unsigned char ch) { return std::isdigit(ch); });
}

Int parse_int(const std::string& cell, long line, const std::string& field) {
    if (!looks_like_integer(cell))
        throw ParseError("non-integer cell '" + cell + "'", line, field);
    return Int(cell);
}

// Leading '#' lines form the provenance note; later ones are plain comments.
struct CommentSplit {
    std::string note;
    std::vector<Line> rows;  // non-comment, non-blank lines
};

CommentSplit strip_comments(const std::vector<Line>& lines) {
    CommentSplit out;
    bool in_preamble = true;
    for (const auto& line : lines) {
        if (line.text.empty()) continue;
        if (line.text[0] == '#') {
            if (in_preamble) {
                std::string body = line.text.substr(1);
                if (!body.empty() && body[0] == ' ') body.erase(0, 1);
                if (!out.note.empty()) out.note += '\n';
                out.note += body;
            }
            continue;
        }
        in_preamble = false;
        out.rows.push_back(line);
    }
    return out;
}

CorpusFile parse_corpus_impl(std::string_view bytes, bool strict) {
    CommentSplit split = strip_comments(split_lines(bytes));
    if (split.rows.empty())
        return CorpusFile{{}, split.note};

    const Line& header = split.rows.front();
    auto head_cells = split_cells(header.text);
    if (head_cells.size() != kTableDepth + 1)
        throw ParseError("expected " + std::to_string(kTableDepth + 1) +
                             " header fields, got " +
                             std::to_string(head_cells.size()),
                         header.number, "header");
    if (head_cells[0] != "chi")
        throw ParseError("header must start with 'chi'", header.number,
                         "header");

    CorpusFile corpus;
    corpus.source_note = split.note;
    int last_chi = 0;
    for (std::size_t r = 1; r < split.rows.size(); ++r) {
        const Line& line = split.rows[r];
        auto cells = split_cells(line.text);
        if (cells.size() != kTableDepth + 1)
            throw ParseError("expected " + std::to_string(kTableDepth) +
                                 " coefficients, got " +
                                 std::to_string(cells.size() - 1),
                             line.number, "row");
        Int chi_value = parse_int(cells[0], line.number, "chi");
        if (chi_value < 1 || chi_value > 194)
            throw ParseError("chi out of range 1..194", line.number, "chi");
        int chi = static_cast<int>(chi_value.get_si());
        if (chi <= last_chi)
            throw ParseError(chi == last_chi ? "duplicate chi"
                                             : "chi indices must increase",
                             line.number, "chi");
        last_chi = chi;

        CharacterColumn col;
        col.chi = chi;
        col.coeffs.reserve(kTableDepth);
        for (std::size_t i = 0; i < kTableDepth; ++i)
            col.coeffs.push_back(
                parse_int(cells[i + 1], line.number, "a" + std::to_string(i)));
        if (strict) {
            auto violations = column_violations(col);
            if (!violations.empty())
                throw ParseError("sign violation: " + violations.front().message,
                                 line.number,
                                 "a" + std::to_string(violations.front().slot));
        }
        corpus.columns.push_back(std::move(col));
    }
    return corpus;
}

}  // namespace

ParseError::ParseError(std::string message, long line, std::string field)
    : std::runtime_error("line " + std::to_string(line) + ", field " + field +
                         ": " + message),
      line_(line),
      field_(std::move(field)) {}

CorpusFile parse_corpus(std::string_view bytes) {
    return parse_corpus_impl(bytes, true);
}

CorpusFile parse_corpus_structural(std::string_view bytes) {
    return parse_corpus_impl(bytes, false);
}

DegreeFile parse_degrees(std::string_view bytes) {
    CommentSplit split = strip_comments(split_lines(bytes));
    DegreeFile file;
    for (std::size_t r = 0; r < split.rows.size(); ++r) {
        const Line& line = split.rows[r];
        auto cells = split_cells(line.text);
        if (r == 0 && !cells.empty() && cells[0] == "chi") continue;  // header
        if (cells.size() != 2)
            throw ParseError("expected 'chi,degree'", line.number, "row");
        Int chi = parse_int(cells[0], line.number, "chi");
        Int degree = parse_int(cells[1], line.number, "degree");
        if (chi < 1) throw ParseError("chi must be positive", line.number, "chi");
        if (sgn(degree) <= 0)
            throw ParseError("degree must be positive", line.number, "degree");
        int key = static_cast<int>(chi.get_si());
        if (!file.entries.emplace(key, degree).second)
            throw ParseError("duplicate chi", line.number, "chi");
    }
    return file;
}

ChecksumFile parse_checksums(std::string_view bytes) {
    CommentSplit split = strip_comments(split_lines(bytes));
    ChecksumFile file;
    for (std::size_t r = 0; r < split.rows.size(); ++r) {
        const Line& line = split.rows[r];
        auto cells = split_cells(line.text);
        if (r == 0 && !cells.empty() && cells[0] == "chi") continue;  // header
        if (cells.size() != 3)
            throw ParseError("expected 'chi,sum0,sum1'", line.number, "row");
        Int chi = parse_int(cells[0], line.number, "chi");
        RowChecksum row{parse_int(cells[1], line.number, "sum0"),
                        parse_int(cells[2], line.number, "sum1")};
        if (chi < 1) throw ParseError("chi must be positive", line.number, "chi");
        int key = static_cast<int>(chi.get_si());
        if (!file.rows.emplace(key, std::move(row)).second)
            throw ParseError("duplicate chi", line.number, "chi");
    }
    return file;
}

std::string emit_corpus(const CorpusFile& corpus) {
    std::ostringstream out;
    if (!corpus.source_note.empty()) {
        std::istringstream note(corpus.source_note);
        std::string note_line;
        while (std::getline(note, note_line))
            out << (note_line.empty() ? "#" : "# " + note_line) << '\n';
    }
    out << "chi";
    for (std::size_t i = 0; i < kTableDepth; ++i) out << ",a" << i;
    out << '\n';
    for (const auto& col : corpus.columns) {
        out << col.chi;
        for (const auto& a : col.coeffs) out << ',' << a.get_str();
        out << '\n';
    }
    return out.str();
}

std::string emit_report(const VerificationReport& report, ReportFormat format) {
    VerificationReport sorted = report;
    sorted.sort_entries();

    if (format == ReportFormat::Json) {
        nlohmann::ordered_json doc;
        doc["overall"] = sorted.overall() ? "pass" : "fail";
        doc["checks"] = nlohmann::ordered_json::array();
        for (const auto& c : sorted.checks) {
            nlohmann::ordered_json entry;
            entry["name"] = c.name;
            if (c.chi) entry["chi"] = *c.chi;
            if (c.h) entry["h"] = *c.h;
            entry["status"] = c.pass ? "pass" : "fail";
            if (!c.expected.empty()) entry["expected"] = c.expected;
            if (!c.actual.empty()) entry["actual"] = c.actual;
            doc["checks"].push_back(std::move(entry));
        }
        return doc.dump();
    }

    std::ostringstream out;
    for (const auto& c : sorted.checks) {
        out << "CHECK name=" << c.name;
        if (c.chi) out << " chi=" << *c.chi;
        if (c.h) out << " h=" << *c.h;
        out << " status=" << (c.pass ? "pass" : "fail");
        if (!c.expected.empty()) out << " expected='" << c.expected << "'";
        if (!c.actual.empty()) out << " actual='" << c.actual << "'";
        out << '\n';
    }
    out << "OVERALL " << (sorted.overall() ? "pass" : "fail") << '\n';
    return out.str();
}

}  // namespace moonshine

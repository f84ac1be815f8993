#include "schemekit/ingest.hpp"

#include "schemekit/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

namespace schemekit {

namespace {

struct Line {
    std::size_t number;
    std::string_view text;
};

std::vector<Line> split_lines(std::string_view text, std::size_t first_line)
{
    std::vector<Line> lines;
    std::size_t start = 0;
    std::size_t number = first_line;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (end < text.size() || !line.empty()) lines.push_back({number, line});
        start = end + 1;
        ++number;
    }
    return lines;
}

bool is_blank(char c)
{
    return c == ' ' || c == '\t';
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (is_blank(s.front()) || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (is_blank(s.back()) || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

bool ignorable(std::string_view line)
{
    const auto t = trim(line);
    return t.empty() || t.front() == '#';
}

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_blank(line[i])) ++i;
        const auto begin = i;
        while (i < line.size() && !is_blank(line[i])) ++i;
        if (i > begin) out.push_back({line.substr(begin, i - begin), begin + 1});
    }
    return out;
}

bool all_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::uint64_t parse_unsigned(const Token& tok, std::size_t line, std::uint64_t limit)
{
    if (!all_digits(tok.text)) throw ParseError("expected a non-negative integer, got '" + std::string(tok.text) + "'", line, tok.column);
    std::uint64_t value = 0;
    for (char c : tok.text) {
        const auto digit = static_cast<std::uint64_t>(c - '0');
        if (value > (limit - digit) / 10) throw ParseError("integer out of range", line, tok.column);
        value = value * 10 + digit;
    }
    return value;
}

}  // namespace

// ---- relation matrices -----------------------------------------------------

RelationMatrix parse_relation_matrix(std::string_view text, std::size_t first_line)
{
    const auto lines = split_lines(text, first_line);
    std::size_t n = 0;
    bool have_n = false;
    enum class Style { unknown, spaced, digits } style = Style::unknown;
    std::vector<std::uint32_t> cells;
    std::size_t rows = 0;
    std::size_t last_line = first_line;

    for (const auto& line : lines) {
        last_line = line.number;
        if (ignorable(line.text)) continue;
        const auto tokens = tokenize(line.text);
        if (!have_n) {
            if (tokens.size() != 1) throw ParseError("expected the point count n on its own line", line.number, 1);
            n = parse_unsigned(tokens[0], line.number, 1U << 16U);
            if (n == 0) throw ParseError("point count must be positive", line.number, tokens[0].column);
            have_n = true;
            cells.reserve(n * n);
            continue;
        }
        if (rows == n) throw ParseError("unexpected content after " + std::to_string(n) + " rows", line.number, tokens[0].column);

        const bool digit_row = n > 1 && tokens.size() == 1 && tokens[0].text.size() == n && all_digits(tokens[0].text);
        const Style row_style = digit_row ? Style::digits : Style::spaced;
        if (!digit_row && tokens.size() != n) {
            throw ParseError("row has " + std::to_string(tokens.size()) + " entries, expected " + std::to_string(n),
                             line.number, tokens.back().column);
        }
        if (style != Style::unknown && style != row_style) {
            throw ParseError("digit-string and space-separated rows mixed in one matrix", line.number, tokens[0].column);
        }
        style = row_style;
        if (digit_row) {
            for (char c : tokens[0].text) cells.push_back(static_cast<std::uint32_t>(c - '0'));
        } else {
            for (const auto& tok : tokens) {
                cells.push_back(static_cast<std::uint32_t>(parse_unsigned(tok, line.number, UINT32_MAX)));
            }
        }
        ++rows;
    }
    if (!have_n) throw ParseError("missing point count", last_line, 1);
    if (rows != n) {
        throw ParseError("expected " + std::to_string(n) + " rows, found " + std::to_string(rows), last_line + 1, 1);
    }
    return RelationMatrix(n, std::move(cells));
}

// ---- catalogs --------------------------------------------------------------

std::vector<CatalogBlock> split_catalog(std::string_view text)
{
    std::vector<CatalogBlock> blocks;
    for (const auto& line : split_lines(text, 1)) {
        const bool comment = line.text.starts_with("##");
        if (!comment && line.text.starts_with('#')) {
            const auto id = trim(line.text.substr(1));
            if (id.empty()) throw ParseError("block header without an id", line.number, 1);
            blocks.push_back({std::string(id), line.number, {}});
            continue;
        }
        if (blocks.empty()) {
            if (comment || trim(line.text).empty()) continue;
            throw ParseError("content before the first '# <id>' header", line.number, 1);
        }
        auto& body = blocks.back().body;
        body.append(line.text);
        body.push_back('\n');
    }
    return blocks;
}

std::vector<CatalogEntry> parse_catalog(std::string_view text)
{
    std::vector<CatalogEntry> entries;
    std::set<std::string> ids;
    for (auto& block : split_catalog(text)) {
        if (!ids.insert(block.id).second) throw DuplicateId("duplicate catalog id '" + block.id + "'");
        entries.push_back({block.id, parse_relation_matrix(block.body, block.header_line + 1)});
    }
    return entries;
}

// ---- tensor documents ------------------------------------------------------

namespace {

[[noreturn]] void shape_error(const std::string& what)
{
    throw ParseError("tensor document: " + what, 0, 0);
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte)
{
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

std::int64_t non_negative(const nlohmann::json& v, const std::string& where)
{
    if (v.is_number_unsigned()) {
        const auto u = v.get<std::uint64_t>();
        if (u > static_cast<std::uint64_t>(INT64_MAX)) shape_error(where + " is out of range");
        return static_cast<std::int64_t>(u);
    }
    if (v.is_number_integer()) {
        const auto i = v.get<std::int64_t>();
        if (i < 0) shape_error(where + " is negative");
        return i;
    }
    shape_error(where + " must be a non-negative integer");
}

}  // namespace

IntersectionTensor parse_tensor(std::string_view text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError(e.what(), line, column);
    }
    if (!doc.is_object()) shape_error("top level must be an object");
    for (const auto& [key, value] : doc.items()) {
        if (key != "d" && key != "order" && key != "p") shape_error("unknown field '" + key + "'");
    }
    for (const char* key : {"d", "order", "p"}) {
        if (!doc.contains(key)) shape_error(std::string("missing field '") + key + "'");
    }
    const auto d = static_cast<std::size_t>(non_negative(doc["d"], "d"));
    const auto order = non_negative(doc["order"], "order");
    if (order < 1) shape_error("order must be positive");

    const auto& p = doc["p"];
    const auto rank = d + 1;
    if (!p.is_array() || p.size() != rank) shape_error("p must be an array of d+1 arrays");
    std::vector<std::int64_t> entries;
    entries.reserve(rank * rank * rank);
    for (std::size_t i = 0; i < rank; ++i) {
        const auto& pi = p[i];
        if (!pi.is_array() || pi.size() != rank) shape_error("p[" + std::to_string(i) + "] must have d+1 entries");
        for (std::size_t j = 0; j < rank; ++j) {
            const auto& pij = pi[j];
            const auto where = "p[" + std::to_string(i) + "][" + std::to_string(j) + "]";
            if (!pij.is_array() || pij.size() != rank) shape_error(where + " must have d+1 entries");
            for (std::size_t k = 0; k < rank; ++k) entries.push_back(non_negative(pij[k], where + "[" + std::to_string(k) + "]"));
        }
    }
    return IntersectionTensor(d, order, std::move(entries));
}

std::string emit_tensor(const IntersectionTensor& t)
{
    nlohmann::ordered_json doc;
    doc["d"] = t.d();
    doc["order"] = t.order();
    auto p = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < t.rank(); ++i) {
        auto pi = nlohmann::ordered_json::array();
        for (std::size_t j = 0; j < t.rank(); ++j) {
            auto pij = nlohmann::ordered_json::array();
            for (std::size_t k = 0; k < t.rank(); ++k) pij.push_back(t(i, j, k));
            pi.push_back(std::move(pij));
        }
        p.push_back(std::move(pi));
    }
    doc["p"] = std::move(p);
    return doc.dump() + "\n";
}

// ---- reports ---------------------------------------------------------------

namespace {

const char* error_kind(EntryError e)
{
    switch (e) {
    case EntryError::none: return "none";
    case EntryError::parse: return "parse";
    case EntryError::validation: return "validation";
    }
    return "?";
}

nlohmann::ordered_json subset_json(const RelationSubset& s)
{
    return s.indices();
}

std::string structured(std::span<const AnalysisReport> reports)
{
    auto doc = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        if (!r.ok()) {
            nlohmann::ordered_json rec;
            rec["id"] = r.id;
            rec["error"] = error_kind(r.error);
            rec["message"] = r.error_message;
            doc.push_back(std::move(rec));
            continue;
        }
        for (const auto& a : r.primes) {
            nlohmann::ordered_json rec;
            rec["id"] = r.id;
            rec["order"] = r.order;
            rec["d"] = r.d;
            rec["valencies"] = r.valencies;
            rec["prime"] = a.prime.value();
            rec["is_quasi_thin"] = a.is_quasi_thin;
            rec["has_thin_thin_residue"] = a.has_thin_thin_residue;
            rec["is_p_prime_valenced"] = a.is_p_prime_valenced;
            rec["thin_radical"] = subset_json(a.thin_radical);
            rec["thin_residue"] = subset_json(a.thin_residue);
            rec["min_singular"] = subset_json(a.min_singular);
            rec["s_p_prime_closure"] = subset_json(a.s_p_prime_closure);
            rec["fixed_space_dim"] = a.fixed_space_dim;
            rec["transitive_oracle"] = a.transitive_oracle;
            if (a.transitive_structural) {
                rec["transitive_structural"] = *a.transitive_structural;
            } else {
                rec["transitive_structural"] = "not-applicable";
            }
            if (a.methods_agree) {
                rec["methods_agree"] = *a.methods_agree;
            } else {
                rec["methods_agree"] = "not-run";
            }
            doc.push_back(std::move(rec));
        }
    }
    return doc.dump(2) + "\n";
}

std::string yes_no(bool b)
{
    return b ? "yes" : "no";
}

std::string text_table(std::span<const AnalysisReport> reports)
{
    const std::vector<std::string> header{"id",      "p",       "|X|",      "d",       "valencies", "q-thin",
                                          "tt-res",  "p'-val",  "radical",  "residue", "min-sing",  "<S_p'>",
                                          "fix-dim", "oracle",  "structural", "agree"};
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> errors;
    for (const auto& r : reports) {
        if (!r.ok()) {
            errors.push_back(r.id + ": " + error_kind(r.error) + " error: " + r.error_message);
            continue;
        }
        std::ostringstream ks;
        for (std::size_t i = 0; i < r.valencies.size(); ++i) ks << (i ? "," : "") << r.valencies[i];
        for (const auto& a : r.primes) {
            std::string structural = "n/a";
            if (a.transitive_structural) {
                structural = std::string(*a.transitive_structural ? "transitive" : "not-transitive") + " (" +
                             std::string(method_name(*a.structural_method)) + ")";
            }
            rows.push_back({r.id, std::to_string(a.prime.value()), std::to_string(r.order), std::to_string(r.d),
                            "[" + ks.str() + "]", yes_no(a.is_quasi_thin), yes_no(a.has_thin_thin_residue),
                            yes_no(a.is_p_prime_valenced), a.thin_radical.to_string(), a.thin_residue.to_string(),
                            a.min_singular.to_string(), a.s_p_prime_closure.to_string(),
                            std::to_string(a.fixed_space_dim), a.transitive_oracle ? "transitive" : "not-transitive",
                            structural, a.methods_agree ? yes_no(*a.methods_agree) : "-"});
        }
    }
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
    }
    std::ostringstream os;
    auto emit_row = [&](const std::vector<std::string>& row) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
        }
        os << line << '\n';
    };
    emit_row(header);
    for (const auto& row : rows) emit_row(row);
    for (const auto& e : errors) os << e << '\n';
    return os.str();
}

}  // namespace

std::string emit_report(std::span<const AnalysisReport> reports, ReportFormat format)
{
    return format == ReportFormat::structured ? structured(reports) : text_table(reports);
}

// ---- files -----------------------------------------------------------------

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    std::ostringstream os;
    os << in.rdbuf();
    if (in.bad()) throw IoError("error reading '" + path.string() + "'");
    return os.str();
}

Scheme load_scheme(std::string_view text, InputFormat format, ValidateOptions options)
{
    if (format == InputFormat::automatic) {
        const auto first = std::find_if(text.begin(), text.end(), [](char c) { return !std::isspace(static_cast<unsigned char>(c)); });
        format = (first != text.end() && *first == '{') ? InputFormat::tensor : InputFormat::rm;
    }
    if (format == InputFormat::tensor) return validate_tensor(parse_tensor(text), options);
    return validate_tensor(tensor_from_relation_matrix(parse_relation_matrix(text)), options);
}

}  // namespace schemekit

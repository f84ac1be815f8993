/**
 * @file ingest.hpp
 * @brief Text formats: relation matrices ("rm"), catalogs of them, the JSON
 *        tensor document, and analysis reports.
 *
 * rm format
 *   Lines starting with '#' and blank lines are ignored. The first remaining
 *   line is n; then n rows of n relation indices separated by spaces/tabs.
 *   Alternatively every row may be a single run of exactly n digits (one
 *   digit per cell); mixing the two styles in one matrix is an error.
 *
 * catalog format
 *   A sequence of blocks. A block starts with a header line "# <id>" and
 *   holds one rm matrix. Inside a catalog, lines starting with "##" are
 *   comments; any other line starting with '#' opens the next block.
 *
 * tensor document
 *   {"d": <int>, "order": <int>, "p": [[[p_00^0, ...], ...], ...]}
 *
 * '\n' and "\r\n" are both accepted; emitted documents use '\n'.
 */
#pragma once

#include "schemekit/core.hpp"
#include "schemekit/report.hpp"

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schemekit {

/// first_line shifts reported line numbers (used for catalog blocks).
RelationMatrix parse_relation_matrix(std::string_view text, std::size_t first_line = 1);

struct CatalogEntry {
    std::string id;
    RelationMatrix matrix;
};

/// One block of a catalog, not yet parsed.
struct CatalogBlock {
    std::string id;
    std::size_t header_line;
    std::string body;
};

/// Splits a catalog into blocks without parsing their matrices. Throws
/// ParseError for content before the first header or an empty id.
std::vector<CatalogBlock> split_catalog(std::string_view text);

/// Throws ParseError, MalformedMatrix, or DuplicateId.
std::vector<CatalogEntry> parse_catalog(std::string_view text);

/// Throws ParseError on syntax or shape errors.
IntersectionTensor parse_tensor(std::string_view text);

/// Compact tensor document followed by '\n'; parse_tensor(emit_tensor(t)) == t.
std::string emit_tensor(const IntersectionTensor& t);

enum class ReportFormat { text, structured };

/// Structured: a JSON array with one record per (entry, prime), in input
/// order. Failed entries produce one record carrying an "error" field.
std::string emit_report(std::span<const AnalysisReport> reports, ReportFormat format);

/// Reads a whole file; throws IoError.
std::string read_file(const std::filesystem::path& path);

enum class InputFormat { automatic, rm, tensor };

/// Parses and validates a single scheme from rm or tensor text. `automatic`
/// picks tensor when the first non-blank character is '{'.
Scheme load_scheme(std::string_view text, InputFormat format = InputFormat::automatic,
                   ValidateOptions options = {});

}  // namespace schemekit

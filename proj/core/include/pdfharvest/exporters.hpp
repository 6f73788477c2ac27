#pragma once

#include <pdfharvest/corpus.hpp>
#include <pdfharvest/record.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace pdfharvest {

enum class ExportFormat { Table, Csv, Json, Ris, BibTex };

std::string_view to_string(ExportFormat format) noexcept;
std::optional<ExportFormat> parse_export_format(std::string_view name) noexcept;

/// Maximum display width (in code points) of each table column.
struct TableBudgets {
    std::size_t docs = 6;
    std::size_t file_name = 30;
    std::size_t year = 6;
    std::size_t recency = 8;
    std::size_t author = 25;
    std::size_t title = 48;
};

/// Shortens `text` to `budget` code points, ending in "..." when cut.
std::string truncate_cell(std::string_view text, std::size_t budget);

/// Columns Docs, File Name, Year, Recency, Author, Title; missing author or
/// title prints as "null". Columns are separated by two spaces.
std::string render_table(std::span<const HarvestRecord> records, const TableBudgets& budgets = {});

/// File-type breakdown followed by field coverage, as plain text.
std::string render_stats(const CorpusStats& stats);

/// RFC 4180: header row, CRLF line ends, quoting where needed.
std::string export_csv(std::span<const HarvestRecord> records);

/// {reference_date, totals, by_type, field_coverage, records, warnings}; absent values are null.
std::string export_json(const CorpusStats& stats, bool include_records = true);
std::string export_record_json(const HarvestRecord& record);

std::string export_ris(std::span<const HarvestRecord> records);

/// One @article per record. Keys come from the file name, restricted to
/// [A-Za-z0-9_-] and made unique with "-2", "-3", ... suffixes.
std::string export_bibtex(std::span<const HarvestRecord> records);

/// Authors as stored in a record (joined with ", "), one per element.
std::vector<std::string> split_authors(std::string_view author);

} // namespace pdfharvest

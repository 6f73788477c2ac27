#include <pdfharvest/exporters.hpp>
#include <pdfharvest/text_encoding.hpp>

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdio>
#include <set>

namespace pdfharvest {

std::string_view to_string(ExportFormat format) noexcept
{
    switch (format) {
    case ExportFormat::Table: return "table";
    case ExportFormat::Csv: return "csv";
    case ExportFormat::Json: return "json";
    case ExportFormat::Ris: return "ris";
    case ExportFormat::BibTex: return "bibtex";
    }
    return "?";
}

std::optional<ExportFormat> parse_export_format(std::string_view name) noexcept
{
    std::string lower;
    for (char c : name)
        lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    for (auto format : { ExportFormat::Table, ExportFormat::Csv, ExportFormat::Json, ExportFormat::Ris, ExportFormat::BibTex }) {
        if (lower == to_string(format))
            return format;
    }
    if (lower == "text" || lower == "txt")
        return ExportFormat::Table;
    if (lower == "bib")
        return ExportFormat::BibTex;
    return std::nullopt;
}

namespace {

/// Line breaks and tabs would break line-oriented formats.
std::string single_line(std::string_view text)
{
    std::string out;
    out.reserve(text.size());
    for (char c : text)
        out += (c == '\n' || c == '\r' || c == '\t') ? ' ' : c;
    return out;
}

std::string pad(std::string_view text, std::size_t width)
{
    std::string out(text);
    auto length = utf8_length(text);
    if (length < width)
        out.append(width - length, ' ');
    return out;
}

void rstrip(std::string& line)
{
    while (!line.empty() && line.back() == ' ')
        line.pop_back();
}

std::string date_text(const std::optional<Timestamp>& ts) { return ts ? format_iso8601(*ts) : std::string {}; }

std::string reference_date_text(const ReferenceDate& ref)
{
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", ref.when.year, ref.when.month, ref.when.day);
    return buf;
}

std::string join(const Warnings& items, std::string_view separator)
{
    std::string out;
    for (auto& item : items) {
        if (!out.empty())
            out += separator;
        out += item;
    }
    return out;
}

nlohmann::ordered_json optional_json(const std::optional<std::string>& value)
{
    return value ? nlohmann::ordered_json(*value) : nlohmann::ordered_json(nullptr);
}

nlohmann::ordered_json record_json(const HarvestRecord& r)
{
    nlohmann::ordered_json j;
    j["doc_index"] = r.doc_index;
    j["file_name"] = r.file_name;
    j["file_location"] = r.file_location;
    j["file_size"] = r.file_size;
    j["file_pages"] = r.file_pages;
    j["year"] = r.year;
    j["recency"] = r.recency;
    j["year_source"] = std::string(to_string(r.year_source));
    j["author"] = optional_json(r.author);
    j["author_source"] = std::string(to_string(r.author_source));
    j["title"] = optional_json(r.title);
    j["title_source"] = std::string(to_string(r.title_source));
    j["keywords"] = optional_json(r.keywords);
    j["creation_date"] = r.creation_date ? nlohmann::ordered_json(format_iso8601(*r.creation_date)) : nlohmann::ordered_json(nullptr);
    j["pdf_version"] = r.pdf_version.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(r.pdf_version);
    j["encrypted"] = r.encrypted;
    j["warnings"] = r.warnings;
    return j;
}

std::string csv_field(std::string_view text)
{
    if (text.find_first_of(",\"\r\n") == std::string_view::npos)
        return std::string(text);
    std::string out = "\"";
    for (char c : text) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string bibtex_escape(std::string_view text)
{
    std::string out;
    for (char c : single_line(text)) {
        switch (c) {
        case '{': out += "{\\textbraceleft}"; break;
        case '}': out += "{\\textbraceright}"; break;
        case '\\': out += "{\\textbackslash}"; break;
        default: out += c;
        }
    }
    return out;
}

bool contains_word_and(std::string_view name)
{
    std::string lower;
    for (char c : name)
        lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return (" " + lower + " ").find(" and ") != std::string::npos;
}

std::string citation_key_base(std::string_view file_name)
{
    auto stem = std::filesystem::path(std::string(file_name)).stem().string();
    std::string key;
    for (std::size_t i = 0; i < stem.size();) {
        unsigned char c = static_cast<unsigned char>(stem[i]);
        if (std::isalnum(c) || c == '_' || c == '-') {
            key += static_cast<char>(c);
            ++i;
            continue;
        }
        // Replace a whole UTF-8 sequence with one underscore.
        std::size_t length = c < 0x80 ? 1 : (c & 0xE0) == 0xC0 ? 2 : (c & 0xF0) == 0xE0 ? 3 : (c & 0xF8) == 0xF0 ? 4 : 1;
        key += '_';
        i += length;
    }
    return key.empty() ? std::string("record") : key;
}

} // namespace

std::string truncate_cell(std::string_view text, std::size_t budget)
{
    if (utf8_length(text) <= budget)
        return std::string(text);
    if (budget <= 3)
        return std::string(budget, '.');
    return utf8_prefix(text, budget - 3) + "...";
}

std::string render_table(std::span<const HarvestRecord> records, const TableBudgets& budgets)
{
    const std::array<std::size_t, 6> budget = { budgets.docs, budgets.file_name, budgets.year, budgets.recency, budgets.author, budgets.title };
    std::vector<std::array<std::string, 6>> rows;
    rows.push_back({ "Docs", "File Name", "Year", "Recency", "Author", "Title" });
    for (auto& r : records) {
        rows.push_back({
            std::to_string(r.doc_index),
            single_line(r.file_name),
            std::to_string(r.year),
            std::to_string(r.recency),
            r.author ? single_line(*r.author) : std::string("null"),
            r.title ? single_line(*r.title) : std::string("null"),
        });
    }

    std::array<std::size_t, 6> width {};
    for (auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            row[c] = truncate_cell(row[c], budget[c]);
            width[c] = std::max(width[c], utf8_length(row[c]));
        }
    }

    std::string out;
    for (auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0)
                line += "  ";
            line += pad(row[c], width[c]);
        }
        rstrip(line);
        out += line;
        out += '\n';
    }
    return out;
}

std::string render_stats(const CorpusStats& stats)
{
    std::string out;
    out += "Reference date: " + reference_date_text(stats.reference_date) + "\n\n";
    out += "File types (" + std::to_string(stats.total_files) + " files)\n";
    std::vector<std::array<std::string, 3>> type_rows { { "Type", "Count", "Percent (%)" } };
    for (auto& [kind, entry] : stats.by_type)
        type_rows.push_back({ std::string(to_string(kind)), std::to_string(entry.count), entry.percent.str() });

    auto emit = [&out](const auto& rows) {
        std::vector<std::size_t> width(rows.front().size(), 0);
        for (auto& row : rows)
            for (std::size_t c = 0; c < row.size(); ++c)
                width[c] = std::max(width[c], utf8_length(row[c]));
        for (auto& row : rows) {
            std::string line;
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c > 0)
                    line += "  ";
                line += pad(row[c], width[c]);
            }
            rstrip(line);
            out += line + '\n';
        }
    };
    emit(type_rows);

    out += "\nField coverage (" + std::to_string(stats.records.size()) + " PDF records)\n";
    if (stats.field_coverage.empty()) {
        out += "no PDF records\n";
        return out;
    }
    std::vector<std::array<std::string, 3>> coverage_rows { { "Field", "Percent (%)", "Note" } };
    for (auto& [field, percent] : stats.field_coverage) {
        std::string label(to_string(field));
        label[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
        bool additional = field == CoverageField::Filename || field == CoverageField::Recency;
        coverage_rows.push_back({ label, percent.str(), additional ? "Additional field" : "Metadata field" });
    }
    emit(coverage_rows);
    return out;
}

std::string export_csv(std::span<const HarvestRecord> records)
{
    static constexpr std::array<std::string_view, 14> header = {
        "doc_index", "file_name", "file_location", "file_size", "file_pages", "year", "recency",
        "year_source", "author", "title", "keywords", "creation_date", "encrypted", "warnings",
    };
    std::string out;
    auto emit_row = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i > 0)
                out += ',';
            out += csv_field(cells[i]);
        }
        out += "\r\n";
    };
    emit_row(std::vector<std::string>(header.begin(), header.end()));
    for (auto& r : records) {
        emit_row({
            std::to_string(r.doc_index),
            r.file_name,
            r.file_location,
            std::to_string(r.file_size),
            std::to_string(r.file_pages),
            std::to_string(r.year),
            std::to_string(r.recency),
            std::string(to_string(r.year_source)),
            r.author.value_or(""),
            r.title.value_or(""),
            r.keywords.value_or(""),
            date_text(r.creation_date),
            r.encrypted ? "true" : "false",
            join(r.warnings, "; "),
        });
    }
    return out;
}

std::string export_json(const CorpusStats& stats, bool include_records)
{
    nlohmann::ordered_json j;
    j["reference_date"] = reference_date_text(stats.reference_date);
    j["totals"] = { { "files", stats.total_files }, { "pdf_records", stats.records.size() } };
    j["by_type"] = nlohmann::ordered_json::object();
    for (auto& [kind, entry] : stats.by_type)
        j["by_type"][std::string(to_string(kind))] = { { "count", entry.count }, { "percent", entry.percent.value() } };
    j["field_coverage"] = nlohmann::ordered_json::object();
    for (auto& [field, percent] : stats.field_coverage)
        j["field_coverage"][std::string(to_string(field))] = percent.value();
    if (include_records) {
        j["records"] = nlohmann::ordered_json::array();
        for (auto& r : stats.records)
            j["records"].push_back(record_json(r));
    }
    j["warnings"] = stats.warnings;
    return j.dump(2) + "\n";
}

std::string export_record_json(const HarvestRecord& record) { return record_json(record).dump(2) + "\n"; }

std::vector<std::string> split_authors(std::string_view author)
{
    std::vector<std::string> names;
    std::size_t pos = 0;
    for (;;) {
        auto next = author.find(", ", pos);
        auto name = trim_ascii(author.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
        if (!name.empty())
            names.emplace_back(name);
        if (next == std::string_view::npos)
            break;
        pos = next + 2;
    }
    return names;
}

std::string export_ris(std::span<const HarvestRecord> records)
{
    std::string out;
    bool first = true;
    for (auto& r : records) {
        if (!first)
            out += '\n';
        first = false;
        out += "TY  - JOUR\n";
        if (r.author) {
            for (auto& name : split_authors(*r.author))
                out += "AU  - " + single_line(name) + '\n';
        }
        if (r.title)
            out += "TI  - " + single_line(*r.title) + '\n';
        out += "PY  - " + std::to_string(r.year) + '\n';
        out += "ER  - \n";
    }
    return out;
}

std::string export_bibtex(std::span<const HarvestRecord> records)
{
    std::string out;
    std::set<std::string> used;
    bool first = true;
    for (auto& r : records) {
        auto base = citation_key_base(r.file_name);
        auto key = base;
        for (int n = 2; used.count(key); ++n)
            key = base + "-" + std::to_string(n);
        used.insert(key);

        if (!first)
            out += '\n';
        first = false;
        out += "@article{" + key + ",\n";
        if (r.author) {
            std::string authors;
            for (auto& name : split_authors(*r.author)) {
                if (!authors.empty())
                    authors += " and ";
                auto escaped = bibtex_escape(name);
                authors += contains_word_and(name) ? "{" + escaped + "}" : escaped;
            }
            out += "  author = {" + authors + "},\n";
        }
        if (r.title)
            out += "  title = {" + bibtex_escape(*r.title) + "},\n";
        out += "  year = {" + std::to_string(r.year) + "}\n";
        out += "}\n";
    }
    return out;
}

} // namespace pdfharvest

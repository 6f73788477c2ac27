#include "cli.hpp"

#include <pdfharvest/corpus.hpp>
#include <pdfharvest/exporters.hpp>
#include <pdfharvest/record.hpp>
#include <pdfharvest/timestamp.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>

namespace pdfharvest::cli {

Environment Environment::from_process()
{
    Environment env;
    if (const char* workers = std::getenv("PDFHARVEST_WORKERS"))
        env.workers = workers;
    return env;
}

namespace {

struct Options {
    std::string input;
    std::string format = "table";
    std::string reference_date;
    bool recursive = true;
    bool magic_bytes = true;
    std::optional<unsigned> workers;
    std::string output;
};

void report_warnings(std::ostream& err, const HarvestRecord& record)
{
    for (auto& w : record.warnings)
        err << "warning: " << record.file_name << ": " << w << '\n';
}

std::optional<unsigned> parse_workers(const std::string& text)
{
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc {} || ptr != text.data() + text.size() || value == 0)
        return std::nullopt;
    return value;
}

int emit(const std::string& text, const Options& options, std::ostream& out, std::ostream& err)
{
    if (options.output.empty()) {
        out << text;
        out.flush();
        return Success;
    }
    std::ofstream file(options.output, std::ios::binary);
    file << text;
    if (!file) {
        err << "error: cannot write " << options.output << '\n';
        return InputError;
    }
    return Success;
}

std::string render_records(std::span<const HarvestRecord> records, ExportFormat format)
{
    switch (format) {
    case ExportFormat::Table: return render_table(records);
    case ExportFormat::Csv: return export_csv(records);
    case ExportFormat::Ris: return export_ris(records);
    case ExportFormat::BibTex: return export_bibtex(records);
    case ExportFormat::Json: break;
    }
    return {};
}

int harvest_command(const Options& options, ExportFormat format, const ReferenceDate& ref, std::ostream& out, std::ostream& err)
{
    try {
        auto kind = classify(options.input, options.magic_bytes);
        if (kind.kind != FileKind::Pdf) {
            err << "error: NotPdf: " << options.input << " is not a PDF file\n";
            return InputError;
        }
        auto record = build_record(options.input, 1, ref);
        if (record.load_error == ErrorCode::NotPdf) {
            report_warnings(err, record);
            err << "error: NotPdf: " << options.input << '\n';
            return InputError;
        }
        report_warnings(err, record);
        if (format == ExportFormat::Json)
            return emit(export_record_json(record), options, out, err);
        return emit(render_records(std::span(&record, 1), format), options, out, err);
    } catch (const HarvestError& e) {
        err << "error: " << e.what() << '\n';
        return InputError;
    }
}

int scan_command(const Options& options, ExportFormat format, const ReferenceDate& ref, bool stats_only, std::ostream& out, std::ostream& err)
{
    ScanOptions scan_options;
    scan_options.recursive = options.recursive;
    scan_options.magic_bytes = options.magic_bytes;
    scan_options.workers = options.workers;
    try {
        auto stats = scan(options.input, ref, scan_options);
        for (auto& w : stats.warnings)
            err << "warning: " << w << '\n';
        for (auto& record : stats.records)
            report_warnings(err, record);
        if (stats_only)
            return emit(format == ExportFormat::Json ? export_json(stats, false) : render_stats(stats), options, out, err);
        if (format == ExportFormat::Json)
            return emit(export_json(stats), options, out, err);
        return emit(render_records(stats.records, format), options, out, err);
    } catch (const HarvestError& e) {
        err << "error: " << e.what() << '\n';
        return InputError;
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env)
{
    CLI::App app { "Harvest bibliographic metadata (document information and XMP) from PDF files.", "pdfharvest" };
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for all subcommands");

    Options options;
    std::optional<unsigned> workers_flag;

    auto add_common = [&](CLI::App* sub, bool directory) {
        if (directory)
            sub->add_option("DIR", options.input, "Directory to scan")->required();
        else
            sub->add_option("FILE", options.input, "PDF file to harvest")->required();
        sub->add_option("-f,--format", options.format, "Output format: table, csv, json, ris, bibtex")->capture_default_str();
        sub->add_option("-r,--reference-date", options.reference_date, "Reference date for recency (YYYY or YYYY-MM-DD); default today");
        sub->add_option("-o,--output", options.output, "Write to this file instead of standard output");
        sub->add_flag("--magic,!--no-magic", options.magic_bytes, "Classify files by %PDF- signature before extension (default on)");
        if (directory) {
            sub->add_flag("--recursive,!--no-recursive", options.recursive, "Descend into subdirectories (default on)");
            sub->add_option("-j,--workers", workers_flag, "Worker threads (default: PDFHARVEST_WORKERS or CPU count)")->check(CLI::PositiveNumber);
        }
    };

    auto* harvest = app.add_subcommand("harvest", "Harvest one PDF file and print its record");
    add_common(harvest, false);
    auto* scan_cmd = app.add_subcommand("scan", "Harvest every PDF under a directory and print the records");
    add_common(scan_cmd, true);
    auto* stats = app.add_subcommand("stats", "Print file-type and field-coverage statistics for a directory");
    add_common(stats, true);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? Success : UsageError;
    }

    auto format = parse_export_format(options.format);
    if (!format || (stats->parsed() && *format != ExportFormat::Table && *format != ExportFormat::Json)) {
        err << "error: unsupported format '" << options.format << "'\n" << app.help();
        return UsageError;
    }

    ReferenceDate ref = ReferenceDate::now();
    if (!options.reference_date.empty()) {
        auto parsed = parse_reference_date(options.reference_date);
        if (!parsed) {
            err << "error: --reference-date must be YYYY or YYYY-MM-DD, got '" << options.reference_date << "'\n" << app.help();
            return UsageError;
        }
        ref = ReferenceDate { *parsed };
    }

    options.workers = workers_flag;
    if (!options.workers && env.workers) {
        options.workers = parse_workers(*env.workers);
        if (!options.workers)
            err << "warning: ignoring PDFHARVEST_WORKERS='" << *env.workers << "'\n";
    }

    if (harvest->parsed())
        return harvest_command(options, *format, ref, out, err);
    return scan_command(options, *format, ref, stats->parsed(), out, err);
}

} // namespace pdfharvest::cli

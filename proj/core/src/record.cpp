#include <pdfharvest/document.hpp>
#include <pdfharvest/record.hpp>
#include <pdfharvest/xmp.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

namespace pdfharvest {

namespace {

Timestamp from_time_t(std::time_t t)
{
    std::tm tm {};
    gmtime_r(&t, &tm);
    return Timestamp { tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec, 0 };
}

bool plausible_year(int year) { return year >= 1000 && year <= 9999; }

std::string read_bytes(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw HarvestError(ErrorCode::IoError, "cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad())
        throw HarvestError(ErrorCode::IoError, "read failed for " + path.string());
    return std::move(buffer).str();
}

} // namespace

std::string_view to_string(YearSource source) noexcept
{
    switch (source) {
    case YearSource::XmpCreateDate: return "XmpCreateDate";
    case YearSource::DocInfoCreationDate: return "DocInfoCreationDate";
    case YearSource::FilesystemMtime: return "FilesystemMtime";
    }
    return "?";
}

ReferenceDate ReferenceDate::now()
{
    return ReferenceDate { from_time_t(std::chrono::system_clock::to_time_t(std::chrono::system_clock::now())) };
}

Timestamp file_mtime(const std::filesystem::path& path)
{
    std::error_code ec;
    auto written = std::filesystem::last_write_time(path, ec);
    if (ec)
        throw HarvestError(ErrorCode::IoError, "cannot stat " + path.string() + ": " + ec.message());
    auto system = std::chrono::file_clock::to_sys(written);
    return from_time_t(std::chrono::system_clock::to_time_t(std::chrono::time_point_cast<std::chrono::system_clock::duration>(system)));
}

YearChoice derive_year(const MergedMetadata& meta, const Timestamp& fs_mtime, Warnings* warnings)
{
    if (auto& created = meta.creation_date; created.value) {
        if (plausible_year(created.value->year)) {
            auto source = created.source == FieldSource::Xmp ? YearSource::XmpCreateDate : YearSource::DocInfoCreationDate;
            return { created.value->year, source };
        }
        warn(warnings, "creation date year " + std::to_string(created.value->year) + " is implausible; using file modification time");
    }
    return { fs_mtime.year, YearSource::FilesystemMtime };
}

int compute_recency(int year, const ReferenceDate& ref, Warnings* warnings)
{
    int recency = ref.year() - year;
    if (recency < 0) {
        warn(warnings, "year " + std::to_string(year) + " is after the reference year " + std::to_string(ref.year()) + "; recency clamped to 0");
        return 0;
    }
    return recency;
}

HarvestRecord build_record(const std::filesystem::path& path, std::uint64_t doc_index, const ReferenceDate& ref)
{
    std::error_code ec;
    auto status = std::filesystem::status(path, ec);
    if (!std::filesystem::is_regular_file(status)) {
        bool missing = status.type() == std::filesystem::file_type::not_found;
        throw HarvestError(ec && !missing ? ErrorCode::IoError : ErrorCode::NotAFile, path.string());
    }

    HarvestRecord record;
    record.doc_index = doc_index;
    auto absolute = std::filesystem::absolute(path, ec).lexically_normal();
    if (ec)
        absolute = path;
    record.file_name = absolute.filename().string();
    record.file_location = absolute.parent_path().string();
    record.file_size = std::filesystem::file_size(path, ec);
    if (ec)
        throw HarvestError(ErrorCode::IoError, "cannot stat " + path.string() + ": " + ec.message());
    auto mtime = file_mtime(path);

    auto& warnings = record.warnings;
    MergedMetadata meta;
    try {
        auto doc = load_document_from_bytes(read_bytes(path), absolute);
        warnings.insert(warnings.end(), doc.load_warnings().begin(), doc.load_warnings().end());
        record.pdf_version = doc.pdf_version();
        record.file_pages = page_count(doc, &warnings);

        auto info = extract_docinfo(doc, &warnings);
        XmpPacket packet;
        if (auto raw = locate_xmp(doc, &warnings)) {
            packet = parse_xmp(*raw);
            warnings.insert(warnings.end(), packet.warnings.begin(), packet.warnings.end());
        }
        meta = merge(to_dublin_core(packet), packet, info);
        warnings.insert(warnings.end(), meta.warnings.begin(), meta.warnings.end());
    } catch (const HarvestError& e) {
        if (e.code() == ErrorCode::IoError || e.code() == ErrorCode::NotAFile)
            throw;
        if (e.code() == ErrorCode::Encrypted)
            record.encrypted = true;
        else
            record.load_error = e.code();
        warnings.push_back(e.what());
        meta = MergedMetadata {};
    } catch (const std::exception& e) {
        record.load_error = ErrorCode::UnrecoverablyCorrupt;
        warnings.push_back(std::string("unexpected parse failure: ") + e.what());
        meta = MergedMetadata {};
    }

    record.title = meta.title.value;
    record.title_source = meta.title.source;
    record.author = meta.author.value;
    record.author_source = meta.author.source;
    record.keywords = meta.keywords.value;
    record.creation_date = meta.creation_date.value;

    auto year = derive_year(meta, mtime, &warnings);
    record.year = year.year;
    record.year_source = year.source;
    record.recency = compute_recency(record.year, ref, &warnings);
    return record;
}

} // namespace pdfharvest

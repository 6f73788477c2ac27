#pragma once

#include <pdfharvest/errors.hpp>
#include <pdfharvest/merge.hpp>
#include <pdfharvest/timestamp.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace pdfharvest {

/// "Now" for recency purposes. One value is shared by every record of a scan.
struct ReferenceDate {
    Timestamp when;

    int year() const noexcept { return when.year; }

    static ReferenceDate now();
    static ReferenceDate of_year(int year)
    {
        Timestamp t;
        t.year = year;
        return ReferenceDate { t };
    }
    bool operator==(const ReferenceDate&) const = default;
};

enum class YearSource { XmpCreateDate, DocInfoCreationDate, FilesystemMtime };

std::string_view to_string(YearSource source) noexcept;

struct HarvestRecord {
    std::uint64_t doc_index = 0;
    std::string file_name;
    std::string file_location;
    std::uint64_t file_size = 0;
    std::uint64_t file_pages = 0;
    int year = 0;
    int recency = 0;
    std::optional<std::string> author;
    std::optional<std::string> title;
    std::optional<std::string> keywords;
    std::optional<Timestamp> creation_date;
    YearSource year_source = YearSource::FilesystemMtime;
    FieldSource title_source = FieldSource::Absent;
    FieldSource author_source = FieldSource::Absent;
    std::string pdf_version;
    bool encrypted = false;
    /// Set when the file could not be parsed as PDF at all.
    std::optional<ErrorCode> load_error;
    Warnings warnings;

    std::filesystem::path path() const { return std::filesystem::path(file_location) / file_name; }
    bool operator==(const HarvestRecord&) const = default;
};

struct YearChoice {
    int year = 0;
    YearSource source = YearSource::FilesystemMtime;
    bool operator==(const YearChoice&) const = default;
};

/// xmp:CreateDate year, else /CreationDate year, else the file's mtime year.
/// Metadata years outside 1000-9999 are skipped with a warning.
YearChoice derive_year(const MergedMetadata& meta, const Timestamp& fs_mtime, Warnings* warnings = nullptr);

/// reference year - year, clamped at 0 (with a warning) for future-dated files.
int compute_recency(int year, const ReferenceDate& ref, Warnings* warnings = nullptr);

/// Modification time of `path` as a UTC timestamp. Throws IoError.
Timestamp file_mtime(const std::filesystem::path& path);

/// Harvests one file. Parse failures degrade to a filesystem-only record with
/// warnings; only a file that cannot be read at all raises (IoError/NotAFile).
HarvestRecord build_record(const std::filesystem::path& path, std::uint64_t doc_index, const ReferenceDate& ref);

} // namespace pdfharvest

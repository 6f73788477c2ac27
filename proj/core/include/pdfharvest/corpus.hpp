#pragma once

#include <pdfharvest/record.hpp>

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pdfharvest {

enum class FileKind { Pdf, Text, Other };
enum class ClassificationBasis { MagicBytes, Extension };

std::string_view to_string(FileKind kind) noexcept;
std::string_view to_string(ClassificationBasis basis) noexcept;

struct FileClass {
    FileKind kind = FileKind::Other;
    ClassificationBasis basis = ClassificationBasis::Extension;
    bool operator==(const FileClass&) const = default;
};

/// "%PDF-" within the first 1024 bytes wins; otherwise the extension decides
/// (.pdf, .txt, anything else). With `use_magic` false only the extension is used.
/// Throws HarvestError(IoError) if the file cannot be read.
FileClass classify(const std::filesystem::path& path, bool use_magic = true);

/// A percentage held as an exact count of 10^-decimals units, rounded half-up.
class Percent {
public:
    Percent() = default;
    /// 100 * part / whole rounded half-up to `decimals` places. whole must be > 0.
    static Percent of(std::uint64_t part, std::uint64_t whole, int decimals);

    std::int64_t units() const noexcept { return units_; }
    int decimals() const noexcept { return decimals_; }
    double value() const noexcept;
    /// Fixed-point text, always with `decimals` places: "45.0", "81.29".
    std::string str() const;

    bool operator==(const Percent&) const = default;

private:
    std::int64_t units_ = 0;
    int decimals_ = 0;
};

enum class CoverageField { Filename, Year, Recency, Author, Title, Keywords };

std::string_view to_string(CoverageField field) noexcept;

struct TypeCount {
    std::uint64_t count = 0;
    Percent percent; ///< two decimals
    bool operator==(const TypeCount&) const = default;
};

struct CorpusStats {
    ReferenceDate reference_date;
    std::uint64_t total_files = 0;
    std::map<FileKind, TypeCount> by_type;
    std::map<CoverageField, Percent> field_coverage; ///< one decimal, PDF records only
    std::vector<HarvestRecord> records;              ///< PDF records in doc_index order
    Warnings warnings;                               ///< scan-level problems

    bool operator==(const CorpusStats&) const = default;
};

struct ScanOptions {
    bool recursive = true;
    bool magic_bytes = true;
    /// Worker threads for harvesting; defaults to the number of CPUs.
    std::optional<unsigned> workers;
};

/// Per-field presence over PDF records, rounded half-up to one decimal.
/// Throws HarvestError(EmptyInput) for an empty list.
std::map<CoverageField, Percent> compute_field_coverage(std::span<const HarvestRecord> records);

/// Sorted full paths of the regular files below `root` (symlinks are not followed).
std::vector<std::filesystem::path> list_files(const std::filesystem::path& root, bool recursive, Warnings* warnings = nullptr);

/// Classifies every file under `root`, harvests the PDFs (in parallel) and
/// computes type and coverage statistics. Output is independent of the
/// worker count. Throws HarvestError(NotADirectory).
CorpusStats scan(const std::filesystem::path& root, const ReferenceDate& ref, const ScanOptions& options = {});

} // namespace pdfharvest

#include <pdfharvest/corpus.hpp>
#include <pdfharvest/document.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <thread>

namespace pdfharvest {

std::string_view to_string(FileKind kind) noexcept
{
    switch (kind) {
    case FileKind::Pdf: return "pdf";
    case FileKind::Text: return "txt";
    case FileKind::Other: return "other";
    }
    return "?";
}

std::string_view to_string(ClassificationBasis basis) noexcept
{
    return basis == ClassificationBasis::MagicBytes ? "MagicBytes" : "Extension";
}

std::string_view to_string(CoverageField field) noexcept
{
    switch (field) {
    case CoverageField::Filename: return "filename";
    case CoverageField::Year: return "year";
    case CoverageField::Recency: return "recency";
    case CoverageField::Author: return "author";
    case CoverageField::Title: return "title";
    case CoverageField::Keywords: return "keywords";
    }
    return "?";
}

namespace {

std::string lowercase_extension(const std::filesystem::path& path)
{
    auto ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return ext;
}

FileClass classify_by_extension(const std::filesystem::path& path)
{
    auto ext = lowercase_extension(path);
    if (ext == ".pdf")
        return { FileKind::Pdf, ClassificationBasis::Extension };
    if (ext == ".txt")
        return { FileKind::Text, ClassificationBasis::Extension };
    return { FileKind::Other, ClassificationBasis::Extension };
}

HarvestRecord unreadable_record(const std::filesystem::path& path, std::uint64_t doc_index, const ReferenceDate& ref, const std::string& why)
{
    HarvestRecord record;
    record.doc_index = doc_index;
    record.file_name = path.filename().string();
    record.file_location = path.parent_path().string();
    record.load_error = ErrorCode::IoError;
    record.warnings.push_back(why);
    // Without a readable file the reference year is the only year available.
    record.year = ref.year();
    record.year_source = YearSource::FilesystemMtime;
    record.warnings.push_back("file could not be read; year set to the reference year");
    record.recency = 0;
    return record;
}

} // namespace

FileClass classify(const std::filesystem::path& path, bool use_magic)
{
    if (!use_magic)
        return classify_by_extension(path);
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw HarvestError(ErrorCode::IoError, "cannot open " + path.string());
    std::string head(1024, '\0');
    in.read(head.data(), static_cast<std::streamsize>(head.size()));
    head.resize(static_cast<std::size_t>(in.gcount()));
    if (find_pdf_header(head))
        return { FileKind::Pdf, ClassificationBasis::MagicBytes };
    return classify_by_extension(path);
}

Percent Percent::of(std::uint64_t part, std::uint64_t whole, int decimals)
{
    Percent p;
    p.decimals_ = decimals;
    if (whole == 0)
        return p;
    std::uint64_t scale = 100;
    for (int i = 0; i < decimals; ++i)
        scale *= 10;
    // round(part * scale / whole) with halves going up, in integers.
    p.units_ = static_cast<std::int64_t>((2 * part * scale + whole) / (2 * whole));
    return p;
}

double Percent::value() const noexcept
{
    double divisor = 1;
    for (int i = 0; i < decimals_; ++i)
        divisor *= 10;
    return static_cast<double>(units_) / divisor;
}

std::string Percent::str() const
{
    std::int64_t divisor = 1;
    for (int i = 0; i < decimals_; ++i)
        divisor *= 10;
    auto text = std::to_string(units_ / divisor);
    if (decimals_ > 0) {
        auto fraction = std::to_string(units_ % divisor);
        text += '.' + std::string(static_cast<std::size_t>(decimals_) - fraction.size(), '0') + fraction;
    }
    return text;
}

std::map<CoverageField, Percent> compute_field_coverage(std::span<const HarvestRecord> records)
{
    if (records.empty())
        throw HarvestError(ErrorCode::EmptyInput, "no PDF records to compute coverage over");
    std::map<CoverageField, std::uint64_t> present;
    for (auto field : { CoverageField::Filename, CoverageField::Year, CoverageField::Recency, CoverageField::Author, CoverageField::Title, CoverageField::Keywords })
        present[field] = 0;
    for (auto& r : records) {
        present[CoverageField::Filename] += !r.file_name.empty();
        present[CoverageField::Year] += r.year != 0;
        // Recency is defined whenever the year is.
        present[CoverageField::Recency] += r.year != 0;
        present[CoverageField::Author] += r.author.has_value();
        present[CoverageField::Title] += r.title.has_value();
        present[CoverageField::Keywords] += r.keywords.has_value();
    }
    std::map<CoverageField, Percent> coverage;
    for (auto& [field, count] : present)
        coverage[field] = Percent::of(count, records.size(), 1);
    return coverage;
}

std::vector<std::filesystem::path> list_files(const std::filesystem::path& root, bool recursive, Warnings* warnings)
{
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    std::error_code ec;
    auto consider = [&](const fs::directory_entry& entry) {
        std::error_code status_ec;
        auto status = entry.symlink_status(status_ec);
        if (!status_ec && fs::is_regular_file(status))
            files.push_back(entry.path());
    };
    if (recursive) {
        fs::recursive_directory_iterator it(root, fs::directory_options::skip_permission_denied, ec), end;
        for (; !ec && it != end; it.increment(ec))
            consider(*it);
    } else {
        fs::directory_iterator it(root, fs::directory_options::skip_permission_denied, ec), end;
        for (; !ec && it != end; it.increment(ec))
            consider(*it);
    }
    if (ec)
        warn(warnings, "directory walk stopped early: " + ec.message());
    std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) { return a.string() < b.string(); });
    return files;
}

CorpusStats scan(const std::filesystem::path& root, const ReferenceDate& ref, const ScanOptions& options)
{
    std::error_code ec;
    if (!std::filesystem::is_directory(root, ec))
        throw HarvestError(ErrorCode::NotADirectory, root.string());

    CorpusStats stats;
    stats.reference_date = ref;
    auto base = std::filesystem::absolute(root, ec).lexically_normal();
    if (ec)
        base = root;
    auto files = list_files(base, options.recursive, &stats.warnings);
    stats.total_files = files.size();

    std::vector<std::filesystem::path> pdfs;
    for (auto& file : files) {
        FileClass kind;
        try {
            kind = classify(file, options.magic_bytes);
        } catch (const HarvestError& e) {
            stats.warnings.push_back(e.what());
            kind = classify_by_extension(file);
        }
        stats.by_type[kind.kind].count += 1;
        if (kind.kind == FileKind::Pdf)
            pdfs.push_back(file);
    }
    for (auto& [kind, entry] : stats.by_type)
        entry.percent = Percent::of(entry.count, stats.total_files, 2);

    stats.records.resize(pdfs.size());
    unsigned workers = options.workers.value_or(std::max(1u, std::thread::hardware_concurrency()));
    workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(std::max<std::size_t>(1, pdfs.size())));

    std::atomic<std::size_t> next { 0 };
    auto work = [&]() {
        for (std::size_t i = next++; i < pdfs.size(); i = next++) {
            try {
                stats.records[i] = build_record(pdfs[i], i + 1, ref);
            } catch (const std::exception& e) {
                stats.records[i] = unreadable_record(pdfs[i], i + 1, ref, e.what());
            }
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work);
    }

    if (!stats.records.empty())
        stats.field_coverage = compute_field_coverage(stats.records);
    return stats;
}

} // namespace pdfharvest

#pragma once

#include <pdfharvest/errors.hpp>
#include <pdfharvest/pdf_object.hpp>

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace pdfharvest {

struct XrefEntry {
    enum class Kind { Free, InFile, Compressed };

    Kind kind = Kind::Free;
    /// InFile: byte offset of "N G obj". Compressed: number of the containing object stream.
    std::uint64_t offset = 0;
    /// InFile/Free: generation number. Compressed: index inside the object stream.
    std::uint32_t generation = 0;

    bool in_use() const noexcept { return kind != Kind::Free; }
    bool operator==(const XrefEntry&) const = default;
};

struct XrefTable {
    std::map<std::uint32_t, XrefEntry> entries;
    PdfDictionary trailer;
};

/// A parsed PDF file. Immutable after load_document() returns; copies share
/// the underlying bytes and object cache, so it is cheap to pass around and
/// safe to read from several threads.
class RawDocument {
public:
    const std::filesystem::path& path() const noexcept { return path_; }
    std::uint64_t file_size() const noexcept { return bytes_ ? bytes_->size() : 0; }
    /// "1.7" style version from the %PDF- header; empty when the header is missing.
    const std::string& pdf_version() const noexcept { return version_; }
    const XrefTable& xref() const noexcept { return xref_; }
    const PdfDictionary& trailer() const noexcept { return xref_.trailer; }
    /// True when the cross-reference data was rebuilt by scanning for objects.
    bool reconstructed() const noexcept { return reconstructed_; }
    const Warnings& load_warnings() const noexcept { return warnings_; }

    /// Object cache, keyed by object number.
    const std::map<std::uint32_t, PdfObject>& objects() const noexcept { return *objects_; }
    const PdfObject* object(std::uint32_t number) const;

    std::string_view bytes() const noexcept { return bytes_ ? std::string_view(*bytes_) : std::string_view {}; }

private:
    friend class DocumentLoader;

    std::filesystem::path path_;
    std::shared_ptr<const std::string> bytes_;
    std::string version_;
    XrefTable xref_;
    bool reconstructed_ = false;
    Warnings warnings_;
    std::shared_ptr<const std::map<std::uint32_t, PdfObject>> objects_;
};

/// Reads and parses a PDF file. Cross-reference data is taken from the
/// startxref chain (classic tables, xref streams, /Prev updates) and rebuilt
/// from "N G obj" markers when that fails.
/// Throws HarvestError: NotAFile, NotPdf, Encrypted, UnrecoverablyCorrupt, IoError.
RawDocument load_document(const std::filesystem::path& path);

/// Same as load_document() for bytes already in memory; `path` is informational.
RawDocument load_document_from_bytes(std::string bytes, std::filesystem::path path = {});

/// Follows references (up to 32 hops). A reference to a free or absent
/// object resolves to null and adds a warning. Throws ReferenceCycle.
PdfObject resolve(const RawDocument& doc, const PdfObject& object, Warnings* warnings = nullptr);

/// Looks up `key` in `dict` and resolves the value; null when absent.
PdfObject resolve_entry(const RawDocument& doc, const PdfDictionary& dict, std::string_view key, Warnings* warnings = nullptr);

/// Applies the stream's filter chain. Throws UnsupportedFilter or CorruptStream.
std::string decode_stream(const RawDocument& doc, const PdfStream& stream);

/// Trailer /Root, resolved; null when missing.
PdfObject catalog(const RawDocument& doc, Warnings* warnings = nullptr);

/// Number of pages: /Count of the root page node, otherwise the number of
/// leaf pages reachable through /Kids; 0 with a warning when neither works.
std::uint64_t page_count(const RawDocument& doc, Warnings* warnings = nullptr);

/// Position of "%PDF-" within the first 1024 bytes.
std::optional<std::size_t> find_pdf_header(std::string_view bytes);

} // namespace pdfharvest

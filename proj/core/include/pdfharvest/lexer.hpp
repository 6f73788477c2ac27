#pragma once

#include <pdfharvest/pdf_object.hpp>

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string_view>

namespace pdfharvest {

/// Malformed PDF syntax at a known byte position.
class SyntaxError : public std::runtime_error {
public:
    SyntaxError(std::size_t position, const std::string& what)
        : std::runtime_error(what + " at offset " + std::to_string(position))
        , position_(position)
    {
    }
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

constexpr bool is_pdf_whitespace(char c) noexcept
{
    return c == ' ' || c == '\n' || c == '\r' || c == '\t' || c == '\f' || c == '\0';
}

constexpr bool is_pdf_delimiter(char c) noexcept
{
    switch (c) {
    case '(': case ')': case '<': case '>': case '[': case ']':
    case '{': case '}': case '/': case '%':
        return true;
    default:
        return false;
    }
}

constexpr bool is_pdf_regular(char c) noexcept { return !is_pdf_whitespace(c) && !is_pdf_delimiter(c); }

struct IndirectObject {
    PdfReference ref;
    PdfObject object;
    std::size_t end = 0; ///< offset just past `endobj` (or the object if endobj is missing)
};

/// Recursive-descent reader for PDF object syntax over an in-memory buffer.
/// Comments are treated as whitespace everywhere.
class ObjectParser {
public:
    /// Looks up the integer value of an indirect /Length while a stream is parsed.
    using LengthResolver = std::function<std::optional<std::int64_t>(PdfReference)>;

    explicit ObjectParser(std::string_view data, std::size_t position = 0)
        : data_(data)
        , pos_(position)
    {
    }

    std::size_t position() const noexcept { return pos_; }
    void seek(std::size_t position) noexcept { pos_ = position; }
    bool at_end() noexcept;

    void skip_whitespace();

    /// Parses one direct object (references are returned unresolved).
    PdfObject parse_object();

    /// Parses "N G obj <object> [stream...endstream] endobj" at the current position.
    IndirectObject parse_indirect_object(const LengthResolver& resolve_length = {});

    /// Reads an unsigned decimal integer token; nullopt (position unchanged) if none.
    std::optional<std::uint64_t> read_unsigned();

    /// Consumes `keyword` if it is the next token.
    bool accept_keyword(std::string_view keyword);

private:
    PdfObject parse_after_dictionary(PdfDictionary dict, const LengthResolver& resolve_length);
    PdfObject parse_number_or_reference();
    PdfString parse_literal_string();
    PdfString parse_hex_string();
    PdfName parse_name();
    PdfArray parse_array();
    PdfDictionary parse_dictionary();
    std::string_view peek_keyword() const;

    std::string_view data_;
    std::size_t pos_;
    int depth_ = 0;
};

/// Parses a single object from text; convenience for tests and tools.
PdfObject parse_object_text(std::string_view text);

} // namespace pdfharvest

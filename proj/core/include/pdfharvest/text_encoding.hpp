#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace pdfharvest {

/// Decodes a PDF text string to UTF-8: UTF-16BE when it starts with FE FF,
/// UTF-8 when it starts with EF BB BF, PDFDocEncoding otherwise.
std::string decode_pdf_text(std::string_view bytes);

std::string pdfdoc_to_utf8(std::string_view bytes);
std::string utf16be_to_utf8(std::string_view bytes);

void append_utf8(std::string& out, char32_t code_point);

/// Number of Unicode scalar values in a UTF-8 string (invalid bytes count as one each).
std::size_t utf8_length(std::string_view text);

/// First `count` code points of `text`.
std::string utf8_prefix(std::string_view text, std::size_t count);

/// Trims ASCII whitespace from both ends.
std::string_view trim_ascii(std::string_view text);

} // namespace pdfharvest

#pragma once

#include <pdfharvest/document.hpp>
#include <pdfharvest/timestamp.hpp>

#include <optional>
#include <string>

namespace pdfharvest {

/// The trailer /Info dictionary, decoded to UTF-8. Empty strings are absent.
struct DocInfoRecord {
    std::optional<std::string> title;
    std::optional<std::string> author;
    std::optional<std::string> subject;
    std::optional<std::string> keywords;
    std::optional<std::string> creator_tool;
    std::optional<std::string> producer;
    std::optional<Timestamp> creation_date;
    std::optional<Timestamp> mod_date;

    bool operator==(const DocInfoRecord&) const = default;
};

/// Never throws for malformed values: they become absent and add a warning.
DocInfoRecord extract_docinfo(const RawDocument& doc, Warnings* warnings = nullptr);

} // namespace pdfharvest

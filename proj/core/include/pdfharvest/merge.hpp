#pragma once

#include <pdfharvest/docinfo.hpp>
#include <pdfharvest/dublin_core.hpp>
#include <pdfharvest/timestamp.hpp>
#include <pdfharvest/xmp.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace pdfharvest {

enum class FieldSource { Xmp, DocInfo, Filesystem, Absent };

std::string_view to_string(FieldSource source) noexcept;

/// A value together with the carrier it was taken from.
template <typename T>
struct Sourced {
    std::optional<T> value;
    FieldSource source = FieldSource::Absent;

    bool has_value() const noexcept { return value.has_value(); }
    bool operator==(const Sourced&) const = default;
};

struct MergedMetadata {
    Sourced<std::string> title;
    Sourced<std::string> author;
    Sourced<std::string> subject;
    Sourced<std::string> keywords;
    Sourced<Timestamp> creation_date;
    Sourced<Timestamp> mod_date;
    Warnings warnings;

    bool operator==(const MergedMetadata& other) const
    {
        return title == other.title && author == other.author && subject == other.subject && keywords == other.keywords
            && creation_date == other.creation_date && mod_date == other.mod_date;
    }
};

/// Field-by-field merge with XMP taking precedence over the /Info dictionary:
///   title         dc:title (x-default first)              else /Title
///   author        dc:creator items joined with ", "       else /Author
///   subject       dc:description                          else /Subject
///   keywords      pdf:Keywords, else dc:subject joined "; " else /Keywords
///   creation_date xmp:CreateDate                          else /CreationDate
///   mod_date      xmp:ModifyDate                          else /ModDate
MergedMetadata merge(const DublinCoreRecord& dc, const XmpPacket& xmp, const DocInfoRecord& info);

} // namespace pdfharvest

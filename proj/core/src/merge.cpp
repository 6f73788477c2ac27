#include <pdfharvest/merge.hpp>
#include <pdfharvest/text_encoding.hpp>

namespace pdfharvest {

std::string_view to_string(FieldSource source) noexcept
{
    switch (source) {
    case FieldSource::Xmp: return "XMP";
    case FieldSource::DocInfo: return "DocInfo";
    case FieldSource::Filesystem: return "Filesystem";
    case FieldSource::Absent: return "Absent";
    }
    return "?";
}

namespace {

std::optional<std::string> non_empty(std::string_view text)
{
    auto trimmed = trim_ascii(text);
    if (trimmed.empty())
        return std::nullopt;
    return std::string(trimmed);
}

std::optional<std::string> joined(const std::optional<XmpValue>& value, std::string_view separator)
{
    if (!value)
        return std::nullopt;
    std::string out;
    for (auto& item : xmp_texts(*value)) {
        auto text = non_empty(item);
        if (!text)
            continue;
        if (!out.empty())
            out += separator;
        out += *text;
    }
    return non_empty(out);
}

std::optional<std::string> first(const std::optional<XmpValue>& value)
{
    if (!value)
        return std::nullopt;
    for (auto& item : xmp_texts(*value)) {
        if (auto text = non_empty(item))
            return text;
    }
    return std::nullopt;
}

Sourced<std::string> pick(std::optional<std::string> from_xmp, const std::optional<std::string>& from_info)
{
    if (from_xmp)
        return { std::move(from_xmp), FieldSource::Xmp };
    if (from_info)
        return { from_info, FieldSource::DocInfo };
    return {};
}

std::optional<Timestamp> xmp_date(const XmpPacket& xmp, std::string_view name, Warnings& warnings)
{
    auto* value = xmp.find(xmp_ns::xmp_basic, name);
    if (!value)
        return std::nullopt;
    auto text = xmp_first_text(*value);
    if (!text || trim_ascii(*text).empty())
        return std::nullopt;
    try {
        return parse_iso8601(*text);
    } catch (const HarvestError& e) {
        warnings.push_back("xmp:" + std::string(name) + ": " + e.what());
        return std::nullopt;
    }
}

Sourced<Timestamp> pick_date(std::optional<Timestamp> from_xmp, const std::optional<Timestamp>& from_info)
{
    if (from_xmp)
        return { from_xmp, FieldSource::Xmp };
    if (from_info)
        return { from_info, FieldSource::DocInfo };
    return {};
}

} // namespace

MergedMetadata merge(const DublinCoreRecord& dc, const XmpPacket& xmp, const DocInfoRecord& info)
{
    MergedMetadata merged;
    merged.title = pick(first(dc.title()), info.title);
    merged.author = pick(joined(dc.creator(), ", "), info.author);
    merged.subject = pick(first(dc.description()), info.subject);

    std::optional<std::string> keywords;
    if (auto* pdf_keywords = xmp.find(xmp_ns::adobe_pdf, "Keywords"))
        keywords = first(*pdf_keywords);
    if (!keywords)
        keywords = joined(dc.subject(), "; ");
    merged.keywords = pick(std::move(keywords), info.keywords);

    merged.creation_date = pick_date(xmp_date(xmp, "CreateDate", merged.warnings), info.creation_date);
    merged.mod_date = pick_date(xmp_date(xmp, "ModifyDate", merged.warnings), info.mod_date);
    return merged;
}

} // namespace pdfharvest

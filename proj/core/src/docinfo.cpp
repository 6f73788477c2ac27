#include <pdfharvest/docinfo.hpp>
#include <pdfharvest/text_encoding.hpp>

namespace pdfharvest {

namespace {

std::optional<std::string> text_entry(const RawDocument& doc, const PdfDictionary& info, std::string_view key, Warnings* warnings)
{
    PdfObject value;
    try {
        value = resolve_entry(doc, info, key, warnings);
    } catch (const HarvestError& e) {
        warn(warnings, "/Info /" + std::string(key) + ": " + e.what());
        return std::nullopt;
    }
    if (value.is_null())
        return std::nullopt;
    std::string text;
    if (auto* s = value.as_string()) {
        text = decode_pdf_text(s->bytes);
    } else if (auto* n = value.as_name()) {
        text = n->value;
    } else {
        warn(warnings, "/Info /" + std::string(key) + " is a " + std::string(to_string(value.kind())) + ", not a string");
        return std::nullopt;
    }
    auto trimmed = trim_ascii(text);
    if (trimmed.empty())
        return std::nullopt;
    return std::string(trimmed);
}

std::optional<Timestamp> date_entry(const RawDocument& doc, const PdfDictionary& info, std::string_view key, Warnings* warnings)
{
    auto text = text_entry(doc, info, key, warnings);
    if (!text)
        return std::nullopt;
    try {
        return parse_pdf_date(*text);
    } catch (const HarvestError& e) {
        warn(warnings, "/Info /" + std::string(key) + ": " + e.what());
        return std::nullopt;
    }
}

} // namespace

DocInfoRecord extract_docinfo(const RawDocument& doc, Warnings* warnings)
{
    DocInfoRecord record;
    PdfObject info;
    try {
        info = resolve_entry(doc, doc.trailer(), "Info", warnings);
    } catch (const HarvestError& e) {
        warn(warnings, std::string("/Info: ") + e.what());
        return record;
    }
    auto* dict = info.as_dictionary();
    if (!dict) {
        if (!info.is_null())
            warn(warnings, "trailer /Info is not a dictionary");
        return record;
    }
    record.title = text_entry(doc, *dict, "Title", warnings);
    record.author = text_entry(doc, *dict, "Author", warnings);
    record.subject = text_entry(doc, *dict, "Subject", warnings);
    record.keywords = text_entry(doc, *dict, "Keywords", warnings);
    record.creator_tool = text_entry(doc, *dict, "Creator", warnings);
    record.producer = text_entry(doc, *dict, "Producer", warnings);
    record.creation_date = date_entry(doc, *dict, "CreationDate", warnings);
    record.mod_date = date_entry(doc, *dict, "ModDate", warnings);
    return record;
}

} // namespace pdfharvest

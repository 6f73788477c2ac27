#pragma once

#include <pdfharvest/document.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace pdfharvest {

namespace xmp_ns {
inline constexpr std::string_view rdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view dublin_core = "http://purl.org/dc/elements/1.1/";
inline constexpr std::string_view xmp_basic = "http://ns.adobe.com/xap/1.0/";
inline constexpr std::string_view adobe_pdf = "http://ns.adobe.com/pdf/1.3/";
inline constexpr std::string_view xml = "http://www.w3.org/XML/1998/namespace";
} // namespace xmp_ns

struct XmpSimple {
    std::string text;
    bool operator==(const XmpSimple&) const = default;
};
struct XmpSeq {
    std::vector<std::string> items;
    bool operator==(const XmpSeq&) const = default;
};
struct XmpBag {
    std::vector<std::string> items;
    bool operator==(const XmpBag&) const = default;
};
/// Language alternatives; the x-default entry, when present, comes first.
struct XmpAlt {
    std::vector<std::pair<std::string, std::string>> items; ///< (language, text)
    bool operator==(const XmpAlt&) const = default;
};

using XmpValue = std::variant<XmpSimple, XmpSeq, XmpBag, XmpAlt>;

/// Text items of any value kind, in stored order.
std::vector<std::string> xmp_texts(const XmpValue& value);

/// First text item, if any.
std::optional<std::string> xmp_first_text(const XmpValue& value);

struct XmpProperty {
    std::string namespace_uri;
    std::string name;
    XmpValue value;
    bool operator==(const XmpProperty&) const = default;
};

struct XmpPacket {
    std::string raw_xml;
    bool well_formed = false;
    std::vector<XmpProperty> properties;
    Warnings warnings;

    const XmpValue* find(std::string_view namespace_uri, std::string_view name) const;
};

/// Extracts the packet bytes: the catalog's /Metadata stream when present,
/// otherwise the last "<?xpacket begin ... <?xpacket end ...?>" found in the raw file.
std::optional<std::string> locate_xmp(const RawDocument& doc, Warnings* warnings = nullptr);

/// Sentinel scan over raw bytes; prefers a packet that carries Dublin Core.
std::optional<std::string> scan_for_xmp_packet(std::string_view bytes);

/// Parses RDF/XML. Malformed XML yields well_formed == false and no properties.
/// A property repeated across rdf:Description blocks keeps the last value.
XmpPacket parse_xmp(std::string_view raw);

} // namespace pdfharvest

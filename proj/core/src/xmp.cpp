#include <pdfharvest/xmp.hpp>

#include <expat.h>

#include <algorithm>

#include <memory>

namespace pdfharvest {

std::vector<std::string> xmp_texts(const XmpValue& value)
{
    struct Visitor {
        std::vector<std::string> operator()(const XmpSimple& v) const { return { v.text }; }
        std::vector<std::string> operator()(const XmpSeq& v) const { return v.items; }
        std::vector<std::string> operator()(const XmpBag& v) const { return v.items; }
        std::vector<std::string> operator()(const XmpAlt& v) const
        {
            std::vector<std::string> out;
            for (auto& [lang, text] : v.items)
                out.push_back(text);
            return out;
        }
    };
    return std::visit(Visitor {}, value);
}

std::optional<std::string> xmp_first_text(const XmpValue& value)
{
    auto texts = xmp_texts(value);
    if (texts.empty())
        return std::nullopt;
    return texts.front();
}

const XmpValue* XmpPacket::find(std::string_view namespace_uri, std::string_view name) const
{
    for (auto& p : properties) {
        if (p.namespace_uri == namespace_uri && p.name == name)
            return &p.value;
    }
    return nullptr;
}

std::optional<std::string> scan_for_xmp_packet(std::string_view bytes)
{
    std::optional<std::string_view> last;
    std::optional<std::string_view> last_with_dc;
    std::size_t pos = 0;
    for (;;) {
        auto begin = bytes.find("<?xpacket begin", pos);
        if (begin == std::string_view::npos)
            break;
        auto end_pi = bytes.find("<?xpacket end", begin);
        if (end_pi == std::string_view::npos)
            break;
        auto close = bytes.find("?>", end_pi);
        if (close == std::string_view::npos)
            break;
        auto packet = bytes.substr(begin, close + 2 - begin);
        // A nested begin means the first one was unterminated; restart there.
        auto nested = packet.find("<?xpacket begin", 1);
        if (nested != std::string_view::npos) {
            pos = begin + nested;
            continue;
        }
        last = packet;
        if (packet.find(xmp_ns::dublin_core) != std::string_view::npos)
            last_with_dc = packet;
        pos = close + 2;
    }
    if (last_with_dc)
        return std::string(*last_with_dc);
    if (last)
        return std::string(*last);
    return std::nullopt;
}

std::optional<std::string> locate_xmp(const RawDocument& doc, Warnings* warnings)
{
    try {
        auto root = catalog(doc, warnings);
        if (auto* root_dict = root.as_dictionary()) {
            auto metadata = resolve_entry(doc, *root_dict, "Metadata", warnings);
            if (auto* stream = metadata.as_stream()) {
                auto subtype = stream->dict.name_of("Subtype");
                if (!subtype || *subtype == "XML")
                    return decode_stream(doc, *stream);
                warn(warnings, "catalog /Metadata has /Subtype /" + std::string(*subtype));
            } else if (!metadata.is_null()) {
                warn(warnings, "catalog /Metadata is not a stream");
            }
        }
    } catch (const HarvestError& e) {
        warn(warnings, std::string("catalog /Metadata: ") + e.what());
    }
    return scan_for_xmp_packet(doc.bytes());
}

namespace {

constexpr char ns_separator = '\x01';

struct QName {
    std::string_view uri;
    std::string_view local;
};

QName split_name(const XML_Char* name)
{
    std::string_view full(name);
    auto sep = full.find(ns_separator);
    if (sep == std::string_view::npos)
        return { {}, full };
    return { full.substr(0, sep), full.substr(sep + 1) };
}

bool is_rdf(const QName& q, std::string_view local) { return q.uri == xmp_ns::rdf && q.local == local; }

class RdfCollector {
public:
    explicit RdfCollector(XmpPacket& packet)
        : packet_(packet)
    {
    }

    void start(const XML_Char* name, const XML_Char** attributes)
    {
        auto q = split_name(name);
        Frame::Role parent = frames_.empty() ? Frame::Role::Outside : frames_.back().role;
        Frame frame;

        switch (parent) {
        case Frame::Role::Outside:
            frame.role = is_rdf(q, "RDF") ? Frame::Role::Rdf : Frame::Role::Outside;
            break;
        case Frame::Role::Rdf:
            // Any node element directly inside rdf:RDF describes the resource.
            frame.role = Frame::Role::Description;
            for (auto a = attributes; a && *a; a += 2) {
                auto attr = split_name(a[0]);
                if (attr.uri.empty() || attr.uri == xmp_ns::rdf || attr.uri == xmp_ns::xml)
                    continue;
                store(std::string(attr.uri), std::string(attr.local), XmpSimple { a[1] });
            }
            break;
        case Frame::Role::Description:
            frame.role = Frame::Role::Property;
            frame.uri = q.uri;
            frame.local = q.local;
            for (auto a = attributes; a && *a; a += 2) {
                if (is_rdf(split_name(a[0]), "resource"))
                    frame.resource = a[1];
            }
            break;
        case Frame::Role::Property:
            if (is_rdf(q, "Seq") || is_rdf(q, "Bag") || is_rdf(q, "Alt")) {
                frame.role = Frame::Role::Container;
                auto& property = frames_.back();
                property.container = q.local == "Seq" ? ContainerKind::Seq : q.local == "Bag" ? ContainerKind::Bag : ContainerKind::Alt;
            } else {
                frame.role = Frame::Role::Nested;
                frames_.back().has_children = true;
            }
            break;
        case Frame::Role::Container:
            if (is_rdf(q, "li")) {
                frame.role = Frame::Role::Item;
                for (auto a = attributes; a && *a; a += 2) {
                    auto attr = split_name(a[0]);
                    if (attr.uri == xmp_ns::xml && attr.local == "lang")
                        frame.language = a[1];
                }
            } else {
                frame.role = Frame::Role::Nested;
            }
            break;
        case Frame::Role::Item:
        case Frame::Role::Nested:
            frame.role = Frame::Role::Nested;
            break;
        }
        frames_.push_back(std::move(frame));
    }

    void end()
    {
        if (frames_.empty())
            return;
        Frame frame = std::move(frames_.back());
        frames_.pop_back();

        if (frame.role == Frame::Role::Item) {
            for (auto it = frames_.rbegin(); it != frames_.rend(); ++it) {
                if (it->role == Frame::Role::Property) {
                    it->items.emplace_back(std::move(frame.language), std::move(frame.text));
                    break;
                }
            }
        } else if (frame.role == Frame::Role::Property) {
            store(std::move(frame.uri), std::move(frame.local), finish(frame));
        }
    }

    void text(std::string_view chunk)
    {
        for (auto it = frames_.rbegin(); it != frames_.rend(); ++it) {
            if (it->role == Frame::Role::Item || it->role == Frame::Role::Property) {
                it->text.append(chunk);
                return;
            }
            if (it->role != Frame::Role::Nested)
                return;
        }
    }

private:
    enum class ContainerKind { None, Seq, Bag, Alt };

    struct Frame {
        enum class Role { Outside, Rdf, Description, Property, Container, Item, Nested };
        Role role = Role::Outside;
        std::string uri;
        std::string local;
        std::string text;
        std::string language;
        std::optional<std::string> resource;
        ContainerKind container = ContainerKind::None;
        bool has_children = false;
        std::vector<std::pair<std::string, std::string>> items;
    };

    static XmpValue finish(Frame& frame)
    {
        switch (frame.container) {
        case ContainerKind::Seq:
        case ContainerKind::Bag: {
            std::vector<std::string> texts;
            for (auto& item : frame.items)
                texts.push_back(std::move(item.second));
            if (frame.container == ContainerKind::Seq)
                return XmpSeq { std::move(texts) };
            return XmpBag { std::move(texts) };
        }
        case ContainerKind::Alt: {
            XmpAlt alt { std::move(frame.items) };
            auto x_default = std::find_if(alt.items.begin(), alt.items.end(), [](auto& item) { return item.first == "x-default"; });
            if (x_default != alt.items.end())
                std::rotate(alt.items.begin(), x_default, x_default + 1);
            return alt;
        }
        case ContainerKind::None:
            break;
        }
        if (frame.resource)
            return XmpSimple { *frame.resource };
        if (frame.has_children) {
            // Structured value: keep its text content, whitespace-trimmed.
            auto first = frame.text.find_first_not_of(" \t\r\n");
            auto last = frame.text.find_last_not_of(" \t\r\n");
            return XmpSimple { first == std::string::npos ? std::string {} : frame.text.substr(first, last - first + 1) };
        }
        return XmpSimple { std::move(frame.text) };
    }

    void store(std::string uri, std::string local, XmpValue value)
    {
        for (auto& p : packet_.properties) {
            if (p.namespace_uri == uri && p.name == local) {
                packet_.warnings.push_back("property " + uri + local + " given more than once; keeping the last value");
                p.value = std::move(value);
                return;
            }
        }
        packet_.properties.push_back(XmpProperty { std::move(uri), std::move(local), std::move(value) });
    }

    XmpPacket& packet_;
    std::vector<Frame> frames_;
};

struct ParserDeleter {
    void operator()(XML_Parser parser) const { XML_ParserFree(parser); }
};

} // namespace

XmpPacket parse_xmp(std::string_view raw)
{
    XmpPacket packet;
    packet.raw_xml.assign(raw);

    std::unique_ptr<std::remove_pointer_t<XML_Parser>, ParserDeleter> parser(XML_ParserCreateNS(nullptr, ns_separator));
    if (!parser) {
        packet.warnings.push_back("could not create XML parser");
        return packet;
    }
    RdfCollector collector(packet);
    XML_SetUserData(parser.get(), &collector);
    XML_SetElementHandler(
        parser.get(),
        [](void* data, const XML_Char* name, const XML_Char** attributes) { static_cast<RdfCollector*>(data)->start(name, attributes); },
        [](void* data, const XML_Char*) { static_cast<RdfCollector*>(data)->end(); });
    XML_SetCharacterDataHandler(parser.get(), [](void* data, const XML_Char* s, int len) {
        static_cast<RdfCollector*>(data)->text(std::string_view(s, static_cast<std::size_t>(len)));
    });

    // Packets are small; feed them in chunks that fit expat's int length.
    constexpr std::size_t chunk = 1 << 24;
    bool ok = true;
    std::size_t pos = 0;
    do {
        auto piece = raw.substr(pos, chunk);
        pos += piece.size();
        bool final = pos >= raw.size();
        if (XML_Parse(parser.get(), piece.data(), static_cast<int>(piece.size()), final) == XML_STATUS_ERROR) {
            ok = false;
            packet.warnings.push_back(std::string("malformed XMP: ") + XML_ErrorString(XML_GetErrorCode(parser.get())) + " at line "
                + std::to_string(XML_GetCurrentLineNumber(parser.get())));
            break;
        }
    } while (pos < raw.size());

    if (!ok || raw.empty()) {
        packet.well_formed = false;
        packet.properties.clear();
        if (raw.empty())
            packet.warnings.push_back("empty XMP packet");
        return packet;
    }
    packet.well_formed = true;
    return packet;
}

} // namespace pdfharvest

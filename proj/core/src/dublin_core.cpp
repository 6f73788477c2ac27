#include <pdfharvest/dublin_core.hpp>

namespace pdfharvest {

namespace {

constexpr std::array<std::string_view, dc_element_count> element_names = {
    "title", "creator", "subject", "description", "publisher",
    "contributor", "date", "type", "format", "identifier",
    "source", "language", "relation", "coverage", "rights",
};

} // namespace

std::string_view dc_element_name(DcElement element) noexcept
{
    return element_names[static_cast<std::size_t>(element)];
}

std::optional<DcElement> dc_element_from_name(std::string_view local_name) noexcept
{
    for (std::size_t i = 0; i < element_names.size(); ++i) {
        if (element_names[i] == local_name)
            return static_cast<DcElement>(i);
    }
    return std::nullopt;
}

std::size_t DublinCoreRecord::populated() const
{
    std::size_t n = 0;
    for (auto& slot : slots_)
        n += slot.has_value();
    return n;
}

DublinCoreRecord to_dublin_core(const XmpPacket& packet)
{
    DublinCoreRecord record;
    for (auto& property : packet.properties) {
        if (property.namespace_uri != xmp_ns::dublin_core)
            continue;
        if (auto element = dc_element_from_name(property.name))
            record[*element] = property.value;
    }
    return record;
}

} // namespace pdfharvest

#pragma once

#include <pdfharvest/xmp.hpp>

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace pdfharvest {

/// The fifteen Dublin Core elements, in their conventional order.
enum class DcElement : std::size_t {
    Title,
    Creator,
    Subject,
    Description,
    Publisher,
    Contributor,
    Date,
    Type,
    Format,
    Identifier,
    Source,
    Language,
    Relation,
    Coverage,
    Rights,
};

inline constexpr std::size_t dc_element_count = 15;

/// Local name in the dc: namespace, e.g. "creator".
std::string_view dc_element_name(DcElement element) noexcept;
std::optional<DcElement> dc_element_from_name(std::string_view local_name) noexcept;

class DublinCoreRecord {
public:
    const std::optional<XmpValue>& operator[](DcElement e) const { return slots_[static_cast<std::size_t>(e)]; }
    std::optional<XmpValue>& operator[](DcElement e) { return slots_[static_cast<std::size_t>(e)]; }

    const std::optional<XmpValue>& title() const { return (*this)[DcElement::Title]; }
    const std::optional<XmpValue>& creator() const { return (*this)[DcElement::Creator]; }
    const std::optional<XmpValue>& subject() const { return (*this)[DcElement::Subject]; }
    const std::optional<XmpValue>& description() const { return (*this)[DcElement::Description]; }

    std::size_t populated() const;
    bool operator==(const DublinCoreRecord&) const = default;

private:
    std::array<std::optional<XmpValue>, dc_element_count> slots_;
};

DublinCoreRecord to_dublin_core(const XmpPacket& packet);

} // namespace pdfharvest

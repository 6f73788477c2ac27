#include <pdfharvest/document.hpp>
#include <pdfharvest/filters.hpp>
#include <pdfharvest/lexer.hpp>

#include <algorithm>
#include <array>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace pdfharvest {

namespace {

constexpr int max_reference_depth = 32;
constexpr int max_xref_sections = 4096;
constexpr std::size_t header_search_window = 1024;

std::string read_file(const std::filesystem::path& path)
{
    std::error_code ec;
    auto status = std::filesystem::status(path, ec);
    if (ec || !std::filesystem::is_regular_file(status))
        throw HarvestError(ErrorCode::NotAFile, path.string());

    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw HarvestError(ErrorCode::IoError, "cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad())
        throw HarvestError(ErrorCode::IoError, "read failed for " + path.string());
    return std::move(buffer).str();
}

std::string parse_version(std::string_view bytes, std::size_t header)
{
    std::size_t pos = header + 5;
    std::size_t end = pos;
    while (end < bytes.size() && end - pos < 8 && ((bytes[end] >= '0' && bytes[end] <= '9') || bytes[end] == '.'))
        ++end;
    return std::string(bytes.substr(pos, end - pos));
}

} // namespace

std::optional<std::size_t> find_pdf_header(std::string_view bytes)
{
    auto window = bytes.substr(0, header_search_window);
    auto found = window.find("%PDF-");
    if (found == std::string_view::npos)
        return std::nullopt;
    return found;
}

const PdfObject* RawDocument::object(std::uint32_t number) const
{
    if (!objects_)
        return nullptr;
    auto it = objects_->find(number);
    return it == objects_->end() ? nullptr : &it->second;
}

/// Builds a RawDocument. Lives only for the duration of one load.
class DocumentLoader {
public:
    DocumentLoader(std::string bytes, std::filesystem::path path)
        : bytes_(std::make_shared<const std::string>(std::move(bytes)))
        , data_(*bytes_)
        , path_(std::move(path))
    {
    }

    RawDocument load();

private:
    // Cross-reference reading.
    bool read_xref_chain(std::uint64_t start);
    std::optional<std::size_t> find_startxref() const;
    bool read_xref_section(std::uint64_t offset, XrefTable& section, std::optional<std::uint64_t>& prev, std::optional<std::uint64_t>& xref_stream);
    bool read_classic_table(ObjectParser& parser, XrefTable& section);
    bool read_xref_stream(std::uint64_t offset, XrefTable& section);
    void merge_section(const XrefTable& section);

    // Object materialisation.
    bool materialise_objects();
    std::optional<IndirectObject> parse_in_file(std::uint32_t number, std::uint64_t offset);
    std::optional<std::int64_t> length_of(PdfReference ref);
    const std::map<std::uint32_t, PdfObject>* object_stream(std::uint32_t number);
    std::map<std::uint32_t, PdfObject> parse_object_stream(const PdfStream& stream, std::uint32_t number);
    PdfObject lookup(const PdfObject& object, int depth = 0);

    // Recovery.
    void reconstruct();
    void recover_trailer(const std::vector<PdfDictionary>& trailers);

    void note(std::string message) { warnings_.push_back(std::move(message)); }

    std::shared_ptr<const std::string> bytes_;
    std::string_view data_;
    std::filesystem::path path_;
    std::size_t header_ = 0;
    bool has_header_ = false;

    XrefTable xref_;
    std::map<std::uint32_t, PdfObject> objects_;
    std::map<std::uint32_t, std::map<std::uint32_t, PdfObject>> object_streams_;
    std::set<std::uint32_t> object_streams_failed_;
    std::set<std::uint32_t> length_in_progress_;
    Warnings warnings_;
    bool reconstructed_ = false;
};

RawDocument DocumentLoader::load()
{
    if (auto header = find_pdf_header(data_)) {
        header_ = *header;
        has_header_ = true;
    }

    bool xref_ok = false;
    if (auto start = find_startxref()) {
        xref_ok = read_xref_chain(*start);
        if (!xref_ok && header_ > 0)
            xref_ok = read_xref_chain(*start + header_);
    } else if (!data_.empty()) {
        note("startxref not found");
    }

    if (xref_ok && xref_.trailer.contains("Encrypt"))
        throw HarvestError(ErrorCode::Encrypted, "document is encrypted: " + path_.string());

    if (xref_ok && !materialise_objects()) {
        note("cross-reference data does not match the file body; rebuilding it");
        xref_ok = false;
    }

    if (!xref_ok) {
        reconstruct();
        if (objects_.empty()) {
            if (!has_header_)
                throw HarvestError(ErrorCode::NotPdf, path_.string());
            throw HarvestError(ErrorCode::UnrecoverablyCorrupt, "no objects found in " + path_.string());
        }
        if (xref_.trailer.contains("Encrypt"))
            throw HarvestError(ErrorCode::Encrypted, "document is encrypted: " + path_.string());
    }
    if (!has_header_)
        note("missing %PDF- header");

    RawDocument doc;
    doc.path_ = path_;
    doc.bytes_ = bytes_;
    doc.version_ = has_header_ ? parse_version(data_, header_) : std::string {};
    doc.xref_ = std::move(xref_);
    doc.reconstructed_ = reconstructed_;
    doc.warnings_ = std::move(warnings_);
    doc.objects_ = std::make_shared<const std::map<std::uint32_t, PdfObject>>(std::move(objects_));
    return doc;
}

std::optional<std::size_t> DocumentLoader::find_startxref() const
{
    auto at = data_.rfind("startxref");
    if (at == std::string_view::npos)
        return std::nullopt;
    ObjectParser parser(data_, at + 9);
    auto offset = parser.read_unsigned();
    if (!offset)
        return std::nullopt;
    return static_cast<std::size_t>(*offset);
}

bool DocumentLoader::read_xref_chain(std::uint64_t start)
{
    XrefTable merged;
    std::set<std::uint64_t> visited;
    std::optional<std::uint64_t> next = start;
    bool first = true;
    while (next) {
        if (visited.size() >= max_xref_sections || !visited.insert(*next).second) {
            note("cycle in /Prev chain at offset " + std::to_string(*next));
            break;
        }
        XrefTable section;
        std::optional<std::uint64_t> prev;
        std::optional<std::uint64_t> xref_stream;
        if (!read_xref_section(*next, section, prev, xref_stream)) {
            if (first)
                return false;
            note("unreadable earlier cross-reference section at offset " + std::to_string(*next));
            break;
        }
        // Hybrid files: the table's /XRefStm supplements this same section.
        if (xref_stream) {
            XrefTable supplement;
            bool readable = false;
            try {
                readable = read_xref_stream(*xref_stream, supplement);
            } catch (const std::exception&) {
            }
            if (readable) {
                for (auto& [number, entry] : supplement.entries) {
                    auto it = section.entries.find(number);
                    if (it == section.entries.end() || !it->second.in_use())
                        section.entries[number] = entry;
                }
            } else {
                note("unreadable /XRefStm at offset " + std::to_string(*xref_stream));
            }
        }
        // Newer sections are read first and shadow older ones.
        for (auto& [number, entry] : section.entries)
            merged.entries.emplace(number, entry);
        for (auto& [key, value] : section.trailer.entries()) {
            if (!merged.trailer.contains(key))
                merged.trailer.set(key, value);
        }
        first = false;
        next = prev;
    }

    if (!merged.trailer.contains("Root")) {
        note("trailer has no /Root");
        return false;
    }

    std::uint32_t max_number = 0;
    for (auto it = merged.entries.begin(); it != merged.entries.end();) {
        auto& entry = it->second;
        if (entry.kind == XrefEntry::Kind::InFile && entry.offset >= data_.size()) {
            note("object " + std::to_string(it->first) + " offset " + std::to_string(entry.offset) + " is beyond end of file");
            it = merged.entries.erase(it);
            continue;
        }
        if (entry.in_use())
            max_number = std::max(max_number, it->first);
        ++it;
    }
    if (auto* size = merged.trailer.find("Size")) {
        if (auto n = size->as_integer(); n && *n < static_cast<std::int64_t>(max_number) + 1)
            note("trailer /Size is smaller than the highest object number");
    }
    merge_section(merged);
    return true;
}

void DocumentLoader::merge_section(const XrefTable& section)
{
    xref_ = section;
}

bool DocumentLoader::read_xref_section(std::uint64_t offset, XrefTable& section, std::optional<std::uint64_t>& prev, std::optional<std::uint64_t>& xref_stream)
{
    if (offset >= data_.size())
        return false;
    ObjectParser parser(data_, static_cast<std::size_t>(offset));
    try {
        if (parser.accept_keyword("xref")) {
            if (!read_classic_table(parser, section))
                return false;
        } else if (!read_xref_stream(offset, section)) {
            return false;
        }
    } catch (const SyntaxError& e) {
        note(std::string("cross-reference section: ") + e.what());
        return false;
    } catch (const HarvestError& e) {
        note(std::string("cross-reference stream: ") + e.what());
        return false;
    }

    if (auto* p = section.trailer.find("Prev")) {
        if (auto v = p->as_integer(); v && *v >= 0)
            prev = static_cast<std::uint64_t>(*v);
    }
    if (auto* x = section.trailer.find("XRefStm")) {
        if (auto v = x->as_integer(); v && *v >= 0)
            xref_stream = static_cast<std::uint64_t>(*v);
    }
    return true;
}

bool DocumentLoader::read_classic_table(ObjectParser& parser, XrefTable& section)
{
    for (;;) {
        if (parser.accept_keyword("trailer"))
            break;
        auto first = parser.read_unsigned();
        auto count = first ? parser.read_unsigned() : std::nullopt;
        if (!first || !count)
            return false;
        for (std::uint64_t i = 0; i < *count; ++i) {
            auto offset = parser.read_unsigned();
            auto generation = offset ? parser.read_unsigned() : std::nullopt;
            if (!offset || !generation)
                return false;
            XrefEntry entry;
            if (parser.accept_keyword("n")) {
                entry.kind = XrefEntry::Kind::InFile;
            } else if (parser.accept_keyword("f")) {
                entry.kind = XrefEntry::Kind::Free;
            } else {
                return false;
            }
            entry.offset = *offset;
            entry.generation = static_cast<std::uint32_t>(*generation);
            auto number = *first + i;
            if (number > std::numeric_limits<std::uint32_t>::max())
                return false;
            // "0000000000 00000 n" is a common way of writing a free entry.
            if (entry.kind == XrefEntry::Kind::InFile && entry.offset == 0)
                entry.kind = XrefEntry::Kind::Free;
            section.entries.emplace(static_cast<std::uint32_t>(number), entry);
        }
    }
    auto trailer = parser.parse_object();
    auto* dict = trailer.as_dictionary();
    if (!dict)
        return false;
    section.trailer = *dict;
    return true;
}

bool DocumentLoader::read_xref_stream(std::uint64_t offset, XrefTable& section)
{
    if (offset >= data_.size())
        return false;
    ObjectParser parser(data_, static_cast<std::size_t>(offset));
    auto indirect = parser.parse_indirect_object();
    auto* stream = indirect.object.as_stream();
    if (!stream || stream->dict.name_of("Type") != "XRef")
        return false;

    auto data = decode_stream_data(*stream);
    auto* widths_object = stream->dict.find("W");
    auto* widths = widths_object ? widths_object->as_array() : nullptr;
    if (!widths || widths->size() < 3)
        return false;
    std::array<std::size_t, 3> w {};
    for (std::size_t i = 0; i < 3; ++i) {
        auto v = (*widths)[i].as_integer();
        if (!v || *v < 0 || *v > 8)
            return false;
        w[i] = static_cast<std::size_t>(*v);
    }
    const std::size_t row = w[0] + w[1] + w[2];
    if (row == 0)
        return false;

    std::vector<std::pair<std::int64_t, std::int64_t>> ranges;
    if (auto* index = stream->dict.find("Index"); index && index->as_array()) {
        auto& items = *index->as_array();
        for (std::size_t i = 0; i + 1 < items.size(); i += 2) {
            auto first = items[i].as_integer();
            auto count = items[i + 1].as_integer();
            if (!first || !count || *first < 0 || *count < 0)
                return false;
            ranges.emplace_back(*first, *count);
        }
    } else {
        auto size = stream->dict.find("Size");
        auto n = size ? size->as_integer() : std::nullopt;
        if (!n || *n < 0)
            return false;
        ranges.emplace_back(0, *n);
    }

    auto field = [&](std::size_t pos, std::size_t width) {
        std::uint64_t value = 0;
        for (std::size_t i = 0; i < width; ++i)
            value = (value << 8) | static_cast<unsigned char>(data[pos + i]);
        return value;
    };

    std::size_t pos = 0;
    for (auto [first, count] : ranges) {
        for (std::int64_t i = 0; i < count; ++i) {
            if (pos + row > data.size()) {
                note("cross-reference stream is shorter than its /Index claims");
                break;
            }
            std::uint64_t type = w[0] == 0 ? 1 : field(pos, w[0]);
            std::uint64_t f2 = field(pos + w[0], w[1]);
            std::uint64_t f3 = field(pos + w[0] + w[1], w[2]);
            pos += row;
            XrefEntry entry;
            switch (type) {
            case 0: entry.kind = XrefEntry::Kind::Free; break;
            case 1: entry.kind = XrefEntry::Kind::InFile; break;
            case 2: entry.kind = XrefEntry::Kind::Compressed; break;
            default: continue; // reserved types are ignored
            }
            entry.offset = f2;
            entry.generation = static_cast<std::uint32_t>(f3);
            auto number = static_cast<std::uint64_t>(first + i);
            if (number > std::numeric_limits<std::uint32_t>::max())
                continue;
            section.entries.emplace(static_cast<std::uint32_t>(number), entry);
        }
    }

    PdfDictionary trailer = stream->dict;
    for (auto key : { "Type", "W", "Index", "Length", "Filter", "DecodeParms" })
        trailer.erase(key);
    section.trailer = std::move(trailer);
    return true;
}

std::optional<IndirectObject> DocumentLoader::parse_in_file(std::uint32_t number, std::uint64_t offset)
{
    auto attempt = [&](std::uint64_t at) -> std::optional<IndirectObject> {
        if (at >= data_.size())
            return std::nullopt;
        try {
            ObjectParser parser(data_, static_cast<std::size_t>(at));
            auto result = parser.parse_indirect_object([this](PdfReference ref) { return length_of(ref); });
            if (result.ref.number != number)
                return std::nullopt;
            return result;
        } catch (const SyntaxError&) {
            return std::nullopt;
        }
    };
    if (auto found = attempt(offset))
        return found;
    if (header_ > 0)
        return attempt(offset + header_);
    return std::nullopt;
}

std::optional<std::int64_t> DocumentLoader::length_of(PdfReference ref)
{
    if (auto it = objects_.find(ref.number); it != objects_.end())
        return it->second.as_integer();
    auto entry = xref_.entries.find(ref.number);
    if (entry == xref_.entries.end() || entry->second.kind != XrefEntry::Kind::InFile)
        return std::nullopt;
    if (!length_in_progress_.insert(ref.number).second)
        return std::nullopt;
    auto parsed = parse_in_file(ref.number, entry->second.offset);
    length_in_progress_.erase(ref.number);
    return parsed ? parsed->object.as_integer() : std::nullopt;
}

PdfObject DocumentLoader::lookup(const PdfObject& object, int depth)
{
    auto* ref = object.as_reference();
    if (!ref || depth > max_reference_depth)
        return ref ? PdfObject {} : object;
    if (auto it = objects_.find(ref->number); it != objects_.end())
        return lookup(it->second, depth + 1);
    auto entry = xref_.entries.find(ref->number);
    if (entry != xref_.entries.end() && entry->second.kind == XrefEntry::Kind::InFile) {
        if (auto parsed = parse_in_file(ref->number, entry->second.offset))
            return lookup(parsed->object, depth + 1);
    }
    return PdfNull {};
}

std::map<std::uint32_t, PdfObject> DocumentLoader::parse_object_stream(const PdfStream& stream, std::uint32_t number)
{
    std::map<std::uint32_t, PdfObject> result;
    auto n_object = stream.dict.find("N");
    auto first_object = stream.dict.find("First");
    // -1 stands for a missing or non-integer entry.
    const std::int64_t member_count = n_object ? lookup(*n_object).as_integer().value_or(-1) : -1;
    const std::int64_t first_offset = first_object ? lookup(*first_object).as_integer().value_or(-1) : -1;
    if (member_count < 0 || first_offset < 0) {
        note("object stream " + std::to_string(number) + " lacks /N or /First");
        return result;
    }

    auto data = decode_stream_data(stream, [this](const PdfObject& o) { return lookup(o); });
    ObjectParser header(data);
    std::vector<std::pair<std::uint32_t, std::uint64_t>> index;
    for (std::int64_t i = 0; i < member_count; ++i) {
        auto obj_number = header.read_unsigned();
        auto obj_offset = obj_number ? header.read_unsigned() : std::nullopt;
        if (!obj_number || !obj_offset || *obj_number > std::numeric_limits<std::uint32_t>::max())
            break;
        index.emplace_back(static_cast<std::uint32_t>(*obj_number), *obj_offset);
    }
    for (std::size_t i = 0; i < index.size(); ++i) {
        auto at = static_cast<std::uint64_t>(first_offset) + index[i].second;
        if (at >= data.size())
            continue;
        try {
            ObjectParser parser(data, static_cast<std::size_t>(at));
            result.emplace(index[i].first, parser.parse_object());
        } catch (const SyntaxError& e) {
            note("object " + std::to_string(index[i].first) + " in object stream " + std::to_string(number) + ": " + e.what());
        }
    }
    return result;
}

const std::map<std::uint32_t, PdfObject>* DocumentLoader::object_stream(std::uint32_t number)
{
    if (auto it = object_streams_.find(number); it != object_streams_.end())
        return &it->second;
    if (object_streams_failed_.count(number))
        return nullptr;

    PdfObject container;
    if (auto it = objects_.find(number); it != objects_.end()) {
        container = it->second;
    } else if (auto entry = xref_.entries.find(number); entry != xref_.entries.end() && entry->second.kind == XrefEntry::Kind::InFile) {
        if (auto parsed = parse_in_file(number, entry->second.offset))
            container = parsed->object;
    }
    auto* stream = container.as_stream();
    if (!stream) {
        object_streams_failed_.insert(number);
        return nullptr;
    }
    try {
        auto parsed = parse_object_stream(*stream, number);
        return &object_streams_.emplace(number, std::move(parsed)).first->second;
    } catch (const HarvestError& e) {
        note("object stream " + std::to_string(number) + ": " + e.what());
        object_streams_failed_.insert(number);
        return nullptr;
    }
}

bool DocumentLoader::materialise_objects()
{
    std::size_t failures = 0;
    for (auto& [number, entry] : xref_.entries) {
        if (entry.kind != XrefEntry::Kind::InFile || objects_.count(number))
            continue;
        if (auto parsed = parse_in_file(number, entry.offset))
            objects_.emplace(number, std::move(parsed->object));
        else
            ++failures;
    }
    for (auto& [number, entry] : xref_.entries) {
        if (entry.kind != XrefEntry::Kind::Compressed)
            continue;
        auto* contents = object_stream(static_cast<std::uint32_t>(entry.offset));
        if (!contents) {
            ++failures;
            continue;
        }
        if (auto it = contents->find(number); it != contents->end())
            objects_.emplace(number, it->second);
        else
            ++failures;
    }
    if (failures > 0) {
        note(std::to_string(failures) + " cross-reference entries point at unreadable objects");
        return false;
    }
    auto root = lookup(*xref_.trailer.find("Root"));
    if (!root.as_dictionary()) {
        note("trailer /Root does not resolve to a dictionary");
        return false;
    }
    return true;
}

void DocumentLoader::reconstruct()
{
    reconstructed_ = true;
    XrefTable previous = std::move(xref_);
    xref_ = XrefTable {};
    objects_.clear();
    object_streams_.clear();
    object_streams_failed_.clear();

    std::vector<PdfDictionary> trailers;
    std::vector<std::uint32_t> object_stream_numbers;

    // Walk the file front to back; a later definition of the same object
    // number (an incremental update) replaces the earlier one.
    std::size_t pos = 0;
    std::size_t trailer = data_.find("trailer");
    while (pos < data_.size()) {
        auto obj = data_.find("obj", pos);
        if (trailer != std::string_view::npos && trailer < pos)
            trailer = data_.find("trailer", pos);
        if (trailer != std::string_view::npos && (obj == std::string_view::npos || trailer < obj)) {
            try {
                ObjectParser parser(data_, trailer + 7);
                auto dict = parser.parse_object();
                if (auto* d = dict.as_dictionary()) {
                    trailers.push_back(*d);
                    pos = parser.position();
                    continue;
                }
            } catch (const SyntaxError&) {
            }
            pos = trailer + 7;
            continue;
        }
        if (obj == std::string_view::npos)
            break;
        pos = obj + 3;
        if (obj + 3 < data_.size() && is_pdf_regular(data_[obj + 3]))
            continue;

        // Back up over "N G " to the start of the object header.
        std::size_t p = obj;
        auto skip_space_back = [&]() {
            std::size_t start = p;
            while (p > 0 && is_pdf_whitespace(data_[p - 1]))
                --p;
            return p < start;
        };
        auto skip_digits_back = [&]() {
            std::size_t start = p;
            while (p > 0 && data_[p - 1] >= '0' && data_[p - 1] <= '9')
                --p;
            return p < start;
        };
        if (!skip_space_back() || !skip_digits_back() || !skip_space_back() || !skip_digits_back())
            continue;
        if (p > 0 && is_pdf_regular(data_[p - 1]))
            continue;

        try {
            ObjectParser parser(data_, p);
            auto parsed = parser.parse_indirect_object([this](PdfReference ref) -> std::optional<std::int64_t> {
                if (auto it = objects_.find(ref.number); it != objects_.end())
                    return it->second.as_integer();
                return std::nullopt;
            });
            auto number = parsed.ref.number;
            xref_.entries[number] = XrefEntry { XrefEntry::Kind::InFile, p, parsed.ref.generation };
            if (auto* stream = parsed.object.as_stream()) {
                auto type = stream->dict.name_of("Type");
                if (type == "XRef")
                    trailers.push_back(stream->dict);
                else if (type == "ObjStm")
                    object_stream_numbers.push_back(number);
            }
            objects_[number] = std::move(parsed.object);
            pos = std::max(pos, parsed.end);
        } catch (const SyntaxError&) {
        }
    }

    // Objects held in object streams fill the gaps left by direct objects.
    for (auto number : object_stream_numbers) {
        auto* contents = object_stream(number);
        if (!contents)
            continue;
        std::uint32_t index = 0;
        for (auto& [member, value] : *contents) {
            if (!objects_.count(member)) {
                objects_.emplace(member, value);
                xref_.entries[member] = XrefEntry { XrefEntry::Kind::Compressed, number, index };
            }
            ++index;
        }
    }

    if (previous.trailer.contains("Root"))
        trailers.insert(trailers.begin(), previous.trailer);
    recover_trailer(trailers);
    if (!objects_.empty())
        note("rebuilt cross-reference data from " + std::to_string(objects_.size()) + " objects");
}

void DocumentLoader::recover_trailer(const std::vector<PdfDictionary>& trailers)
{
    PdfDictionary trailer;
    for (auto& candidate : trailers) {
        for (auto& [key, value] : candidate.entries()) {
            if (key == "Type" || key == "W" || key == "Index" || key == "Length" || key == "Filter"
                || key == "DecodeParms" || key == "Prev" || key == "XRefStm")
                continue;
            trailer.set(key, value);
        }
    }

    auto is_catalog = [&](const PdfObject& o) {
        auto* d = lookup(o).as_dictionary();
        return d && (d->name_of("Type") == "Catalog" || d->contains("Pages"));
    };
    auto* root = trailer.find("Root");
    if (!root || !is_catalog(*root)) {
        std::optional<std::uint32_t> found;
        for (auto& [number, object] : objects_) {
            auto* d = object.as_dictionary();
            if (d && object.is_dictionary() && d->name_of("Type") == "Catalog")
                found = number;
        }
        if (found) {
            trailer.set("Root", PdfReference { *found, 0 });
            note("document catalog recovered from object " + std::to_string(*found));
        }
    }

    auto* info = trailer.find("Info");
    if (!info || !lookup(*info).as_dictionary()) {
        std::optional<std::uint32_t> found;
        for (auto& [number, object] : objects_) {
            auto* d = object.as_dictionary();
            if (!d || !object.is_dictionary() || d->contains("Type"))
                continue;
            for (auto key : { "Title", "Author", "Producer", "Creator", "CreationDate", "ModDate" }) {
                if (d->contains(key)) {
                    found = number;
                    break;
                }
            }
        }
        if (found) {
            trailer.set("Info", PdfReference { *found, 0 });
            note("document information dictionary recovered from object " + std::to_string(*found));
        }
    }
    xref_.trailer = std::move(trailer);
}

RawDocument load_document_from_bytes(std::string bytes, std::filesystem::path path)
{
    DocumentLoader loader(std::move(bytes), std::move(path));
    return loader.load();
}

RawDocument load_document(const std::filesystem::path& path)
{
    auto bytes = read_file(path);
    std::error_code ec;
    auto absolute = std::filesystem::absolute(path, ec);
    return load_document_from_bytes(std::move(bytes), ec ? path : absolute);
}

PdfObject resolve(const RawDocument& doc, const PdfObject& object, Warnings* warnings)
{
    if (!object.is_reference())
        return object;
    std::set<std::uint32_t> seen;
    PdfObject current = object;
    for (int depth = 0; depth < max_reference_depth; ++depth) {
        auto* ref = current.as_reference();
        if (!ref)
            return current;
        if (!seen.insert(ref->number).second)
            throw HarvestError(ErrorCode::ReferenceCycle, "reference cycle through object " + std::to_string(ref->number));
        auto* target = doc.object(ref->number);
        if (!target) {
            warn(warnings, "reference to missing object " + std::to_string(ref->number) + " " + std::to_string(ref->generation) + " R treated as null");
            return PdfNull {};
        }
        current = *target;
    }
    throw HarvestError(ErrorCode::ReferenceCycle, "reference chain longer than " + std::to_string(max_reference_depth));
}

PdfObject resolve_entry(const RawDocument& doc, const PdfDictionary& dict, std::string_view key, Warnings* warnings)
{
    auto* value = dict.find(key);
    return value ? resolve(doc, *value, warnings) : PdfObject {};
}

std::string decode_stream(const RawDocument& doc, const PdfStream& stream)
{
    return decode_stream_data(stream, [&doc](const PdfObject& o) { return resolve(doc, o); });
}

PdfObject catalog(const RawDocument& doc, Warnings* warnings)
{
    try {
        return resolve_entry(doc, doc.trailer(), "Root", warnings);
    } catch (const HarvestError& e) {
        warn(warnings, e.what());
        return PdfNull {};
    }
}

std::uint64_t page_count(const RawDocument& doc, Warnings* warnings)
{
    auto root = catalog(doc, warnings);
    auto* root_dict = root.as_dictionary();
    PdfObject pages;
    try {
        if (root_dict)
            pages = resolve_entry(doc, *root_dict, "Pages", warnings);
    } catch (const HarvestError& e) {
        warn(warnings, e.what());
    }
    auto* pages_dict = pages.as_dictionary();
    if (!pages_dict) {
        warn(warnings, "document has no page tree; page count is 0");
        return 0;
    }

    if (auto* count = pages_dict->find("Count")) {
        try {
            if (auto n = resolve(doc, *count, warnings).as_integer(); n && *n >= 0)
                return static_cast<std::uint64_t>(*n);
        } catch (const HarvestError&) {
        }
    }

    // No usable /Count: count leaves, guarding against cycles.
    std::uint64_t leaves = 0;
    std::set<const PdfDictionary*> visited;
    std::vector<PdfObject> pending { pages };
    while (!pending.empty()) {
        auto node = std::move(pending.back());
        pending.pop_back();
        auto* dict = node.as_dictionary();
        if (!dict || !visited.insert(dict).second)
            continue;
        PdfObject kids;
        try {
            kids = resolve_entry(doc, *dict, "Kids", warnings);
        } catch (const HarvestError& e) {
            warn(warnings, e.what());
        }
        auto* kid_list = kids.as_array();
        if (dict->name_of("Type") == "Page" || (!kid_list && dict->name_of("Type") != "Pages")) {
            ++leaves;
            continue;
        }
        if (!kid_list)
            continue;
        for (auto it = kid_list->rbegin(); it != kid_list->rend(); ++it) {
            try {
                pending.push_back(resolve(doc, *it, warnings));
            } catch (const HarvestError& e) {
                warn(warnings, e.what());
            }
        }
    }
    if (leaves == 0)
        warn(warnings, "page tree has no /Count and no leaf pages; page count is 0");
    return leaves;
}

} // namespace pdfharvest

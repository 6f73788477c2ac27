#include <pdfharvest/pdf_object.hpp>

#include <cstdio>

namespace pdfharvest {

PdfDictionary::PdfDictionary() : entries_(std::make_unique<Storage>()) { }
PdfDictionary::PdfDictionary(const PdfDictionary& other) : entries_(std::make_unique<Storage>(*other.entries_)) { }
PdfDictionary::PdfDictionary(PdfDictionary&& other) noexcept : entries_(std::move(other.entries_))
{
    other.entries_ = std::make_unique<Storage>();
}
PdfDictionary& PdfDictionary::operator=(const PdfDictionary& other)
{
    if (this != &other)
        entries_ = std::make_unique<Storage>(*other.entries_);
    return *this;
}
PdfDictionary& PdfDictionary::operator=(PdfDictionary&& other) noexcept
{
    std::swap(entries_, other.entries_);
    return *this;
}
PdfDictionary::~PdfDictionary() = default;

const PdfObject* PdfDictionary::find(std::string_view key) const
{
    auto it = entries_->find(key);
    return it == entries_->end() ? nullptr : &it->second;
}

void PdfDictionary::set(std::string key, PdfObject value)
{
    (*entries_)[std::move(key)] = std::move(value);
}

bool PdfDictionary::erase(std::string_view key)
{
    auto it = entries_->find(key);
    if (it == entries_->end())
        return false;
    entries_->erase(it);
    return true;
}

std::size_t PdfDictionary::size() const { return entries_->size(); }
const PdfDictionary::Storage& PdfDictionary::entries() const { return *entries_; }

std::optional<std::string_view> PdfDictionary::name_of(std::string_view key) const
{
    if (auto* v = find(key)) {
        if (auto* n = v->as_name())
            return std::string_view(n->value);
    }
    return std::nullopt;
}

bool PdfDictionary::operator==(const PdfDictionary& other) const { return *entries_ == *other.entries_; }

std::string_view to_string(ObjectKind kind) noexcept
{
    switch (kind) {
    case ObjectKind::Null: return "null";
    case ObjectKind::Boolean: return "boolean";
    case ObjectKind::Integer: return "integer";
    case ObjectKind::Real: return "real";
    case ObjectKind::String: return "string";
    case ObjectKind::Name: return "name";
    case ObjectKind::Array: return "array";
    case ObjectKind::Dictionary: return "dictionary";
    case ObjectKind::Stream: return "stream";
    case ObjectKind::Reference: return "reference";
    }
    return "?";
}

std::optional<bool> PdfObject::as_bool() const
{
    if (auto* b = std::get_if<bool>(&value_))
        return *b;
    return std::nullopt;
}

std::optional<std::int64_t> PdfObject::as_integer() const
{
    if (auto* i = std::get_if<std::int64_t>(&value_))
        return *i;
    return std::nullopt;
}

std::optional<double> PdfObject::as_number() const
{
    if (auto* i = std::get_if<std::int64_t>(&value_))
        return static_cast<double>(*i);
    if (auto* d = std::get_if<double>(&value_))
        return *d;
    return std::nullopt;
}

const PdfString* PdfObject::as_string() const { return std::get_if<PdfString>(&value_); }
const PdfName* PdfObject::as_name() const { return std::get_if<PdfName>(&value_); }
const PdfReference* PdfObject::as_reference() const { return std::get_if<PdfReference>(&value_); }

const PdfArray* PdfObject::as_array() const
{
    auto* p = std::get_if<std::shared_ptr<const PdfArray>>(&value_);
    return p ? p->get() : nullptr;
}

const PdfStream* PdfObject::as_stream() const
{
    auto* p = std::get_if<std::shared_ptr<const PdfStream>>(&value_);
    return p ? p->get() : nullptr;
}

const PdfDictionary* PdfObject::as_dictionary() const
{
    if (auto* p = std::get_if<std::shared_ptr<const PdfDictionary>>(&value_))
        return p->get();
    if (auto* s = as_stream())
        return &s->dict;
    return nullptr;
}

bool PdfObject::operator==(const PdfObject& other) const
{
    if (kind() != other.kind())
        return false;
    switch (kind()) {
    case ObjectKind::Array: return *as_array() == *other.as_array();
    case ObjectKind::Dictionary: return *as_dictionary() == *other.as_dictionary();
    case ObjectKind::Stream: return *as_stream() == *other.as_stream();
    default: return value_ == other.value_;
    }
}

namespace {

void append_escaped_string(std::string& out, const PdfString& s)
{
    static constexpr char hex_digits[] = "0123456789ABCDEF";
    if (s.hex) {
        out += '<';
        for (unsigned char c : s.bytes) {
            out += hex_digits[c >> 4];
            out += hex_digits[c & 0xF];
        }
        out += '>';
        return;
    }
    out += '(';
    for (unsigned char c : s.bytes) {
        if (c == '(' || c == ')' || c == '\\') {
            out += '\\';
            out += static_cast<char>(c);
        } else if (c < 0x20 || c >= 0x7F) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\%03o", c);
            out += buf;
        } else {
            out += static_cast<char>(c);
        }
    }
    out += ')';
}

void append_name(std::string& out, std::string_view name)
{
    out += '/';
    for (unsigned char c : name) {
        if (c <= 0x20 || c >= 0x7F || c == '#' || std::string_view("()<>[]{}/%").find(static_cast<char>(c)) != std::string_view::npos) {
            char buf[4];
            std::snprintf(buf, sizeof buf, "#%02X", c);
            out += buf;
        } else {
            out += static_cast<char>(c);
        }
    }
}

void append_dictionary(std::string& out, const PdfDictionary& dict);

void append_object(std::string& out, const PdfObject& o)
{
    switch (o.kind()) {
    case ObjectKind::Null: out += "null"; break;
    case ObjectKind::Boolean: out += *o.as_bool() ? "true" : "false"; break;
    case ObjectKind::Integer: out += std::to_string(*o.as_integer()); break;
    case ObjectKind::Real: {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%g", *o.as_number());
        out += buf;
        break;
    }
    case ObjectKind::String: append_escaped_string(out, *o.as_string()); break;
    case ObjectKind::Name: append_name(out, o.as_name()->value); break;
    case ObjectKind::Array: {
        out += '[';
        bool first = true;
        for (auto& item : *o.as_array()) {
            if (!first)
                out += ' ';
            first = false;
            append_object(out, item);
        }
        out += ']';
        break;
    }
    case ObjectKind::Dictionary: append_dictionary(out, *o.as_dictionary()); break;
    case ObjectKind::Stream: {
        auto* s = o.as_stream();
        append_dictionary(out, s->dict);
        out += " stream[" + std::to_string(s->raw.size()) + " bytes]";
        break;
    }
    case ObjectKind::Reference: {
        auto r = *o.as_reference();
        out += std::to_string(r.number) + ' ' + std::to_string(r.generation) + " R";
        break;
    }
    }
}

void append_dictionary(std::string& out, const PdfDictionary& dict)
{
    out += "<<";
    for (auto& [key, value] : dict.entries()) {
        append_name(out, key);
        out += ' ';
        append_object(out, value);
    }
    out += ">>";
}

} // namespace

std::string to_pdf_syntax(const PdfObject& object)
{
    std::string out;
    append_object(out, object);
    return out;
}

} // namespace pdfharvest

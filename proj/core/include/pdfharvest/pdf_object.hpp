#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace pdfharvest {

class PdfObject;

struct PdfNull {
    bool operator==(const PdfNull&) const = default;
};

/// Byte string as stored in the file; `hex` records the <...> spelling.
struct PdfString {
    std::string bytes;
    bool hex = false;
    bool operator==(const PdfString&) const = default;
};

struct PdfName {
    std::string value;
    bool operator==(const PdfName&) const = default;
};

struct PdfReference {
    std::uint32_t number = 0;
    std::uint32_t generation = 0;
    bool operator==(const PdfReference&) const = default;
    auto operator<=>(const PdfReference&) const = default;
};

using PdfArray = std::vector<PdfObject>;

class PdfDictionary {
public:
    using Storage = std::map<std::string, PdfObject, std::less<>>;

    PdfDictionary();
    PdfDictionary(const PdfDictionary&);
    PdfDictionary(PdfDictionary&&) noexcept;
    PdfDictionary& operator=(const PdfDictionary&);
    PdfDictionary& operator=(PdfDictionary&&) noexcept;
    ~PdfDictionary();

    /// Returns nullptr when the key is absent. Keys are given without '/'.
    const PdfObject* find(std::string_view key) const;
    bool contains(std::string_view key) const { return find(key) != nullptr; }
    void set(std::string key, PdfObject value);
    bool erase(std::string_view key);

    std::size_t size() const;
    bool empty() const { return size() == 0; }
    const Storage& entries() const;

    /// Convenience: returns the Name value stored under `key`, if it is a name.
    std::optional<std::string_view> name_of(std::string_view key) const;

    bool operator==(const PdfDictionary& other) const;

private:
    std::unique_ptr<Storage> entries_;
};

/// Stream object: dictionary plus the undecoded bytes between the
/// `stream`/`endstream` keywords. Decoding is done by decode_stream().
struct PdfStream {
    PdfDictionary dict;
    std::string raw;
    bool operator==(const PdfStream&) const = default;
};

enum class ObjectKind { Null, Boolean, Integer, Real, String, Name, Array, Dictionary, Stream, Reference };

std::string_view to_string(ObjectKind kind) noexcept;

/// One PDF value. Containers are held by shared immutable pointers so that
/// copying an object (for example out of a document's object cache) is cheap.
class PdfObject {
public:
    PdfObject() = default;
    PdfObject(PdfNull) { }
    PdfObject(bool b) : value_(b) { }
    PdfObject(std::int64_t i) : value_(i) { }
    PdfObject(int i) : value_(std::int64_t { i }) { }
    PdfObject(double d) : value_(d) { }
    PdfObject(PdfString s) : value_(std::move(s)) { }
    PdfObject(PdfName n) : value_(std::move(n)) { }
    PdfObject(PdfReference r) : value_(r) { }
    PdfObject(PdfArray a) : value_(std::make_shared<const PdfArray>(std::move(a))) { }
    PdfObject(PdfDictionary d) : value_(std::make_shared<const PdfDictionary>(std::move(d))) { }
    PdfObject(PdfStream s) : value_(std::make_shared<const PdfStream>(std::move(s))) { }

    ObjectKind kind() const noexcept { return static_cast<ObjectKind>(value_.index()); }

    bool is_null() const noexcept { return kind() == ObjectKind::Null; }
    bool is_bool() const noexcept { return kind() == ObjectKind::Boolean; }
    bool is_integer() const noexcept { return kind() == ObjectKind::Integer; }
    bool is_real() const noexcept { return kind() == ObjectKind::Real; }
    bool is_number() const noexcept { return is_integer() || is_real(); }
    bool is_string() const noexcept { return kind() == ObjectKind::String; }
    bool is_name() const noexcept { return kind() == ObjectKind::Name; }
    bool is_array() const noexcept { return kind() == ObjectKind::Array; }
    bool is_dictionary() const noexcept { return kind() == ObjectKind::Dictionary; }
    bool is_stream() const noexcept { return kind() == ObjectKind::Stream; }
    bool is_reference() const noexcept { return kind() == ObjectKind::Reference; }

    // Accessors return nullptr (or nullopt) on a kind mismatch.
    std::optional<bool> as_bool() const;
    std::optional<std::int64_t> as_integer() const;
    std::optional<double> as_number() const;
    const PdfString* as_string() const;
    const PdfName* as_name() const;
    const PdfArray* as_array() const;
    const PdfReference* as_reference() const;
    const PdfStream* as_stream() const;

    /// Dictionary view: a plain dictionary, or the dictionary of a stream.
    const PdfDictionary* as_dictionary() const;

    bool is_name(std::string_view name) const
    {
        auto* n = as_name();
        return n && n->value == name;
    }

    bool operator==(const PdfObject& other) const;

private:
    std::variant<PdfNull, bool, std::int64_t, double, PdfString, PdfName,
        std::shared_ptr<const PdfArray>, std::shared_ptr<const PdfDictionary>,
        std::shared_ptr<const PdfStream>, PdfReference>
        value_;
};

/// Debug/diagnostic serialisation in PDF syntax (streams render as their
/// dictionary followed by a byte count).
std::string to_pdf_syntax(const PdfObject& object);

} // namespace pdfharvest

#include <pdfharvest/lexer.hpp>

#include <charconv>
#include <limits>

namespace pdfharvest {

namespace {

constexpr int max_nesting = 256;

int hex_value(char c) noexcept
{
    if (c >= '0' && c <= '9')
        return c - '0';
    if (c >= 'a' && c <= 'f')
        return c - 'a' + 10;
    if (c >= 'A' && c <= 'F')
        return c - 'A' + 10;
    return -1;
}

bool is_digit(char c) noexcept { return c >= '0' && c <= '9'; }

} // namespace

bool ObjectParser::at_end() noexcept
{
    skip_whitespace();
    return pos_ >= data_.size();
}

void ObjectParser::skip_whitespace()
{
    while (pos_ < data_.size()) {
        char c = data_[pos_];
        if (is_pdf_whitespace(c)) {
            ++pos_;
        } else if (c == '%') {
            while (pos_ < data_.size() && data_[pos_] != '\n' && data_[pos_] != '\r')
                ++pos_;
        } else {
            break;
        }
    }
}

std::string_view ObjectParser::peek_keyword() const
{
    std::size_t end = pos_;
    while (end < data_.size() && is_pdf_regular(data_[end]))
        ++end;
    return data_.substr(pos_, end - pos_);
}

bool ObjectParser::accept_keyword(std::string_view keyword)
{
    skip_whitespace();
    if (peek_keyword() == keyword) {
        pos_ += keyword.size();
        return true;
    }
    return false;
}

std::optional<std::uint64_t> ObjectParser::read_unsigned()
{
    skip_whitespace();
    std::size_t start = pos_;
    std::size_t end = start;
    while (end < data_.size() && is_digit(data_[end]))
        ++end;
    if (end == start || (end < data_.size() && is_pdf_regular(data_[end])))
        return std::nullopt;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(data_.data() + start, data_.data() + end, value);
    if (ec != std::errc {})
        return std::nullopt;
    pos_ = end;
    return value;
}

PdfObject ObjectParser::parse_object()
{
    skip_whitespace();
    if (pos_ >= data_.size())
        throw SyntaxError(pos_, "unexpected end of data");
    if (depth_ > max_nesting)
        throw SyntaxError(pos_, "objects nested too deeply");

    char c = data_[pos_];
    switch (c) {
    case '(':
        return parse_literal_string();
    case '<':
        if (pos_ + 1 < data_.size() && data_[pos_ + 1] == '<')
            return parse_dictionary();
        return parse_hex_string();
    case '/':
        return parse_name();
    case '[':
        return parse_array();
    default:
        break;
    }
    if (is_digit(c) || c == '+' || c == '-' || c == '.')
        return parse_number_or_reference();

    auto keyword = peek_keyword();
    if (keyword == "true" || keyword == "false") {
        pos_ += keyword.size();
        return keyword == "true";
    }
    if (keyword == "null") {
        pos_ += keyword.size();
        return PdfNull {};
    }
    throw SyntaxError(pos_, keyword.empty() ? std::string("unexpected delimiter '") + c + "'"
                                            : "unexpected token '" + std::string(keyword.substr(0, 32)) + "'");
}

PdfObject ObjectParser::parse_number_or_reference()
{
    std::size_t start = pos_;
    std::size_t end = pos_;
    bool has_sign = data_[end] == '+' || data_[end] == '-';
    if (has_sign)
        ++end;
    bool has_dot = false;
    bool has_digits = false;
    while (end < data_.size()) {
        char c = data_[end];
        if (is_digit(c)) {
            has_digits = true;
        } else if (c == '.' && !has_dot) {
            has_dot = true;
        } else if (c == '-' || c == '+') {
            // Some writers emit "0.0-1" style garbage; stop at the stray sign.
            break;
        } else {
            break;
        }
        ++end;
    }
    if (!has_digits)
        throw SyntaxError(start, "malformed number");

    std::string_view text = data_.substr(start, end - start);
    pos_ = end;

    if (!has_dot) {
        std::int64_t value = 0;
        auto digits = text;
        bool negative = false;
        if (digits.front() == '+' || digits.front() == '-') {
            negative = digits.front() == '-';
            digits.remove_prefix(1);
        }
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (ec == std::errc {}) {
            if (negative)
                value = -value;
            if (!has_sign && value >= 1 && value <= std::numeric_limits<std::uint32_t>::max()) {
                // Look ahead for "G R".
                std::size_t saved = pos_;
                auto generation = read_unsigned();
                if (generation && *generation <= std::numeric_limits<std::uint32_t>::max()) {
                    skip_whitespace();
                    if (peek_keyword() == "R") {
                        pos_ += 1;
                        return PdfReference { static_cast<std::uint32_t>(value), static_cast<std::uint32_t>(*generation) };
                    }
                }
                pos_ = saved;
            }
            return value;
        }
        // Out of int64 range: fall through and keep it as a real.
    }

    std::string normalized(text);
    if (normalized.front() == '+')
        normalized.erase(0, 1);
    double value = 0;
    auto [ptr, ec] = std::from_chars(normalized.data(), normalized.data() + normalized.size(), value);
    if (ec != std::errc {} && ec != std::errc::result_out_of_range)
        throw SyntaxError(start, "malformed number");
    return value;
}

PdfString ObjectParser::parse_literal_string()
{
    std::size_t start = pos_;
    ++pos_; // '('
    std::string out;
    int nesting = 1;
    while (pos_ < data_.size()) {
        char c = data_[pos_++];
        if (c == '\\') {
            if (pos_ >= data_.size())
                break;
            char e = data_[pos_++];
            switch (e) {
            case 'n': out += '\n'; break;
            case 'r': out += '\r'; break;
            case 't': out += '\t'; break;
            case 'b': out += '\b'; break;
            case 'f': out += '\f'; break;
            case '(': out += '('; break;
            case ')': out += ')'; break;
            case '\\': out += '\\'; break;
            case '\r':
                if (pos_ < data_.size() && data_[pos_] == '\n')
                    ++pos_;
                break;
            case '\n':
                break;
            default:
                if (e >= '0' && e <= '7') {
                    int value = e - '0';
                    for (int i = 0; i < 2 && pos_ < data_.size() && data_[pos_] >= '0' && data_[pos_] <= '7'; ++i)
                        value = value * 8 + (data_[pos_++] - '0');
                    out += static_cast<char>(value & 0xFF);
                } else {
                    out += e;
                }
            }
        } else if (c == '(') {
            ++nesting;
            out += c;
        } else if (c == ')') {
            if (--nesting == 0)
                return PdfString { std::move(out), false };
            out += c;
        } else if (c == '\r') {
            if (pos_ < data_.size() && data_[pos_] == '\n')
                ++pos_;
            out += '\n';
        } else {
            out += c;
        }
    }
    throw SyntaxError(start, "unterminated literal string");
}

PdfString ObjectParser::parse_hex_string()
{
    std::size_t start = pos_;
    ++pos_; // '<'
    std::string out;
    int pending = -1;
    while (pos_ < data_.size()) {
        char c = data_[pos_++];
        if (c == '>') {
            if (pending >= 0)
                out += static_cast<char>(pending << 4);
            return PdfString { std::move(out), true };
        }
        if (is_pdf_whitespace(c))
            continue;
        int v = hex_value(c);
        if (v < 0)
            throw SyntaxError(pos_ - 1, "invalid character in hex string");
        if (pending < 0) {
            pending = v;
        } else {
            out += static_cast<char>((pending << 4) | v);
            pending = -1;
        }
    }
    throw SyntaxError(start, "unterminated hex string");
}

PdfName ObjectParser::parse_name()
{
    ++pos_; // '/'
    std::string out;
    while (pos_ < data_.size() && is_pdf_regular(data_[pos_])) {
        char c = data_[pos_];
        if (c == '#' && pos_ + 2 < data_.size() && hex_value(data_[pos_ + 1]) >= 0 && hex_value(data_[pos_ + 2]) >= 0) {
            char decoded = static_cast<char>((hex_value(data_[pos_ + 1]) << 4) | hex_value(data_[pos_ + 2]));
            if (is_pdf_regular(decoded)) {
                out += decoded;
            } else {
                // Keep the escape so a decoded name never holds syntax delimiters.
                out.append(data_.substr(pos_, 3));
            }
            pos_ += 3;
            continue;
        }
        out += c;
        ++pos_;
    }
    return PdfName { std::move(out) };
}

PdfArray ObjectParser::parse_array()
{
    std::size_t start = pos_;
    ++pos_; // '['
    ++depth_;
    PdfArray items;
    for (;;) {
        skip_whitespace();
        if (pos_ >= data_.size())
            throw SyntaxError(start, "unterminated array");
        if (data_[pos_] == ']') {
            ++pos_;
            break;
        }
        items.push_back(parse_object());
    }
    --depth_;
    return items;
}

PdfDictionary ObjectParser::parse_dictionary()
{
    std::size_t start = pos_;
    pos_ += 2; // '<<'
    ++depth_;
    PdfDictionary dict;
    for (;;) {
        skip_whitespace();
        if (pos_ >= data_.size())
            throw SyntaxError(start, "unterminated dictionary");
        if (data_[pos_] == '>' && pos_ + 1 < data_.size() && data_[pos_ + 1] == '>') {
            pos_ += 2;
            break;
        }
        if (data_[pos_] != '/')
            throw SyntaxError(pos_, "dictionary key is not a name");
        auto key = parse_name();
        skip_whitespace();
        if (pos_ < data_.size() && data_[pos_] == '>' && pos_ + 1 < data_.size() && data_[pos_ + 1] == '>') {
            // Key without a value; treat as null, which is the same as absent.
            continue;
        }
        dict.set(std::move(key.value), parse_object());
    }
    --depth_;
    return dict;
}

IndirectObject ObjectParser::parse_indirect_object(const LengthResolver& resolve_length)
{
    std::size_t start = position();
    auto number = read_unsigned();
    auto generation = number ? read_unsigned() : std::nullopt;
    if (!number || !generation || !accept_keyword("obj"))
        throw SyntaxError(start, "expected 'N G obj'");
    if (*number > std::numeric_limits<std::uint32_t>::max() || *generation > 65535)
        throw SyntaxError(start, "object number out of range");

    IndirectObject result;
    result.ref = PdfReference { static_cast<std::uint32_t>(*number), static_cast<std::uint32_t>(*generation) };

    skip_whitespace();
    if (peek_keyword() == "endobj") {
        // Empty object body means null.
        result.object = PdfNull {};
    } else {
        result.object = parse_object();
        if (auto* dict = result.object.as_dictionary(); dict && result.object.is_dictionary())
            result.object = parse_after_dictionary(*dict, resolve_length);
    }
    accept_keyword("endobj");
    result.end = position();
    return result;
}

PdfObject ObjectParser::parse_after_dictionary(PdfDictionary dict, const LengthResolver& resolve_length)
{
    std::size_t saved = pos_;
    skip_whitespace();
    if (peek_keyword() != "stream") {
        pos_ = saved;
        return dict;
    }
    pos_ += 6;
    // The keyword is followed by CRLF or LF; a lone CR is tolerated.
    if (pos_ < data_.size() && data_[pos_] == '\r')
        ++pos_;
    if (pos_ < data_.size() && data_[pos_] == '\n')
        ++pos_;
    std::size_t data_start = pos_;

    std::optional<std::int64_t> declared;
    if (auto* length = dict.find("Length")) {
        if (auto direct = length->as_integer())
            declared = direct;
        else if (auto* ref = length->as_reference(); ref && resolve_length)
            declared = resolve_length(*ref);
    }

    auto endstream_follows = [&](std::size_t at) {
        ObjectParser probe(data_, at);
        return probe.accept_keyword("endstream");
    };

    std::size_t data_end = std::string_view::npos;
    if (declared && *declared >= 0 && static_cast<std::uint64_t>(*declared) <= data_.size() - data_start
        && endstream_follows(data_start + static_cast<std::size_t>(*declared))) {
        data_end = data_start + static_cast<std::size_t>(*declared);
    } else {
        auto found = data_.find("endstream", data_start);
        if (found == std::string_view::npos)
            throw SyntaxError(data_start, "stream without endstream");
        data_end = found;
        // The EOL before endstream is not part of the data.
        if (data_end > data_start && data_[data_end - 1] == '\n')
            --data_end;
        if (data_end > data_start && data_[data_end - 1] == '\r')
            --data_end;
    }

    PdfStream stream;
    stream.raw.assign(data_.substr(data_start, data_end - data_start));
    dict.set("Length", static_cast<std::int64_t>(stream.raw.size()));
    stream.dict = std::move(dict);
    pos_ = data_end;
    accept_keyword("endstream");
    return stream;
}

PdfObject parse_object_text(std::string_view text)
{
    ObjectParser parser(text);
    return parser.parse_object();
}

} // namespace pdfharvest

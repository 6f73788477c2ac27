#include "readers.hpp"

#include <cctype>
#include <set>
#include <stdexcept>

namespace testsupport {

std::vector<std::vector<std::string>> parse_csv(std::string_view text)
{
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    std::size_t i = 0;
    bool at_field_start = true;

    auto end_record = [&] {
        row.push_back(std::move(field));
        field.clear();
        rows.push_back(std::move(row));
        row.clear();
        at_field_start = true;
    };

    while (i < text.size()) {
        char c = text[i];
        if (at_field_start && c == '"') {
            ++i;
            for (;;) {
                if (i >= text.size())
                    throw std::runtime_error("csv: unterminated quoted field");
                if (text[i] == '"') {
                    if (i + 1 < text.size() && text[i + 1] == '"') {
                        field += '"';
                        i += 2;
                        continue;
                    }
                    ++i;
                    break;
                }
                field += text[i++];
            }
            at_field_start = false;
            if (i < text.size() && text[i] != ',' && text[i] != '\r')
                throw std::runtime_error("csv: text after closing quote");
            continue;
        }
        if (c == ',') {
            row.push_back(std::move(field));
            field.clear();
            at_field_start = true;
            ++i;
        } else if (c == '\r') {
            if (i + 1 >= text.size() || text[i + 1] != '\n')
                throw std::runtime_error("csv: bare CR");
            end_record();
            i += 2;
        } else if (c == '\n') {
            throw std::runtime_error("csv: LF without CR");
        } else if (c == '"') {
            throw std::runtime_error("csv: quote inside unquoted field");
        } else {
            field += c;
            at_field_start = false;
            ++i;
        }
    }
    if (!field.empty() || !row.empty())
        end_record();
    for (auto& r : rows) {
        if (r.size() != rows.front().size())
            throw std::runtime_error("csv: ragged rows");
    }
    return rows;
}

namespace {

class BibReader {
public:
    explicit BibReader(std::string_view text)
        : t_(text)
    {
    }

    std::vector<BibEntry> entries()
    {
        std::vector<BibEntry> out;
        std::set<std::string> keys;
        for (;;) {
            auto at = t_.find('@', pos_);
            if (at == std::string_view::npos)
                break;
            for (auto k = pos_; k < at; ++k) {
                if (!std::isspace(static_cast<unsigned char>(t_[k])))
                    throw std::runtime_error("bibtex: stray text between entries");
            }
            pos_ = at + 1;
            BibEntry e;
            e.type = identifier();
            expect('{');
            e.key = identifier();
            if (e.key.empty())
                throw std::runtime_error("bibtex: empty key");
            if (!keys.insert(e.key).second)
                throw std::runtime_error("bibtex: duplicate key " + e.key);
            for (;;) {
                skip();
                if (peek() == '}') {
                    ++pos_;
                    break;
                }
                expect(',');
                skip();
                if (peek() == '}') {
                    ++pos_;
                    break;
                }
                auto name = identifier();
                if (name.empty())
                    throw std::runtime_error("bibtex: missing field name");
                expect('=');
                skip();
                auto value = field_value();
                if (!e.fields.emplace(name, value).second)
                    throw std::runtime_error("bibtex: repeated field " + name);
            }
            out.push_back(std::move(e));
        }
        for (auto k = pos_; k < t_.size(); ++k) {
            if (!std::isspace(static_cast<unsigned char>(t_[k])))
                throw std::runtime_error("bibtex: trailing text");
        }
        return out;
    }

private:
    char peek() const
    {
        if (pos_ >= t_.size())
            throw std::runtime_error("bibtex: unexpected end");
        return t_[pos_];
    }

    void skip()
    {
        while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_])))
            ++pos_;
    }

    void expect(char c)
    {
        skip();
        if (peek() != c)
            throw std::runtime_error(std::string("bibtex: expected '") + c + "'");
        ++pos_;
    }

    std::string identifier()
    {
        skip();
        std::string id;
        while (pos_ < t_.size()) {
            char c = t_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == ':' || c == '.')
                id += c;
            else
                break;
            ++pos_;
        }
        return id;
    }

    std::string field_value()
    {
        char c = peek();
        if (c == '{') {
            int depth = 0;
            std::size_t start = pos_ + 1;
            do {
                char d = peek();
                if (d == '\\') {
                    pos_ += 2;
                    continue;
                }
                if (d == '{')
                    ++depth;
                else if (d == '}')
                    --depth;
                ++pos_;
            } while (depth > 0);
            return std::string(t_.substr(start, pos_ - 1 - start));
        }
        if (c == '"') {
            std::size_t start = ++pos_;
            int depth = 0;
            while (peek() != '"' || depth > 0) {
                if (t_[pos_] == '{')
                    ++depth;
                else if (t_[pos_] == '}' && --depth < 0)
                    throw std::runtime_error("bibtex: unbalanced braces");
                ++pos_;
            }
            return std::string(t_.substr(start, pos_++ - start));
        }
        std::string digits;
        while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_])))
            digits += t_[pos_++];
        if (digits.empty())
            throw std::runtime_error("bibtex: bad field value");
        return digits;
    }

    std::string_view t_;
    std::size_t pos_ = 0;
};

} // namespace

std::vector<BibEntry> parse_bibtex(std::string_view text) { return BibReader(text).entries(); }

std::string detex(std::string_view v)
{
    static const std::pair<std::string_view, char> macros[] = {
        { "{\\textbraceleft}", '{' },
        { "{\\textbraceright}", '}' },
        { "{\\textbackslash}", '\\' },
        { "\\{", '{' },
        { "\\}", '}' },
    };
    std::string out;
    std::size_t i = 0;
    while (i < v.size()) {
        bool matched = false;
        for (auto& [macro, ch] : macros) {
            if (v.substr(i, macro.size()) == macro) {
                out += ch;
                i += macro.size();
                matched = true;
                break;
            }
        }
        if (matched)
            continue;
        if (v[i] != '{' && v[i] != '}')
            out += v[i];
        ++i;
    }
    return out;
}

std::vector<std::string> RisRecord::all(const std::string& tag) const
{
    std::vector<std::string> out;
    for (auto& [t, v] : tags) {
        if (t == tag)
            out.push_back(v);
    }
    return out;
}

std::string RisRecord::one(const std::string& tag) const
{
    auto v = all(tag);
    if (v.size() > 1)
        throw std::runtime_error("ris: tag " + tag + " repeated");
    return v.empty() ? std::string {} : v.front();
}

std::vector<RisRecord> parse_ris(std::string_view text)
{
    std::vector<RisRecord> out;
    bool open = false;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto nl = text.find('\n', pos);
        auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() : nl + 1;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (line.empty())
            continue;
        if (line.size() < 5 || !std::isupper(static_cast<unsigned char>(line[0]))
            || !std::isalnum(static_cast<unsigned char>(line[1])) || line.substr(2, 3) != "  -")
            throw std::runtime_error("ris: malformed line '" + std::string(line) + "'");
        std::string tag(line.substr(0, 2));
        std::string value;
        if (line.size() > 5) {
            if (line[5] != ' ')
                throw std::runtime_error("ris: missing space after dash");
            value = std::string(line.substr(6));
        }
        if (tag == "TY") {
            if (open)
                throw std::runtime_error("ris: TY inside a record");
            open = true;
            out.emplace_back();
        } else if (!open) {
            throw std::runtime_error("ris: tag outside a record");
        }
        out.back().tags.emplace_back(tag, value);
        if (tag == "ER")
            open = false;
    }
    if (open)
        throw std::runtime_error("ris: record without ER");
    return out;
}

} // namespace testsupport

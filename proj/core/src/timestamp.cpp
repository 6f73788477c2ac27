#include <pdfharvest/errors.hpp>
#include <pdfharvest/text_encoding.hpp>
#include <pdfharvest/timestamp.hpp>

#include <cstdio>

namespace pdfharvest {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

/// Reads exactly `width` digits at `pos`.
std::optional<int> digits(std::string_view text, std::size_t& pos, std::size_t width)
{
    if (pos + width > text.size())
        return std::nullopt;
    int value = 0;
    for (std::size_t i = 0; i < width; ++i) {
        char c = text[pos + i];
        if (!is_digit(c))
            return std::nullopt;
        value = value * 10 + (c - '0');
    }
    pos += width;
    return value;
}

int days_in_month(int year, int month)
{
    static constexpr int days[] = { 31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31 };
    bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
    return month == 2 && leap ? 29 : days[month - 1];
}

std::string offset_suffix(const Timestamp& ts, bool pdf_style)
{
    if (!ts.utc_offset_minutes)
        return {};
    int offset = *ts.utc_offset_minutes;
    if (offset == 0)
        return "Z";
    char sign = offset < 0 ? '-' : '+';
    int magnitude = offset < 0 ? -offset : offset;
    char buf[16];
    if (pdf_style)
        std::snprintf(buf, sizeof buf, "%c%02d'%02d'", sign, magnitude / 60, magnitude % 60);
    else
        std::snprintf(buf, sizeof buf, "%c%02d:%02d", sign, magnitude / 60, magnitude % 60);
    return buf;
}

} // namespace

Timestamp parse_pdf_date(std::string_view text)
{
    auto s = trim_ascii(text);
    if (s.substr(0, 2) == "D:")
        s.remove_prefix(2);

    Timestamp ts;
    std::size_t pos = 0;
    auto year = digits(s, pos, 4);
    if (!year)
        throw HarvestError(ErrorCode::UnparseableDate, "no year in PDF date '" + std::string(text) + "'");
    ts.year = *year;

    struct Field {
        int Timestamp::*member;
        int low;
        int high;
    };
    static constexpr Field fields[] = {
        { &Timestamp::month, 1, 12 },
        { &Timestamp::day, 1, 31 },
        { &Timestamp::hour, 0, 23 },
        { &Timestamp::minute, 0, 59 },
        { &Timestamp::second, 0, 59 },
    };
    for (auto& field : fields) {
        std::size_t at = pos;
        auto value = digits(s, at, 2);
        if (!value || *value < field.low || *value > field.high)
            break;
        if (field.member == &Timestamp::day && *value > days_in_month(ts.year, ts.month))
            break;
        ts.*field.member = *value;
        pos = at;
    }

    if (pos < s.size()) {
        char sign = s[pos];
        if (sign == 'Z' || sign == 'z') {
            ts.utc_offset_minutes = 0;
        } else if (sign == '+' || sign == '-') {
            std::size_t at = pos + 1;
            auto hours = digits(s, at, 2);
            if (hours && *hours <= 23) {
                int minutes = 0;
                if (at < s.size() && s[at] == '\'')
                    ++at;
                if (auto m = digits(s, at, 2); m && *m <= 59)
                    minutes = *m;
                int offset = *hours * 60 + minutes;
                ts.utc_offset_minutes = sign == '-' ? -offset : offset;
            }
        }
    }
    return ts;
}

Timestamp parse_iso8601(std::string_view text)
{
    auto s = trim_ascii(text);
    Timestamp ts;
    std::size_t pos = 0;
    auto year = digits(s, pos, 4);
    if (!year)
        throw HarvestError(ErrorCode::UnparseableDate, "no year in date '" + std::string(text) + "'");
    ts.year = *year;

    auto expect = [&](char c) {
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    };
    auto component = [&](int low, int high) -> std::optional<int> {
        std::size_t at = pos;
        auto v = digits(s, at, 2);
        if (!v || *v < low || *v > high)
            return std::nullopt;
        pos = at;
        return v;
    };

    if (!expect('-'))
        return ts;
    auto month = component(1, 12);
    if (!month)
        return ts;
    ts.month = *month;
    if (!expect('-'))
        return ts;
    auto day = component(1, days_in_month(ts.year, ts.month));
    if (!day)
        return ts;
    ts.day = *day;
    if (!expect('T') && !expect(' '))
        return ts;
    auto hour = component(0, 23);
    if (!hour || !expect(':'))
        return ts;
    auto minute = component(0, 59);
    if (!minute)
        return ts;
    ts.hour = *hour;
    ts.minute = *minute;
    if (expect(':')) {
        if (auto second = component(0, 60))
            ts.second = *second == 60 ? 59 : *second;
        if (expect('.')) {
            while (pos < s.size() && is_digit(s[pos]))
                ++pos;
        }
    }
    if (pos < s.size()) {
        char sign = s[pos];
        if (sign == 'Z' || sign == 'z') {
            ts.utc_offset_minutes = 0;
        } else if (sign == '+' || sign == '-') {
            ++pos;
            auto hours = component(0, 23);
            if (hours) {
                int minutes = 0;
                expect(':');
                if (auto m = component(0, 59))
                    minutes = *m;
                int offset = *hours * 60 + minutes;
                ts.utc_offset_minutes = sign == '-' ? -offset : offset;
            }
        }
    }
    return ts;
}

std::string format_pdf_date(const Timestamp& ts)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "D:%04d%02d%02d%02d%02d%02d", ts.year, ts.month, ts.day, ts.hour, ts.minute, ts.second);
    return buf + offset_suffix(ts, true);
}

std::string format_iso8601(const Timestamp& ts)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02d", ts.year, ts.month, ts.day, ts.hour, ts.minute, ts.second);
    return buf + offset_suffix(ts, false);
}

std::optional<Timestamp> parse_reference_date(std::string_view text)
{
    std::size_t pos = 0;
    Timestamp ts;
    auto year = digits(text, pos, 4);
    if (!year)
        return std::nullopt;
    ts.year = *year;
    if (pos == text.size())
        return ts;
    if (text[pos++] != '-')
        return std::nullopt;
    auto month = digits(text, pos, 2);
    if (!month || *month < 1 || *month > 12 || pos >= text.size() || text[pos++] != '-')
        return std::nullopt;
    auto day = digits(text, pos, 2);
    if (!day || *day < 1 || *day > days_in_month(ts.year, *month) || pos != text.size())
        return std::nullopt;
    ts.month = *month;
    ts.day = *day;
    return ts;
}

} // namespace pdfharvest

#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace pdfharvest {

/// Calendar timestamp as written in the file; no time-zone conversion is applied.
struct Timestamp {
    int year = 0;
    int month = 1;
    int day = 1;
    int hour = 0;
    int minute = 0;
    int second = 0;
    /// Minutes east of UTC; nullopt means the writer gave no offset (local time).
    std::optional<int> utc_offset_minutes;

    bool operator==(const Timestamp&) const = default;
};

/// Parses "D:YYYYMMDDHHmmSSOHH'mm'". Everything after the year is optional;
/// month/day default to 01 and time fields to 00. Parsing stops at the first
/// malformed component. Throws HarvestError(UnparseableDate) without a year.
Timestamp parse_pdf_date(std::string_view text);

/// Parses the ISO-8601 profile used by XMP: YYYY[-MM[-DD[Thh:mm[:ss[.s+]][TZD]]]].
/// Throws HarvestError(UnparseableDate) without a year.
Timestamp parse_iso8601(std::string_view text);

/// Fully-specified "D:YYYYMMDDHHmmSS" plus "Z", "+HH'mm'" or nothing.
std::string format_pdf_date(const Timestamp& ts);

/// "YYYY-MM-DDThh:mm:ss" plus "Z", "+hh:mm" or nothing.
std::string format_iso8601(const Timestamp& ts);

/// Accepts "YYYY" or "YYYY-MM-DD". Used for the reference-date override.
std::optional<Timestamp> parse_reference_date(std::string_view text);

} // namespace pdfharvest

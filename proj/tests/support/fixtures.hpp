#pragma once

#include <json.hpp>

#include <pdfharvest/timestamp.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>

namespace testsupport {

inline std::filesystem::path fixture_dir() { return PDFHARVEST_FIXTURE_DIR; }

inline std::filesystem::path fixture(const std::string& relative) { return fixture_dir() / relative; }

inline const nlohmann::json& manifest()
{
    static const nlohmann::json m = [] {
        std::ifstream f(fixture_dir() / "manifest.json");
        if (!f)
            throw std::runtime_error("fixture manifest missing; run tests/fixtures/generate_fixtures.py");
        return nlohmann::json::parse(f);
    }();
    return m;
}

/// Manifest date record (as read by the fixture writer's own date parser).
inline pdfharvest::Timestamp manifest_timestamp(const nlohmann::json& d)
{
    pdfharvest::Timestamp t;
    t.year = d.at("year");
    t.month = d.at("month");
    t.day = d.at("day");
    t.hour = d.at("hour");
    t.minute = d.at("minute");
    t.second = d.at("second");
    if (!d.at("offset_minutes").is_null())
        t.utc_offset_minutes = d.at("offset_minutes").get<int>();
    return t;
}

inline std::optional<std::string> optional_string(const nlohmann::json& j)
{
    if (j.is_null())
        return std::nullopt;
    return j.get<std::string>();
}

inline std::string unhex(const std::string& hex)
{
    std::string out;
    for (std::size_t i = 0; i + 1 < hex.size(); i += 2)
        out += static_cast<char>(std::stoi(hex.substr(i, 2), nullptr, 16));
    return out;
}

} // namespace testsupport

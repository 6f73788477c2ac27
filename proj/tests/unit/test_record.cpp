#include <doctest.h>

#include "fixtures.hpp"
#include "pdf_writer.hpp"

#include <pdfharvest/record.hpp>

#include <filesystem>

using namespace pdfharvest;
using testsupport::fixture;
using testsupport::manifest;

namespace {

MergedMetadata with_creation(std::optional<Timestamp> ts, FieldSource source)
{
    MergedMetadata m;
    m.creation_date = Sourced<Timestamp> { ts, ts ? source : FieldSource::Absent };
    return m;
}

YearSource year_source_named(const std::string& name)
{
    for (auto s : { YearSource::XmpCreateDate, YearSource::DocInfoCreationDate, YearSource::FilesystemMtime }) {
        if (to_string(s) == name)
            return s;
    }
    FAIL("unknown year source " << name);
    return YearSource::FilesystemMtime;
}

} // namespace

TEST_CASE("recency for the published examples")
{
    auto ref = ReferenceDate::of_year(2012);
    const std::pair<int, int> cases[] = { { 2011, 1 }, { 2012, 0 }, { 1998, 14 }, { 2010, 2 }, { 2005, 7 } };
    for (auto [year, recency] : cases)
        CHECK(compute_recency(year, ref) == recency);
}

TEST_CASE("recency is clamped at zero with a warning")
{
    Warnings w;
    CHECK(compute_recency(2015, ReferenceDate::of_year(2012), &w) == 0);
    CHECK(w.size() == 1);
    w.clear();
    CHECK(compute_recency(2012, ReferenceDate::of_year(2012), &w) == 0);
    CHECK(w.empty());
}

TEST_CASE("recency never grows with the year")
{
    auto ref = ReferenceDate::of_year(2012);
    for (int y1 = 1900; y1 <= 2030; y1 += 3) {
        for (int y2 = y1; y2 <= 2030; y2 += 7) {
            CHECK(compute_recency(y1, ref) >= compute_recency(y2, ref));
            CHECK(compute_recency(y1, ref) >= 0);
        }
    }
}

TEST_CASE("derive_year prefers metadata over the file time")
{
    Timestamp mtime { 2020, 5, 5 };
    CHECK(derive_year(with_creation(Timestamp { 2010 }, FieldSource::Xmp), mtime) == YearChoice { 2010, YearSource::XmpCreateDate });
    CHECK(derive_year(with_creation(Timestamp { 1998 }, FieldSource::DocInfo), mtime)
        == YearChoice { 1998, YearSource::DocInfoCreationDate });
    CHECK(derive_year(MergedMetadata {}, mtime) == YearChoice { 2020, YearSource::FilesystemMtime });

    Warnings w;
    CHECK(derive_year(with_creation(Timestamp { 999 }, FieldSource::DocInfo), mtime, &w) == YearChoice { 2020, YearSource::FilesystemMtime });
    CHECK(w.size() == 1);
}

TEST_CASE("file mtime feeds the year when there is no creation date")
{
    testsupport::TempDir dir("record_mtime");
    auto path = dir / "plain.pdf";
    testsupport::write_file(path, testsupport::make_pdf({}));
    auto stamp = std::filesystem::file_time_type::clock::from_sys(
        std::chrono::sys_seconds { std::chrono::sys_days { std::chrono::year { 2003 } / 6 / 15 } });
    std::filesystem::last_write_time(path, stamp);
    CHECK(file_mtime(path).year == 2003);
    auto r = build_record(path, 1, ReferenceDate::of_year(2012));
    CHECK(r.year == 2003);
    CHECK(r.recency == 9);
    CHECK(r.year_source == YearSource::FilesystemMtime);
}

TEST_CASE("records for the oracle fixtures")
{
    auto ref = ReferenceDate::of_year(2026);
    for (auto& entry : manifest()["oracle"]) {
        auto name = entry["file"].get<std::string>();
        auto r = build_record(fixture(name), 7, ref);
        auto& e = entry["expected"];
        CHECK_MESSAGE(r.title == testsupport::optional_string(e["title"]), name);
        CHECK_MESSAGE(r.author == testsupport::optional_string(e["author"]), name);
        if (!e["year"].is_null()) {
            CHECK_MESSAGE(r.year == e["year"].get<int>(), name);
            CHECK_MESSAGE(r.year_source == year_source_named(e["year_source"]), name);
            CHECK_MESSAGE(r.recency == 2026 - r.year, name);
        }
        CHECK_MESSAGE(r.file_pages == entry["pages"].get<std::uint64_t>(), name);
        CHECK_MESSAGE(r.pdf_version == entry["pdf_version"].get<std::string>(), name);
        CHECK(r.doc_index == 7);
        CHECK(r.file_name == std::filesystem::path(name).filename().string());
        CHECK(r.file_size == std::filesystem::file_size(fixture(name)));
        CHECK_FALSE(r.load_error);
    }
}

TEST_CASE("replica corpus years and recency against 2012")
{
    const std::map<std::string, int> recency = {
        { "Tangsrapirof2011IEEE0593012.pdf", 1 },
        { "Yilmazel2004ACMMetaextract.pdf", 0 },
        { "Wiesman1997Elsevierinformation.pdf", 14 },
        { "VidalC2010SpringerMetadata.pdf", 2 },
        { "Zhu2005SpringerGMA-PSMH.pdf", 7 },
    };
    for (auto& entry : manifest()["replica"]) {
        auto r = build_record(fixture(entry["file"]), 1, ReferenceDate::of_year(2012));
        CHECK(r.year == entry["expected"]["year"].get<int>());
        CHECK(r.recency == recency.at(r.file_name));
        CHECK(r.title == testsupport::optional_string(entry["expected"]["title"]));
    }
}

TEST_CASE("degraded inputs still produce records")
{
    for (auto& entry : manifest()["degraded"]) {
        auto name = entry["file"].get<std::string>();
        auto kind = entry["kind"].get<std::string>();
        HarvestRecord r;
        REQUIRE_NOTHROW_MESSAGE(r = build_record(fixture(name), 1, ReferenceDate::of_year(2026)), name);
        CHECK_MESSAGE(!r.warnings.empty(), name);
        CHECK(r.year > 0);
        if (kind == "encrypted") {
            CHECK(r.encrypted);
            CHECK_FALSE(r.load_error);
        } else if (kind == "zero" || kind == "not_pdf") {
            CHECK(r.load_error == ErrorCode::NotPdf);
        }
    }
}

TEST_CASE("missing file and directory raise typed errors")
{
    auto code_of = [](const std::filesystem::path& p) {
        try {
            build_record(p, 1, ReferenceDate::of_year(2012));
        } catch (const HarvestError& e) {
            return std::optional<ErrorCode>(e.code());
        }
        return std::optional<ErrorCode> {};
    };
    CHECK(code_of(fixture("oracle/does-not-exist.pdf")) == ErrorCode::NotAFile);
    CHECK(code_of(fixture("oracle")) == ErrorCode::NotAFile);
}

TEST_CASE("record is a pure function of the file and reference date")
{
    auto path = fixture("oracle/o05_both_differ.pdf");
    CHECK(build_record(path, 3, ReferenceDate::of_year(2012)) == build_record(path, 3, ReferenceDate::of_year(2012)));
}

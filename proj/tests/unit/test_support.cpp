// The test-side readers and writers are themselves oracles; check them
// against hand-made inputs so a bug there cannot hide a bug in the library.

#include <doctest.h>

#include "deflate_encoder.hpp"
#include "pdf_writer.hpp"
#include "readers.hpp"

#include <zlib.h>

using namespace testsupport;

TEST_CASE("csv reader")
{
    auto rows = parse_csv("a,b\r\n\"x,y\",\"say \"\"hi\"\"\"\r\n\"multi\r\nline\",\r\n");
    REQUIRE(rows.size() == 3);
    CHECK(rows[1][0] == "x,y");
    CHECK(rows[1][1] == "say \"hi\"");
    CHECK(rows[2][0] == "multi\r\nline");
    CHECK(rows[2][1] == "");
    CHECK_THROWS(parse_csv("a,b\nc,d\n"));
    CHECK_THROWS(parse_csv("a,b\r\nc\r\n"));
    CHECK_THROWS(parse_csv("\"open\r\n"));
    CHECK_THROWS(parse_csv("a\"b\r\n"));
}

TEST_CASE("bibtex reader")
{
    auto entries = parse_bibtex("@article{k1,\n  title = {A {nested} title},\n  year = 2001\n}\n@misc{k2, note = \"q {x}\"}\n");
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].fields.at("title") == "A {nested} title");
    CHECK(entries[0].fields.at("year") == "2001");
    CHECK(entries[1].fields.at("note") == "q {x}");
    CHECK_THROWS(parse_bibtex("@article{k, title = {open}\n"));
    CHECK_THROWS(parse_bibtex("@a{k, t={x}}\n@a{k, t={y}}"));
    CHECK_THROWS(parse_bibtex("stray @a{k, t={x}}"));
    CHECK(detex("{\\textbraceleft}a\\}{b}{\\textbackslash}") == "{a}b\\");
}

TEST_CASE("ris reader")
{
    auto recs = parse_ris("TY  - JOUR\nAU  - A\nAU  - B\nTI  - T\nER  - \n\nTY  - BOOK\nER  - \n");
    REQUIRE(recs.size() == 2);
    CHECK(recs[0].all("AU") == std::vector<std::string> { "A", "B" });
    CHECK(recs[0].one("TI") == "T");
    CHECK(recs[1].one("TI") == "");
    CHECK_THROWS(parse_ris("TY  - JOUR\nAU - A\nER  - \n"));
    CHECK_THROWS(parse_ris("TY  - JOUR\n"));
    CHECK_THROWS(parse_ris("AU  - A\n"));
}

TEST_CASE("deflate encoder output inflates under zlib")
{
    std::string text;
    for (int i = 0; i < 5000; ++i)
        text += static_cast<char>("abcabcabd xyz"[i % 13] + (i % 97 == 0));
    for (auto mode : { DeflateMode::Stored, DeflateMode::Fixed, DeflateMode::FixedLz77 }) {
        auto packed = zlib_compress(text, mode, 700);
        std::string out(text.size(), '\0');
        uLongf length = out.size();
        REQUIRE(uncompress(reinterpret_cast<Bytef*>(out.data()), &length, reinterpret_cast<const Bytef*>(packed.data()), packed.size()) == Z_OK);
        CHECK(length == text.size());
        CHECK(out == text);
    }
    CHECK(adler32("Wikipedia") == 0x11E60398u);
}

TEST_CASE("writer produces a well-formed classic file")
{
    PdfSpec spec;
    spec.title = "Paren ( and \\ backslash";
    auto bytes = make_pdf(spec);
    CHECK(bytes.rfind("%PDF-", 0) == 0);
    CHECK(bytes.find("(Paren \\( and \\\\ backslash)") != std::string::npos);
    auto xref = bytes.find("xref\n");
    auto startxref = bytes.find("startxref\n");
    REQUIRE(xref != std::string::npos);
    CHECK(std::stoul(bytes.substr(startxref + 10)) == xref);

    TempDir dir("writer");
    write_file(dir / "a.pdf", bytes);
    CHECK(read_file(dir / "a.pdf") == bytes);
}

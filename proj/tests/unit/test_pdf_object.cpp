#include <doctest.h>

#include <pdfharvest/lexer.hpp>
#include <pdfharvest/pdf_object.hpp>

using namespace pdfharvest;

TEST_CASE("object kinds follow the stored alternative")
{
    CHECK(PdfObject {}.kind() == ObjectKind::Null);
    CHECK(PdfObject { true }.kind() == ObjectKind::Boolean);
    CHECK(PdfObject { 42 }.kind() == ObjectKind::Integer);
    CHECK(PdfObject { 1.5 }.kind() == ObjectKind::Real);
    CHECK(PdfObject { PdfString { "x" } }.kind() == ObjectKind::String);
    CHECK(PdfObject { PdfName { "Type" } }.kind() == ObjectKind::Name);
    CHECK(PdfObject { PdfArray {} }.kind() == ObjectKind::Array);
    CHECK(PdfObject { PdfDictionary {} }.kind() == ObjectKind::Dictionary);
    CHECK(PdfObject { PdfStream {} }.kind() == ObjectKind::Stream);
    CHECK(PdfObject { PdfReference { 1, 0 } }.kind() == ObjectKind::Reference);
}

TEST_CASE("accessors return nothing on a kind mismatch")
{
    PdfObject i { 7 };
    CHECK(i.as_integer() == 7);
    CHECK(i.as_number() == 7.0);
    CHECK_FALSE(i.as_bool());
    CHECK(i.as_string() == nullptr);
    CHECK(i.as_dictionary() == nullptr);

    PdfObject r { 2.25 };
    CHECK_FALSE(r.as_integer());
    CHECK(r.as_number() == 2.25);
}

TEST_CASE("a stream exposes its dictionary")
{
    PdfStream s;
    s.dict.set("Type", PdfName { "XRef" });
    s.raw = "abc";
    PdfObject o { s };
    REQUIRE(o.as_dictionary() != nullptr);
    CHECK(o.as_dictionary()->name_of("Type") == "XRef");
    CHECK(o.as_stream()->raw == "abc");
    CHECK_FALSE(o.is_dictionary());
}

TEST_CASE("dictionary set, find, erase")
{
    PdfDictionary d;
    CHECK(d.empty());
    d.set("A", 1);
    d.set("B", PdfName { "X" });
    d.set("A", 2);
    CHECK(d.size() == 2);
    CHECK(d.find("A")->as_integer() == 2);
    CHECK(d.name_of("B") == "X");
    CHECK_FALSE(d.name_of("A"));
    CHECK(d.erase("A"));
    CHECK_FALSE(d.erase("A"));
    CHECK(d.find("A") == nullptr);

    PdfDictionary copy = d;
    copy.set("C", true);
    CHECK(d.size() == 1);
    CHECK(copy.size() == 2);
}

TEST_CASE("deep equality compares container contents")
{
    auto a = parse_object_text("<< /K [1 2 (x)] /N null >>");
    auto b = parse_object_text("<</N null/K[1 2(x)]>>");
    auto c = parse_object_text("<< /K [1 2 (y)] /N null >>");
    CHECK(a == b);
    CHECK_FALSE(a == c);
    CHECK_FALSE(PdfObject { 1 } == PdfObject { 1.0 });
}

TEST_CASE("to_pdf_syntax re-parses to the same object")
{
    const char* samples[] = {
        "<< /Title (Paren \\( and \\) and \\\\) /Hex <00FF10> /Arr [1 -2 3.5 true false null /N#23ame 4 0 R] >>",
        "[<< /A << /B [ ] >> >> (\\000\\377)]",
        "/Name#20With#2FDelims",
    };
    for (auto text : samples) {
        auto first = parse_object_text(text);
        auto again = parse_object_text(to_pdf_syntax(first));
        CHECK_MESSAGE(first == again, text);
    }
}

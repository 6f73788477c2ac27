#include <doctest.h>

#include "deflate_encoder.hpp"

#include <pdfharvest/errors.hpp>
#include <pdfharvest/filters.hpp>
#include <pdfharvest/lexer.hpp>

#include <cstdlib>
#include <random>

using namespace pdfharvest;
using testsupport::DeflateMode;
using testsupport::zlib_compress;

namespace {

std::string random_bytes(std::mt19937& rng, std::size_t n, int alphabet)
{
    std::uniform_int_distribution<int> d(0, alphabet - 1);
    std::string s(n, '\0');
    for (auto& c : s)
        c = static_cast<char>(d(rng));
    return s;
}

// PNG row filtering written out from the PNG specification.
std::string png_encode(std::string_view data, std::size_t row, std::size_t bpp, std::mt19937& rng)
{
    std::string out;
    std::string prev(row, '\0');
    for (std::size_t r = 0; r * row < data.size(); ++r) {
        std::string cur(data.substr(r * row, row));
        cur.resize(row, '\0');
        int type = static_cast<int>(rng() % 5);
        out += static_cast<char>(type);
        for (std::size_t i = 0; i < row; ++i) {
            int a = i >= bpp ? static_cast<unsigned char>(cur[i - bpp]) : 0;
            int b = static_cast<unsigned char>(prev[i]);
            int c = i >= bpp ? static_cast<unsigned char>(prev[i - bpp]) : 0;
            int x = static_cast<unsigned char>(cur[i]);
            int pred = 0;
            switch (type) {
            case 1: pred = a; break;
            case 2: pred = b; break;
            case 3: pred = (a + b) / 2; break;
            case 4: {
                int p = a + b - c;
                int pa = std::abs(p - a), pb = std::abs(p - b), pc = std::abs(p - c);
                pred = (pa <= pb && pa <= pc) ? a : (pb <= pc ? b : c);
                break;
            }
            }
            out += static_cast<char>((x - pred) & 0xFF);
        }
        prev = cur;
    }
    return out;
}

std::string ascii85_encode(std::string_view data)
{
    std::string out;
    for (std::size_t i = 0; i < data.size(); i += 4) {
        std::uint32_t v = 0;
        std::size_t n = std::min<std::size_t>(4, data.size() - i);
        for (std::size_t k = 0; k < 4; ++k)
            v = (v << 8) | (k < n ? static_cast<unsigned char>(data[i + k]) : 0);
        if (n == 4 && v == 0) {
            out += 'z';
            continue;
        }
        char group[5];
        for (int k = 4; k >= 0; --k) {
            group[k] = static_cast<char>('!' + v % 85);
            v /= 85;
        }
        out.append(group, n + 1);
    }
    return out + "~>";
}

PdfStream stream_of(std::string dict_text, std::string raw)
{
    PdfStream s;
    s.dict = *parse_object_text(dict_text).as_dictionary();
    s.raw = std::move(raw);
    return s;
}

} // namespace

TEST_CASE("no /Filter leaves the bytes unchanged")
{
    auto s = stream_of("<< /Length 3 >>", std::string("a\0b", 3));
    CHECK(decode_stream_data(s) == std::string("a\0b", 3));
}

TEST_CASE("FlateDecode inverts an independent DEFLATE encoder")
{
    std::mt19937 rng(20240611);
    for (auto mode : { DeflateMode::Stored, DeflateMode::Fixed, DeflateMode::FixedLz77 }) {
        for (std::size_t size : { 0, 1, 2, 3, 100, 4096, 70000 }) {
            for (int alphabet : { 2, 16, 256 }) {
                auto data = random_bytes(rng, size, alphabet);
                for (std::size_t block : { std::size_t { 0 }, std::size_t { 1000 } }) {
                    auto compressed = zlib_compress(data, mode, block);
                    CHECK(flate_decode(compressed) == data);
                }
            }
        }
    }
    std::string text;
    for (int i = 0; i < 2000; ++i)
        text += "repetitive metadata text " + std::to_string(i % 17) + "\n";
    CHECK(flate_decode(zlib_compress(text, DeflateMode::FixedLz77)) == text);
}

TEST_CASE("FlateDecode through the stream filter chain, with abbreviations")
{
    std::string data = "BT /F1 12 Tf (Hello) Tj ET";
    auto z = zlib_compress(data, DeflateMode::FixedLz77);
    CHECK(decode_stream_data(stream_of("<< /Filter /FlateDecode >>", z)) == data);
    CHECK(decode_stream_data(stream_of("<< /Filter [/Fl] >>", z)) == data);
}

TEST_CASE("bare DEFLATE without the zlib wrapper is accepted")
{
    std::string data = "headerless";
    auto z = zlib_compress(data, DeflateMode::Fixed);
    auto bare = z.substr(2, z.size() - 6);
    CHECK(flate_decode(bare) == data);
}

TEST_CASE("truncated DEFLATE keeps what was decoded; garbage is CorruptStream")
{
    std::mt19937 rng(7);
    auto data = random_bytes(rng, 50000, 256);
    auto z = zlib_compress(data, DeflateMode::Stored);
    auto partial = flate_decode(z.substr(0, z.size() / 2));
    CHECK(!partial.empty());
    CHECK(data.compare(0, partial.size(), partial) == 0);

    try {
        flate_decode("this is not deflate data at all");
        FAIL("expected CorruptStream");
    } catch (const HarvestError& e) {
        CHECK(e.code() == ErrorCode::CorruptStream);
    }
}

TEST_CASE("ASCIIHexDecode")
{
    CHECK(ascii_hex_decode("48656C6c6F>") == "Hello");
    CHECK(ascii_hex_decode("4 8\n65>") == "He");
    CHECK(ascii_hex_decode("414") == "A@");
    CHECK(ascii_hex_decode(">") == "");
    CHECK_THROWS_AS(ascii_hex_decode("4X"), HarvestError);
}

TEST_CASE("ASCII85Decode matches an independent encoder")
{
    CHECK(ascii85_decode("87cURD_*#4DfTZ)~>") == "Hello, World");
    CHECK(ascii85_decode("z~>") == std::string(4, '\0'));
    CHECK(ascii85_decode("<~87cURD_*#4DfTZ)~>") == "Hello, World");
    CHECK(ascii85_decode("87cU RD_*\n#4DfTZ)~>") == "Hello, World");
    std::mt19937 rng(85);
    for (std::size_t n = 0; n < 40; ++n) {
        auto data = random_bytes(rng, n, 256);
        if (n % 5 == 0)
            data.append(8, '\0');
        CHECK(ascii85_decode(ascii85_encode(data)) == data);
    }
    CHECK_THROWS_AS(ascii85_decode("{{{{{~>"), HarvestError);
    CHECK_THROWS_AS(ascii85_decode("s8W-\"~>"), HarvestError);
}

TEST_CASE("filter chains run left to right")
{
    std::string data = "chained payload";
    auto z = zlib_compress(data, DeflateMode::Fixed);
    std::string hex;
    for (unsigned char c : z) {
        char b[3];
        std::snprintf(b, sizeof b, "%02x", c);
        hex += b;
    }
    hex += '>';
    CHECK(decode_stream_data(stream_of("<< /Filter [/ASCIIHexDecode /FlateDecode] >>", hex)) == data);
    CHECK(decode_stream_data(stream_of("<< /Filter [/AHx /A85] >>", "3837635552445f2a23344466545a297e3e>")) == "Hello, World");
}

TEST_CASE("unsupported filters are named, even after a supported one")
{
    auto z = zlib_compress("x", DeflateMode::Fixed);
    for (auto [dict, expected] : { std::pair { "<< /Filter [/FlateDecode /DCTDecode] >>", "DCTDecode" },
             std::pair { "<< /Filter /LZWDecode >>", "LZWDecode" }, std::pair { "<< /Filter /JBIG2Decode >>", "JBIG2Decode" } }) {
        try {
            decode_stream_data(stream_of(dict, z));
            FAIL("expected UnsupportedFilter");
        } catch (const HarvestError& e) {
            CHECK(e.code() == ErrorCode::UnsupportedFilter);
            CHECK(std::string(e.what()).find(expected) != std::string::npos);
        }
    }
    CHECK_THROWS_AS(decode_stream_data(stream_of("<< /Filter 5 >>", "")), HarvestError);
}

TEST_CASE("PNG predictors invert an independent row encoder")
{
    std::mt19937 rng(10);
    for (int colors : { 1, 3 }) {
        for (int columns : { 1, 4, 5, 20 }) {
            std::size_t row = static_cast<std::size_t>(colors * columns);
            auto data = random_bytes(rng, row * 9, 256);
            auto encoded = png_encode(data, row, static_cast<std::size_t>(colors), rng);
            for (int predictor = 10; predictor <= 15; ++predictor)
                CHECK(apply_predictor(encoded, { predictor, colors, 8, columns }) == data);
        }
    }
}

TEST_CASE("cross-reference style stream: Flate + PNG Up predictor via /DecodeParms")
{
    // Five 4-byte xref rows, filtered with Up as writers do for xref streams.
    std::string rows;
    for (int i = 0; i < 5; ++i)
        rows += std::string { 1, 0, static_cast<char>(16 * i), 0 };
    std::string filtered;
    std::string prev(4, '\0');
    for (int r = 0; r < 5; ++r) {
        filtered += '\x02';
        for (int i = 0; i < 4; ++i)
            filtered += static_cast<char>(rows[r * 4 + i] - prev[i]);
        prev = rows.substr(r * 4, 4);
    }
    auto s = stream_of("<< /Filter /FlateDecode /DecodeParms << /Predictor 12 /Columns 4 >> >>",
        zlib_compress(filtered, DeflateMode::FixedLz77));
    CHECK(decode_stream_data(s) == rows);
}

TEST_CASE("TIFF predictor 2 and parameter validation")
{
    CHECK(apply_predictor(std::string { 1, 1, 1, 5, 1, 1 }, { 2, 1, 8, 3 }) == std::string { 1, 2, 3, 5, 6, 7 });
    CHECK(apply_predictor("abc", { 1, 1, 8, 1 }) == "abc");
    CHECK_THROWS_AS(apply_predictor("abc", { 7, 1, 8, 1 }), HarvestError);
    CHECK_THROWS_AS(apply_predictor("abc", { 12, 0, 8, 1 }), HarvestError);
    CHECK_THROWS_AS(apply_predictor(std::string { 9, 0 }, { 12, 1, 8, 1 }), HarvestError);
}

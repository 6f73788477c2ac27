#include <pdfharvest/errors.hpp>
#include <pdfharvest/filters.hpp>

#include <zlib.h>

#include <array>
#include <cstdlib>
#include <vector>

namespace pdfharvest {

namespace {

constexpr std::size_t max_decoded_size = std::size_t { 1 } << 30;

bool is_white(char c) { return c == ' ' || c == '\n' || c == '\r' || c == '\t' || c == '\f' || c == '\0'; }

// Returns Z_OK on a clean end of stream, otherwise the last zlib status.
int inflate_into(std::string_view data, int window_bits, std::string& out)
{
    z_stream zs {};
    if (inflateInit2(&zs, window_bits) != Z_OK)
        throw HarvestError(ErrorCode::CorruptStream, "zlib initialisation failed");

    zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(data.data()));
    zs.avail_in = static_cast<uInt>(data.size());
    std::array<char, 16384> buffer;
    int status = Z_OK;
    do {
        zs.next_out = reinterpret_cast<Bytef*>(buffer.data());
        zs.avail_out = static_cast<uInt>(buffer.size());
        status = inflate(&zs, Z_NO_FLUSH);
        out.append(buffer.data(), buffer.size() - zs.avail_out);
        if (out.size() > max_decoded_size) {
            inflateEnd(&zs);
            throw HarvestError(ErrorCode::CorruptStream, "decoded stream exceeds size limit");
        }
    } while (status == Z_OK);
    inflateEnd(&zs);
    return status == Z_STREAM_END ? Z_OK : status;
}

} // namespace

std::string flate_decode(std::string_view data)
{
    std::string out;
    int status = inflate_into(data, MAX_WBITS, out);
    if (status == Z_OK)
        return out;
    if (status == Z_DATA_ERROR && out.empty()) {
        // Some writers omit the zlib header and emit a bare DEFLATE stream.
        std::string raw;
        if (inflate_into(data, -MAX_WBITS, raw) == Z_OK)
            return raw;
    }
    // Truncated input still yields the bytes decoded so far.
    if (status == Z_BUF_ERROR && !out.empty())
        return out;
    throw HarvestError(ErrorCode::CorruptStream, std::string("FlateDecode failed: ") + (status == Z_DATA_ERROR ? "invalid data" : "truncated data"));
}

std::string ascii_hex_decode(std::string_view data)
{
    std::string out;
    out.reserve(data.size() / 2);
    int pending = -1;
    for (char c : data) {
        if (c == '>')
            break;
        if (is_white(c))
            continue;
        int v;
        if (c >= '0' && c <= '9')
            v = c - '0';
        else if (c >= 'a' && c <= 'f')
            v = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F')
            v = c - 'A' + 10;
        else
            throw HarvestError(ErrorCode::CorruptStream, "ASCIIHexDecode: invalid character");
        if (pending < 0) {
            pending = v;
        } else {
            out += static_cast<char>((pending << 4) | v);
            pending = -1;
        }
    }
    if (pending >= 0)
        out += static_cast<char>(pending << 4);
    return out;
}

std::string ascii85_decode(std::string_view data)
{
    if (data.substr(0, 2) == "<~")
        data.remove_prefix(2);
    std::string out;
    out.reserve(data.size() * 4 / 5);
    std::uint32_t group = 0;
    int count = 0;
    auto flush = [&](int bytes) {
        for (int i = 0; i < bytes; ++i)
            out += static_cast<char>((group >> (24 - 8 * i)) & 0xFF);
    };
    for (std::size_t i = 0; i < data.size(); ++i) {
        char c = data[i];
        if (is_white(c))
            continue;
        if (c == '~')
            break;
        if (c == 'z' && count == 0) {
            out.append(4, '\0');
            continue;
        }
        if (c < '!' || c > 'u')
            throw HarvestError(ErrorCode::CorruptStream, "ASCII85Decode: invalid character");
        std::uint64_t next = std::uint64_t { group } * 85 + static_cast<std::uint32_t>(c - '!');
        if (next > 0xFFFFFFFFull)
            throw HarvestError(ErrorCode::CorruptStream, "ASCII85Decode: group overflow");
        group = static_cast<std::uint32_t>(next);
        if (++count == 5) {
            flush(4);
            group = 0;
            count = 0;
        }
    }
    if (count == 1)
        throw HarvestError(ErrorCode::CorruptStream, "ASCII85Decode: dangling final character");
    if (count > 1) {
        for (int i = count; i < 5; ++i)
            group = group * 85 + 84;
        flush(count - 1);
    }
    return out;
}

std::string apply_predictor(std::string_view data, const PredictorParams& params)
{
    if (params.predictor <= 1)
        return std::string(data);
    if (params.colors < 1 || params.columns < 1 || params.bits_per_component < 1 || params.bits_per_component > 16)
        throw HarvestError(ErrorCode::CorruptStream, "invalid predictor parameters");

    const std::size_t bits_per_pixel = static_cast<std::size_t>(params.colors) * static_cast<std::size_t>(params.bits_per_component);
    const std::size_t bpp = std::max<std::size_t>(1, bits_per_pixel / 8);
    const std::size_t row_length = (bits_per_pixel * static_cast<std::size_t>(params.columns) + 7) / 8;

    std::string out;
    if (params.predictor == 2) {
        if (params.bits_per_component != 8)
            throw HarvestError(ErrorCode::CorruptStream, "TIFF predictor supports 8-bit components only");
        out.assign(data);
        for (std::size_t row = 0; row + row_length <= out.size(); row += row_length) {
            for (std::size_t i = bpp; i < row_length; ++i)
                out[row + i] = static_cast<char>(static_cast<unsigned char>(out[row + i]) + static_cast<unsigned char>(out[row + i - bpp]));
        }
        return out;
    }
    if (params.predictor < 10 || params.predictor > 15)
        throw HarvestError(ErrorCode::CorruptStream, "unknown predictor " + std::to_string(params.predictor));

    // PNG: every row carries its own filter-type byte, whatever /Predictor says.
    std::vector<unsigned char> previous(row_length, 0);
    std::vector<unsigned char> current(row_length, 0);
    out.reserve(data.size());
    std::size_t pos = 0;
    while (pos < data.size()) {
        unsigned char type = static_cast<unsigned char>(data[pos++]);
        std::size_t available = std::min(row_length, data.size() - pos);
        std::fill(current.begin(), current.end(), 0);
        for (std::size_t i = 0; i < available; ++i)
            current[i] = static_cast<unsigned char>(data[pos + i]);
        pos += available;
        for (std::size_t i = 0; i < row_length; ++i) {
            unsigned left = i >= bpp ? current[i - bpp] : 0;
            unsigned up = previous[i];
            unsigned upper_left = i >= bpp ? previous[i - bpp] : 0;
            unsigned value = current[i];
            switch (type) {
            case 0: break;
            case 1: value += left; break;
            case 2: value += up; break;
            case 3: value += (left + up) / 2; break;
            case 4: {
                int p = static_cast<int>(left) + static_cast<int>(up) - static_cast<int>(upper_left);
                int pa = std::abs(p - static_cast<int>(left));
                int pb = std::abs(p - static_cast<int>(up));
                int pc = std::abs(p - static_cast<int>(upper_left));
                value += (pa <= pb && pa <= pc) ? left : (pb <= pc ? up : upper_left);
                break;
            }
            default:
                throw HarvestError(ErrorCode::CorruptStream, "invalid PNG row filter " + std::to_string(type));
            }
            current[i] = static_cast<unsigned char>(value);
        }
        out.append(reinterpret_cast<const char*>(current.data()), available);
        std::swap(previous, current);
    }
    return out;
}

namespace {

PdfObject resolved(const PdfObject& object, const ObjectResolver& resolve)
{
    return resolve && object.is_reference() ? resolve(object) : object;
}

PredictorParams predictor_params(const PdfObject& parms_object, const ObjectResolver& resolve)
{
    PredictorParams params;
    auto parms = resolved(parms_object, resolve);
    auto* dict = parms.as_dictionary();
    if (!dict)
        return params;
    auto int_entry = [&](std::string_view key, int fallback) {
        if (auto* v = dict->find(key)) {
            if (auto i = resolved(*v, resolve).as_integer())
                return static_cast<int>(*i);
        }
        return fallback;
    };
    params.predictor = int_entry("Predictor", 1);
    params.colors = int_entry("Colors", 1);
    params.bits_per_component = int_entry("BitsPerComponent", 8);
    params.columns = int_entry("Columns", 1);
    return params;
}

} // namespace

std::string decode_stream_data(const PdfStream& stream, const ObjectResolver& resolve)
{
    std::vector<std::string> filters;
    std::vector<PdfObject> parms;

    if (auto* f = stream.dict.find("Filter")) {
        auto filter = resolved(*f, resolve);
        if (auto* name = filter.as_name()) {
            filters.push_back(name->value);
        } else if (auto* array = filter.as_array()) {
            for (auto& item : *array) {
                auto entry = resolved(item, resolve);
                if (auto* n = entry.as_name())
                    filters.push_back(n->value);
                else
                    throw HarvestError(ErrorCode::CorruptStream, "filter entry is not a name");
            }
        } else if (!filter.is_null()) {
            throw HarvestError(ErrorCode::CorruptStream, "/Filter is neither a name nor an array");
        }
    }
    const PdfObject* p = stream.dict.find("DecodeParms");
    if (!p)
        p = stream.dict.find("DP");
    if (p) {
        auto decode_parms = resolved(*p, resolve);
        if (auto* array = decode_parms.as_array())
            parms = *array;
        else
            parms.push_back(decode_parms);
    }

    auto supported = [](std::string_view n) {
        return n == "FlateDecode" || n == "Fl" || n == "ASCIIHexDecode" || n == "AHx" || n == "ASCII85Decode" || n == "A85";
    };
    for (auto& name : filters) {
        if (!supported(name))
            throw HarvestError(ErrorCode::UnsupportedFilter, name);
    }

    std::string data = stream.raw;
    for (std::size_t i = 0; i < filters.size(); ++i) {
        const auto& name = filters[i];
        PdfObject parm = i < parms.size() ? parms[i] : PdfObject {};
        if (name == "FlateDecode" || name == "Fl") {
            data = apply_predictor(flate_decode(data), predictor_params(parm, resolve));
        } else if (name == "ASCIIHexDecode" || name == "AHx") {
            data = ascii_hex_decode(data);
        } else {
            data = ascii85_decode(data);
        }
    }
    return data;
}

} // namespace pdfharvest

#pragma once

#include <pdfharvest/pdf_object.hpp>

#include <functional>
#include <string>
#include <string_view>

namespace pdfharvest {

/// Resolves indirect references found inside stream dictionaries.
using ObjectResolver = std::function<PdfObject(const PdfObject&)>;

std::string flate_decode(std::string_view data);
std::string ascii_hex_decode(std::string_view data);
std::string ascii85_decode(std::string_view data);

struct PredictorParams {
    int predictor = 1;
    int colors = 1;
    int bits_per_component = 8;
    int columns = 1;
};

/// Undoes a TIFF (2) or PNG (10-15) predictor. Predictor 1 is the identity.
std::string apply_predictor(std::string_view data, const PredictorParams& params);

/// Runs the /Filter chain of `stream` left to right with matching /DecodeParms.
/// Throws HarvestError(UnsupportedFilter | CorruptStream).
std::string decode_stream_data(const PdfStream& stream, const ObjectResolver& resolve = {});

} // namespace pdfharvest

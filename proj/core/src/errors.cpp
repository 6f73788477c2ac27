#include <pdfharvest/errors.hpp>

namespace pdfharvest {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::NotAFile: return "NotAFile";
    case ErrorCode::NotPdf: return "NotPdf";
    case ErrorCode::Encrypted: return "Encrypted";
    case ErrorCode::UnrecoverablyCorrupt: return "UnrecoverablyCorrupt";
    case ErrorCode::ReferenceCycle: return "ReferenceCycle";
    case ErrorCode::UnsupportedFilter: return "UnsupportedFilter";
    case ErrorCode::CorruptStream: return "CorruptStream";
    case ErrorCode::UnparseableDate: return "UnparseableDate";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NotADirectory: return "NotADirectory";
    case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

} // namespace pdfharvest

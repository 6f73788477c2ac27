#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pdfharvest {

enum class ErrorCode {
    NotAFile,
    NotPdf,
    Encrypted,
    UnrecoverablyCorrupt,
    ReferenceCycle,
    UnsupportedFilter,
    CorruptStream,
    UnparseableDate,
    EmptyInput,
    NotADirectory,
    IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Hard failure raised by the harvesting pipeline. Soft problems are
/// reported as warnings instead and never throw.
class HarvestError : public std::runtime_error {
public:
    HarvestError(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message)
        , code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

using Warnings = std::vector<std::string>;

inline void warn(Warnings* sink, std::string message)
{
    if (sink)
        sink->push_back(std::move(message));
}

} // namespace pdfharvest

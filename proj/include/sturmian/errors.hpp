#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace sturmian {

// Base of all library errors. kind() is a stable machine-readable tag used by
// the CLI's structured error line; what() is "<kind>: <detail>".
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& detail)
        : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define STURMIAN_ERROR(NAME)                                                   \
    class NAME : public Error {                                                \
    public:                                                                    \
        explicit NAME(const std::string& detail) : Error(#NAME, detail) {}     \
    }

STURMIAN_ERROR(NotAPrefix);
STURMIAN_ERROR(NotASuffix);
STURMIAN_ERROR(IndexOutOfRange);
STURMIAN_ERROR(NotTypeI);
STURMIAN_ERROR(NotProlongable);
STURMIAN_ERROR(NoCertificate);
STURMIAN_ERROR(CertificateMismatch);
STURMIAN_ERROR(NoCommonPrefix);
STURMIAN_ERROR(DirectiveTooShort);
STURMIAN_ERROR(EmptyImage);
STURMIAN_ERROR(InvalidSurd);
STURMIAN_ERROR(UnsupportedExpansion);
STURMIAN_ERROR(ParseError);
STURMIAN_ERROR(CapExceeded);
STURMIAN_ERROR(Overflow);

#undef STURMIAN_ERROR

} // namespace sturmian

#pragma once

#include <stdexcept>
#include <string>

namespace mop {

enum class ErrorKind {
    NonTerminating,
    LowerParamPole,
    PoleInParams,
    InvalidParams,
    OutOfSupport,
    UnsupportedRepresentation,
    DegreeExceedsSupport,
    EmptyComponent,
    SingularDenominator,
    SingularSystem,
    InvalidShift,
    PoleOnContour,
    WrongEnclosure,
    InvalidArgument,
};

const char* error_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace mop

#include "mop/error.hpp"

namespace mop {

const char* error_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::NonTerminating: return "NonTerminating";
    case ErrorKind::LowerParamPole: return "LowerParamPole";
    case ErrorKind::PoleInParams: return "PoleInParams";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::OutOfSupport: return "OutOfSupport";
    case ErrorKind::UnsupportedRepresentation: return "UnsupportedRepresentation";
    case ErrorKind::DegreeExceedsSupport: return "DegreeExceedsSupport";
    case ErrorKind::EmptyComponent: return "EmptyComponent";
    case ErrorKind::SingularDenominator: return "SingularDenominator";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::InvalidShift: return "InvalidShift";
    case ErrorKind::PoleOnContour: return "PoleOnContour";
    case ErrorKind::WrongEnclosure: return "WrongEnclosure";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Error";
}

}  // namespace mop

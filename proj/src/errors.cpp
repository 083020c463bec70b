#include "ncalc/errors.hpp"

namespace ncalc {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::ShapeMismatch: return "shape-mismatch";
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::NotAssociative: return "not-associative";
    case ErrorKind::BadUnit: return "bad-unit";
    case ErrorKind::AlgebraMismatch: return "algebra-mismatch";
    case ErrorKind::NotCentral: return "not-central";
    case ErrorKind::NotADerivation: return "not-a-derivation";
    case ErrorKind::NotInModule: return "not-in-module";
    case ErrorKind::UnknownPreset: return "unknown-preset";
    case ErrorKind::BadParams: return "bad-params";
    case ErrorKind::CoefficientNotCentral: return "coefficient-not-central";
    case ErrorKind::LiftMismatch: return "lift-mismatch";
    case ErrorKind::ParseError: return "parse-error";
    case ErrorKind::ValidationError: return "validation-error";
    case ErrorKind::InternalCheck: return "internal-consistency";
  }
  return "unknown";
}

namespace {
std::string make_what(ErrorKind k, const std::string& m, const std::string& loc) {
  std::string s = error_kind_name(k);
  s += ": ";
  s += m;
  if (!loc.empty()) {
    s += " [at ";
    s += loc;
    s += "]";
  }
  return s;
}
}  // namespace

Error::Error(ErrorKind kind, std::string message, std::string location)
    : std::runtime_error(make_what(kind, message, location)),
      kind_(kind),
      message_(std::move(message)),
      location_(std::move(location)) {}

void internal_check_failed(const std::string& what) {
  throw Error(ErrorKind::InternalCheck, what);
}

}  // namespace ncalc

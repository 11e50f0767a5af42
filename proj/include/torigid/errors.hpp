#pragma once

#include <stdexcept>
#include <string>

namespace torigid {

enum class ErrorCode {
    ParseError,
    DimensionMismatch,
    NotSimple,
    Unbounded,
    Empty,
    RedundantInequality,
    VertexOnHyperplane,
    EmptyCut,
    CutMissesInterior,
    FacetNotHyperplanar,
    SignAmbiguous,
    StarViolation,
    NotExtendable,
    InvalidInput,
    BudgetExceeded,
};

const char* error_code_name(ErrorCode code);

class TorigidError : public std::runtime_error {
  public:
    TorigidError(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

}  // namespace torigid

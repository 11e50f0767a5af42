#include "torigid/numeric.hpp"

#include <cctype>

#include "torigid/errors.hpp"

namespace torigid {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NotSimple: return "NotSimple";
        case ErrorCode::Unbounded: return "Unbounded";
        case ErrorCode::Empty: return "Empty";
        case ErrorCode::RedundantInequality: return "RedundantInequality";
        case ErrorCode::VertexOnHyperplane: return "VertexOnHyperplane";
        case ErrorCode::EmptyCut: return "EmptyCut";
        case ErrorCode::CutMissesInterior: return "CutMissesInterior";
        case ErrorCode::FacetNotHyperplanar: return "FacetNotHyperplanar";
        case ErrorCode::SignAmbiguous: return "SignAmbiguous";
        case ErrorCode::StarViolation: return "StarViolation";
        case ErrorCode::NotExtendable: return "NotExtendable";
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    }
    return "UnknownError";
}

namespace {

bool is_integer_literal(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num_part = text.substr(0, slash);
    if (!is_integer_literal(num_part))
        throw TorigidError(ErrorCode::ParseError, "bad rational '" + text + "'");
    Int num(num_part);
    Int den = 1;
    if (slash != std::string::npos) {
        const std::string den_part = text.substr(slash + 1);
        if (!is_integer_literal(den_part))
            throw TorigidError(ErrorCode::ParseError, "bad rational '" + text + "'");
        den = Int(den_part);
        if (den <= 0)
            throw TorigidError(ErrorCode::ParseError,
                               "rational '" + text + "' must have positive denominator");
        if (boost::multiprecision::gcd(num, den) != 1)
            throw TorigidError(ErrorCode::ParseError, "rational '" + text + "' is not reduced");
    }
    return make_rat(num, den);
}

std::string format_rational(const Rat& value) {
    const Int num = boost::multiprecision::numerator(value);
    const Int den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace torigid

#pragma once

#include <stdexcept>
#include <string>

namespace ssk3 {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define SSK3_ERROR(Name)                   \
    class Name : public Error {            \
    public:                                \
        using Error::Error;                \
    }

SSK3_ERROR(NotIrreducible);
SSK3_ERROR(DivisionByZero);
SSK3_ERROR(IncompatibleFields);
SSK3_ERROR(FieldCapExceeded);
SSK3_ERROR(ParseError);
SSK3_ERROR(MixedDegree);
SSK3_ERROR(NotInU);
SSK3_ERROR(DegenerateCharts);
SSK3_ERROR(InternalInconsistency);
SSK3_ERROR(WeightViolation);
SSK3_ERROR(NotIntegral);
SSK3_ERROR(NotEven);
SSK3_ERROR(NoMatch);
SSK3_ERROR(AmbiguousMatch);
SSK3_ERROR(DegenerateHexagon);

#undef SSK3_ERROR

}  // namespace ssk3

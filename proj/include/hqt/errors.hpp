#ifndef HQT_ERRORS_HPP
#define HQT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hqt {

struct HqtError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : HqtError {
    DivisionByZero() : HqtError("division by zero") {}
};

struct IncompatibleOrders : HqtError {
    IncompatibleOrders(int a, int b)
        : HqtError("incompatible cyclotomic orders " + std::to_string(a) + " and " + std::to_string(b)) {}
};

struct NotADivisor : HqtError {
    NotADivisor(int m, int mp)
        : HqtError("order " + std::to_string(m) + " does not divide " + std::to_string(mp)) {}
};

struct Singular : HqtError {
    Singular() : HqtError("matrix is singular") {}
};

struct DimensionMismatch : HqtError {
    using HqtError::HqtError;
};

struct InvalidData : HqtError {
    using HqtError::HqtError;
};

struct NotABicharacter : HqtError {
    using HqtError::HqtError;
};

struct NotK8nShape : HqtError {
    NotK8nShape() : HqtError("data is not K(8n)-shaped (G = Z_2n x Z_2 with a<x = ab, b<x = b)") {}
};

struct ParameterConstraintViolated : HqtError {
    using HqtError::HqtError;
};

struct VariantMismatch : HqtError {
    using HqtError::HqtError;
};

struct UnsupportedFamily : HqtError {
    using HqtError::HqtError;
};

struct AmbientFieldTooSmall : HqtError {
    using HqtError::HqtError;
};

struct VerificationFailed : HqtError {
    using HqtError::HqtError;
};

struct InvalidSpec : HqtError {
    using HqtError::HqtError;
};

} // namespace hqt

#endif

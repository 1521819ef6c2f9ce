#pragma once

#include <stdexcept>
#include <string>

namespace rmtori {

/// Base for all domain/validation errors raised by the library.
/// The CLI maps these to exit code 2.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Postcondition/consistency failures that indicate a bug, never bad input.
/// The CLI maps these to exit code 1.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

#define RMTORI_DEFINE_ERROR(Name)                                    \
    struct Name : Error {                                            \
        explicit Name(const std::string& msg) : Error(msg) {}        \
    }

RMTORI_DEFINE_ERROR(NotUnimodularError);      // det != 1 on construction
RMTORI_DEFINE_ERROR(NotPrimitiveError);       // vector with gcd(|deg|,|rk|) != 1
RMTORI_DEFINE_ERROR(MismatchedFieldError);    // QuadNum operands over different sqrt(D)
RMTORI_DEFINE_ERROR(DivisionByZeroError);
RMTORI_DEFINE_ERROR(InvalidOrderError);       // bad (alpha, beta, gamma)
RMTORI_DEFINE_ERROR(NotHyperbolicError);
RMTORI_DEFINE_ERROR(UnipotentOrRationalError);
RMTORI_DEFINE_ERROR(InfinityFixedError);      // c == 0: infinity is the fixed point
RMTORI_DEFINE_ERROR(EigenvectorBaseError);    // base vector proportional to an eigenvector
RMTORI_DEFINE_ERROR(NotAUnitError);
RMTORI_DEFINE_ERROR(ZeroConstantTermError);
RMTORI_DEFINE_ERROR(EigenvalueMismatchError);  // r + 1/r != N
RMTORI_DEFINE_ERROR(NonPrimitiveBaseError);
RMTORI_DEFINE_ERROR(NotAdmissibleError);
RMTORI_DEFINE_ERROR(NotKoszulError);
RMTORI_DEFINE_ERROR(NoFrameError);
RMTORI_DEFINE_ERROR(WrongBoundaryError);      // s_cube_check outside N - M == 1
RMTORI_DEFINE_ERROR(NotInHalfplaneError);
RMTORI_DEFINE_ERROR(PreconditionViolatedError);
RMTORI_DEFINE_ERROR(RationalThetaError);      // operation defined for irrational theta only

#undef RMTORI_DEFINE_ERROR

}  // namespace rmtori

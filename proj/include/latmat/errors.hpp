#pragma once

#include <stdexcept>
#include <string>

namespace latmat {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct IndexError : Error { using Error::Error; };
struct CycleError : Error { using Error::Error; };
struct SizeError : Error { using Error::Error; };
struct MismatchError : Error { using Error::Error; };
struct DuplicateError : Error { using Error::Error; };
struct NonPositiveError : Error { using Error::Error; };
struct ZeroValueError : Error { using Error::Error; };
struct UndefinedValueError : Error { using Error::Error; };
struct NotMeetClosedError : Error { using Error::Error; };
struct NotSemimultiplicativeError : Error { using Error::Error; };
struct NoJoinError : Error { using Error::Error; };
struct ShapeError : Error { using Error::Error; };
struct SingularError : Error { using Error::Error; };
struct ZeroDenominatorError : Error { using Error::Error; };
struct UnknownLabelError : Error { using Error::Error; };
struct ParamError : Error { using Error::Error; };
struct ExhaustionError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace latmat

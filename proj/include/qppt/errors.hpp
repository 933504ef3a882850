#pragma once

#include <stdexcept>

namespace qppt {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotHermitian : Error { using Error::Error; };
struct NotUnit : Error { using Error::Error; };
struct NotOrthonormal : Error { using Error::Error; };
struct TooManyQubits : Error { using Error::Error; };
struct BadBipartition : Error { using Error::Error; };
struct RangeError : Error { using Error::Error; };
struct NotNormalized : Error { using Error::Error; };
struct NotPositive : Error { using Error::Error; };
struct WrongArity : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct BadShape : Error { using Error::Error; };
struct NotBracketed : Error { using Error::Error; };

} // namespace qppt

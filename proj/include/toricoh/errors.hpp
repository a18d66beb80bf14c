#pragma once

#include <stdexcept>
#include <string>

namespace toricoh {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CycleDetected : Error { using Error::Error; };
struct NotGraded : Error { using Error::Error; };
struct DiamondViolation : Error { using Error::Error; };
struct Infeasible : Error { using Error::Error; };
struct NotAComplex : Error { using Error::Error; };
struct TruncationExceeded : Error { using Error::Error; };
struct NotEpimorphism : Error { using Error::Error; };
struct NonSalient : Error { using Error::Error; };
struct RaysNotPrimitive : Error { using Error::Error; };
struct NotCharacteristic : Error { using Error::Error; };
struct NotEquivariantlyFormal : Error { using Error::Error; };
struct ExactnessFailure : Error { using Error::Error; };
struct SchemaError : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };

} // namespace toricoh

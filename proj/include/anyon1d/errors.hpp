#pragma once

#include <stdexcept>
#include <string>

namespace anyon1d {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : Error { using Error::Error; };
struct PoleError : Error { using Error::Error; };
struct NoSignChange : Error { using Error::Error; };
struct KindMismatch : Error { using Error::Error; };
struct ZeroScatteringLength : Error { using Error::Error; };
struct NoBoundState : Error { using Error::Error; };
struct BreakdownRegime : Error { using Error::Error; };
struct ExtrapolationFailure : Error { using Error::Error; };
struct BranchOutOfRange : Error { using Error::Error; };
struct IllConditioned : Error { using Error::Error; };
struct WindowTooSmall : Error { using Error::Error; };
struct ComplexParent : Error { using Error::Error; };

} // namespace anyon1d

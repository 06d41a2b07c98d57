#pragma once

#include <stdexcept>
#include <string>

namespace tops {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ingest
struct MalformedRow : Error { using Error::Error; };
struct DuplicateDate : Error { using Error::Error; };
struct NonPositiveValue : Error { using Error::Error; };
struct EmptyInput : Error { using Error::Error; };
struct EmptyIntersection : Error { using Error::Error; };
struct TooShort : Error { using Error::Error; };
struct DegenerateRange : Error { using Error::Error; };

// lattice / engine
struct LengthMismatch : Error { using Error::Error; };
struct ParityViolation : Error { using Error::Error; };
struct OutOfBounds : Error { using Error::Error; };
struct NonPositiveTemperature : Error { using Error::Error; };

// oracle
struct TooLarge : Error { using Error::Error; };

// synth
struct InvalidProfile : Error { using Error::Error; };

// stats
struct DegenerateSeries : Error { using Error::Error; };
struct SingularRegression : Error { using Error::Error; };
struct EmptyPath : Error { using Error::Error; };

} // namespace tops

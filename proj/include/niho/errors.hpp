#pragma once

#include <stdexcept>
#include <string>

namespace niho {

// Input validation failures. The CLI maps these to exit code 2.
struct NotPrimeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BadExponentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ZeroElementError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BadOrderError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct OddCharacteristicError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct WrongCharacteristicError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct FieldMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct IndexRangeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct HypothesisViolatedError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Resource refusals (size cap or work budget). The CLI maps these to exit code 3.
struct TooLargeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal consistency failures; these signal a bug, not bad input.
struct ConstructionFailureError : std::logic_error {
    using std::logic_error::logic_error;
};
struct NonIntegralRatioError : std::logic_error {
    using std::logic_error::logic_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace niho

#pragma once

#include <stdexcept>

namespace fiblie {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ContainmentViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnknownAlgebra : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidSupport : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotADerivation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotSemidirect : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DegreeTooLarge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct CorruptCache : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace fiblie

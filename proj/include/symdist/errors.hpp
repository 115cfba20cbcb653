#pragma once

#include <stdexcept>

namespace symdist {

// Input that could not be parsed (CLI exit code 1).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Matrix fails rank or stabilizer-structure requirements (CLI exit code 2).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A state the algorithms cannot reach on well-formed input (CLI exit code 3).
struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace symdist

#ifndef NR_ERRORS_HPP
#define NR_ERRORS_HPP

#include <stdexcept>

namespace nr {

// Invalid arguments or malformed input data (CLI maps this to exit code 2).
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A numerical procedure failed to converge or produced an out-of-contract
// result (CLI maps this to exit code 3).
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace nr

#endif

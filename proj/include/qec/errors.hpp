#ifndef QEC_ERRORS_HPP
#define QEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qec {

// Malformed graph specs, edge-list files, family descriptors.
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An operation's preconditions do not hold (disconnected input, size caps,
// evaluation at a pole, ...).
class precondition_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A numeric routine could not meet its contract (non-convergence,
// degenerate brackets, negative discriminant).
class numeric_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A cross-check between independently computed values failed.
class verification_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace qec

#endif

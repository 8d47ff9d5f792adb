#pragma once

#include <stdexcept>
#include <string>

namespace gqt {

/// A state or bath violates the uncertainty-relation / positivity constraints.
class PhysicalityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A closed-form quantifier was asked for outside its domain of validity.
class NotApplicableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A numerically computed quantity left its analytic range by more than the
/// allowed round-off margin.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Output file or directory could not be opened or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace gqt

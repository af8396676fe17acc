#pragma once

#include <stdexcept>
#include <string>

namespace ihxlab {

/// Malformed graph, ordering or tensor input (bad pairing, wrong sizes, parse failures).
class StructuralError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Mixing oriented and unoriented values.
class TypeMismatchError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A computation would exceed the configured resource caps.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace ihxlab

#pragma once

#include <stdexcept>
#include <string>

namespace essmod {

// Base class for every error this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Unknown point id, or an object referencing a point outside its space.
class IdentifierError : public Error {
public:
    using Error::Error;
};

// Malformed input file or a violated file-schema invariant.
class SchemaError : public Error {
public:
    using Error::Error;
};

// Two routes that must agree on a value failed to agree, or a solver
// reached a state the underlying theory rules out.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

// Partition refinement hit the segment cap before meeting the tolerance.
// Carries the best lower bound found so far; family construction catches
// this and routes the curve into the non-rectifiable handling.
class NonRectifiableError : public Error {
public:
    NonRectifiableError(const std::string& what, double best_lower_bound)
        : Error(what), best_lower_bound_(best_lower_bound) {}

    double best_lower_bound() const { return best_lower_bound_; }

private:
    double best_lower_bound_;
};

}  // namespace essmod

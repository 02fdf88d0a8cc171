#ifndef TRICAT_ERRORS_HPP
#define TRICAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tricat {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Arithmetic between elements of different fields.
struct FieldMismatch : Error {
    explicit FieldMismatch(const std::string& what) : Error(what) {}
};

// Matrix or morphism endpoints do not line up.
struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& what) : Error(what) {}
};

// A stated precondition (commuting square, vanishing composite, ...) fails.
struct PreconditionViolated : Error {
    explicit PreconditionViolated(const std::string& what) : Error(what) {}
};

struct NotATriangle : Error {
    explicit NotATriangle(const std::string& what) : Error(what) {}
};

struct NotExact : Error {
    explicit NotExact(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

struct SaturationBudgetExceeded : Error {
    explicit SaturationBudgetExceeded(const std::string& what) : Error(what) {}
};

}  // namespace tricat

#endif

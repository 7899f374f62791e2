#pragma once

#include <stdexcept>
#include <string>

namespace homlie {

// Structural misuse of the library surfaces as exceptions; mathematical
// falsity (axiom violations, failed exactness) is returned as data.
class Error : public std::runtime_error {
public:
    explicit Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

struct FieldMismatch : Error {
    explicit FieldMismatch(const std::string& what) : Error("FieldMismatch", what) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error("DimensionMismatch", what) {}
};

struct ShapeError : Error {
    explicit ShapeError(const std::string& what) : Error("ShapeError", what) {}
};

struct NotAnIdeal : Error {
    explicit NotAnIdeal(const std::string& what) : Error("NotAnIdeal", what) {}
};

struct NotAlphaInvariant : Error {
    explicit NotAlphaInvariant(const std::string& what) : Error("NotAlphaInvariant", what) {}
};

struct IncompatibleActions : Error {
    explicit IncompatibleActions(const std::string& what) : Error("IncompatibleActions", what) {}
};

struct PreconditionViolated : Error {
    explicit PreconditionViolated(const std::string& what) : Error("PreconditionViolated", what) {}
};

struct DegreeError : Error {
    explicit DegreeError(const std::string& what) : Error("DegreeError", what) {}
};

struct UnsupportedField : Error {
    explicit UnsupportedField(const std::string& what) : Error("UnsupportedField", what) {}
};

// Signals a bug: a certificate that is guaranteed by a checked precondition
// failed anyway.
struct InternalInconsistency : Error {
    explicit InternalInconsistency(const std::string& what) : Error("InternalInconsistency", what) {}
};

}  // namespace homlie

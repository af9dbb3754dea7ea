#pragma once

#include <stdexcept>
#include <string>

namespace unicover {

// Every error carries a short machine-readable kind used by the CLI
// (`error: <kind>: <detail>`).
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& detail)
        : std::runtime_error(detail), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define UNICOVER_ERROR(Name)                                                  \
    class Name : public Error {                                               \
    public:                                                                   \
        explicit Name(const std::string& detail) : Error(#Name, detail) {}    \
    };

// polycore
UNICOVER_ERROR(VarTableMismatch)
UNICOVER_ERROR(UnknownVariable)
UNICOVER_ERROR(NotDivisible)
UNICOVER_ERROR(NotAPower)
UNICOVER_ERROR(MissingWeights)
UNICOVER_ERROR(InvalidArgument)

// polyparse
UNICOVER_ERROR(StructureError)

// tower / deform
UNICOVER_ERROR(InvalidTower)
UNICOVER_ERROR(UnsupportedShape)
UNICOVER_ERROR(NotSigmaAdic)
UNICOVER_ERROR(InternalInconsistency)

// resolve
UNICOVER_ERROR(MalformedFamily)
UNICOVER_ERROR(DivisibilityViolation)
UNICOVER_ERROR(DepthExceeded)
UNICOVER_ERROR(TruncationTooShort)

#undef UNICOVER_ERROR

class SyntaxError : public Error {
public:
    SyntaxError(int line, int column, const std::string& what)
        : Error("SyntaxError", "line " + std::to_string(line) + ", column " +
                                   std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace unicover

// Exception hierarchy shared by the whole library.
#pragma once

#include <stdexcept>
#include <string>

namespace weil {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Text could not be parsed; carries a 1-based position.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int col)
        : Error(what + " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")"),
          line(line), col(col) {}
    int line;
    int col;
};

// A constructed multiplication table violates one of the algebra laws,
// or a declared nilpotency bound is inconsistent with the relations.
class NotWeilError : public Error {
public:
    using Error::Error;
};

// Quotient collapsed to dimension zero.
class DegenerateQuotientError : public Error {
public:
    using Error::Error;
};

// Generator images do not kill a defining relation.
class RelationViolatedError : public Error {
public:
    RelationViolatedError(const std::string& what, std::string relation)
        : Error(what), relation(std::move(relation)) {}
    std::string relation;
};

// A generator image has nonzero augmentation.
class NotInMaximalIdealError : public Error {
public:
    using Error::Error;
};

// Operands belong to different algebras, or hom endpoints do not line up.
class MismatchError : public Error {
public:
    using Error::Error;
};

// Elementary function evaluated outside its domain (log at 0, sqrt of a
// negative base point, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Exact mode was asked for a Taylor coefficient that is not rational.
class ModeError : public Error {
public:
    using Error::Error;
};

class UnknownSuiteError : public Error {
public:
    using Error::Error;
};

// Input would require enumerating an unreasonable number of monomials.
class BuildLimitError : public Error {
public:
    using Error::Error;
};

} // namespace weil

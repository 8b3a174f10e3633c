#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tg {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad caller input: out-of-range vertex, overlapping S/T, violated precondition.
class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& what) : Error(what) {}
};

// Malformed serialized graph. offset() is the byte position of the defect.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Instance exceeds an enumeration budget or a deadline expired.
class BudgetError : public Error {
public:
    explicit BudgetError(const std::string& what) : Error(what) {}
};

// A search that is expected to succeed under the documented preconditions failed.
class SearchError : public Error {
public:
    explicit SearchError(const std::string& what) : Error(what) {}
};

// Re-validation of a result the implementation itself produced failed.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& what) : Error(what) {}
};

}  // namespace tg

#pragma once

#include <stdexcept>
#include <string>

namespace bvd {

enum class ErrorKind { Domain, Budget, Parse };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// precondition violations: mixed algebras, bad weights, unbound variables ...
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(ErrorKind::Domain, what) {}
};

class BudgetError : public Error {
public:
    explicit BudgetError(const std::string& what) : Error(ErrorKind::Budget, what) {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t pos)
        : Error(ErrorKind::Parse, what + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

} // namespace bvd

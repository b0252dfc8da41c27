#pragma once

#include <stdexcept>
#include <string>

namespace zg {

// Violation of an operation's precondition or an unrepresentable request.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Syntax error in DSL input; pos is a byte offset into the source text.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
    size_t pos() const { return pos_; }

private:
    size_t pos_;
};

} // namespace zg

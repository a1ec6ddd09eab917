#ifndef AJF_ERRORS_HPP
#define AJF_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ajf {

// Violated precondition: index out of range, rank mismatch, bad parameter.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A word was asked for its class in Γ^s but has a nonzero component below s.
class NotInFiltration : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A homogeneous tensor has no preimage in the free Lie algebra.
class NotLieElement : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& message)
        : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace ajf

#endif

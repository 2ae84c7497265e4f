#ifndef CTLOGIC_ERRORS_HPP
#define CTLOGIC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ctlogic {

/// Caller broke a documented precondition (dimension mismatch, arity, width).
class contract_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Physically meaningless parameter (negative capacitance, zero spacing, ...).
class parameter_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Threshold larger than the total coupling; the gate can never fire.
class unrealizable_gate : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t line, std::size_t column, const std::string& what)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line),
          column_(column),
          message_(what) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return column_; }
    [[nodiscard]] const std::string& message() const noexcept { return message_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

/// Netlist cannot be ordered or simulated (cycle, lint failure, infeasible analog gate).
class netlist_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ctlogic

#endif  // CTLOGIC_ERRORS_HPP

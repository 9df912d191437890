#pragma once

#include <stdexcept>
#include <string>

namespace betticone {

// Failure conditions raised by table validation, decomposition, bounds and
// parsing. Each maps to a stable name used in CLI diagnostics.
enum class errc {
    negative_entry,
    broken_chain,
    empty_table,
    not_cm_consistent,
    invalid_n,
    not_in_cone,
    not_dual_closed,
    empty_decomposition,
    non_zero_start,
    not_degree_zero_generated,
    not_quasi_pure,
    not_codim_three,
    not_cyclic,
    no_such_degree,
    syntax_error,
    invalid_argument,
};

const char* errc_name(errc code) noexcept;

class BettiError : public std::runtime_error {
public:
    BettiError(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message),
          code_(code),
          message_(message) {}

    errc code() const noexcept { return code_; }
    // The description without the errc_name prefix that what() carries.
    const std::string& message() const noexcept { return message_; }

private:
    errc code_;
    std::string message_;
};

}  // namespace betticone

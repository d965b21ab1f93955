#pragma once

#include <stdexcept>
#include <string>

namespace wrt {

// Process exit codes: 10-19 input errors, 20-29 guards, 30 numerical ambiguity.
enum class ErrorCode : int {
    invalid_group = 10,
    invalid_level = 11,
    invalid_word = 12,
    invalid_argument = 13,
    dimension_mismatch = 14,
    wrong_parity = 15,
    io_error = 16,
    corpus_error = 17,
    weyl_guard = 20,
    rank_guard = 21,
    singular_fixed_points = 22,
    non_hyperbolic = 23,
    truncation = 24,
    quadrature = 25,
    size_guard = 26,
    branch_ambiguity = 30,
};

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace wrt

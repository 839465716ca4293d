#pragma once

#include <stdexcept>
#include <string>

namespace rotorkit {

enum class ErrorKind {
    // input / parsing
    malformed_row,
    duplicate_date,
    column_missing,
    input_unreadable,
    // configuration
    config_invalid,
    unknown_member,
    unknown_parent,
    // analysis
    empty_series,
    dimension_too_small,
    out_of_range_input,
    length_mismatch,
    date_not_found,
    invalid_window,
    insufficient_data,
    zero_variance,
    degenerate_sequence,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

    // CLI exit code classes: 1 config, 2 input, 3 analysis.
    int exit_code() const;

private:
    ErrorKind kind_;
};

}  // namespace rotorkit

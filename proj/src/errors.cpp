#include "rotorkit/errors.hpp"

namespace rotorkit {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::malformed_row: return "MalformedRow";
        case ErrorKind::duplicate_date: return "DuplicateDate";
        case ErrorKind::column_missing: return "ColumnMissing";
        case ErrorKind::input_unreadable: return "InputUnreadable";
        case ErrorKind::config_invalid: return "ConfigInvalid";
        case ErrorKind::unknown_member: return "UnknownMember";
        case ErrorKind::unknown_parent: return "UnknownParent";
        case ErrorKind::empty_series: return "EmptySeries";
        case ErrorKind::dimension_too_small: return "DimensionTooSmall";
        case ErrorKind::out_of_range_input: return "OutOfRangeInput";
        case ErrorKind::length_mismatch: return "LengthMismatch";
        case ErrorKind::date_not_found: return "DateNotFound";
        case ErrorKind::invalid_window: return "InvalidWindow";
        case ErrorKind::insufficient_data: return "InsufficientData";
        case ErrorKind::zero_variance: return "ZeroVariance";
        case ErrorKind::degenerate_sequence: return "DegenerateSequence";
    }
    return "Unknown";
}

int Error::exit_code() const {
    switch (kind_) {
        case ErrorKind::config_invalid:
        case ErrorKind::unknown_member:
        case ErrorKind::unknown_parent:
            return 1;
        case ErrorKind::malformed_row:
        case ErrorKind::duplicate_date:
        case ErrorKind::column_missing:
        case ErrorKind::input_unreadable:
            return 2;
        default:
            return 3;
    }
}

}  // namespace rotorkit

#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace rotorkit {

// Calendar date. Accepts "YYYY/M/D" and "YYYY-MM-DD" on input, always
// prints ISO "YYYY-MM-DD".
struct Date {
    int year = 0;
    int month = 0;
    int day = 0;

    auto operator<=>(const Date&) const = default;

    std::string to_iso() const;

    // Throws Error{malformed_row} on anything that is not a valid calendar
    // date in one of the two accepted layouts.
    static Date parse(std::string_view text);

    static bool try_parse(std::string_view text, Date& out);
};

}  // namespace rotorkit

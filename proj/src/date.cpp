#include "rotorkit/date.hpp"

#include <charconv>
#include <cstdio>

#include "rotorkit/errors.hpp"

namespace rotorkit {

namespace {

bool is_leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

int days_in_month(int y, int m) {
    static constexpr int lengths[] = {31, 28, 31, 30, 31, 30,
                                      31, 31, 30, 31, 30, 31};
    if (m == 2 && is_leap(y)) return 29;
    return lengths[m - 1];
}

bool parse_int(std::string_view text, int& out) {
    if (text.empty()) return false;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc{} && ptr == text.data() + text.size();
}

}  // namespace

std::string Date::to_iso() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
    return buf;
}

bool Date::try_parse(std::string_view text, Date& out) {
    char sep = 0;
    for (char c : text) {
        if (c == '/' || c == '-') { sep = c; break; }
    }
    if (sep == 0) return false;

    std::size_t p1 = text.find(sep);
    std::size_t p2 = text.find(sep, p1 + 1);
    if (p2 == std::string_view::npos) return false;

    Date d;
    if (!parse_int(text.substr(0, p1), d.year) ||
        !parse_int(text.substr(p1 + 1, p2 - p1 - 1), d.month) ||
        !parse_int(text.substr(p2 + 1), d.day)) {
        return false;
    }
    if (d.year < 1 || d.month < 1 || d.month > 12 || d.day < 1 ||
        d.day > days_in_month(d.year, d.month)) {
        return false;
    }
    out = d;
    return true;
}

Date Date::parse(std::string_view text) {
    Date d;
    if (!try_parse(text, d)) {
        throw Error(ErrorKind::malformed_row,
                    "unparseable date: '" + std::string(text) + "'");
    }
    return d;
}

}  // namespace rotorkit

#include "qtrade/time_utils.hpp"

#include <array>
#include <charconv>
#include <cstdio>

#include "qtrade/errors.hpp"

namespace qtrade {
namespace {

// Days since 1970-01-01 for a proleptic Gregorian civil date.
std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * static_cast<unsigned>(m + (m > 2 ? -3 : 9)) + 2u) / 5u +
                         static_cast<unsigned>(d) - 1u;
    const unsigned doe = yoe * 365u + yoe / 4u - yoe / 100u + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, int& m, int& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t yy = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
    y = static_cast<int>(yy + (m <= 2));
}

int parse_fixed_int(const std::string& s, std::size_t pos, std::size_t len) {
    if (pos + len > s.size()) throw ParseError("truncated timestamp: '" + s + "'");
    int value = 0;
    const auto res = std::from_chars(s.data() + pos, s.data() + pos + len, value);
    if (res.ec != std::errc{} || res.ptr != s.data() + pos + len)
        throw ParseError("bad numeric field in timestamp: '" + s + "'");
    return value;
}

}  // namespace

std::int64_t parse_iso8601_ms(const std::string& text) {
    std::string s = text;
    if (!s.empty() && s.back() == 'Z') s.pop_back();
    if (s.size() != 10 && s.size() != 16 && s.size() != 19)
        throw ParseError("unrecognized ISO8601 timestamp: '" + text + "'");

    const int year = parse_fixed_int(s, 0, 4);
    if (s[4] != '-' || s[7] != '-')
        throw ParseError("unrecognized ISO8601 timestamp: '" + text + "'");
    const int month = parse_fixed_int(s, 5, 2);
    const int day = parse_fixed_int(s, 8, 2);
    int hour = 0, minute = 0, second = 0;
    if (s.size() >= 16) {
        if (s[10] != 'T' && s[10] != ' ')
            throw ParseError("unrecognized ISO8601 timestamp: '" + text + "'");
        if (s[13] != ':')
            throw ParseError("unrecognized ISO8601 timestamp: '" + text + "'");
        hour = parse_fixed_int(s, 11, 2);
        minute = parse_fixed_int(s, 14, 2);
    }
    if (s.size() == 19) {
        if (s[16] != ':')
            throw ParseError("unrecognized ISO8601 timestamp: '" + text + "'");
        second = parse_fixed_int(s, 17, 2);
    }
    if (month < 1 || month > 12 || day < 1 || day > 31 || hour > 23 || minute > 59 || second > 60)
        throw ParseError("out-of-range ISO8601 field: '" + text + "'");

    const std::int64_t days = days_from_civil(year, month, day);
    return ((days * 24 + hour) * 60 + minute) * std::int64_t{60} * 1000 +
           static_cast<std::int64_t>(second) * 1000;
}

std::string format_iso8601_ms(std::int64_t epoch_ms) {
    std::int64_t seconds = epoch_ms / 1000;
    if (epoch_ms < 0 && epoch_ms % 1000 != 0) --seconds;
    std::int64_t days = seconds / 86400;
    std::int64_t rem = seconds % 86400;
    if (rem < 0) {
        rem += 86400;
        --days;
    }
    int y, m, d;
    civil_from_days(days, y, m, d);
    std::array<char, 24> buf{};
    std::snprintf(buf.data(), buf.size(), "%04d-%02d-%02dT%02d:%02d:%02dZ", y, m, d,
                  static_cast<int>(rem / 3600), static_cast<int>((rem / 60) % 60),
                  static_cast<int>(rem % 60));
    return std::string(buf.data());
}

}  // namespace qtrade

#include "mnemos/time.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>

#include "mnemos/errors.hpp"

namespace mnemos {

namespace {

// Civil-from-days / days-from-civil (Howard Hinnant's public-domain
// algorithms), valid across the proleptic Gregorian calendar.
int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<int64_t>(doe) - 719468;
}

void civil_from_days(int64_t z, int& y, int& m, int& d) {
    z += 719468;
    const int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const int64_t yy = static_cast<int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
    y = static_cast<int>(yy + (m <= 2));
}

bool all_digits(const std::string& s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

constexpr int64_t kDay = 86400;

}  // namespace

std::optional<Instant> try_parse_instant(const std::string& text) {
    std::string s = trim(text);
    if (s.size() < 10) return std::nullopt;

    int y, mo, d;
    if (std::sscanf(s.c_str(), "%4d-%2d-%2d", &y, &mo, &d) != 3) return std::nullopt;
    if (s[4] != '-' || s[7] != '-') return std::nullopt;
    if (mo < 1 || mo > 12 || d < 1 || d > 31) return std::nullopt;

    int h = 0, mi = 0, sec = 0;
    size_t pos = 10;
    if (pos < s.size() && (s[pos] == 'T' || s[pos] == ' ')) {
        if (std::sscanf(s.c_str() + pos + 1, "%2d:%2d:%2d", &h, &mi, &sec) < 2) {
            return std::nullopt;
        }
        if (h > 23 || mi > 59 || sec > 60) return std::nullopt;
        pos += 1 + 8;
        if (pos > s.size()) pos = s.size();
        // fractional seconds: skip
        if (pos < s.size() && s[pos] == '.') {
            ++pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        }
    }

    int64_t offset = 0;
    if (pos < s.size()) {
        if (s[pos] == 'Z' || s[pos] == 'z') {
            ++pos;
        } else if (s[pos] == '+' || s[pos] == '-') {
            int oh = 0, om = 0;
            int sign = s[pos] == '+' ? 1 : -1;
            if (std::sscanf(s.c_str() + pos + 1, "%2d:%2d", &oh, &om) == 2) {
                pos += 6;
            } else if (std::sscanf(s.c_str() + pos + 1, "%2d%2d", &oh, &om) == 2) {
                pos += 5;
            } else {
                return std::nullopt;
            }
            offset = sign * (oh * 3600 + om * 60);
        }
    }
    if (pos != s.size()) return std::nullopt;

    int64_t secs = days_from_civil(y, mo, d) * kDay + h * 3600 + mi * 60 + sec - offset;
    return Instant{std::chrono::seconds{secs}};
}

Instant parse_instant(const std::string& text) {
    auto t = try_parse_instant(text);
    if (!t) throw InvalidArgument("unparsable ISO-8601 instant: '" + text + "'");
    return *t;
}

std::string format_instant(Instant t) {
    int64_t secs = t.time_since_epoch().count();
    int64_t days = secs >= 0 ? secs / kDay : (secs - kDay + 1) / kDay;
    int64_t rem = secs - days * kDay;
    int y, mo, d;
    civil_from_days(days, y, mo, d);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ", y, mo, d,
                  static_cast<int>(rem / 3600), static_cast<int>((rem % 3600) / 60),
                  static_cast<int>(rem % 60));
    return buf;
}

TimeNormalization normalize_time(const std::string& expression, Instant anchor) {
    if (auto abs = try_parse_instant(expression)) return {*abs, true};

    std::string e = trim(expression);
    std::transform(e.begin(), e.end(), e.begin(),
                   [](unsigned char c) { return std::tolower(c); });

    auto shift = [&](int64_t days) {
        return TimeNormalization{anchor + std::chrono::seconds{days * kDay}, true};
    };

    if (e == "today") return shift(0);
    if (e == "yesterday") return shift(-1);
    if (e == "tomorrow") return shift(+1);
    if (e == "last week") return shift(-7);
    if (e == "next month") return shift(+30);

    // "N days ago"
    size_t sp = e.find(' ');
    if (sp != std::string::npos) {
        std::string head = e.substr(0, sp);
        std::string tail = e.substr(sp + 1);
        if (all_digits(head) && (tail == "days ago" || tail == "day ago")) {
            return shift(-std::stoll(head));
        }
    }

    return {anchor, false};
}

Instant start_of_day(Instant t) {
    int64_t secs = t.time_since_epoch().count();
    int64_t days = secs >= 0 ? secs / kDay : (secs - kDay + 1) / kDay;
    return Instant{std::chrono::seconds{days * kDay}};
}

Instant end_of_day(Instant t) {
    return start_of_day(t) + std::chrono::seconds{kDay - 1};
}

}  // namespace mnemos

#include "heatctl/timestamp.hpp"

#include <chrono>
#include <cstdio>
#include <stdexcept>

namespace heatctl {

const char* const kWeekdayNames[7] = {"Monday",    "Tuesday", "Wednesday", "Thursday",
                                      "Friday",    "Saturday", "Sunday"};

Timestamp Timestamp::from_civil(int year, int month, int day,
                                int hour, int minute, int second) {
    using namespace std::chrono;
    year_month_day ymd{std::chrono::year{year}, std::chrono::month{unsigned(month)},
                       std::chrono::day{unsigned(day)}};
    if (!ymd.ok())
        throw std::invalid_argument("invalid calendar date");
    std::int64_t days = sys_days{ymd}.time_since_epoch().count();
    return Timestamp(days * 86400 + hour * 3600 + minute * 60 + second);
}

Timestamp Timestamp::parse(const std::string& text) {
    int y = 0, mo = 0, d = 0, h = 0, mi = 0, s = 0;
    char tail = 0;
    int n = std::sscanf(text.c_str(), "%d-%d-%d %d:%d:%d%c", &y, &mo, &d, &h, &mi, &s, &tail);
    if (n != 6)
        throw std::invalid_argument("bad timestamp '" + text + "' (want YYYY-MM-DD HH:MM:SS)");
    if (h < 0 || h > 23 || mi < 0 || mi > 59 || s < 0 || s > 59)
        throw std::invalid_argument("bad time of day in '" + text + "'");
    return from_civil(y, mo, d, h, mi, s);
}

std::string Timestamp::to_string() const {
    using namespace std::chrono;
    std::int64_t days = seconds_ / 86400;
    std::int64_t rem = seconds_ - days * 86400;
    if (rem < 0) {  // negative epoch values
        days -= 1;
        rem += 86400;
    }
    year_month_day ymd{sys_days{std::chrono::days{days}}};
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u %02d:%02d:%02d",
                  int(ymd.year()), unsigned(ymd.month()), unsigned(ymd.day()),
                  int(rem / 3600), int((rem / 60) % 60), int(rem % 60));
    return buf;
}

std::int64_t Timestamp::epoch_minutes() const {
    std::int64_t m = seconds_ / 60;
    if (seconds_ < 0 && seconds_ % 60 != 0) m -= 1;
    return m;
}

Timestamp Timestamp::floor_to_minute() const { return Timestamp(epoch_minutes() * 60); }

int Timestamp::hour_of_day() const { return minute_of_day() / 60; }

int Timestamp::minute_of_day() const {
    std::int64_t rem = seconds_ % 86400;
    if (rem < 0) rem += 86400;
    return int(rem / 60);
}

int Timestamp::weekday() const {
    using namespace std::chrono;
    std::int64_t days = seconds_ / 86400;
    if (seconds_ < 0 && seconds_ % 86400 != 0) days -= 1;
    std::chrono::weekday wd{sys_days{std::chrono::days{days}}};
    return int(wd.iso_encoding()) - 1;
}

std::int64_t minutes_between(Timestamp a, Timestamp b) {
    return (b.epoch_seconds() - a.epoch_seconds()) / 60;
}

}  // namespace heatctl

#pragma once

#include <cstdint>
#include <string>

namespace heatctl {

/// Naive local timestamp with second resolution. No timezone or DST
/// handling: values map 1:1 to "YYYY-MM-DD HH:MM:SS" strings.
class Timestamp {
public:
    Timestamp() = default;
    explicit Timestamp(std::int64_t epoch_seconds) : seconds_(epoch_seconds) {}

    static Timestamp from_civil(int year, int month, int day,
                                int hour = 0, int minute = 0, int second = 0);

    /// Parses "YYYY-MM-DD HH:MM:SS". Throws std::invalid_argument on
    /// malformed input.
    static Timestamp parse(const std::string& text);

    std::string to_string() const;

    std::int64_t epoch_seconds() const { return seconds_; }
    std::int64_t epoch_minutes() const;  // floor division

    Timestamp floor_to_minute() const;
    Timestamp plus_minutes(std::int64_t m) const { return Timestamp(seconds_ + m * 60); }
    Timestamp plus_seconds(std::int64_t s) const { return Timestamp(seconds_ + s); }

    int hour_of_day() const;
    int minute_of_day() const;
    /// 0 = Monday .. 6 = Sunday.
    int weekday() const;

    auto operator<=>(const Timestamp&) const = default;

private:
    std::int64_t seconds_ = 0;
};

/// Whole minutes from `a` to `b` (b - a); both must be minute-aligned.
std::int64_t minutes_between(Timestamp a, Timestamp b);

extern const char* const kWeekdayNames[7];  // "Monday".."Sunday"

}  // namespace heatctl

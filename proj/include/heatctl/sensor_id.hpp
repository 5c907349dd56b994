#pragma once

#include <optional>
#include <string>

namespace heatctl {

enum class Space { Outside = 0, House = 1 };

/// Sensor function codes. TMP and HYGR carry numeric readings; the rest are
/// Boolean 0/1 statuses.
enum class SensorCode { TMP, AMB, LTC, FAN, HTC, HTV, PIR, EPIR, OPC, RAIN, HYGR };

const char* to_string(SensorCode code);

/// Parsed sensor identifier, canonical form "<space>-<zone>-<CODE><index>",
/// e.g. "1-15-TMP1": house, zone 15, temperature sensor 1.
struct SensorId {
    Space space = Space::House;
    int zone = 0;
    SensorCode code = SensorCode::TMP;
    int index = 1;

    std::string to_string() const;
    bool is_numeric() const { return code == SensorCode::TMP || code == SensorCode::HYGR; }

    bool operator==(const SensorId&) const = default;
};

/// Throws std::invalid_argument naming the offending token.
SensorId parse_sensor_id(const std::string& text);

/// Non-throwing variant for "is this column a sensor?" checks.
std::optional<SensorId> try_parse_sensor_id(const std::string& text);

}  // namespace heatctl

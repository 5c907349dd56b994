#include "heatctl/sensor_id.hpp"

#include <array>
#include <cctype>
#include <stdexcept>

namespace heatctl {

namespace {

constexpr std::array<const char*, 11> kCodeNames = {
    "TMP", "AMB", "LTC", "FAN", "HTC", "HTV", "PIR", "EPIR", "OPC", "RAIN", "HYGR"};

std::optional<SensorCode> code_from_string(const std::string& s) {
    for (std::size_t i = 0; i < kCodeNames.size(); ++i)
        if (s == kCodeNames[i]) return SensorCode(i);
    return std::nullopt;
}

}  // namespace

const char* to_string(SensorCode code) { return kCodeNames[std::size_t(code)]; }

std::string SensorId::to_string() const {
    return std::to_string(int(space)) + "-" + std::to_string(zone) + "-" +
           heatctl::to_string(code) + std::to_string(index);
}

SensorId parse_sensor_id(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty sensor id");

    auto dash1 = text.find('-');
    auto dash2 = dash1 == std::string::npos ? std::string::npos : text.find('-', dash1 + 1);
    if (dash1 == std::string::npos || dash2 == std::string::npos)
        throw std::invalid_argument("sensor id '" + text + "': expected <space>-<zone>-<CODE><index>");

    std::string space_tok = text.substr(0, dash1);
    std::string zone_tok = text.substr(dash1 + 1, dash2 - dash1 - 1);
    std::string tail = text.substr(dash2 + 1);

    if (space_tok != "0" && space_tok != "1")
        throw std::invalid_argument("sensor id '" + text + "': space digit '" + space_tok +
                                    "' not in {0,1}");
    SensorId id;
    id.space = space_tok == "0" ? Space::Outside : Space::House;

    if (zone_tok.empty() || zone_tok.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("sensor id '" + text + "': bad zone '" + zone_tok + "'");
    id.zone = std::stoi(zone_tok);

    std::size_t split = 0;
    while (split < tail.size() && std::isalpha(static_cast<unsigned char>(tail[split]))) ++split;
    std::string code_tok = tail.substr(0, split);
    std::string index_tok = tail.substr(split);

    auto code = code_from_string(code_tok);
    if (!code)
        throw std::invalid_argument("sensor id '" + text + "': unknown code '" + code_tok + "'");
    id.code = *code;

    if (index_tok.empty() || index_tok.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("sensor id '" + text + "': bad index '" + index_tok + "'");
    id.index = std::stoi(index_tok);
    if (id.index < 1)
        throw std::invalid_argument("sensor id '" + text + "': index must be positive");
    return id;
}

std::optional<SensorId> try_parse_sensor_id(const std::string& text) {
    try {
        return parse_sensor_id(text);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

}  // namespace heatctl

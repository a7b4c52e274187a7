#pragma once

#include "phiver/registry.hpp"

#include <json.hpp>

#include <string>

namespace phiver::report {

nlohmann::ordered_json to_json(const reg::SuiteReport& r);

std::string render_json(const reg::SuiteReport& r);
std::string render_csv(const reg::SuiteReport& r);
std::string render_text(const reg::SuiteReport& r);

// Blanks the timestamp and every wall_ms so two runs can be compared byte for byte.
std::string scrub_volatile(const std::string& json_text);

// Shortest decimal that parses back to the same double.
std::string shortest(double x);

}  // namespace phiver::report

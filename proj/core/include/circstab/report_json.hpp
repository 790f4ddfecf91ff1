#pragma once

// JSON form of StabilityReport.
//
// Field order is fixed so that serialising a parsed report reproduces the
// input byte for byte. Big integers are decimal strings; a subgroup dZ_n is
// written as its generator d.

#include <string>
#include <string_view>

#include "circstab/conditions.hpp"

namespace circstab {

std::string report_to_json(const StabilityReport& report, int indent = 2);

/// Throws ParseError on malformed input.
StabilityReport report_from_json(std::string_view text);

}  // namespace circstab

#pragma once

#include <string>

namespace pps {

// Shortest round-trip decimal representation.
std::string format_double(double v);

}  // namespace pps

#pragma once

namespace tropfw {

inline constexpr const char* kVersion = "0.1.0";

}

#pragma once

namespace coxdef {

inline constexpr const char* kVersion = "0.1.0";

}

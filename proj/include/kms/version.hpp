#pragma once

namespace kms {
inline constexpr const char* kVersion = "0.1.0";
}

#pragma once

#include <string>

namespace tra {

/// 15 significant digits, '.' separator, independent of the global locale.
[[nodiscard]] std::string format_number(double x);

/// Fixed-point with the given number of decimals.
[[nodiscard]] std::string format_fixed(double x, int decimals);

}  // namespace tra

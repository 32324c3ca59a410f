#pragma once

namespace loglab::constants {

// Named constants to 18 significant digits.
inline constexpr double euler_gamma = 0.577215664901532861;    // DLMF 5.2.3
inline constexpr double ln_two = 0.693147180559945309;
inline constexpr double pi = 3.14159265358979324;
inline constexpr double stieltjes_1 = -0.0728158454836767249;  // gamma_1, DLMF 25.2.5

}  // namespace loglab::constants

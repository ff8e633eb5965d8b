#pragma once

#include <stdexcept>

namespace oramsey {

/// Closed-form number of rounds in which Builder forces a red P3, blue P3,
/// or green P_len (len >= 2): 3*len/2 - 1 when len = 0 (mod 4) and len >= 8,
/// floor(3*len/2) otherwise.
inline int path_game_value(int len) {
  if (len < 2) throw std::invalid_argument("path target needs len >= 2");
  if (len % 4 == 0 && len >= 8) return 3 * len / 2 - 1;
  return 3 * len / 2;
}

/// Closed-form value for the green C_len target (len >= 16):
/// (3*len+1)/2 when len = 3 (mod 4), floor(3*(len+1)/2) otherwise.
/// Coincides with path_game_value(len + 1).
inline int cycle_game_value(int len) {
  if (len < 16) throw std::invalid_argument("cycle target formula needs len >= 16");
  if (len % 4 == 3) return (3 * len + 1) / 2;
  return 3 * (len + 1) / 2;
}

}  // namespace oramsey

#pragma once

#include <cstdlib>
#include <optional>
#include <string>

#include "gsptri/error.hpp"

namespace gsptri {

inline constexpr const char* kToolVersion = "1.0.0";

inline constexpr int kDefaultWeylBound = 5;
inline constexpr int kDefaultGlBound = 6;
inline constexpr int kDefaultGspBound = 3;

// GSPTRI_MAX_N, when set to a positive integer, replaces every size bound.
inline std::optional<int> env_max_n() {
  const char* raw = std::getenv("GSPTRI_MAX_N");
  if (!raw || !*raw) return std::nullopt;
  try {
    std::size_t used = 0;
    const int v = std::stoi(raw, &used);
    if (used != std::string(raw).size() || v < 1) throw std::invalid_argument(raw);
    return v;
  } catch (const std::exception&) {
    throw ArgumentError(std::string("GSPTRI_MAX_N is not a positive integer: ") + raw);
  }
}

inline int weyl_bound() { return env_max_n().value_or(kDefaultWeylBound); }
inline int gl_bound() { return env_max_n().value_or(kDefaultGlBound); }
inline int gsp_bound() { return env_max_n().value_or(kDefaultGspBound); }

}  // namespace gsptri

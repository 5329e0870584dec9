#pragma once

#include <string_view>

namespace frob {

/// Positivity of a line bundle or a split bundle. Ample implies nef.
enum class Positivity { Ample, NefNotAmple, NotNef };

/// Three-valued answer to "is this bundle ample?".
enum class Ampleness { Ample, NotAmple, Unknown };

constexpr std::string_view to_string(Positivity v) {
  switch (v) {
    case Positivity::Ample: return "Ample";
    case Positivity::NefNotAmple: return "NefNotAmple";
    case Positivity::NotNef: return "NotNef";
  }
  return "?";
}

constexpr std::string_view to_string(Ampleness v) {
  switch (v) {
    case Ampleness::Ample: return "Ample";
    case Ampleness::NotAmple: return "NotAmple";
    case Ampleness::Unknown: return "Unknown";
  }
  return "?";
}

constexpr bool is_nef(Positivity v) { return v != Positivity::NotNef; }

}  // namespace frob

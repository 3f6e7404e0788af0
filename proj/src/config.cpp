#include "hsk/config.hpp"

#include <cstdlib>
#include <string>

namespace hsk {

double default_tolerance() {
  if (const char* env = std::getenv("HSK_DEFAULT_TOL")) {
    try {
      const double v = std::stod(env);
      if (v > 0.0) return v;
    } catch (const std::exception&) {
      // fall through to the built-in default
    }
  }
  return kTol.balance_default;
}

}  // namespace hsk

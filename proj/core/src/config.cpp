#include "permastat/config.hpp"

#include <cstdlib>
#include <string>

namespace permastat::config {

int max_degree() {
  static const int cap = [] {
    if (const char* env = std::getenv("PERMASTAT_MAX_DEGREE")) {
      try {
        int v = std::stoi(env);
        if (v > 0) return v;
      } catch (...) {
        // fall through to default on unparsable input
      }
    }
    return kDefaultMaxDegree;
  }();
  return cap;
}

} // namespace permastat::config

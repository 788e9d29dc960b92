#include <cstdlib>
#include <cstring>

#include "occ/error.hpp"
#include "occ/simd.hpp"

namespace occ::simd {

const Ops& active() {
  static const Ops& selected = []() -> const Ops& {
    if (const char* env = std::getenv("OCC_SIMD")) {
      if (std::strcmp(env, "scalar") == 0) return scalar_ops();
      if (std::strcmp(env, "avx2") == 0) {
        if (avx2_available() && avx2_ops()) return *avx2_ops();
        log_warn("OCC_SIMD=avx2 requested but unavailable; using scalar");
        return scalar_ops();
      }
      log_warn(std::string("unknown OCC_SIMD value '") + env + "'; using default");
    }
    if (avx2_available() && avx2_ops()) return *avx2_ops();
    return scalar_ops();
  }();
  return selected;
}

}  // namespace occ::simd

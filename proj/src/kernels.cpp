#include "dist2/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace dist2::kernels {

const Ops& active_ops() {
  static const Ops& chosen = []() -> const Ops& {
    if (const char* env = std::getenv("DIST2_KERNEL")) {
      if (std::strcmp(env, "scalar") == 0) return scalar_ops();
      if (std::strcmp(env, "avx2") == 0 && avx2_available()) return avx2_ops();
    }
    return avx2_available() ? avx2_ops() : scalar_ops();
  }();
  return chosen;
}

}  // namespace dist2::kernels

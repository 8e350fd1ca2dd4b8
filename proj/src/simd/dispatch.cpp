#include <cstdlib>
#include <cstring>

#include "fbl/simd/kernels.hpp"

namespace fbl::simd {

const Kernels* avx2_kernels_impl();

const Kernels* avx2_kernels() {
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return avx2_kernels_impl();
  return nullptr;
}

const Kernels& active() {
  static const Kernels* chosen = [] {
    const char* env = std::getenv("FBL_SIMD");
    if (env && std::strcmp(env, "scalar") == 0) return &scalar_kernels();
    const Kernels* k = avx2_kernels();
    return k ? k : &scalar_kernels();
  }();
  return *chosen;
}

}  // namespace fbl::simd

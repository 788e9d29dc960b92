#pragma once

#include <cstddef>
#include <span>

namespace occ::simd {

// Vectorized inner loops used by the kernel, solver and batch-QP code.
// Every variant accumulates in a fixed order, so results are bitwise
// deterministic for fixed inputs within one process; scalar and SIMD
// variants may differ from each other in the last ulps (reduction order).
struct Ops {
  const char* name;
  double (*dot)(const double* a, const double* b, std::size_t n);
  double (*sqdist)(const double* a, const double* b, std::size_t n);
  double (*sum)(const double* a, std::size_t n);
  void (*axpy)(double* y, double a, const double* x, std::size_t n);
};

// Scalar reference kernels; the ground truth the SIMD lanes are tested against.
const Ops& scalar_ops();

// AVX2+FMA lane; nullptr when the build target cannot compile it.
const Ops* avx2_ops();

// True when the running CPU supports the AVX2 lane.
bool avx2_available();

// Lane selected once per process: AVX2 when available, else scalar.
// OCC_SIMD=scalar|avx2 in the environment overrides the choice.
const Ops& active();

inline double dot(std::span<const double> a, std::span<const double> b) {
  return active().dot(a.data(), b.data(), a.size());
}
inline double sqdist(std::span<const double> a, std::span<const double> b) {
  return active().sqdist(a.data(), b.data(), a.size());
}
inline double sum(std::span<const double> a) { return active().sum(a.data(), a.size()); }
inline void axpy(std::span<double> y, double a, std::span<const double> x) {
  active().axpy(y.data(), a, x.data(), y.size());
}

}  // namespace occ::simd

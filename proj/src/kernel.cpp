#include "occ/kernel.hpp"

#include <cmath>
#include <string>

#include "occ/simd.hpp"

namespace occ {

const char* to_string(KernelFamily f) {
  switch (f) {
    case KernelFamily::linear: return "linear";
    case KernelFamily::rbf: return "rbf";
    case KernelFamily::poly: return "poly";
  }
  return "?";
}

KernelFamily kernel_family_from_string(std::string_view s) {
  if (s == "linear") return KernelFamily::linear;
  if (s == "rbf") return KernelFamily::rbf;
  if (s == "poly") return KernelFamily::poly;
  throw Error("unknown kernel family '" + std::string(s) + "' (expected linear|rbf|poly)");
}

void KernelSpec::validate() const {
  if (family == KernelFamily::rbf && !(gamma > 0.0))
    throw Error("rbf kernel requires gamma > 0");
  if (family == KernelFamily::poly && degree < 1)
    throw Error("poly kernel requires degree >= 1");
}

bool operator==(const KernelSpec& a, const KernelSpec& b) {
  if (a.family != b.family) return false;
  switch (a.family) {
    case KernelFamily::linear: return true;
    case KernelFamily::rbf: return a.gamma == b.gamma;
    case KernelFamily::poly: return a.degree == b.degree && a.coef0 == b.coef0;
  }
  return false;
}

double kernel_eval(const KernelSpec& spec, std::span<const double> x,
                   std::span<const double> y) {
  if (x.size() != y.size())
    throw Error("kernel_eval: dimension mismatch (" + std::to_string(x.size()) +
                " vs " + std::to_string(y.size()) + ")");
  switch (spec.family) {
    case KernelFamily::linear:
      return simd::dot(x, y);
    case KernelFamily::rbf:
      return std::exp(-spec.gamma * simd::sqdist(x, y));
    case KernelFamily::poly: {
      double base = simd::dot(x, y) + spec.coef0;
      double p = 1.0;
      for (int i = 0; i < spec.degree; ++i) p *= base;
      return p;
    }
  }
  throw Error("kernel_eval: unknown family");
}

}  // namespace occ

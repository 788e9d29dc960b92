#pragma once

#include <span>
#include <string_view>

#include "occ/error.hpp"

namespace occ {

enum class KernelFamily { linear, rbf, poly };

const char* to_string(KernelFamily f);
KernelFamily kernel_family_from_string(std::string_view s);  // throws Error

// Kernel family plus hyperparameters. Parameters irrelevant to the family
// are ignored on comparison.
struct KernelSpec {
  KernelFamily family = KernelFamily::rbf;
  double gamma = 1.0;  // rbf: k = exp(-gamma * |x-y|^2), gamma > 0
  int degree = 3;      // poly: k = (x.y + coef0)^degree, degree >= 1
  double coef0 = 0.0;

  void validate() const;
};

bool operator==(const KernelSpec& a, const KernelSpec& b);

double kernel_eval(const KernelSpec& spec, std::span<const double> x,
                   std::span<const double> y);

}  // namespace occ

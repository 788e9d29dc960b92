#pragma once

#include <span>
#include <vector>

#include "occ/kernel.hpp"
#include "occ/mat.hpp"
#include "occ/points.hpp"

namespace occ {

enum class CovarianceMode { frozen, full };

const char* to_string(CovarianceMode m);
CovarianceMode covariance_mode_from_string(std::string_view s);

// Growing base Gram matrix K plus the covariance-modified Gram
//
//   K~ = (1-eta) K + (eta/m) K_b H K_b^T,   H = I - (1/m) 1 1^T,
//
// where K_b is the n x m block of kernel values against the covariance basis
// (the first m stored points). The second term is the quadratic form of the
// centered kernel-space covariance; with centered rows c_i = K_b[i,:] - mean,
// it reduces to (eta/m) <c_i, c_j>, which is what extend() maintains.
//
// frozen mode: the basis is pinned by freeze_basis() after the warmup batch,
// so existing K~ entries never change across insertions. full mode: the basis
// is every stored point and each insertion recomputes the modified block.
class GramCache {
 public:
  GramCache(KernelSpec spec, double eta, CovarianceMode mode);

  std::size_t size() const { return n_; }
  std::size_t basis_size() const { return m_; }
  double eta() const { return eta_; }
  CovarianceMode mode() const { return mode_; }
  const KernelSpec& spec() const { return spec_; }

  // Pins the covariance basis to the current contents (frozen mode only).
  void freeze_basis();

  // Appends the last point of pts (pts.size() == size()+1). Existing K
  // entries are never touched; in frozen mode existing K~ entries are not
  // touched either.
  void extend(const PointSet& pts);

  // Rebuilds everything from scratch; basis gives the frozen basis size
  // (must equal pts.size() in full mode).
  void rebuild(const PointSet& pts, std::size_t basis);

  double ktilde(std::size_t i, std::size_t j) const {
    return eta_ == 0.0 ? k_(i, j) : kt_(i, j);
  }
  std::span<const double> ktilde_row(std::size_t i) const {
    return eta_ == 0.0 ? k_.row(i) : kt_.row(i);
  }
  const Mat& ktilde_matrix() const { return eta_ == 0.0 ? k_ : kt_; }

  double base(std::size_t i, std::size_t j) const { return k_(i, j); }
  std::span<const double> base_row(std::size_t i) const { return k_.row(i); }

  // Packed copy of the n x n modified Gram matrix. With eta == 0 this is K,
  // bit for bit.
  Mat modified_gram() const { return ktilde_matrix().packed_copy(); }

  // Test-time counterpart of the modified Gram: the length-n vector
  // k~(x, x_j), using the same centering geometry as training.
  std::vector<double> modified_row(const PointSet& pts, std::span<const double> x) const;

 private:
  void append_rows(const PointSet& pts, std::size_t t);  // K row t, and in
                                                         // frozen mode C/K~ rows
  void refresh_modified();  // recomputes C and K~ with basis = all points

  KernelSpec spec_;
  double eta_;
  CovarianceMode mode_;
  bool basis_frozen_ = false;
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  Mat k_;    // base Gram, n x n
  Mat c_;    // centered kernel-vs-basis rows, n x m (empty when eta == 0)
  Mat kt_;   // modified Gram, n x n (empty when eta == 0)
};

}  // namespace occ

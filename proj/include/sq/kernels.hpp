#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

// Dense/banded complex kernels used by the Lindblad right-hand sides and the
// Husimi grid. Every parallel kernel has a *_serial reference twin; the
// parallel versions assign each output element to exactly one thread with a
// fixed summation order, so results are bitwise identical for any thread
// count. bench/bench_kernels.cpp compares the two.

namespace sq {

using cplx = std::complex<double>;

// Row-major square complex matrix.
class CMat {
 public:
  CMat() = default;
  explicit CMat(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}

  int dim() const { return n_; }
  size_t size() const { return a_.size(); }
  cplx* data() { return a_.data(); }
  const cplx* data() const { return a_.data(); }
  cplx& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  const cplx& operator()(int i, int j) const {
    return a_[static_cast<size_t>(i) * n_ + j];
  }
  void set_zero() { std::fill(a_.begin(), a_.end(), cplx{0.0, 0.0}); }

 private:
  int n_ = 0;
  std::vector<cplx> a_;
};

// Banded operator stored as a list of diagonals. Offset k holds entries
// A(i, i+k) for i in [max(0,-k), n - max(0,k)); the diagonal vector is
// indexed by that i directly (length n, unused slots zero).
struct Band {
  int dim = 0;
  std::vector<int> offsets;
  std::vector<std::vector<cplx>> diags;

  Band() = default;
  Band(int n, std::vector<int> offs)
      : dim(n), offsets(std::move(offs)), diags(offsets.size()) {
    for (auto& d : diags) d.assign(static_cast<size_t>(n), cplx{0.0, 0.0});
  }
  cplx& at(int i, int offset_index) { return diags[offset_index][i]; }
  CMat dense() const;
};

namespace kernels {

// Global toggle consulted by the parallel kernels (sweeps disable nested
// parallelism by running each point with kernels serial inside an omp region;
// OpenMP handles that automatically, this switch is for explicit control).
void use_parallel(bool on);
bool parallel_enabled();

// C = alpha*A*B + beta*C
void gemm_serial(const CMat& A, const CMat& B, CMat& C, cplx alpha = 1.0,
                 cplx beta = 0.0);
void gemm(const CMat& A, const CMat& B, CMat& C, cplx alpha = 1.0,
          cplx beta = 0.0);

// Y += alpha * A * X  (banded A on the left)
void band_left_acc_serial(const Band& A, const CMat& X, CMat& Y, cplx alpha);
void band_left_acc(const Band& A, const CMat& X, CMat& Y, cplx alpha);

// Y += alpha * X * A  (banded A on the right)
void band_right_acc_serial(const CMat& X, const Band& A, CMat& Y, cplx alpha);
void band_right_acc(const CMat& X, const Band& A, CMat& Y, cplx alpha);

// Y += alpha * A * X * B  (banded sandwich, used for jump terms)
void band_sandwich_acc_serial(const Band& A, const CMat& X, const Band& B,
                              CMat& Y, cplx alpha);
void band_sandwich_acc(const Band& A, const CMat& X, const Band& B, CMat& Y,
                       cplx alpha);

// tr(A * X) for banded A
cplx band_trace_product(const Band& A, const CMat& X);

cplx trace(const CMat& X);
double max_abs(std::span<const cplx> v);
double hermiticity_defect(const CMat& X);

// y += a*x on flat arrays
void axpy(cplx a, std::span<const cplx> x, std::span<cplx> y);

}  // namespace kernels
}  // namespace sq

#pragma once

#include <cblas.h>

namespace aligncr {

// C[m,n] = A[m,k] * B[k,n] (+ C if accumulate), row-major.
inline void gemm(int m, int n, int k, const float* a, const float* b, float* c,
                 bool trans_a = false, bool trans_b = false, float beta = 0.f) {
  cblas_sgemm(CblasRowMajor, trans_a ? CblasTrans : CblasNoTrans,
              trans_b ? CblasTrans : CblasNoTrans, m, n, k, 1.f, a,
              trans_a ? m : k, b, trans_b ? k : n, beta, c, n);
}

inline void gemm(int m, int n, int k, const double* a, const double* b, double* c,
                 bool trans_a = false, bool trans_b = false, double beta = 0.0) {
  cblas_dgemm(CblasRowMajor, trans_a ? CblasTrans : CblasNoTrans,
              trans_b ? CblasTrans : CblasNoTrans, m, n, k, 1.0, a,
              trans_a ? m : k, b, trans_b ? k : n, beta, c, n);
}

}  // namespace aligncr

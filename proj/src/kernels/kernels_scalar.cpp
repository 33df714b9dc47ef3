#include "sfdet/kernels.hpp"

// Reference kernels. Written for clarity, not speed: these are the ground
// truth the vector variants are equivalence-tested against.

namespace sfdet::kernels {
namespace {

void gemm_nn_scalar(int M, int N, int K, const double* A, int lda,
                    const double* B, int ldb, double* C, int ldc, bool accumulate) {
    for (int m = 0; m < M; ++m) {
        for (int n = 0; n < N; ++n) {
            double acc = accumulate ? C[m * ldc + n] : 0.0;
            for (int k = 0; k < K; ++k)
                acc += A[m * lda + k] * B[k * ldb + n];
            C[m * ldc + n] = acc;
        }
    }
}

void gemm_nt_scalar(int M, int N, int K, const double* A, int lda,
                    const double* B, int ldb, double* C, int ldc, bool accumulate) {
    for (int m = 0; m < M; ++m) {
        for (int n = 0; n < N; ++n) {
            double acc = accumulate ? C[m * ldc + n] : 0.0;
            for (int k = 0; k < K; ++k)
                acc += A[m * lda + k] * B[n * ldb + k];
            C[m * ldc + n] = acc;
        }
    }
}

void gemm_tn_scalar(int M, int N, int K, const double* A, int lda,
                    const double* B, int ldb, double* C, int ldc, bool accumulate) {
    for (int m = 0; m < M; ++m) {
        for (int n = 0; n < N; ++n) {
            double acc = accumulate ? C[m * ldc + n] : 0.0;
            for (int k = 0; k < K; ++k)
                acc += A[k * lda + m] * B[k * ldb + n];
            C[m * ldc + n] = acc;
        }
    }
}

void vec_add_scalar(const double* a, const double* b, double* out, size_t n) {
    for (size_t i = 0; i < n; ++i) out[i] = a[i] + b[i];
}

void vec_axpy_scalar(double alpha, const double* x, double* y, size_t n) {
    for (size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void vec_scale_scalar(double* x, double alpha, size_t n) {
    for (size_t i = 0; i < n; ++i) x[i] *= alpha;
}

void relu_fwd_scalar(const double* x, double* y, size_t n) {
    for (size_t i = 0; i < n; ++i) y[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void relu_bwd_scalar(const double* x, const double* dy, double* dx, size_t n) {
    for (size_t i = 0; i < n; ++i)
        if (x[i] > 0.0) dx[i] += dy[i];
}

void sgd_update_scalar(double* w, double* v, const double* g,
                       double lr, double mu, double wd, size_t n) {
    for (size_t i = 0; i < n; ++i) {
        v[i] = mu * v[i] - lr * (g[i] + wd * w[i]);
        w[i] += v[i];
    }
}

} // namespace

const KernelTable& scalar_kernel_table() {
    static const KernelTable t = {
        gemm_nn_scalar, gemm_nt_scalar, gemm_tn_scalar,
        vec_add_scalar, vec_axpy_scalar, vec_scale_scalar,
        relu_fwd_scalar, relu_bwd_scalar, sgd_update_scalar,
    };
    return t;
}

} // namespace sfdet::kernels

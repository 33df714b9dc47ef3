#pragma once

#include <cstddef>
#include <string>

// Numeric inner loops behind the tensor ops. Every kernel has a scalar
// reference implementation and, on x86-64, an AVX2+FMA variant. The active
// variant is picked at runtime from CPU capabilities and can be overridden
// with set_backend() or the SFDET_KERNELS environment variable
// (values: "scalar", "avx2", "auto").
//
// All matrices are row-major doubles with explicit leading dimensions.

namespace sfdet::kernels {

enum class Backend { scalar = 0, avx2 = 1 };

// Table of kernel entry points for one backend.
struct KernelTable {
    // C[MxN] = (accumulate ? C : 0) + A[MxK] * B[KxN]
    void (*gemm_nn)(int M, int N, int K, const double* A, int lda,
                    const double* B, int ldb, double* C, int ldc, bool accumulate);
    // C[MxN] = (accumulate ? C : 0) + A[MxK] * B[NxK]^T
    void (*gemm_nt)(int M, int N, int K, const double* A, int lda,
                    const double* B, int ldb, double* C, int ldc, bool accumulate);
    // C[MxN] = (accumulate ? C : 0) + A[KxM]^T * B[KxN]
    void (*gemm_tn)(int M, int N, int K, const double* A, int lda,
                    const double* B, int ldb, double* C, int ldc, bool accumulate);

    void (*vec_add)(const double* a, const double* b, double* out, size_t n);
    void (*vec_axpy)(double alpha, const double* x, double* y, size_t n); // y += alpha*x
    void (*vec_scale)(double* x, double alpha, size_t n);
    void (*relu_fwd)(const double* x, double* y, size_t n);
    void (*relu_bwd)(const double* x, const double* dy, double* dx, size_t n); // dx += dy * (x>0)
    // SGD with momentum + decoupled-from-nothing weight decay:
    // v = mu*v - lr*(g + wd*w); w += v
    void (*sgd_update)(double* w, double* v, const double* g,
                       double lr, double mu, double wd, size_t n);
};

bool backend_supported(Backend b);
Backend active_backend();
void set_backend(Backend b); // throws std::runtime_error if unsupported
const char* backend_name(Backend b);
// Best supported backend, honoring the SFDET_KERNELS env override.
Backend detect_backend();

const KernelTable& table();            // active backend's table
const KernelTable& table(Backend b);   // specific backend (must be supported)

// Convenience forwarders through the active table.
inline void gemm_nn(int M, int N, int K, const double* A, int lda,
                    const double* B, int ldb, double* C, int ldc, bool accumulate = false) {
    table().gemm_nn(M, N, K, A, lda, B, ldb, C, ldc, accumulate);
}
inline void gemm_nt(int M, int N, int K, const double* A, int lda,
                    const double* B, int ldb, double* C, int ldc, bool accumulate = false) {
    table().gemm_nt(M, N, K, A, lda, B, ldb, C, ldc, accumulate);
}
inline void gemm_tn(int M, int N, int K, const double* A, int lda,
                    const double* B, int ldb, double* C, int ldc, bool accumulate = false) {
    table().gemm_tn(M, N, K, A, lda, B, ldb, C, ldc, accumulate);
}
inline void vec_add(const double* a, const double* b, double* out, size_t n) {
    table().vec_add(a, b, out, n);
}
inline void vec_axpy(double alpha, const double* x, double* y, size_t n) {
    table().vec_axpy(alpha, x, y, n);
}
inline void vec_scale(double* x, double alpha, size_t n) { table().vec_scale(x, alpha, n); }
inline void relu_fwd(const double* x, double* y, size_t n) { table().relu_fwd(x, y, n); }
inline void relu_bwd(const double* x, const double* dy, double* dx, size_t n) {
    table().relu_bwd(x, dy, dx, n);
}
inline void sgd_update(double* w, double* v, const double* g,
                       double lr, double mu, double wd, size_t n) {
    table().sgd_update(w, v, g, lr, mu, wd, n);
}

} // namespace sfdet::kernels

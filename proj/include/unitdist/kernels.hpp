#ifndef UNITDIST_KERNELS_HPP
#define UNITDIST_KERNELS_HPP

#include <cstddef>
#include <string>

// Dense arithmetic kernels used by the linear-algebra and solver layers.
// Each kernel has a scalar reference implementation and, on x86-64 with
// AVX2+FMA, a vectorized variant. The backend is picked once at runtime;
// set UNITDIST_KERNELS=scalar (or =avx2) to override.

namespace unitdist::kernels {

// Sum_i x[i]*y[i]
double dot(const double* x, const double* y, std::size_t n);

// y += alpha * x
void axpy(double alpha, const double* x, double* y, std::size_t n);

// x *= alpha
void scal(double alpha, double* x, std::size_t n);

// Sum_i x[i]^2
double nrm2sq(const double* x, std::size_t n);

// Plane rotation applied in-place to a pair of vectors:
//   (x[i], y[i]) <- (c*x[i] + s*y[i], -s*x[i] + c*y[i])
void rot(double* x, double* y, std::size_t n, double c, double s);

// C (r x c, row-major) = A (r x k, row-major) * B (k x c, row-major)
void matmul(const double* a, const double* b, double* cdst,
            std::size_t r, std::size_t k, std::size_t c);

// Name of the backend currently in use ("scalar" or "avx2").
const std::string& active_backend();

// Force a backend by name ("scalar", "avx2", "auto"). Throws on an
// unknown name or if the requested backend is unsupported on this CPU.
void force_backend(const std::string& name);

}  // namespace unitdist::kernels

#endif

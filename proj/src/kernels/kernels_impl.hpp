#ifndef UNITDIST_KERNELS_IMPL_HPP
#define UNITDIST_KERNELS_IMPL_HPP

#include <cstddef>

// Backend entry points. The scalar set always exists; the AVX2 set is
// compiled only on x86-64 (guarded in CMake) and selected at runtime
// after a cpuid check.

namespace unitdist::kernels::detail {

double dot_scalar(const double* x, const double* y, std::size_t n);
void axpy_scalar(double alpha, const double* x, double* y, std::size_t n);
void scal_scalar(double alpha, double* x, std::size_t n);
double nrm2sq_scalar(const double* x, std::size_t n);
void rot_scalar(double* x, double* y, std::size_t n, double c, double s);
void matmul_scalar(const double* a, const double* b, double* cdst,
                   std::size_t r, std::size_t k, std::size_t c);

#if defined(UNITDIST_HAVE_AVX2)
double dot_avx2(const double* x, const double* y, std::size_t n);
void axpy_avx2(double alpha, const double* x, double* y, std::size_t n);
void scal_avx2(double alpha, double* x, std::size_t n);
double nrm2sq_avx2(const double* x, std::size_t n);
void rot_avx2(double* x, double* y, std::size_t n, double c, double s);
void matmul_avx2(const double* a, const double* b, double* cdst,
                 std::size_t r, std::size_t k, std::size_t c);
#endif

}  // namespace unitdist::kernels::detail

#endif

#pragma once

// Vector reduction kernels used throughout the library. Every kernel has a
// scalar reference implementation and, on x86-64 with AVX2, a vectorized
// variant selected once at startup. force_backend() pins a specific variant
// so the two can be equivalence-tested against each other.

#include <cstddef>
#include <cstdint>
#include <utility>

namespace mevcost::kernels {

enum class Backend { scalar, avx2 };

// Backend chosen at startup (or pinned via force_backend).
Backend active_backend();
const char* backend_name();

// Pin a backend; throws std::runtime_error if unsupported on this CPU.
void force_backend(Backend b);
void reset_backend();

// Compensated (Neumaier) sum.
double sum(const double* x, std::size_t n);

double dot(const double* a, const double* b, std::size_t n);

// y += alpha * x
void axpy(double alpha, const double* x, double* y, std::size_t n);

double max_value(const double* x, std::size_t n);
double min_value(const double* x, std::size_t n);
double max_abs(const double* x, std::size_t n);

// Index of the first occurrence of the maximum value.
std::size_t argmax(const double* x, std::size_t n);

// sum over edges of (f[e.first] - f[e.second])^2
double edge_gap_sumsq(const double* f,
                      const std::pair<std::uint32_t, std::uint32_t>* edges,
                      std::size_t m);

}  // namespace mevcost::kernels

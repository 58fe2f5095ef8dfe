#include "mevcost/kernels.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mevcost::kernels {

namespace scalar {

double sum(const double* x, std::size_t n) {
  // Neumaier variant of Kahan summation.
  double s = 0.0, c = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double t = s + x[i];
    if (std::abs(s) >= std::abs(x[i]))
      c += (s - t) + x[i];
    else
      c += (x[i] - t) + s;
    s = t;
  }
  return s + c;
}

double dot(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

double max_value(const double* x, std::size_t n) {
  double m = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i)
    if (x[i] > m) m = x[i];
  return m;
}

double min_value(const double* x, std::size_t n) {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i)
    if (x[i] < m) m = x[i];
  return m;
}

double max_abs(const double* x, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double a = std::abs(x[i]);
    if (a > m) m = a;
  }
  return m;
}

std::size_t argmax(const double* x, std::size_t n) {
  std::size_t k = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (x[i] > x[k]) k = i;
  return k;
}

double edge_gap_sumsq(const double* f,
                      const std::pair<std::uint32_t, std::uint32_t>* edges,
                      std::size_t m) {
  double s = 0.0;
  for (std::size_t e = 0; e < m; ++e) {
    double g = f[edges[e].first] - f[edges[e].second];
    s += g * g;
  }
  return s;
}

}  // namespace scalar

#if defined(__x86_64__)
#define MEVCOST_HAVE_AVX2_BUILD 1
#include <immintrin.h>

namespace avx2 {

__attribute__((target("avx2,fma"))) double sum(const double* x,
                                               std::size_t n) {
  // Four independent Neumaier accumulator lanes, combined exactly at the end.
  __m256d s = _mm256_setzero_pd();
  __m256d c = _mm256_setzero_pd();
  const __m256d absmask =
      _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d v = _mm256_loadu_pd(x + i);
    __m256d t = _mm256_add_pd(s, v);
    __m256d as = _mm256_and_pd(s, absmask);
    __m256d av = _mm256_and_pd(v, absmask);
    __m256d big_s = _mm256_add_pd(_mm256_sub_pd(s, t), v);
    __m256d big_v = _mm256_add_pd(_mm256_sub_pd(v, t), s);
    __m256d corr = _mm256_blendv_pd(big_s, big_v, _mm256_cmp_pd(as, av, _CMP_LT_OQ));
    c = _mm256_add_pd(c, corr);
    s = t;
  }
  alignas(32) double sl[4], cl[4];
  _mm256_store_pd(sl, s);
  _mm256_store_pd(cl, c);
  double lanes[8] = {sl[0], sl[1], sl[2], sl[3], cl[0], cl[1], cl[2], cl[3]};
  double tail = scalar::sum(lanes, 8);
  // Remaining elements go through the scalar path on top of the lane total.
  double rs = tail, rc = 0.0;
  for (; i < n; ++i) {
    double t = rs + x[i];
    if (std::abs(rs) >= std::abs(x[i]))
      rc += (rs - t) + x[i];
    else
      rc += (x[i] - t) + rs;
    rs = t;
  }
  return rs + rc;
}

__attribute__((target("avx2,fma"))) double dot(const double* a, const double* b,
                                               std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
  }
  acc0 = _mm256_add_pd(acc0, acc1);
  alignas(32) double l[4];
  _mm256_store_pd(l, acc0);
  double s = l[0] + l[1] + l[2] + l[3];
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

__attribute__((target("avx2,fma"))) void axpy(double alpha, const double* x,
                                              double* y, std::size_t n) {
  __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d v = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
    _mm256_storeu_pd(y + i, v);
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

__attribute__((target("avx2"))) double max_value(const double* x,
                                                 std::size_t n) {
  if (n == 0) return -std::numeric_limits<double>::infinity();
  __m256d m = _mm256_set1_pd(-std::numeric_limits<double>::infinity());
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) m = _mm256_max_pd(m, _mm256_loadu_pd(x + i));
  alignas(32) double l[4];
  _mm256_store_pd(l, m);
  double r = std::max(std::max(l[0], l[1]), std::max(l[2], l[3]));
  for (; i < n; ++i) r = std::max(r, x[i]);
  return r;
}

__attribute__((target("avx2"))) double min_value(const double* x,
                                                 std::size_t n) {
  if (n == 0) return std::numeric_limits<double>::infinity();
  __m256d m = _mm256_set1_pd(std::numeric_limits<double>::infinity());
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) m = _mm256_min_pd(m, _mm256_loadu_pd(x + i));
  alignas(32) double l[4];
  _mm256_store_pd(l, m);
  double r = std::min(std::min(l[0], l[1]), std::min(l[2], l[3]));
  for (; i < n; ++i) r = std::min(r, x[i]);
  return r;
}

__attribute__((target("avx2"))) double max_abs(const double* x, std::size_t n) {
  const __m256d absmask =
      _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
  __m256d m = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    m = _mm256_max_pd(m, _mm256_and_pd(_mm256_loadu_pd(x + i), absmask));
  alignas(32) double l[4];
  _mm256_store_pd(l, m);
  double r = std::max(std::max(l[0], l[1]), std::max(l[2], l[3]));
  for (; i < n; ++i) r = std::max(r, std::abs(x[i]));
  return r;
}

__attribute__((target("avx2,fma"))) double edge_gap_sumsq(
    const double* f, const std::pair<std::uint32_t, std::uint32_t>* edges,
    std::size_t m) {
  // Edge pairs are stored as consecutive u32 {i, j}; gather both endpoints.
  __m256d acc = _mm256_setzero_pd();
  const std::int32_t* idx = reinterpret_cast<const std::int32_t*>(edges);
  std::size_t e = 0;
  for (; e + 4 <= m; e += 4) {
    __m128i ii = _mm_setr_epi32(idx[2 * e + 0], idx[2 * e + 2], idx[2 * e + 4],
                                idx[2 * e + 6]);
    __m128i jj = _mm_setr_epi32(idx[2 * e + 1], idx[2 * e + 3], idx[2 * e + 5],
                                idx[2 * e + 7]);
    __m256d fi = _mm256_i32gather_pd(f, ii, 8);
    __m256d fj = _mm256_i32gather_pd(f, jj, 8);
    __m256d g = _mm256_sub_pd(fi, fj);
    acc = _mm256_fmadd_pd(g, g, acc);
  }
  alignas(32) double l[4];
  _mm256_store_pd(l, acc);
  double s = l[0] + l[1] + l[2] + l[3];
  for (; e < m; ++e) {
    double g = f[edges[e].first] - f[edges[e].second];
    s += g * g;
  }
  return s;
}

}  // namespace avx2
#endif  // __x86_64__

namespace {

bool cpu_has_avx2() {
#if defined(MEVCOST_HAVE_AVX2_BUILD)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend g_backend = cpu_has_avx2() ? Backend::avx2 : Backend::scalar;

}  // namespace

Backend active_backend() { return g_backend; }

const char* backend_name() {
  return g_backend == Backend::avx2 ? "avx2" : "scalar";
}

void force_backend(Backend b) {
  if (b == Backend::avx2 && !cpu_has_avx2())
    throw std::runtime_error("avx2 backend not supported on this CPU");
  g_backend = b;
}

void reset_backend() {
  g_backend = cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
}

#if defined(MEVCOST_HAVE_AVX2_BUILD)
#define MEVCOST_DISPATCH(fn, ...) \
  return g_backend == Backend::avx2 ? avx2::fn(__VA_ARGS__) : scalar::fn(__VA_ARGS__)
#define MEVCOST_DISPATCH_VOID(fn, ...)        \
  if (g_backend == Backend::avx2)             \
    avx2::fn(__VA_ARGS__);                    \
  else                                        \
    scalar::fn(__VA_ARGS__)
#else
#define MEVCOST_DISPATCH(fn, ...) return scalar::fn(__VA_ARGS__)
#define MEVCOST_DISPATCH_VOID(fn, ...) scalar::fn(__VA_ARGS__)
#endif

double sum(const double* x, std::size_t n) { MEVCOST_DISPATCH(sum, x, n); }

double dot(const double* a, const double* b, std::size_t n) {
  MEVCOST_DISPATCH(dot, a, b, n);
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  MEVCOST_DISPATCH_VOID(axpy, alpha, x, y, n);
}

double max_value(const double* x, std::size_t n) {
  MEVCOST_DISPATCH(max_value, x, n);
}

double min_value(const double* x, std::size_t n) {
  MEVCOST_DISPATCH(min_value, x, n);
}

double max_abs(const double* x, std::size_t n) {
  MEVCOST_DISPATCH(max_abs, x, n);
}

std::size_t argmax(const double* x, std::size_t n) {
  // The AVX2 variants return the value only; first-occurrence argmax stays
  // scalar so tie-breaking is identical across backends.
  return scalar::argmax(x, n);
}

double edge_gap_sumsq(const double* f,
                      const std::pair<std::uint32_t, std::uint32_t>* edges,
                      std::size_t m) {
  MEVCOST_DISPATCH(edge_gap_sumsq, f, edges, m);
}

}  // namespace mevcost::kernels

#include "mevcost/spectral.hpp"

#include <cblas.h>
#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mevcost/kernels.hpp"

namespace mevcost {

namespace {

constexpr double kResidualLimit = 1e-6;
constexpr double kDropTol = 1e-6;  // near-zero projection threshold

// (L f)_v = deg_v f_v - sum of f over neighbors.
void laplacian_matvec(const PermutationGraph& g, const double* f, double* out) {
  const auto nv = g.num_vertices;
  if (g.kind == GraphKind::complete) {
    double total = kernels::sum(f, nv);
    for (std::uint64_t v = 0; v < nv; ++v)
      out[v] = static_cast<double>(nv) * f[v] - total;
    return;
  }
  for (std::uint64_t v = 0; v < nv; ++v) {
    double acc = static_cast<double>(g.degree[v]) * f[v];
    for (auto k = g.adj_offsets[v]; k < g.adj_offsets[v + 1]; ++k)
      acc -= f[g.adj[k]];
    out[v] = acc;
  }
}

// Rebuild the basis of a degenerate eigenspace deterministically. Q is the
// N x d block of eigenvector columns starting at U + start*N. The new basis
// is obtained from the projections of e_0, e_1, ... onto span(Q), expressed
// in coefficient space (projection of e_k has coefficients = row k of Q) and
// orthonormalized in index order by Householder QR.
void reorthonormalize_group(std::vector<double>& U, std::uint64_t nv,
                            std::uint64_t start, std::uint64_t d) {
  std::vector<double> coeff(d * d);  // column-major, candidate k in column k
  for (std::uint64_t k = 0; k < d; ++k)
    for (std::uint64_t m = 0; m < d; ++m)
      coeff[k * d + m] = U[(start + m) * nv + k];

  std::vector<double> tau(d);
  auto dd = static_cast<lapack_int>(d);
  if (LAPACKE_dgeqrf(LAPACK_COL_MAJOR, dd, dd, coeff.data(), dd, tau.data()))
    throw std::runtime_error("dgeqrf failed in degenerate re-orthonormalization");
  if (LAPACKE_dorgqr(LAPACK_COL_MAJOR, dd, dd, dd, coeff.data(), dd, tau.data()))
    throw std::runtime_error("dorgqr failed in degenerate re-orthonormalization");

  // Map back to vertex space: U_group <- U_group * coeff.
  std::vector<double> fresh(nv * d);
  cblas_dgemm(CblasColMajor, CblasNoTrans, CblasNoTrans,
              static_cast<blasint>(nv), static_cast<blasint>(d),
              static_cast<blasint>(d), 1.0, U.data() + start * nv,
              static_cast<blasint>(nv), coeff.data(), static_cast<blasint>(d),
              0.0, fresh.data(), static_cast<blasint>(nv));
  std::copy(fresh.begin(), fresh.end(), U.begin() + static_cast<std::ptrdiff_t>(start * nv));
}

}  // namespace

std::vector<double> laplacian(const PermutationGraph& g) {
  const auto nv = g.num_vertices;
  std::vector<double> L(nv * nv, 0.0);
  for (std::uint64_t v = 0; v < nv; ++v)
    L[v * nv + v] = static_cast<double>(g.degree[v]);
  for (const auto& [a, b] : g.edges) {
    L[static_cast<std::uint64_t>(a) * nv + b] = -1.0;
    L[static_cast<std::uint64_t>(b) * nv + a] = -1.0;
  }
  return L;
}

Spectrum decompose(const PermutationGraph& g) {
  const auto nv = g.num_vertices;
  Spectrum s;
  s.num_vertices = nv;
  s.eigenvalues.resize(nv);
  s.U = laplacian(g);

  auto info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L',
                             static_cast<lapack_int>(nv), s.U.data(),
                             static_cast<lapack_int>(nv), s.eigenvalues.data());
  if (info != 0)
    throw std::runtime_error("dsyevd failed to converge (info=" +
                             std::to_string(info) + ")");

  // Deterministic basis inside each group of (numerically) equal eigenvalues.
  double scale = std::max(1.0, std::abs(s.eigenvalues.back()));
  double group_tol = 1e-8 * scale;
  for (std::uint64_t lo = 0; lo < nv;) {
    std::uint64_t hi = lo + 1;
    while (hi < nv && s.eigenvalues[hi] - s.eigenvalues[lo] <= group_tol) ++hi;
    if (hi - lo > 1) {
      s.degenerate = true;
      reorthonormalize_group(s.U, nv, lo, hi - lo);
    }
    lo = hi;
  }

  // Sign convention: first component larger than kDropTol in absolute value
  // is made positive.
  for (std::uint64_t c = 0; c < nv; ++c) {
    double* col = s.U.data() + c * nv;
    for (std::uint64_t v = 0; v < nv; ++v) {
      if (std::abs(col[v]) <= 1e-10) continue;
      if (col[v] < 0.0)
        for (std::uint64_t w = 0; w < nv; ++w) col[w] = -col[w];
      break;
    }
  }

  // Residual verification over every column.
  std::vector<double> lu(nv);
  double worst = 0.0;
  for (std::uint64_t c = 0; c < nv; ++c) {
    laplacian_matvec(g, s.column(c), lu.data());
    kernels::axpy(-s.eigenvalues[c], s.column(c), lu.data(), nv);
    worst = std::max(worst, kernels::max_abs(lu.data(), nv));
  }
  s.max_residual = worst;
  if (worst > kResidualLimit)
    throw std::runtime_error("eigenpair residual " + std::to_string(worst) +
                             " exceeds limit");

  if (std::abs(s.eigenvalues.front()) > 1e-8)
    throw std::runtime_error("smallest Laplacian eigenvalue is not 0");
  s.provenance = "lapack-dsyevd;group_tol=" + std::to_string(group_tol) +
                 ";residual=" + std::to_string(worst);
  return s;
}

GraphSignal parity_signal(int n) {
  GraphSignal v;
  v.reserve(factorial(n));
  for (const auto& p : enumerate_group(n))
    v.push_back(p.parity() == Parity::even ? 1.0 : -1.0);
  return v;
}

double smoothness_cg(const GraphSignal& f, const PermutationGraph& g) {
  if (f.size() != g.num_vertices)
    throw std::invalid_argument("signal length != vertex count");
  return kernels::edge_gap_sumsq(f.data(), g.edges.data(), g.edges.size());
}

GraphSignal fourier(const GraphSignal& f, const Spectrum& s) {
  if (f.size() != s.num_vertices)
    throw std::invalid_argument("signal length != spectrum dimension");
  GraphSignal fhat(f.size());
  cblas_dgemv(CblasColMajor, CblasTrans, static_cast<blasint>(s.num_vertices),
              static_cast<blasint>(s.num_vertices), 1.0, s.U.data(),
              static_cast<blasint>(s.num_vertices), f.data(), 1, 0.0,
              fhat.data(), 1);
  return fhat;
}

GraphSignal inverse_fourier(const GraphSignal& fhat, const Spectrum& s) {
  if (fhat.size() != s.num_vertices)
    throw std::invalid_argument("coefficient length != spectrum dimension");
  GraphSignal f(fhat.size());
  cblas_dgemv(CblasColMajor, CblasNoTrans, static_cast<blasint>(s.num_vertices),
              static_cast<blasint>(s.num_vertices), 1.0, s.U.data(),
              static_cast<blasint>(s.num_vertices), fhat.data(), 1, 0.0,
              f.data(), 1);
  return f;
}

double coherence(const Spectrum& s) {
  double mu = 0.0;
  for (std::uint64_t c = 0; c < s.num_vertices; ++c)
    mu = std::max(mu, kernels::max_abs(s.column(c), s.num_vertices));
  return mu;
}

SignalCost cost_from_signal(const GraphSignal& f) {
  const auto n = f.size();
  double hi = kernels::max_value(f.data(), n);
  double lo = kernels::min_value(f.data(), n);
  SignalCost r;
  if (hi < -lo) r.shift = -(hi + lo) / 2.0;
  GraphSignal g(f);
  if (r.shift != 0.0)
    for (auto& v : g) v += r.shift;
  double mean = kernels::sum(g.data(), n) / static_cast<double>(n);
  r.cost = kernels::max_abs(g.data(), n) - mean;
  return r;
}

std::vector<BoundCertificate> path_bound(const GraphSignal& f,
                                         const PermutationGraph& g) {
  if (f.size() != g.num_vertices)
    throw std::invalid_argument("signal length != vertex count");
  double max_gap = kernels::max_value(f.data(), f.size()) -
                   kernels::min_value(f.data(), f.size());
  double edge_gap = 0.0;
  for (const auto& [a, b] : g.edges)
    edge_gap = std::max(edge_gap, std::abs(f[a] - f[b]));

  std::vector<BoundCertificate> certs;
  certs.push_back(make_certificate("path", max_gap,
                                   static_cast<double>(g.diameter) * edge_gap));
  if (g.kind == GraphKind::transposition)
    certs.push_back(make_certificate(
        "transposition_path", max_gap, static_cast<double>(g.n - 1) * edge_gap,
        "edge gap " + std::to_string(edge_gap)));
  certs.push_back(
      make_certificate("path_cost", cost_from_signal(f).cost, max_gap));
  return certs;
}

std::pair<BoundCertificate, BoundCertificate> fourier_bounds(
    const GraphSignal& f, const Spectrum& s) {
  auto sc = cost_from_signal(f);
  GraphSignal g(f);
  if (sc.shift != 0.0)
    for (auto& v : g) v += sc.shift;
  auto fhat = fourier(g, s);
  double norm2 = std::sqrt(kernels::dot(fhat.data(), fhat.data(), fhat.size()));
  double norm1 = 0.0;
  for (double v : fhat) norm1 += std::abs(v);
  double sqrt_nf = std::sqrt(static_cast<double>(s.num_vertices));
  double mu = coherence(s);
  auto lower = make_certificate("fourier_lower", (norm2 - fhat[0]) / sqrt_nf,
                                sc.cost);
  auto upper = make_certificate("fourier_upper", sc.cost,
                                mu * norm1 - fhat[0] / sqrt_nf);
  return {lower, upper};
}

std::vector<BoundCertificate> cg_sandwich(const GraphSignal& f,
                                          const PermutationGraph& g,
                                          const Spectrum& s) {
  double c = cost_from_signal(f).cost;
  double cg = smoothness_cg(f, g);
  double nf = static_cast<double>(g.num_vertices);
  std::vector<BoundCertificate> certs;
  if (g.num_vertices == 1) {
    certs.push_back(make_certificate("cg_sandwich_lower", 0.0, c));
    certs.push_back(make_certificate("cg_sandwich_upper", c, 0.0,
                                     "single vertex: all costs 0"));
    return certs;
  }
  double lambda_max = s.eigenvalues.back();
  double lambda_2 = s.eigenvalues[1];
  std::string note;
  if (g.kind == GraphKind::transposition)
    note = "transposition: lambda_max = n(n-1) = " +
           std::to_string(g.n * (g.n - 1));
  // The lower bound needs the standing assumption (max f >= -min f) to hold
  // for the mean-centered signal; that property is translation invariant, so
  // when it fails the bound is applied to the reflected signal -f instead
  // (C_G is unchanged and -f satisfies the assumption).
  double mean = kernels::sum(f.data(), f.size()) / nf;
  double hi = kernels::max_value(f.data(), f.size());
  double lo = kernels::min_value(f.data(), f.size());
  double c_lower = c;
  if (hi - mean < mean - lo) {
    c_lower = mean - lo;  // cost of the reflected signal
    note = (note.empty() ? std::string() : note + "; ") +
           "centered signal fails max f >= -min f: bound applied to -f";
  }
  certs.push_back(make_certificate(
      "cg_sandwich_lower", std::sqrt(cg / (lambda_max * nf)), c_lower, note));
  certs.push_back(
      make_certificate("cg_sandwich_upper", c, std::sqrt(cg / lambda_2)));
  certs.push_back(make_certificate(
      "cg_sandwich_mohar", c,
      std::sqrt(static_cast<double>(g.diameter) * nf) / 2.0 * std::sqrt(cg),
      "lambda_2 >= 4/(diam n!)"));
  return certs;
}

}  // namespace mevcost

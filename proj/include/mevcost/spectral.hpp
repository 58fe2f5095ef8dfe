#pragma once

// Laplacian spectra of permutation graphs, the graph Fourier transform,
// coherence, the smoothness functional C_G, and the spectral bounds on the
// cost of MEV.

#include <string>
#include <vector>

#include "mevcost/certificate.hpp"
#include "mevcost/graph.hpp"

namespace mevcost {

// f_i = f(pi_i(x)) under the lexicographic rank indexing.
using GraphSignal = std::vector<double>;

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
  std::vector<double> U;            // column-major, n! x n!, orthonormal
  std::uint64_t num_vertices = 0;
  bool degenerate = false;     // repeated eigenvalues were re-orthonormalized
  double max_residual = 0.0;   // max |(L u - lambda u)_i| over checked columns
  std::string provenance;

  const double* column(std::uint64_t i) const {
    return U.data() + i * num_vertices;
  }
};

// Dense Laplacian, column-major.
std::vector<double> laplacian(const PermutationGraph& g);

// Full symmetric eigendecomposition with deterministic handling of
// degenerate eigenspaces: within each group of equal eigenvalues the basis is
// rebuilt by projecting the standard basis vectors in index order onto the
// eigenspace, orthonormalizing, and dropping near-zero projections. Each
// eigenvector's first nonzero component is made positive.
Spectrum decompose(const PermutationGraph& g);

// +1 on even permutations, -1 on odd ones; eigenvector of the transposition
// graph Laplacian with eigenvalue n(n-1).
GraphSignal parity_signal(int n);

// C_G(f) = sum over edges of (f_i - f_j)^2
double smoothness_cg(const GraphSignal& f, const PermutationGraph& g);

// fhat = U^T f and f = U fhat.
GraphSignal fourier(const GraphSignal& f, const Spectrum& s);
GraphSignal inverse_fourier(const GraphSignal& fhat, const Spectrum& s);

// mu = max_i ||u_i||_inf
double coherence(const Spectrum& s);

struct SignalCost {
  double cost = 0.0;
  double shift = 0.0;  // translation applied so max f_i >= max_j(-f_j)
};

// C(f) = ||f||_inf - 1^T f / n! after the recorded translation; agrees with
// the enumeration-based cost of the corresponding table payoff.
SignalCost cost_from_signal(const GraphSignal& f);

// max-gap <= diam(G) * max-edge-gap, plus the (n-1)-transposition variant and
// the implied bound C(f) <= max-gap.
std::vector<BoundCertificate> path_bound(const GraphSignal& f,
                                         const PermutationGraph& g);

// Lower: C >= (||fhat||_2 - fhat_1)/sqrt(n!); upper: C <= mu ||fhat||_1 -
// fhat_1/sqrt(n!).
std::pair<BoundCertificate, BoundCertificate> fourier_bounds(
    const GraphSignal& f, const Spectrum& s);

// sqrt(C_G)/sqrt(lambda_max n!) <= C <= sqrt(C_G/lambda_2), plus the Mohar
// variant C <= sqrt(diam n!)/2 * sqrt(C_G). The lower inequality assumes
// max f >= -min f for the mean-centered signal; when that fails it is
// certified on the reflected signal -f (noted on the certificate).
std::vector<BoundCertificate> cg_sandwich(const GraphSignal& f,
                                          const PermutationGraph& g,
                                          const Spectrum& s);

}  // namespace mevcost

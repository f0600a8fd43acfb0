#ifndef HHG_ATOMIC_SPECTRUM_HPP
#define HHG_ATOMIC_SPECTRUM_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <sstream>
#include <vector>

#include "hhg/errors.hpp"
#include "hhg/grid.hpp"

namespace hhg {

using complexd = std::complex<double>;

// H = p^2/2 + V on the grid, second-order central differences.
// Complex symmetric (not Hermitian) once the absorbing potential is on.
inline Eigen::MatrixXcd build_hamiltonian(const GridSpec& grid,
                                          const std::vector<complexd>& potential) {
  if (static_cast<int>(potential.size()) != grid.M)
    throw argument_error("build_hamiltonian: potential length != M");
  const int M = grid.M;
  const double k0 = 1.0 / (grid.dx * grid.dx);
  Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(M, M);
  for (int j = 0; j < M; ++j) {
    H(j, j) = k0 + potential[j];
    if (j + 1 < M) {
      H(j, j + 1) = -0.5 * k0;
      H(j + 1, j) = -0.5 * k0;
    }
  }
  return H;
}

// Spectrum of the single-atom Hamiltonian. Eigenvectors are c-normalized:
// sum_j psi_m(x_j)^2 dx = 1 with no conjugation, the natural inner product
// for complex symmetric matrices. This makes D symmetric and, after
// orthogonalizing near-degenerate clusters, V^T V dx = I so that
// W - E D in this basis is an exact similarity transform of the
// position-space operator.
struct AtomicSpectrum {
  GridSpec grid;
  SoftCoulombParams params;
  Eigen::VectorXcd energies;  // w_m, ascending by real part
  Eigen::MatrixXcd states;    // columns psi_m in the position basis
  Eigen::MatrixXcd D;         // D_mn = sum_j psi_m x_j psi_n dx
  double c_orth_error = 0.0;  // max |(V^T V dx - I)_mn|

  Eigen::MatrixXcd W() const {
    return energies.asDiagonal().toDenseMatrix();
  }

  int num_bound() const {
    int n = 0;
    for (int i = 0; i < energies.size(); ++i)
      if (energies(i).real() < 0.0) ++n;
    return n;
  }

  double ionization_potential() const { return -energies(0).real(); }
};

namespace detail {

// Near-degenerate eigenvector clusters come out of the solver as arbitrary
// mixtures; re-orthogonalize them under the c-product (transpose, no
// conjugation) so the whole basis is c-orthonormal.
inline void c_orthogonalize_clusters(Eigen::VectorXcd& w, Eigen::MatrixXcd& V,
                                     double cluster_tol) {
  const int M = static_cast<int>(w.size());
  int i = 0;
  while (i < M) {
    int j = i + 1;
    while (j < M && std::abs(w(j) - w(j - 1)) < cluster_tol) ++j;
    for (int p = i; p < j; ++p) {
      Eigen::VectorXcd v = V.col(p);
      for (int q = i; q < p; ++q)
        v -= (V.col(q).transpose() * v)(0, 0) * V.col(q);
      const complexd c2 = (v.transpose() * v)(0, 0);
      if (std::abs(c2) < 1e-12)
        throw numerical_error("diagonalize: near-defective c-product in degenerate cluster");
      V.col(p) = v / std::sqrt(c2);
    }
    i = j;
  }
}

} // namespace detail

inline AtomicSpectrum diagonalize(const Eigen::MatrixXcd& H, const GridSpec& grid,
                                  const SoftCoulombParams& params = {}) {
  const int M = static_cast<int>(H.rows());
  if (H.cols() != M) throw argument_error("diagonalize: H must be square");

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(H, true);
  if (es.info() != Eigen::Success) {
    std::ostringstream os;
    os << "diagonalize: eigensolver failed (info=" << es.info()
       << ", M=" << M << ", |H|_max=" << H.cwiseAbs().maxCoeff() << ")";
    throw numerical_error(os.str());
  }

  // ascending real part, ties by ascending imaginary part
  std::vector<int> idx(M);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int p, int q) {
    const complexd wp = es.eigenvalues()(p), wq = es.eigenvalues()(q);
    if (wp.real() != wq.real()) return wp.real() < wq.real();
    return wp.imag() < wq.imag();
  });

  AtomicSpectrum s;
  s.grid = grid;
  s.params = params;
  s.energies.resize(M);
  s.states.resize(M, M);
  for (int i = 0; i < M; ++i) {
    s.energies(i) = es.eigenvalues()(idx[i]);
    s.states.col(i) = es.eigenvectors().col(idx[i]);
  }

  const double scale = s.energies.cwiseAbs().maxCoeff();
  detail::c_orthogonalize_clusters(s.energies, s.states, 1e-6 * scale);

  // c-normalize including the dx measure; fix the free sign so the
  // largest-magnitude component has positive real part.
  for (int p = 0; p < M; ++p) {
    Eigen::VectorXcd v = s.states.col(p);
    const complexd c2 = (v.transpose() * v)(0, 0) * grid.dx;
    if (std::abs(c2) < 1e-14)
      throw numerical_error("diagonalize: c-normalization failed (self c-product ~ 0)");
    v /= std::sqrt(c2);
    int imax = 0;
    double amax = -1.0;
    for (int r = 0; r < M; ++r)
      if (std::abs(v(r)) > amax) { amax = std::abs(v(r)); imax = r; }
    if (v(imax).real() < 0.0) v = -v;
    s.states.col(p) = v;
  }

  Eigen::MatrixXcd G = s.states.transpose() * s.states * grid.dx;
  G.diagonal().array() -= 1.0;
  s.c_orth_error = G.cwiseAbs().maxCoeff();

  Eigen::MatrixXcd XV = s.states;
  for (int j = 0; j < M; ++j) XV.row(j) *= grid.point(j);
  s.D = s.states.transpose() * XV * grid.dx;
  return s;
}

inline AtomicSpectrum compute_atomic_spectrum(const GridSpec& grid,
                                              const SoftCoulombParams& params = {}) {
  return diagonalize(build_hamiltonian(grid, build_potential(grid, params)), grid, params);
}

} // namespace hhg

#endif

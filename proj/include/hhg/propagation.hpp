#ifndef HHG_PROPAGATION_HPP
#define HHG_PROPAGATION_HPP

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <functional>
#include <sstream>
#include <vector>
#include <unsupported/Eigen/MatrixFunctions>

#include "hhg/atomic_spectrum.hpp"
#include "hhg/errors.hpp"
#include "hhg/expmv.hpp"
#include "hhg/pulse.hpp"

namespace hhg {

// o(t): the 2x2 top-left corner of F^dag(t) O F(t), one sample per time step.
struct DynamicalMatrixSeries {
  std::vector<double> times;
  std::vector<Eigen::Matrix2cd> values;
};

struct SpectralDipole {
  std::vector<double> frequencies;
  std::vector<Eigen::Matrix2cd> values;
};

enum class PropagationEngine {
  // Track only the first two columns of F; apply each step's exponential to
  // them with the truncated-Taylor action (machine-precision per step).
  tracked_columns,
  // Dense scaling-and-squaring Pade exponential of the full step matrix.
  // Exact reference; cost grows as M^3 per step, intended for small grids.
  dense_pade,
};

struct PropagationOptions {
  PropagationEngine engine = PropagationEngine::tracked_columns;
  // Called after every step with (step index, full F) -- dense engine only.
  std::function<void(int, const Eigen::MatrixXcd&)> dense_observer;
};

// Evolve F under id F/dt = (W - E_c(t) D) F with the field at mid-step,
// recording o(t) = [F^dag O F]_{2x2} for each observable.
// F^dag is the conjugate transpose.
inline std::vector<DynamicalMatrixSeries> propagate(
    const AtomicSpectrum& spec, const PulseSpec& pulse, const PropagationConfig& cfg,
    const std::vector<Eigen::MatrixXcd>& observables,
    const PropagationOptions& opts = {}) {
  pulse.check();
  const int M = static_cast<int>(spec.energies.size());
  for (const auto& O : observables)
    if (O.rows() != M || O.cols() != M)
      throw argument_error("propagate: observable dimension mismatch");

  const double dt = cfg.step(pulse);
  const int nsteps = static_cast<int>(std::ceil(pulse.t_f() / dt - 1e-9));

  // per-column 1-norm of D and spectral scale of W, for the expmv norm bound
  double d_colsum = 0.0;
  for (int j = 0; j < M; ++j)
    d_colsum = std::max(d_colsum, spec.D.col(j).cwiseAbs().sum());
  const double w_max = spec.energies.cwiseAbs().maxCoeff();

  std::vector<DynamicalMatrixSeries> out(observables.size());
  for (auto& s : out) {
    s.times.reserve(nsteps + 1);
    s.values.reserve(nsteps + 1);
  }

  const bool dense = opts.engine == PropagationEngine::dense_pade;
  Eigen::MatrixXcd F;
  if (dense) {
    F = Eigen::MatrixXcd::Identity(M, M);
  } else {
    F = Eigen::MatrixXcd::Zero(M, 2);
    F(0, 0) = 1.0;
    F(1, 1) = 1.0;
  }

  auto record = [&](int step) {
    const double t = step * dt;
    for (size_t i = 0; i < observables.size(); ++i) {
      Eigen::Matrix2cd o;
      if (dense) {
        const Eigen::MatrixXcd OF = observables[i] * F.leftCols(2);
        o = F.leftCols(2).adjoint() * OF;
      } else {
        const Eigen::MatrixXcd OF = observables[i] * F;
        o = F.adjoint() * OF;
      }
      if (!o.allFinite()) {
        std::ostringstream os;
        os << "propagate: non-finite dynamical matrix at step " << step
           << " (t = " << t << ")";
        throw numerical_error(os.str());
      }
      out[i].times.push_back(t);
      out[i].values.push_back(o);
    }
  };

  record(0);
  for (int s = 0; s < nsteps; ++s) {
    const double t_mid = (s + 0.5) * dt;
    const double Ec = classical_field(t_mid, pulse);
    if (dense) {
      Eigen::MatrixXcd A = (-spec.D * Ec);
      A.diagonal() += spec.energies;
      A *= complexd(0.0, -dt);
      F = A.exp() * F;
      if (opts.dense_observer) opts.dense_observer(s + 1, F);
    } else {
      const double norm1 = (w_max + std::abs(Ec) * d_colsum) * dt;
      auto applyA = [&](const Eigen::MatrixXcd& B) -> Eigen::MatrixXcd {
        Eigen::MatrixXcd R = (-Ec) * (spec.D * B);
        R += spec.energies.asDiagonal() * B;
        R *= complexd(0.0, -dt);
        return R;
      };
      expmv_inplace(applyA, norm1, F);
    }
    record(s + 1);
  }
  return out;
}

// One-sided Fourier transform d~(w) = int_0^tf e^{iwt} d(t) dt, trapezoidal.
inline SpectralDipole spectral_dipole(const DynamicalMatrixSeries& series,
                                      const std::vector<double>& omegas) {
  const size_t n = series.times.size();
  if (n < 2) throw argument_error("spectral_dipole: series must have at least two samples");
  const double dt = series.times[1] - series.times[0];
  SpectralDipole out;
  out.frequencies = omegas;
  out.values.resize(omegas.size());
  for (size_t w = 0; w < omegas.size(); ++w) {
    const double om = omegas[w];
    Eigen::Matrix2cd acc = Eigen::Matrix2cd::Zero();
    for (size_t s = 0; s < n; ++s) {
      const double wgt = (s == 0 || s + 1 == n) ? 0.5 : 1.0;
      acc += (wgt * std::exp(complexd(0.0, om * series.times[s]))) * series.values[s];
    }
    out.values[w] = acc * dt;
  }
  return out;
}

} // namespace hhg

#endif

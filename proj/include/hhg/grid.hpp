#ifndef HHG_GRID_HPP
#define HHG_GRID_HPP

#include <cmath>
#include <complex>
#include <sstream>
#include <string>
#include <vector>

#include "hhg/errors.hpp"

namespace hhg {

// 1D simulation box [-L, L] with absorbing boundaries starting at |x| > x0.
// The grid is cell-centered: points sit at half-integer multiples of dx around
// the origin, so the potential core at x = 0 is sampled symmetrically at
// +-dx/2 and never on the singular-most point. The one leftover point of an
// odd-size grid sits at the far end, inside the absorber.
struct GridSpec {
  double L = 150.0;   // half-box length (a.u.)
  double dx = 0.7;    // grid step (a.u.)
  double x0 = 135.0;  // absorbing-boundary onset (a.u.)
  int M = 429;        // level count = round(2L/dx)

  static GridSpec make(double L, double dx) {
    GridSpec g;
    g.L = L;
    g.dx = dx;
    g.x0 = 0.9 * L;
    g.M = static_cast<int>(std::lround(2.0 * L / dx));
    g.check();
    return g;
  }

  double point(int j) const { return (j - M / 2) * dx + 0.5 * dx; }

  std::vector<double> points() const {
    std::vector<double> x(M);
    for (int j = 0; j < M; ++j) x[j] = point(j);
    return x;
  }

  void check() const {
    if (!(L > 0.0) || !(dx > 0.0))
      throw config_error("grid: L and dx must be positive");
    if (M < 3) throw config_error("grid: M >= 3 violated (M = " + std::to_string(M) + ")");
    if (M != static_cast<int>(std::lround(2.0 * L / dx)))
      throw config_error("grid: M = round(2L/dx) violated");
    if (!(x0 > 0.0) || !(x0 < L))
      throw config_error("grid: absorbing onset x0 must satisfy 0 < x0 < L");
  }
};

struct SoftCoulombParams {
  double a = 0.816;    // softening parameter (a.u.)
  double cab = 5e-4;   // absorbing-potential strength (a.u.)

  void check() const {
    if (!(a > 0.0)) throw config_error("soft-coulomb: a > 0 violated");
    if (cab < 0.0) throw config_error("soft-coulomb: cab >= 0 violated");
  }
};

// V(x) = -1/sqrt(x^2 + a^2) - i cab (|x| - x0)^3 for |x| > x0.
inline std::vector<std::complex<double>> build_potential(const GridSpec& grid,
                                                         const SoftCoulombParams& p) {
  grid.check();
  p.check();
  if (!(grid.dx < std::sqrt(2.0) * p.a)) {
    std::ostringstream os;
    os << "grid: dx < sqrt(2)a violated (" << grid.dx << " >= " << std::sqrt(2.0) * p.a << ")";
    throw config_error(os.str());
  }
  std::vector<std::complex<double>> v(grid.M);
  for (int j = 0; j < grid.M; ++j) {
    const double x = grid.point(j);
    const double vr = -1.0 / std::sqrt(x * x + p.a * p.a);
    const double ax = std::abs(x);
    const double vi = ax > grid.x0 ? -p.cab * std::pow(ax - grid.x0, 3.0) : 0.0;
    v[j] = {vr, vi};
  }
  return v;
}

// One line per inequality of the grid-quality heuristics, with its margin.
struct GridCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = false;
  double margin() const { return rhs - lhs; }
};

struct GridReport {
  std::vector<GridCheck> checks;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// dx < sqrt(2) a  (resolve the potential core)
// L dx > 2/omega_d (continuum level spacing below the drive scale)
inline GridReport validate_grid(const GridSpec& grid, const SoftCoulombParams& p,
                                double drive_freq) {
  if (!(drive_freq > 0.0)) throw argument_error("validate_grid: drive frequency must be positive");
  GridReport r;
  r.checks.push_back({"dx < sqrt(2)a", grid.dx, std::sqrt(2.0) * p.a,
                      grid.dx < std::sqrt(2.0) * p.a});
  r.checks.push_back({"L dx > 2/omega_d", 2.0 / drive_freq, grid.L * grid.dx,
                      grid.L * grid.dx > 2.0 / drive_freq});
  return r;
}

} // namespace hhg

#endif

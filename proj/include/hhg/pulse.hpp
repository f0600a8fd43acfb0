#ifndef HHG_PULSE_HPP
#define HHG_PULSE_HPP

#include <cmath>
#include <numbers>

#include "hhg/errors.hpp"

namespace hhg {

// Trapezoidal pulse: linear ramp up over the first quarter, flat plateau,
// linear ramp down over the last quarter. Cosine carrier, zero phase at t=0.
struct PulseSpec {
  double E0 = 0.0;       // peak field (a.u.)
  double omega_d = 0.057; // drive angular frequency (a.u.)
  int n_cycles = 40;

  double period() const { return 2.0 * std::numbers::pi / omega_d; }
  double t_f() const { return n_cycles * period(); }

  void check() const {
    if (E0 < 0.0) throw config_error("pulse: E0 >= 0 violated");
    if (!(omega_d > 0.0)) throw config_error("pulse: omega_d > 0 violated");
    if (n_cycles < 4) throw config_error("pulse: n_cycles >= 4 violated (ramps must fit)");
  }
};

inline double pulse_envelope(double t, const PulseSpec& p) {
  const double tf = p.t_f();
  if (t < 0.0 || t > tf) return 0.0;
  if (t < 0.25 * tf) return t / (0.25 * tf);
  if (t > 0.75 * tf) return (tf - t) / (0.25 * tf);
  return 1.0;
}

inline double classical_field(double t, const PulseSpec& p) {
  return pulse_envelope(t, p) * p.E0 * std::cos(p.omega_d * t);
}

struct PropagationConfig {
  double dt = 0.0; // time step (a.u.); 0 means period/400

  static PropagationConfig defaults(const PulseSpec& p) {
    PropagationConfig c;
    c.dt = p.period() / 400.0;
    return c;
  }

  double step(const PulseSpec& p) const { return dt > 0.0 ? dt : p.period() / 400.0; }
};

} // namespace hhg

#endif

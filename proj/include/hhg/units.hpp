#ifndef HHG_UNITS_HPP
#define HHG_UNITS_HPP

// Hartree atomic units are used for all internal computation.
// Conversions here are the only place other unit systems appear.

namespace hhg::units {

inline constexpr double c_au = 137.035999084;          // speed of light
inline constexpr double hartree_eV = 27.211386245988;  // 1 Ha in eV
inline constexpr double field_GV_per_m = 514.220675112; // 1 a.u. field in GV/m
inline constexpr double time_fs = 0.024188843265857;   // 1 a.u. time in fs

inline constexpr double eV_to_au(double ev) { return ev / hartree_eV; }
inline constexpr double au_to_eV(double au) { return au * hartree_eV; }
inline constexpr double GVm_to_au(double gvm) { return gvm / field_GV_per_m; }
inline constexpr double au_to_GVm(double au) { return au * field_GV_per_m; }
inline constexpr double fs_to_au(double fs) { return fs / time_fs; }
inline constexpr double au_to_fs(double au) { return au * time_fs; }

} // namespace hhg::units

#endif

#pragma once

// Stern-Gerlach device: amplitudes and probabilities along a quantization
// axis. Analytic only; sampling is left to callers.

#include "rotor/su2.hpp"

namespace rotor {

struct DeviceOrientation {
  Axis axis = Axis::unit_z();
};

struct MeasurementResult {
  Complex amp_plus;   // <chi+(d)|s>
  Complex amp_minus;  // <chi-(d)|s>
  double p_plus = 0.0;
  double p_minus = 0.0;
};

enum class Branch { Plus, Minus };

inline constexpr double kImpossibleBranch = 1e-12;

// Throws ZeroSpinor for norm < 0.5.
MeasurementResult project(const Spinor& s, const DeviceOrientation& d);

// Post-measurement state: the branch eigenspinor of d.axis in canonical
// phase. Throws ImpossibleBranch when that branch has probability below
// kImpossibleBranch.
Spinor collapse(const Spinor& s, const DeviceOrientation& d, Branch branch);

struct PhaseLossOutcome {
  bool holds = false;       // probabilities agree; states differ unless degenerate
  bool degenerate = false;  // the two prepared states are the same state
  MeasurementResult first;
  MeasurementResult second;
};

// Prepares (cos t/2, e^{i phi_k} sin t/2) for k = 1, 2 and measures both along z.
PhaseLossOutcome phase_loss_demo(double theta, double phi1, double phi2);

}  // namespace rotor

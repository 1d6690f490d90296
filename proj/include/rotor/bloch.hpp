#pragma once

// Bloch-sphere mapping against the laboratory Pauli operator, and transport
// between Pauli frames related by a rotation.

#include "rotor/rotation.hpp"
#include "rotor/su2.hpp"

namespace rotor {

struct BlochPoint {
  Axis s = Axis::unit_z();
};

// The z-quantized spinor for a spin direction written with a zenith counted
// the opposite way round: cos(t/2) (1,0) - e^{ip} sin(t/2) (0,1).
Spinor bloch_sphere_spinor(double inverse_zenith, double azimuth);

// Spinor whose Pauli expectation vector is p. Uses bloch_sphere_spinor with
// the inverse zenith -theta of p, i.e. (cos theta/2, e^{i phi} sin theta/2).
Spinor spinor_from_bloch(const BlochPoint& p);

// (<sigma_x>, <sigma_y>, <sigma_z>). Throws ZeroSpinor for norm < 0.5; the
// spinor is normalized before taking expectation values.
BlochPoint bloch_point(const Spinor& s);

// A Pauli frame sigma1_k = transport sigma_k transport^+.
struct Frame {
  Matrix2 transport = identity2();

  Matrix2 sigma(int k) const;
};

// transport = E cos(theta/2) - i sigma_t sin(theta/2).
Frame make_frame(const Axis& t_axis, double theta);

// transport (sigma . q) transport^+
Matrix2 frame_sigma_dot(const Frame& f, const Axis& q);

// <chi1n| U+_q |chi1n> == <chi1z| R+_q |chi1z> within kTolAlg, where chi1n =
// (1,0), U+_q uses the frame's Pauli projection, R+_q the laboratory one,
// and chi1z = transport^+ chi1n.
bool lemma3_check(const Frame& f, const Axis& q, double theta);

// Physical equality: transports agree up to global sign.
bool frames_equal(const Frame& a, const Frame& b, double tol = kTolAlg);

}  // namespace rotor

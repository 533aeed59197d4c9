#pragma once

// Resonant two-level SU(2) propagator algebra on the Cayley-Klein pair
// (a, b).  The full matrix is [[a, b], [-conj(b), conj(a)]]; only the
// pair is stored.  Everything is templated on the real scalar so the
// same kernel runs in double and in quadruple precision (see
// precision.hpp for the quad bindings).

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

namespace cpsynth {

template <class R>
struct scalar_traits;  // complex type + tolerances per scalar

template <>
struct scalar_traits<double> {
  using complex = std::complex<double>;
  static double pi() { return std::numbers::pi; }
  // relative tolerance for merging exponential-sum frequencies
  static double freq_merge_tol() { return 1e-12; }
  // absolute magnitude below which product coefficients are pruned
  static double coef_prune_tol() { return 1e-15; }
};

template <class R>
using complex_t = typename scalar_traits<R>::complex;

template <class R>
complex_t<R> exp_i(R theta) {
  using std::cos, std::sin;
  return complex_t<R>(cos(theta), sin(theta));
}

// A single resonant pulse: nominal area (radians, at zero error) and a
// constant drive phase, normalized to [0, 2pi).  Under a fractional
// pulse-length error eps the actual area is area * (1 + eps).
template <class R>
struct PulseT {
  R area{};
  R phase{};

  PulseT() = default;
  PulseT(R area_, R phase_) : area(area_), phase(wrap_2pi(phase_)) {
    using std::isfinite;
    if (!(area >= R(0)) || !isfinite(double(area)))
      throw std::invalid_argument("pulse area must be finite and >= 0");
  }

  static R wrap_2pi(R x) {
    using std::fmod;
    const R two_pi = 2 * scalar_traits<R>::pi();
    R y = fmod(x, two_pi);
    if (y < R(0)) y += two_pi;
    return y;
  }
};

template <class R>
struct PropagatorT {
  complex_t<R> a{1, 0};
  complex_t<R> b{0, 0};

  // |a|^2 + |b|^2 - 1, signed; zero for exact unitaries
  R unitarity_defect() const { return norm(a) + norm(b) - R(1); }
};

using PulseSpec = PulseT<double>;
using Propagator = PropagatorT<double>;

// U(eps) of one pulse: a = cos(A/2), b = -i sin(A/2) e^{i phase},
// A = area * (1 + eps).
template <class R>
PropagatorT<R> pulse_propagator(const PulseT<R>& pulse, R eps) {
  using std::cos, std::sin;
  const R half = pulse.area * (1 + eps) / 2;
  PropagatorT<R> u;
  u.a = complex_t<R>(cos(half), 0);
  u.b = complex_t<R>(0, -sin(half)) * exp_i(pulse.phase);
  return u;
}

// Matrix product X*Y on the Cayley-Klein pairs (X applied after Y).
template <class R>
PropagatorT<R> multiply(const PropagatorT<R>& x, const PropagatorT<R>& y) {
  PropagatorT<R> u;
  u.a = x.a * y.a - x.b * conj(y.b);
  u.b = x.a * y.b + x.b * conj(y.a);
  return u;
}

// Total propagator U = U_N ... U_2 U_1: the list is chronological, the
// first-applied element ends up rightmost in the product.
template <class R>
PropagatorT<R> compose(std::span<const PropagatorT<R>> props) {
  if (props.empty())
    throw std::invalid_argument("compose: empty propagator list");
  PropagatorT<R> u = props[0];
  for (std::size_t i = 1; i < props.size(); ++i) u = multiply(props[i], u);
  return u;
}

inline Propagator compose(const std::vector<Propagator>& props) {
  return compose(std::span<const Propagator>(props));
}

template <class R>
PropagatorT<R> compose_pulses(std::span<const PulseT<R>> pulses, R eps) {
  if (pulses.empty())
    throw std::invalid_argument("compose_pulses: empty pulse list");
  PropagatorT<R> u = pulse_propagator(pulses[0], eps);
  for (std::size_t i = 1; i < pulses.size(); ++i)
    u = multiply(pulse_propagator(pulses[i], eps), u);
  return u;
}

// P = |U_12|^2
template <class R>
R transition_probability(const PropagatorT<R>& u) {
  return norm(u.b);
}

}  // namespace cpsynth

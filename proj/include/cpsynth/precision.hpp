#pragma once

// Quadruple-precision bindings for the templated kernels.  Double
// precision cannot resolve the profile wings: near eps = +-1 the
// composite |U12|^2 drops to ~1e-54 for N = 8 while the double noise
// floor of the composition sits at ~1e-32.  The wing metrics and the
// final root polish therefore run on cpp_bin_float_quad.

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "cpsynth/su2.hpp"

namespace cpsynth {

using quad = boost::multiprecision::cpp_bin_float_quad;
using qcomplex = boost::multiprecision::cpp_complex_quad;

template <>
struct scalar_traits<quad> {
  using complex = qcomplex;
  static quad pi() { return boost::math::constants::pi<quad>(); }
  static quad freq_merge_tol() { return quad(1e-25); }
  static quad coef_prune_tol() { return quad(1e-30); }
};

using QuadPulse = PulseT<quad>;

inline std::vector<QuadPulse> to_quad(std::span<const PulseSpec> pulses) {
  std::vector<QuadPulse> out;
  out.reserve(pulses.size());
  for (const auto& p : pulses) out.emplace_back(quad(p.area), quad(p.phase));
  return out;
}

}  // namespace cpsynth

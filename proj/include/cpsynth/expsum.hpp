#pragma once

// Exact symbolic carrier for propagator entries as functions of the
// pulse-length error: finite sums  f(eps) = sum_k c_k exp(i w_k eps).
// Every resonant pulse entry is a two-term sum, products and sums of
// sums stay in the family, and derivatives are term-wise exact:
// d^n f / d eps^n = sum_k c_k (i w_k)^n exp(i w_k eps).  This is what
// makes high-order derivative constraints solvable to 1e-10 residuals
// where finite differences would drown in roundoff.

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "cpsynth/su2.hpp"

namespace cpsynth {

// Beyond this order the (i w)^k coefficient growth eats double
// precision; callers get a hard error instead of quiet garbage.
inline constexpr int kMaxDerivativeOrder = 40;

template <class R>
class ExpSumT {
 public:
  using C = complex_t<R>;
  struct Term {
    C coef;
    R freq;
  };

  ExpSumT() = default;
  explicit ExpSumT(std::vector<Term> terms) : terms_(std::move(terms)) {
    normalize();
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  C value(R eps) const {
    C acc(0, 0);
    for (const auto& t : terms_) acc += t.coef * exp_i(t.freq * eps);
    return acc;
  }

  // sum_k c_k (i w_k)^order exp(i w_k eps), exact term-wise derivative
  C derivative_value(int order, R eps) const {
    if (order < 0 || order > kMaxDerivativeOrder)
      throw std::invalid_argument(
          "derivative order must be in [0, " +
          std::to_string(kMaxDerivativeOrder) + "]");
    C acc(0, 0);
    for (const auto& t : terms_) {
      R wk(1);
      for (int j = 0; j < order; ++j) wk *= t.freq;
      C iw_pow = ipow(order) * wk;
      acc += t.coef * iw_pow * exp_i(t.freq * eps);
    }
    return acc;
  }

  ExpSumT conjugated() const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({conj(t.coef), -t.freq});
    return ExpSumT(std::move(out));
  }

  friend ExpSumT operator+(const ExpSumT& x, const ExpSumT& y) {
    std::vector<Term> out = x.terms_;
    out.insert(out.end(), y.terms_.begin(), y.terms_.end());
    return ExpSumT(std::move(out));
  }

  friend ExpSumT operator-(const ExpSumT& x, const ExpSumT& y) {
    std::vector<Term> out = x.terms_;
    out.reserve(out.size() + y.terms_.size());
    for (const auto& t : y.terms_) out.push_back({-t.coef, t.freq});
    return ExpSumT(std::move(out));
  }

  friend ExpSumT operator*(const ExpSumT& x, const ExpSumT& y) {
    std::vector<Term> out;
    out.reserve(x.terms_.size() * y.terms_.size());
    for (const auto& tx : x.terms_)
      for (const auto& ty : y.terms_)
        out.push_back({tx.coef * ty.coef, tx.freq + ty.freq});
    return ExpSumT(std::move(out));
  }

 private:
  // i^k
  static C ipow(int k) {
    switch (k & 3) {
      case 0: return C(1, 0);
      case 1: return C(0, 1);
      case 2: return C(-1, 0);
      default: return C(0, -1);
    }
  }

  // Sort by frequency, merge terms closer than the relative tolerance,
  // prune coefficients below the absolute floor.
  void normalize() {
    using std::abs, std::max, std::sqrt;
    if (terms_.empty()) return;
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& s, const Term& t) { return s.freq < t.freq; });
    const R ftol = scalar_traits<R>::freq_merge_tol();
    const R ptol = scalar_traits<R>::coef_prune_tol();
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (const auto& t : terms_) {
      if (!merged.empty()) {
        Term& last = merged.back();
        R scale = max(R(1), max(abs(last.freq), abs(t.freq)));
        if (abs(t.freq - last.freq) <= ftol * scale) {
          last.coef += t.coef;
          continue;
        }
      }
      merged.push_back(t);
    }
    std::erase_if(merged, [&](const Term& t) { return abs(t.coef) < ptol; });
    terms_ = std::move(merged);
  }

  std::vector<Term> terms_;
};

using ExponentialSum = ExpSumT<double>;

// Both Cayley-Klein entries of a propagator as exponential sums.
template <class R>
struct SymbolicPropagatorT {
  ExpSumT<R> a, b;
};

// a(eps) = cos(A(1+eps)/2) -> (e^{iA/2}/2) e^{i(A/2)eps} + c.c. in eps;
// b(eps) = -i sin(A(1+eps)/2) e^{i phi}, likewise two terms at +-A/2.
template <class R>
SymbolicPropagatorT<R> symbolic_pulse(const PulseT<R>& pulse) {
  using C = complex_t<R>;
  using Term = typename ExpSumT<R>::Term;
  const R w = pulse.area / 2;
  const C half(R(0.5), R(0));
  const C eiA = exp_i(w);        // e^{i A/2} at eps = 0
  const C eiphi = exp_i(pulse.phase);
  SymbolicPropagatorT<R> s;
  s.a = ExpSumT<R>({Term{half * eiA, w}, Term{half * conj(eiA), -w}});
  s.b = ExpSumT<R>(
      {Term{-half * eiphi * eiA, w}, Term{half * eiphi * conj(eiA), -w}});
  return s;
}

template <class R>
SymbolicPropagatorT<R> symbolic_multiply(const SymbolicPropagatorT<R>& x,
                                         const SymbolicPropagatorT<R>& y) {
  SymbolicPropagatorT<R> u;
  u.a = x.a * y.a - x.b * y.b.conjugated();
  u.b = x.a * y.b + x.b * y.a.conjugated();
  return u;
}

template <class R>
SymbolicPropagatorT<R> symbolic_compose(std::span<const PulseT<R>> pulses) {
  if (pulses.empty())
    throw std::invalid_argument("symbolic_compose: empty pulse list");
  SymbolicPropagatorT<R> u = symbolic_pulse(pulses[0]);
  for (std::size_t i = 1; i < pulses.size(); ++i)
    u = symbolic_multiply(symbolic_pulse(pulses[i]), u);
  return u;
}

// The U12 entry of the composite propagator as an exponential sum.
template <class R>
ExpSumT<R> symbolic_u12_of(std::span<const PulseT<R>> pulses) {
  return symbolic_compose(pulses).b;
}

}  // namespace cpsynth

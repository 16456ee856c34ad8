#pragma once

#include <gmpxx.h>

#include <atomic>
#include <cmath>
#include <cstdint>

namespace crossmin::detail {

// A double together with an upper bound on its absolute distance from the
// exact real value of the expression that produced it.
struct Bounded {
  double value = 0.0;
  double error = 0.0;
};

inline constexpr double kUnitRoundoff = 0x1p-53;
// Absorbs underflow in products of subnormal magnitudes.
inline constexpr double kUnderflowSlack = 0x1p-1010;
inline constexpr double kErrorInflation = 1.0 + 8.0 * kUnitRoundoff;

inline Bounded operator+(const Bounded& a, const Bounded& b) {
  const double v = a.value + b.value;
  return {v, (a.error + b.error + kUnitRoundoff * std::abs(v)) * kErrorInflation +
                 kUnderflowSlack};
}

inline Bounded operator-(const Bounded& a, const Bounded& b) {
  const double v = a.value - b.value;
  return {v, (a.error + b.error + kUnitRoundoff * std::abs(v)) * kErrorInflation +
                 kUnderflowSlack};
}

inline Bounded operator*(const Bounded& a, const Bounded& b) {
  const double v = a.value * b.value;
  const double e = std::abs(a.value) * b.error + std::abs(b.value) * a.error +
                   a.error * b.error + kUnitRoundoff * std::abs(v);
  return {v, e * kErrorInflation + kUnderflowSlack};
}

struct BoundedLift {
  Bounded operator()(double x) const { return {x, 0.0}; }
};

struct RationalLift {
  mpq_class operator()(double x) const { return mpq_class(x); }
};

extern std::atomic<std::uint64_t> exact_fallbacks;

// Exact sign of a polynomial expression. `expr` is called with a lifting
// functor that turns double inputs into the arithmetic type to use; it is
// evaluated once with the filter and, only if that is inconclusive, once more
// in rational arithmetic.
template <class Expr>
int robust_sign(Expr&& expr) {
  const Bounded f = expr(BoundedLift{});
  if (f.value > f.error) return 1;
  if (-f.value > f.error) return -1;
  exact_fallbacks.fetch_add(1, std::memory_order_relaxed);
  const mpq_class q = expr(RationalLift{});
  return sgn(q);
}

}  // namespace crossmin::detail

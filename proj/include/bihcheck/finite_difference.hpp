#pragma once

#include <utility>

namespace bihcheck {

/// Central differences of a smooth function of one real variable. With
/// `richardson` set, the second-order estimates at h and h/2 are combined into
/// a fourth-order one.
struct FiniteDifference {
  double step = 1e-4;
  bool richardson = false;

  /// d/dt f(t) at t = 0. `f` may return double or any Eigen dense type.
  template <class F>
  auto derivative(F&& f) const {
    using R = decltype(f(0.0));
    auto central = [&f](double h) -> R {
      R plus = f(h);
      R minus = f(-h);
      return R((plus - minus) / (2.0 * h));
    };
    if (!richardson) return central(step);
    R coarse = central(step);
    R fine = central(0.5 * step);
    return R((4.0 * fine - coarse) / 3.0);
  }

  /// Largest offset the stencil reaches from the base point.
  double reach() const { return step; }
};

/// Defaults used along curves (parameter s) and over immersion charts.
inline constexpr FiniteDifference kCurveDifference{1e-3, true};
inline constexpr FiniteDifference kChartDifference{1e-3, true};

}  // namespace bihcheck

#pragma once

#include <string>
#include <vector>

#include "bihcheck/curves.hpp"

namespace bihcheck {

/// Helix gamma(s) = (r sin(lambda s), -r cos(lambda s), lambda mu s) in N(a,b)
/// together with its derived constants.
struct HelixParams {
  double a = 0.0;
  double b = 0.0;
  double r = 1.0;
  double mu = 0.0;
  double lambda_a = 1.0;  // 1 + a r^2
  double lambda = 1.0;    // arc-length speed factor
  /// omega is the angle between t and E3: t = sin(omega) (horizontal unit) + cos(omega) E3.
  double sin_omega = 1.0;
  double cos_omega = 0.0;
  double varpi = 0.0;  // lambda - 2 a r sin(omega) - b cos(omega)

  /// Throws ParameterError unless r > 0 and 1 + a r^2 > 0.
  static HelixParams make(double a, double b, double r, double mu);
};

FunctionCurve make_helix(const HelixParams& params);
FunctionCurve make_helix(double a, double b, double r, double mu);

struct HelixAngles {
  double sin_omega;
  double cos_omega;
};

HelixAngles helix_angles(double a, double b, double r, double mu);

struct HelixCurvature {
  double kappa = 0.0;
  double tau = 0.0;
  /// varpi sin(omega) vanishes: the helix is a geodesic.
  bool geodesic = false;
};

/// kappa = |varpi| sin(omega) and tau = varpi cos(omega) + b/2, the torsion
/// oriented like frenet_apparatus (b = t x n with the metric volume form).
HelixCurvature helix_kappa_tau(double a, double b, double r, double mu);
HelixCurvature helix_kappa_tau(const HelixParams& params);

struct QuarticRoot {
  double r2 = 0.0;
  bool admissible = false;
  /// Empty when admissible.
  std::string reason;
};

/// c4 r^4 + c2 r^2 + c0 = 0 with c4 = a(2a(1 - mu b) + b^2), c2 = b^2 - 12a,
/// c0 = 2(1 + mu b): the biharmonicity condition for the helix of radius r whose
/// vertical slope is <t, E3> = ((b/2) r^2 - mu lambda_a) / sqrt(...). That is the
/// make_helix curve with parameter b r^2 / lambda_a - mu. For b = 0 the two
/// parameters differ only in sign and the roots do not depend on mu.
struct RadiusQuartic {
  double c4 = 0.0;
  double c2 = 0.0;
  double c0 = 0.0;
  /// c4 = 0: the reduced (linear in r^2) equation was solved.
  bool degenerate = false;
  /// Real roots in r^2, ascending, with admissibility.
  std::vector<QuarticRoot> roots;

  /// Admissible r^2 values, ascending.
  std::vector<double> admissible() const;
};

RadiusQuartic tb_radius_quartic(double a, double b, double mu);

struct RadiusPair {
  double minus;
  double plus;
};

/// r^2 = (3 -+ 2 sqrt 2)/a. Throws ParameterError for a <= 0.
RadiusPair tb_radii(double a);

}  // namespace bihcheck

#include "bihcheck/helices.hpp"

#include <algorithm>
#include <cmath>

#include "bihcheck/errors.hpp"

namespace bihcheck {

namespace {

constexpr double kGeodesicFloor = 1e-9;

/// <t, E3> times sqrt(r^2 + offset^2) along the helix.
double vertical_offset(double b, double r, double mu, double lambda_a) {
  return mu * lambda_a - 0.5 * b * r * r;
}

}  // namespace

HelixParams HelixParams::make(double a, double b, double r, double mu) {
  if (!(r > 0.0)) throw ParameterError("helix radius must be positive");
  HelixParams h;
  h.a = a;
  h.b = b;
  h.r = r;
  h.mu = mu;
  h.lambda_a = 1.0 + a * r * r;
  if (!(h.lambda_a > 0.0)) throw ParameterError("helix leaves the chart: 1 + a r^2 <= 0");
  const double offset = vertical_offset(b, r, mu, h.lambda_a);
  const double root = std::hypot(r, offset);
  h.lambda = h.lambda_a / root;
  h.sin_omega = r / root;
  h.cos_omega = offset / root;
  h.varpi = h.lambda - 2.0 * a * r * h.sin_omega - b * h.cos_omega;
  return h;
}

FunctionCurve make_helix(const HelixParams& h) {
  const double r = h.r;
  const double lambda = h.lambda;
  const double mu = h.mu;
  return FunctionCurve([r, lambda, mu](double s) {
    const double c = std::cos(lambda * s);
    const double sn = std::sin(lambda * s);
    CurveJet jet;
    jet.position = Eigen::Vector3d(r * sn, -r * c, lambda * mu * s);
    jet.velocity = Eigen::Vector3d(lambda * r * c, lambda * r * sn, lambda * mu);
    jet.acceleration = Eigen::Vector3d(-lambda * lambda * r * sn, lambda * lambda * r * c, 0.0);
    return jet;
  });
}

FunctionCurve make_helix(double a, double b, double r, double mu) {
  return make_helix(HelixParams::make(a, b, r, mu));
}

HelixAngles helix_angles(double a, double b, double r, double mu) {
  const HelixParams h = HelixParams::make(a, b, r, mu);
  return {h.sin_omega, h.cos_omega};
}

HelixCurvature helix_kappa_tau(const HelixParams& h) {
  HelixCurvature out;
  const double k = h.varpi * h.sin_omega;
  if (std::abs(k) < kGeodesicFloor) {
    out.geodesic = true;
    return out;
  }
  out.kappa = std::abs(k);
  out.tau = h.varpi * h.cos_omega + 0.5 * h.b;
  return out;
}

HelixCurvature helix_kappa_tau(double a, double b, double r, double mu) {
  return helix_kappa_tau(HelixParams::make(a, b, r, mu));
}

std::vector<double> RadiusQuartic::admissible() const {
  std::vector<double> out;
  for (const QuarticRoot& root : roots)
    if (root.admissible) out.push_back(root.r2);
  return out;
}

RadiusQuartic tb_radius_quartic(double a, double b, double mu) {
  RadiusQuartic q;
  q.c4 = a * (2.0 * a * (1.0 - mu * b) + b * b);
  q.c2 = b * b - 12.0 * a;
  q.c0 = 2.0 * (1.0 + mu * b);

  std::vector<double> r2;
  const double scale = std::max({std::abs(q.c2), std::abs(q.c0), 1.0});
  if (std::abs(q.c4) <= 1e-14 * scale) {
    q.degenerate = true;
    if (q.c2 != 0.0) r2.push_back(-q.c0 / q.c2);
  } else {
    const double disc = q.c2 * q.c2 - 4.0 * q.c4 * q.c0;
    if (disc >= 0.0) {
      // Avoids cancellation between -c2 and sqrt(disc).
      const double w = -0.5 * (q.c2 + std::copysign(std::sqrt(disc), q.c2));
      if (w == 0.0) {
        r2 = {0.0, 0.0};
      } else {
        r2 = {w / q.c4, q.c0 / w};
      }
    }
  }
  std::sort(r2.begin(), r2.end());
  for (double x : r2) {
    QuarticRoot root;
    root.r2 = x;
    if (!(x > 0.0)) {
      root.reason = "r^2 <= 0";
    } else if (!(1.0 + a * x > 0.0)) {
      root.reason = "outside chart: 1 + a r^2 <= 0";
    } else {
      root.admissible = true;
    }
    q.roots.push_back(root);
  }
  return q;
}

RadiusPair tb_radii(double a) {
  if (!(a > 0.0)) throw ParameterError("totally biharmonic radii require a > 0");
  const double s = 2.0 * std::sqrt(2.0);
  return {(3.0 - s) / a, (3.0 + s) / a};
}

}  // namespace bihcheck

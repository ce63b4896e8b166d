#pragma once

#include <functional>
#include <iosfwd>
#include <limits>
#include <optional>
#include <vector>

#include "bihcheck/finite_difference.hpp"
#include "bihcheck/spaces.hpp"

namespace bihcheck {

/// Position and the first two parameter derivatives, in model coordinates.
struct CurveJet {
  Vec position;
  Vec velocity;
  Vec acceleration;
};

/// Unit-speed curve into an ambient space.
class Curve {
 public:
  virtual ~Curve() = default;
  virtual CurveJet jet(double s) const = 0;
  virtual double begin() const { return -std::numeric_limits<double>::infinity(); }
  virtual double end() const { return std::numeric_limits<double>::infinity(); }
};

/// Curve given by a closed-form jet.
class FunctionCurve final : public Curve {
 public:
  explicit FunctionCurve(std::function<CurveJet(double)> jet,
                         double begin = -std::numeric_limits<double>::infinity(),
                         double end = std::numeric_limits<double>::infinity())
      : jet_(std::move(jet)), begin_(begin), end_(end) {}

  CurveJet jet(double s) const override { return jet_(s); }
  double begin() const override { return begin_; }
  double end() const override { return end_; }

 private:
  std::function<CurveJet(double)> jet_;
  double begin_;
  double end_;
};

struct CurveOptions {
  /// Differences in the curve parameter.
  FiniteDifference along = kCurveDifference;
  /// Below this curvature a point is treated as geodesic.
  double kappa_floor = 1e-9;
};

struct FrenetSample {
  double s = 0.0;
  Vec t;
  Vec n;
  Vec b;
  double kappa = 0.0;
  double tau = 0.0;
  /// d kappa / ds.
  double kappa_prime = 0.0;
  /// kappa < kappa_floor; n, b and tau are not defined.
  bool geodesic = false;
  /// <n, E3>, <b, E3> when the ambient has a vertical field.
  std::optional<double> n3;
  std::optional<double> b3;
};

struct BitensionSample {
  double s = 0.0;
  Vec tau2;
  bool has_frame = false;
  double tangent = 0.0;
  double normal = 0.0;
  double binormal = 0.0;
  /// Part of tau2 outside span{t, n, b}; only nonzero in dimension > 3.
  double off_frame = 0.0;
};

/// nabla_t V at s, with dV/ds from differences of the model components.
Vec covariant_derivative_along(const AmbientSpace& space, const Curve& curve,
                               const std::function<Vec(double)>& field, double s,
                               const FiniteDifference& fd = kCurveDifference);

/// nabla_t t at s.
Vec curve_acceleration(const AmbientSpace& space, const Curve& curve, double s);

FrenetSample frenet_apparatus(const AmbientSpace& space, const Curve& curve, double s,
                              const CurveOptions& options = {});

/// tau_2 = nabla_t^3 t + R(nabla_t t, t) t and its Frenet components.
BitensionSample bitension(const AmbientSpace& space, const Curve& curve, double s,
                          const CurveOptions& options = {});

struct ResidualSample {
  double s = 0.0;
  double kappa = 0.0;
  double tau = 0.0;
  std::optional<double> n3;
  std::optional<double> b3;
  /// |kappa - mean kappa|
  double tangent = 0.0;
  /// |kappa^2 + tau^2 - K(t, n)|
  double normal = 0.0;
  /// |tau' + <R(n, t) t, b>|
  double binormal = 0.0;
  /// |tau_2 outside the Frenet span| / kappa, dimension > 3 only
  double off_frame = 0.0;
  bool geodesic = false;
};

struct BiharmonicResiduals {
  std::vector<ResidualSample> samples;
  double kappa_mean = 0.0;
  /// Every sample is geodesic: the curve is biharmonic without further checks.
  bool vacuous = false;
  double max_tangent = 0.0;
  double max_normal = 0.0;
  double max_binormal = 0.0;
  double max_off_frame = 0.0;

  double max() const;
};

/// Tangent, normal and binormal components of the biharmonic curve equation
/// on a grid of parameters.
BiharmonicResiduals biharmonic_residuals(const AmbientSpace& space, const Curve& curve,
                                         const std::vector<double>& grid,
                                         const CurveOptions& options = {});

struct BcvSystemResiduals {
  double kappa_constant = 0.0;  // max |kappa - mean|
  double tau_constant = 0.0;    // max |tau - mean|
  double n3 = 0.0;              // max |<n, E3>|
  double b14 = 0.0;             // max |kappa^2 + tau^2 - b^2/4 + (b^2 - 4a) b3^2|
  double kappa_mean = 0.0;
  double tau_mean = 0.0;
  bool vacuous = false;

  double max() const;
};

/// Biharmonicity of a curve in N(a,b), 4a != b^2, in terms of constant curvature,
/// constant torsion, horizontal normal and the curvature/torsion relation.
BcvSystemResiduals bcv_biharmonic_system(const BcvSpace& space, const Curve& curve,
                                         const std::vector<double>& grid,
                                         const CurveOptions& options = {});

/// `count` equally spaced values covering [first, last].
std::vector<double> uniform_grid(double first, double last, int count);

/// Rows `s,kappa,tau,n3,b3,res_t,res_n,res_b` with a header line.
void write_frenet_csv(std::ostream& out, const BiharmonicResiduals& residuals);

}  // namespace bihcheck

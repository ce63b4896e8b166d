#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "bihcheck/curves.hpp"
#include "bihcheck/report.hpp"
#include "bihcheck/spaces.hpp"

namespace bihcheck {

/// Value and parameter derivatives of an immersion at u, in model coordinates.
/// d1 has one column per parameter; d2[i].col(j) is the mixed derivative.
struct ImmersionJet {
  Vec point;
  Mat d1;
  std::vector<Mat> d2;
};

/// Codimension-one immersion x: U subset R^m -> N^{m+1}.
class Immersion {
 public:
  virtual ~Immersion() = default;

  virtual std::string name() const = 0;
  virtual int parameter_dimension() const = 0;
  virtual const AmbientSpace& ambient() const = 0;
  virtual ImmersionJet jet(const Vec& u) const = 0;
  /// Chart domain. Geodesics that leave it are abandoned.
  virtual bool contains(const Vec& /*u*/) const { return true; }
  /// Any ambient vector on the side of the chosen unit normal.
  virtual Vec normal_hint(const Vec& u) const = 0;
  /// Human-readable description of the orientation choice.
  virtual std::string orientation() const { return "normal_hint"; }
  /// Chart-uniform sample from the region used for random checks.
  virtual Vec sample_parameter(std::mt19937_64& rng) const = 0;
};

/// Immersion assembled from callables. Used for ad hoc surfaces in tests.
class FunctionImmersion final : public Immersion {
 public:
  struct Parts {
    std::string name;
    int parameter_dimension = 2;
    std::shared_ptr<const AmbientSpace> ambient;
    std::function<ImmersionJet(const Vec&)> jet;
    std::function<Vec(const Vec&)> normal_hint;
    std::function<bool(const Vec&)> contains;  // optional
    std::string orientation = "normal_hint";
    Vec sample_lo;
    Vec sample_hi;
  };

  explicit FunctionImmersion(Parts parts);

  std::string name() const override { return parts_.name; }
  int parameter_dimension() const override { return parts_.parameter_dimension; }
  const AmbientSpace& ambient() const override { return *parts_.ambient; }
  ImmersionJet jet(const Vec& u) const override { return parts_.jet(u); }
  bool contains(const Vec& u) const override { return !parts_.contains || parts_.contains(u); }
  Vec normal_hint(const Vec& u) const override { return parts_.normal_hint(u); }
  std::string orientation() const override { return parts_.orientation; }
  Vec sample_parameter(std::mt19937_64& rng) const override;

 private:
  Parts parts_;
};

/// Jet from a position map by central differences, for immersions without
/// analytic derivatives.
ImmersionJet jet_by_differences(const std::function<Vec(const Vec&)>& position, const Vec& u,
                                const FiniteDifference& fd = kChartDifference);

struct FirstFundamental {
  Vec point;
  Mat d1;
  Mat g;
  Mat g_inv;
  /// Unit normal, tangent to the ambient.
  Vec eta;
};

/// Induced metric and oriented unit normal. Throws DegeneracyError where the
/// immersion is singular.
FirstFundamental first_fundamental(const Immersion& imm, const Vec& u);

struct SecondFundamentalData {
  Vec u;
  FirstFundamental first;
  /// II_ij = <nabla_{d_i} d_j x, eta>.
  Mat second;
  /// S = g^{-1} II.
  Mat shape;
  /// Principal curvatures by descending absolute value.
  Vec principal;
  /// Principal directions in parameters, g-orthonormal columns.
  Mat directions;
  /// trace(S) / m.
  double mean = 0.0;
  /// trace(S^2).
  double norm2 = 0.0;
  /// det S; only meaningful for surfaces.
  double extrinsic_gaussian = 0.0;
};

SecondFundamentalData shape_operator(const Immersion& imm, const Vec& u);

/// Induced Levi-Civita symbols from the Gauss formula,
/// Gamma^k_ij = g^{kl} <nabla_{d_i} d_j x, d_l x>.
Christoffels induced_christoffels(const Immersion& imm, const Vec& u);

/// Intrinsic geodesic of an immersion, integrated by fixed-step RK4 in the
/// parameters and exposed as an ambient unit-speed curve. Nodes lie at
/// multiples of `step`; a value between nodes is one RK4 step from the nearest
/// node. The immersion must outlive the trace.
class GeodesicTrace final : public Curve {
 public:
  /// Integrates over [-margin, length + margin]. Throws ChartExit if the
  /// geodesic leaves the chart and ParameterError if |dir0|_g != 1.
  GeodesicTrace(const Immersion& imm, const Vec& u0, const Vec& dir0, double length, double step,
                double margin = 0.02);

  struct ParameterJet {
    Vec u;
    Vec du;
    Vec ddu;
  };

  ParameterJet parameter_jet(double s) const;
  CurveJet jet(double s) const override;
  double begin() const override { return -margin_; }
  double end() const override { return length_ + margin_; }

  double length() const { return length_; }
  double step() const { return step_; }
  const Immersion& immersion() const { return *imm_; }
  const Vec& start() const { return u0_; }
  const Vec& direction() const { return dir0_; }

 private:
  Vec rhs(const Vec& state) const;

  const Immersion* imm_;
  Vec u0_;
  Vec dir0_;
  double length_;
  double step_;
  double margin_;
  int first_index_;  // index of the node at s = 0
  std::vector<Vec> nodes_;
};

GeodesicTrace surface_geodesic(const Immersion& imm, const Vec& u0, const Vec& dir0,
                               double length, double step);

/// Delta f = -div grad f (geometer's sign) at u, derivatives of f by differences.
/// Throws StencilError when the stencil leaves the chart.
double laplace_beltrami(const Immersion& imm, const std::function<double(const Vec&)>& f,
                        const Vec& u, const FiniteDifference& fd = kChartDifference);

/// Values entering the normal and tangential biharmonic equations at u.
struct BiharmonicTerms {
  double mean = 0.0;
  double laplace_mean = 0.0;
  double norm2 = 0.0;
  double ricci_normal = 0.0;
  /// |Delta H + H |S|^2 - H Ric(eta, eta)|
  double normal = 0.0;
  /// |2 S(grad H) + m H grad H - 2 H Ric(eta)^T|_g
  double tangent = 0.0;
  /// |Ric(eta)^T|_g
  double ricci_tangent = 0.0;
};

BiharmonicTerms biharmonic_terms(const Immersion& imm, const Vec& u,
                                 const FiniteDifference& fd = kChartDifference);

/// Checks "biharmonic_normal" and "biharmonic_tangent".
VerificationReport biharmonic_check(const Immersion& imm, const std::vector<Vec>& samples,
                                    const Tolerances& tol = {});
/// Check "biminimal": the normal equation alone.
VerificationReport biminimal_check(const Immersion& imm, const std::vector<Vec>& samples,
                                   const Tolerances& tol = {});

/// A sample point and a g-unit tangent direction in parameters.
struct DirectionSample {
  Vec u;
  Vec x;
};

/// Deterministic samples: u from Immersion::sample_parameter, x uniform on the
/// coordinate cube then g-normalized.
std::vector<DirectionSample> random_direction_samples(const Immersion& imm, int count,
                                                      std::uint64_t seed);

struct PointwiseOptions {
  /// Length and sample count of the geodesic used for (s1).
  double geodesic_length = 0.3;
  int geodesic_samples = 7;
  double step = 0.01;
  /// max |S| below this: totally geodesic.
  double flat_floor = 1e-9;
  /// |<SX,X>| below this: the geodesic is an ambient geodesic and (s2), (s3) are vacuous.
  double normal_curvature_floor = 1e-9;
  FiniteDifference along = kCurveDifference;
};

/// Conditions of a totally biharmonic hypersurface at each (u, X), with Y over a
/// g-orthonormal basis of X's complement:
///   tb_s1: <S t, t> constant along the geodesic tangent to X
///   tb_s2: <SX, SX> - K(X, eta)
///   tb_s3: <(nabla_X S) X, Y> + <R(X, eta) X, Y>
VerificationReport tb_pointwise_check(const Immersion& imm,
                                      const std::vector<DirectionSample>& samples,
                                      const Tolerances& tol = {},
                                      const PointwiseOptions& options = {});

struct GeodesicSampleResult {
  int id = 0;
  Vec u0;
  Vec dir0;
  bool skipped = false;
  bool vacuous = false;
  double max_tangent = 0.0;
  double max_normal = 0.0;
  double max_binormal = 0.0;
  double max_off_frame = 0.0;
  double max_residual() const;
};

struct GeodesicOptions {
  int count = 64;
  double length = 3.0;
  double step = 0.01;
  std::uint64_t seed = 1;
  /// Residual samples per geodesic (placed on integration nodes).
  int grid = 13;
  /// Give up after this many chart exits per evaluated geodesic.
  int max_attempts_factor = 8;
};

/// Samples geodesics until `count` of them have been evaluated (or attempts run
/// out). Chart exits are recorded as skipped.
std::vector<GeodesicSampleResult> sample_geodesics(const Immersion& imm,
                                                   const GeodesicOptions& options);

/// Check "tb_geodesic": largest biharmonic residual over sampled geodesics.
VerificationReport tb_geodesic_check(const Immersion& imm, const GeodesicOptions& options = {},
                                     const Tolerances& tol = {});

/// Principal curvatures a non-totally-geodesic totally biharmonic hypersurface
/// of N(rho) may have: {sqrt(rho), -sqrt(rho)}, none for rho <= 0.
std::vector<double> tb_principal_constraint(double rho);

/// E3-invariant surface of N(a,b) swept by a unit-speed horizontal profile.
/// Parameters (s, t): s along the horizontal lift, t along E3.
class HopfImmersion : public Immersion {
 public:
  struct ProfileJet {
    Eigen::Vector2d point;
    Eigen::Vector2d velocity;
    Eigen::Vector2d acceleration;
  };

  virtual const BcvSpace& bcv() const = 0;
  /// Profile in the base chart (x, y), unit speed for (dx^2 + dy^2) / lambda_a^2.
  virtual ProfileJet profile(double s) const = 0;
};

struct HopfBaseData {
  /// Signed geodesic curvature of the profile in the base, w.r.t. the left normal.
  double kappa_g = 0.0;
  /// |S|^2 - (kappa_g^2 + b^2/2)
  double norm_relation = 0.0;
  /// det S
  double extrinsic_gaussian = 0.0;
  /// K_e + b^2/4: the Gauss equation on the flat cylinder.
  double gauss_relation = 0.0;
  /// |K_e| - b^2/4
  double gaussian_magnitude = 0.0;
  /// kappa_g^2 - (4a - b^2): vanishes for totally biharmonic Hopf cylinders.
  double tb_relation = 0.0;
  /// max |<eta, E3>| over the samples.
  double invariance = 0.0;
};

/// Base geodesic curvature of the profile and the shape relations, maxima over
/// the sample parameters (u = (s, t)). kappa_g comes from the base metric's
/// Christoffel symbols by differences. Throws InvarianceError if <eta, E3>
/// exceeds 1e-8.
HopfBaseData hopf_base_data(const HopfImmersion& imm, const std::vector<Vec>& samples);

nlohmann::json to_json(const GeodesicSampleResult& r);

}  // namespace bihcheck

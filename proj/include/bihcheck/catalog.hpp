#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bihcheck/curves.hpp"
#include "bihcheck/hypersurfaces.hpp"
#include "bihcheck/report.hpp"
#include "bihcheck/spaces.hpp"

namespace bihcheck {

/// Verdicts and printed values a case is expected to reproduce.
struct ExpectedVerdict {
  bool totally_biharmonic = true;
  bool biharmonic = true;
  bool totally_geodesic = false;
  /// Principal curvatures in ascending order, with the catalog orientation.
  std::optional<Vec> principal;
  std::optional<double> mean;
  /// Hopf cylinders only: signed geodesic curvature of the profile.
  std::optional<double> kappa_g;
};

struct CatalogCase {
  std::string name;
  std::shared_ptr<const AmbientSpace> ambient;
  std::shared_ptr<const Immersion> immersion;
  ExpectedVerdict expected;
  nlohmann::json meta = nlohmann::json::object();

  /// Non-null for Hopf cylinders.
  const HopfImmersion* hopf() const { return dynamic_cast<const HopfImmersion*>(immersion.get()); }
};

/// Hyperspherical chart sigma_k: R^k -> S^k[1] subset R^{k+1},
/// sigma_1 = (cos, sin), sigma_k = (cos th_k sigma_{k-1}, sin th_k).
ImmersionJet sphere_chart(const Vec& theta);

/// S^p[1/sqrt2] x S^q[1/sqrt2] in S^{p+q+1}[1]. Normal (sigma_p, -sigma_q)/sqrt2,
/// so the principal curvatures are -1 (p times) and +1 (q times).
CatalogCase clifford_torus(int p, int q);

/// cos(sqrt2 a s) v1 + sin(sqrt2 a s) v2 + cos(sqrt2 b s) v3 + sin(sqrt2 b s) v4 in
/// S^{p+q+1}[1]. Needs a^2 + b^2 = 1, orthogonal v_i with |v_i|^2 = 1/2, v1, v2 in
/// the first p+1 coordinates and v3, v4 in the last q+1.
FunctionCurve clifford_geodesic(int p, int q, double a_const, double b_const, const Vec& v1,
                                const Vec& v2, const Vec& v3, const Vec& v4);

/// S^{n-1}[1/sqrt2] in S^n[1], normal towards the pole e_n: all principal curvatures 1.
CatalogCase small_hypersphere(int n);
/// Totally geodesic S^{n-1}[1] in S^n[1].
CatalogCase equator(int n);

/// Rotational Hopf cylinder of N(a,b) over the chart circle of radius r:
/// x(s,t) = (r cos ks, r sin ks, c k s + t), k = lambda_a / r, c = b r^2 / (2 lambda_a).
/// Unit-speed horizontal s, vertical t, so g = I. Normal points to the axis.
class RotationalHopfCylinder final : public HopfImmersion {
 public:
  RotationalHopfCylinder(std::string name, double a, double b, double r);

  std::string name() const override { return name_; }
  int parameter_dimension() const override { return 2; }
  const AmbientSpace& ambient() const override { return *space_; }
  const BcvSpace& bcv() const override { return *space_; }
  std::shared_ptr<const BcvSpace> shared_space() const { return space_; }
  ImmersionJet jet(const Vec& u) const override;
  Vec normal_hint(const Vec& u) const override;
  std::string orientation() const override { return "towards the axis"; }
  Vec sample_parameter(std::mt19937_64& rng) const override;
  ProfileJet profile(double s) const override;

  double radius() const { return r_; }
  /// Horizontal arc length of one turn.
  double period() const;

 private:
  std::string name_;
  std::shared_ptr<const BcvSpace> space_;
  double r_;
  double k_;
  double c_;
};

/// General rotational Hopf cylinder with closed-form expectations:
/// kappa_g = (1 - a r^2) / r, principal curvatures of [[kappa_g, b/2], [b/2, 0]],
/// totally biharmonic iff b = 0 and r is a root of the radius equation,
/// biharmonic iff kappa_g^2 = 4a - b^2.
CatalogCase hopf_cylinder(double a, double b, double r);
/// Totally biharmonic cylinder of BCV(rho/4, 0); the plus branch uses r+ and has
/// the opposite second fundamental form.
CatalogCase tb_cylinder(double rho, bool plus_branch = false);
/// Circular cylinder of radius r in Euclidean 3-space, as BCV(0,0).
CatalogCase round_cylinder_r3(double r);

/// Thrown for selectors that do not name a catalog case.
class UnknownCase : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The cases run by "all", sorted by name.
std::vector<std::string> registry_names();
/// Parses a selector such as "clifford-torus:1,2", "tb-cylinder:rho=4,branch=plus"
/// or "hopf:a=1,b=0,r=2". Throws UnknownCase.
CatalogCase make_case(const std::string& selector);

struct VerifyOptions {
  Tolerances tol;
  std::uint64_t seed = 1;
  int pointwise_samples = 50;
  int biharmonic_samples = 20;
  int shape_samples = 100;
  GeodesicOptions geodesics;
  PointwiseOptions pointwise;
};

/// Runs the shape, biharmonic, pointwise and geodesic checks and sets each
/// check's expectation from the case's expected verdict.
VerificationReport verify_case(const CatalogCase& c, const VerifyOptions& options = {});

}  // namespace bihcheck

#pragma once

#include <Eigen/Dense>

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bihcheck/finite_difference.hpp"

namespace bihcheck {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Gamma^k_ij, one symmetric matrix per upper index k.
using Christoffels = std::vector<Mat>;

/// A Riemannian ambient manifold seen through a concrete model: either a chart
/// (points and vectors are chart components) or an isometric embedding in
/// Euclidean space (points and vectors are ambient components).
///
/// Covariant derivatives are split as  nabla_X Y = dY[X] + connection(p, X, Y),
/// where dY[X] is the plain derivative of the model components of Y. For a
/// chart this is the Christoffel term, for the round sphere the projection term.
class AmbientSpace {
 public:
  virtual ~AmbientSpace() = default;

  /// Intrinsic dimension n.
  virtual int dimension() const = 0;
  /// Number of model coordinates of a point (n for charts, n+1 for the sphere).
  virtual int model_dimension() const = 0;
  virtual std::string name() const = 0;

  virtual bool contains(const Vec& p) const = 0;
  /// Throws DomainError when `p` is outside the usable domain.
  void require(const Vec& p) const;

  /// Gram matrix of the metric in model coordinates.
  virtual Mat metric(const Vec& p) const = 0;
  double inner(const Vec& p, const Vec& x, const Vec& y) const;
  double norm(const Vec& p, const Vec& x) const;

  virtual Vec connection(const Vec& p, const Vec& x, const Vec& y) const = 0;
  /// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z.
  virtual Vec curvature(const Vec& p, const Vec& x, const Vec& y, const Vec& z) const = 0;

  /// Columns form a positively oriented orthonormal basis of T_pN.
  virtual Mat tangent_frame(const Vec& p) const = 0;
  virtual Vec project_tangent(const Vec& /*p*/, const Vec& v) const { return v; }

  /// Unit vertical Killing field (E3) for BCV spaces.
  virtual std::optional<Vec> vertical(const Vec& /*p*/) const { return std::nullopt; }

  /// False for embedded models, where chart Christoffel symbols do not exist.
  virtual bool is_chart() const { return true; }
};

enum class BcvType { SpaceForm, Heisenberg, S2xR, H2xR, SU2, SL2R };

std::string to_string(BcvType type);

/// Bianchi-Cartan-Vranceanu space N(a,b) on the chart lambda_a = 1 + a(x^2+y^2) > 0.
class BcvSpace final : public AmbientSpace {
 public:
  BcvSpace(double a, double b, FiniteDifference fd = kChartDifference);

  double a() const { return a_; }
  double b() const { return b_; }
  const FiniteDifference& differences() const { return fd_; }

  int dimension() const override { return 3; }
  int model_dimension() const override { return 3; }
  std::string name() const override;

  double lambda(const Vec& p) const;
  bool is_space_form() const;
  BcvType type() const;

  bool contains(const Vec& p) const override;
  Mat metric(const Vec& p) const override;

  /// Columns E1, E2, E3 in chart components.
  Mat frame(const Vec& p) const;
  /// Coefficients of nabla_{E_i} E_j on (E1, E2, E3), zero-based indices.
  Eigen::Vector3d frame_connection(const Vec& p, int i, int j) const;

  Vec connection(const Vec& p, const Vec& x, const Vec& y) const override;
  Vec curvature(const Vec& p, const Vec& x, const Vec& y, const Vec& z) const override;
  Mat tangent_frame(const Vec& p) const override { return frame(p); }
  std::optional<Vec> vertical(const Vec& p) const override;

 private:
  double a_;
  double b_;
  FiniteDifference fd_;
};

/// Space form N^n(rho). rho > 0 uses the round sphere of radius 1/sqrt(rho) in
/// R^{n+1}; rho = 0 the Euclidean chart; rho < 0 the Poincare ball chart.
class SpaceForm final : public AmbientSpace {
 public:
  enum class Model { Sphere, Euclidean, Hyperbolic };

  SpaceForm(int n, double rho, FiniteDifference fd = kChartDifference);

  int n() const { return n_; }
  double rho() const { return rho_; }
  Model model() const { return model_; }
  /// 1/sqrt(rho) for spheres.
  double radius() const;
  const FiniteDifference& differences() const { return fd_; }

  int dimension() const override { return n_; }
  int model_dimension() const override { return model_ == Model::Sphere ? n_ + 1 : n_; }
  std::string name() const override;

  bool contains(const Vec& p) const override;
  Mat metric(const Vec& p) const override;
  Vec connection(const Vec& p, const Vec& x, const Vec& y) const override;
  Vec curvature(const Vec& p, const Vec& x, const Vec& y, const Vec& z) const override;
  Mat tangent_frame(const Vec& p) const override;
  Vec project_tangent(const Vec& p, const Vec& v) const override;
  bool is_chart() const override { return model_ != Model::Sphere; }

 private:
  int n_;
  double rho_;
  Model model_;
  FiniteDifference fd_;
};

struct FrameTriple {
  Vec e1;
  Vec e2;
  Vec e3;
};

Mat bcv_metric_at(const BcvSpace& space, const Vec& p);
FrameTriple bcv_frame_at(const BcvSpace& space, const Vec& p);
/// nabla_{E_i} E_j in chart components; i, j in {1, 2, 3}.
Vec bcv_connection_frame(const BcvSpace& space, const Vec& p, int i, int j);

/// Levi-Civita symbols from central differences of the chart metric. Not
/// available for the embedded sphere model.
Christoffels christoffels_at(const AmbientSpace& space, const Vec& p,
                             const FiniteDifference& fd = {});
Christoffels christoffels_from_metric(const std::function<Mat(const Vec&)>& metric, const Vec& p,
                                      const FiniteDifference& fd);
/// Gamma^k_ij x^i y^j.
Vec contract(const Christoffels& gamma, const Vec& x, const Vec& y);

Vec curvature_at(const AmbientSpace& space, const Vec& p, const Vec& x, const Vec& y,
                 const Vec& z);

struct SectionalRicci {
  double sectional;
  double ricci;
  Vec ricci_vector;
};

/// Sectional curvature of span{x, y}, Ric(x, y), and the metric dual of Ric(x, .).
SectionalRicci sectional_and_ricci(const AmbientSpace& space, const Vec& p, const Vec& x,
                                   const Vec& y);
double sectional_curvature(const AmbientSpace& space, const Vec& p, const Vec& x, const Vec& y);
double ricci(const AmbientSpace& space, const Vec& p, const Vec& x, const Vec& y);
Vec ricci_vector(const AmbientSpace& space, const Vec& p, const Vec& x);

/// X1..X4 at p, chart components. Requires 4a != b^2.
std::array<Vec, 4> killing_basis(const BcvSpace& space, const Vec& p);

/// Lie derivative of the metric along a vector field, (L_X h)_ij, by central
/// differences of the metric and of the field's components.
Mat lie_derivative_of_metric(const AmbientSpace& space, const std::function<Vec(const Vec&)>& field,
                             const Vec& p, const FiniteDifference& fd = {});

BcvType classify_bcv(double a, double b);

/// Metric cross product in an oriented 3-dimensional tangent space.
Vec cross(const AmbientSpace& space, const Vec& p, const Vec& x, const Vec& y);

}  // namespace bihcheck
